import pytest
from hypothesis import given, settings, strategies as st

from c2bezout import point as pt
from c2bezout import projective as pj
from c2bezout.grading import GradingError, PiBDegree


@pytest.fixture
def a22():
    return pj.ambient(2, 2)


def xi_cls(amb, n=1):
    return pj.ProjClass.from_point(amb, pt.p_sym(("xi", n)))


def test_defining_relations(a22):
    z0, z1 = pj.gen_zeta0(a22), pj.gen_zeta1(a22)
    cw, cxw = pj.gen_cw(a22), pj.gen_cxw(a22)
    assert z0 * z1 == xi_cls(a22)
    onemk = pj.ProjClass.from_point(a22, pt.p_one_minus_kappa())
    e2 = pj.ProjClass.from_point(a22, pt.p_sym(("e", 2)))
    assert z1 * cxw == onemk * z0 * cw + e2
    assert (cw ** 2) * (cxw ** 2) == pj.ProjClass.zero(a22)


def test_zeta_squared_times_quadric(a22):
    z0 = pj.gen_zeta0(a22)
    Q = pj.class_Q(a22)
    assert z0 * z0 * Q == (z0 * pj.gen_cxw(a22)).scale(2)


def test_restriction_values(a22):
    assert pj.gen_cw(a22).rho() == {(0, 1, 1): 1}
    assert pj.gen_zeta0(a22).rho() == {(2, -1, 0): 1}
    assert pj.class_Q(a22).rho() == {(0, 0, 1): 2}
    # divided class on a (1, q) space: unique solution of zeta0 * x = c_w
    a12 = pj.ambient(1, 2)
    div = pj.divided(a12, 1, 0)
    assert div.rho() == {(-2, 2, 1): 1}
    assert pj.gen_zeta0(a12) * div == pj.gen_cw(a12)


def test_fixed_values(a22):
    assert pj.gen_zeta0(a22).fixed() == ({}, {0: 1})
    assert pj.gen_cw(a22).fixed() == ({1: 1}, {0: 1})
    assert (pj.gen_cw(a22) * pj.gen_cxw(a22)).fixed() == ({1: 1}, {1: 1})
    assert pj.class_Q(a22).fixed() == ({1: 2}, {1: 2})
    assert (pj.gen_zeta0(a22) ** 3).fixed() == ({}, {0: 1})


def test_transfer_unit_and_frobenius(a22):
    assert pj.proj_tau(a22, {(0, 0, 0): 1}) == pj.ProjClass.from_point(
        a22, pt.p_sym(pt.S_G))
    # chi Q = zeta0 c_w + zeta1 c_xw = tau(iota^2 c) + e^2
    chiq = pj.class_chi_Q(a22)
    e2 = pj.ProjClass.from_point(a22, pt.p_sym(("e", 2)))
    assert chiq == pj.proj_tau(a22, {(2, 0, 1): 1}) + e2
    # tau(c^k) tau(c) = 2 tau(c^{k+1})
    t1 = pj.tau_c_power(a22, 1)
    t2 = pj.tau_c_power(a22, 2)
    assert t1 * t1 == t2.scale(2)


def test_transfer_rejects_odd_iota(a22):
    with pytest.raises(pt.OutsideSupportedSubring):
        pj.proj_tau(a22, {(1, 0, 1): 1})


def test_transfer_degree_guard(a22):
    target = PiBDegree(2, 2, 2)
    assert not pj.proj_tau(a22, {(0, 0, 1): 1}, target).is_zero()
    with pytest.raises(GradingError):
        pj.proj_tau(a22, {(2, 0, 1): 1}, target)


def test_basis_enumeration_examples():
    assert pj.ambient(2, 1).basis(0) == [
        (0, 0, 0, 0), (1, 0, 1, 0), (0, 0, 1, 1)]
    assert pj.ambient(3, 0).basis(2) == [
        (0, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 0)]
    for m in range(-11, 12):
        basis = pj.ambient(4, 5).basis(m)
        assert len(basis) == 9
        assert all(pj.mono_coset(mono) == m for mono in basis)


def test_basis_matches_normal_monomials():
    for (p, q) in ((1, 1), (2, 2), (3, 1), (0, 3), (4, 0), (2, 3)):
        amb = pj.ambient(p, q)
        for m in range(-(p + q + 2), p + q + 3):
            assert all(amb.is_normal_mono(mono) for mono in amb.basis(m))


def test_reduce_to_basis_roundtrip(a22):
    Q = pj.class_Q(a22)
    vec = Q.reduce_to_basis()
    # coefficients sit on the zeta0 c_w and c_w c_xw slots
    assert vec == {(1, 0, 1, 0): {("tin", 1): 1},
                   (0, 0, 1, 1): {("eik", 2): 1}}
    rebuilt = pj.ProjClass.zero(a22)
    for mono, coeff in vec.items():
        rebuilt = rebuilt + pj.ProjClass.from_mono(a22, mono, coeff)
    assert rebuilt == Q
    assert pj.ProjClass.zero(a22).reduce_to_basis() == {}


def test_reduce_to_basis_needs_single_coset(a22):
    mixed = pj.gen_zeta0(a22) + pj.gen_cw(a22)
    with pytest.raises(GradingError):
        mixed.reduce_to_basis()


def test_product_of_random_basis_elements_roundtrips():
    amb = pj.ambient(3, 2)
    b1 = amb.basis(1)
    for ma in b1:
        for mb in b1:
            prod = pj.ProjClass.from_mono(amb, pj.mono_mul(ma, mb))
            vec = prod.reduce_to_basis() if not prod.is_zero() else {}
            rebuilt = pj.ProjClass.zero(amb)
            for mono, coeff in vec.items():
                rebuilt = rebuilt + pj.ProjClass.from_mono(amb, mono, coeff)
            assert rebuilt == prod


def test_degrees_are_tracked(a22):
    Q = pj.class_Q(a22)
    assert Q.degree() == PiBDegree(2, 2, 2)
    assert pj.class_chi_Q(a22).degree() == PiBDegree(2, 0, 0)
    assert pj.gen_zeta0(a22).degree() == PiBDegree(0, -2, 0)


def test_zero_ambients():
    # with q = 0 the space is an ordinary projective space; zeta1 invertible
    amb = pj.ambient(3, 0)
    assert (pj.gen_cw(amb) ** 3).is_zero()
    z1inv = pj.ProjClass.from_mono(amb, (0, -1, 0, 0))
    assert pj.gen_zeta1(amb) * z1inv == pj.ProjClass.unit(amb)
    amb0 = pj.ambient(0, 2)
    assert (pj.gen_cxw(amb0) ** 2).is_zero()
    z0inv = pj.ProjClass.from_mono(amb0, (-1, 0, 0, 0))
    assert pj.gen_zeta0(amb0) * z0inv == pj.ProjClass.unit(amb0)
    q = pj.class_Q(amb0)
    assert q.rho() == {(0, 0, 1): 2}


def test_invalid_ambient():
    with pytest.raises(ValueError):
        pj.Ambient(0, 0)


def _raw_mono(p, q, z0, z1, cw, ccw, sat0, sat1):
    """A legal raw monomial: negative zeta exponents must ride a
    saturated power of the matching Euler generator."""
    if z0 < 0 or sat0:
        cw = max(cw, p)
    if z1 < 0 or sat1:
        ccw = max(ccw, q)
    return (z0, z1, cw, ccw)


@settings(max_examples=300, deadline=None)
@given(p=st.integers(0, 4), q=st.integers(0, 4),
       z0=st.integers(-4, 4), z1=st.integers(-4, 4),
       cw=st.integers(0, 7), ccw=st.integers(0, 7),
       sat0=st.booleans(), sat1=st.booleans())
def test_reduction_preserves_shadows(p, q, z0, z1, cw, ccw, sat0, sat1):
    """The reducer must agree with the shadow values computed straight
    from the raw exponents, an oracle independent of the rewrite rules."""
    if p + q == 0:
        return
    amb = pj.ambient(p, q)
    mono = _raw_mono(p, q, z0, z1, cw, ccw, sat0, sat1)
    cls = pj.ProjClass.from_mono(amb, mono)
    ia, za, ca = pj.mono_rho(mono)
    want_rho = {} if ca >= p + q else {(ia, za, ca): 1}
    assert cls.rho() == want_rho
    mz0, mz1, mcw, mccw = mono
    want_f0 = {} if (mz0 > 0 or mcw >= p) else {mcw: 1}
    want_f1 = {} if (mz1 > 0 or mccw >= q) else {mccw: 1}
    assert cls.fixed() == (want_f0, want_f1)
    # degrees survive reduction and the result is in basis coordinates
    if not cls.is_zero():
        assert cls.degrees() == {pj.mono_degree_pib(mono)}
        cls.reduce_to_basis()


@settings(max_examples=150, deadline=None)
@given(p=st.integers(1, 3), q=st.integers(1, 3),
       data=st.data())
def test_random_monomial_products_associate(p, q, data):
    amb = pj.ambient(p, q)
    monos = []
    for _ in range(3):
        m = data.draw(st.integers(-(p + q), p + q))
        basis = amb.basis(m)
        monos.append(basis[data.draw(st.integers(0, len(basis) - 1))])
    a, b, c = (pj.ProjClass.from_mono(amb, m) for m in monos)
    assert (a * b) * c == a * (b * c)


def test_corrupt_rule_changes_normal_forms():
    pj.set_corrupt_rule(True)
    try:
        amb = pj.ambient(2, 2)
        z0, z1 = pj.gen_zeta0(amb), pj.gen_zeta1(amb)
        cw, cxw = pj.gen_cw(amb), pj.gen_cxw(amb)
        onemk = pj.ProjClass.from_point(amb, pt.p_one_minus_kappa())
        e2 = pj.ProjClass.from_point(amb, pt.p_sym(("e", 2)))
        assert z1 * cxw != onemk * z0 * cw + e2
    finally:
        pj.set_corrupt_rule(False)
    amb = pj.ambient(2, 2)
    z0, z1 = pj.gen_zeta0(amb), pj.gen_zeta1(amb)
    cw, cxw = pj.gen_cw(amb), pj.gen_cxw(amb)
    onemk = pj.ProjClass.from_point(amb, pt.p_one_minus_kappa())
    e2 = pj.ProjClass.from_point(amb, pt.p_sym(("e", 2)))
    assert z1 * cxw == onemk * z0 * cw + e2
