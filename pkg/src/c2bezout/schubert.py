"""Symbolic Schubert representatives and the Bezout expansion.

Three kinds of geometric terms appear:

* ``FreeOrbit`` -- a doubled nonequivariant subvariety, contributing a
  transfer class.  It carries its target degree explicitly because the
  free piece can be regraded at will.
* ``InvariantChain`` -- an invariant subvariety with up to two levels of
  singular parts cut out by smaller invariant subvarieties; the class is
  a zeta-decorated product of the two Euler-class generators.
* ``BinatePair`` -- the desingularized union of a subvariety and its
  translate, with affine data (i, p_i, q_i) and isotropy defect
  k = i - p_i - q_i; optionally with one more singular level, recorded as
  "zeta0" or "zeta1" according to which fixed index drops.

Coefficients in an expansion are stored as integer numerators over the
fixed denominator 2; an odd numerator is only legal on a defect-0 binate
term, whose class is twice an honest monomial class.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Union

from . import bundles as bd
from .bundles import BundleInvariants, ContextViolation, beta, rem2
from .grading import PiBDegree
from .laurent import mono_degree
from .projective import (Ambient, ProjClass, class_chi_Q, proj_tau,
                         pushed_s_kernel)


class InfeasibleTerm(ValueError):
    pass


@dataclass(frozen=True)
class FreeOrbit:
    """C2 x (nonequivariant variety of affine dimension affine_dim)."""

    affine_dim: int
    target: PiBDegree

    def codim(self, amb: Ambient) -> int:
        return amb.p + amb.q - self.affine_dim

    def validate(self, amb: Ambient) -> None:
        lam = self.codim(amb)
        if not 0 <= lam <= amb.p + amb.q:
            raise InfeasibleTerm(f"free orbit dimension {self.affine_dim} "
                                 f"is out of range for {amb!r}")
        if self.target.total_rank != 2 * lam:
            raise InfeasibleTerm(
                f"free orbit target {self.target} has the wrong total rank")


@dataclass(frozen=True)
class InvariantChain:
    """[X^{pp,qq}; X^{pp-j,qq} u X^{pp,qq-i}; X^{pp-j,qq-i}]^*.

    i = 0 or j = 0 degenerate to a single singular level, i = j = 0 to
    the plain invariant subvariety.
    """

    pp: int
    qq: int
    i: int
    j: int

    def validate(self, amb: Ambient) -> None:
        if not (0 <= self.pp <= amb.p and 0 <= self.qq <= amb.q):
            raise InfeasibleTerm(f"{self} does not fit in {amb!r}")
        if self.i < 0 or self.j < 0 or self.i > self.qq or self.j > self.pp:
            raise InfeasibleTerm(f"chain indices out of range in {self}")


@dataclass(frozen=True)
class BinatePair:
    """Desingularized binate variety with affine data (i, p_i, q_i).

    p_i, q_i may be negative; the underlying space clamps them at 0 but
    the dimension bookkeeping keeps the raw values.  The optional
    singular field adds the one-lower binate singular part, "zeta0" for
    (i-1, p_i, q_i-1) and "zeta1" for (i-1, p_i-1, q_i).
    """

    i: int
    p_i: int
    q_i: int
    singular: Optional[str] = None

    def __post_init__(self):
        if self.singular not in (None, "zeta0", "zeta1"):
            raise ValueError(f"bad singular tag {self.singular!r}")

    @property
    def defect(self) -> int:
        return self.i - self.p_i - self.q_i

    def validate(self, amb: Ambient) -> None:
        p, q = amb.p, amb.q
        if self.i < 0:
            raise InfeasibleTerm(f"negative flag level in {self}")
        ok = (self.p_i + self.q_i <= self.i
              and self.i - self.q_i <= p
              and self.i - self.p_i <= q)
        if not ok:
            raise InfeasibleTerm(f"{self} is not realizable in {amb!r}")

    def codim_data(self, amb: Ambient) -> tuple:
        """(lambda1, lambda1_plus, lambda1_minus) of the main stratum."""
        return (amb.p + amb.q - self.i, amb.p - self.p_i, amb.q - self.q_i)


GeometricTerm = Union[FreeOrbit, InvariantChain, BinatePair]


def class_of(term: GeometricTerm, amb: Ambient) -> ProjClass:
    """The cohomology class a geometric term represents."""
    term.validate(amb)
    if isinstance(term, FreeOrbit):
        lam = term.codim(amb)
        d = term.target
        mono = (d.total_rank - d.fixed_rank_0,
                (d.fixed_rank_0 - d.fixed_rank_1) // 2,
                lam)
        if mono_degree(mono) != d:
            raise InfeasibleTerm(f"degree data of {term} is inconsistent")
        return proj_tau(amb, {mono: 1})
    if isinstance(term, InvariantChain):
        return ProjClass.from_mono(
            amb, (term.i, term.j, amb.p - term.pp, amb.q - term.qq))
    # binate
    base = _binate_base(term, amb, numerator=2)
    if term.singular is None:
        return base
    zeta = (1, 0, 0, 0) if term.singular == "zeta0" else (0, 1, 0, 0)
    return ProjClass.from_mono(amb, zeta) * base


def half_class_of(term: GeometricTerm, amb: Ambient) -> ProjClass:
    """Half the class, defined exactly when the class is 2-divisible by
    construction (defect-0 binate terms)."""
    term.validate(amb)
    if isinstance(term, BinatePair) and term.defect == 0 and term.singular is None:
        return _binate_base(term, amb, numerator=1)
    raise InfeasibleTerm(f"{term} has no canonical half")


def _binate_base(term: BinatePair, amb: Ambient, numerator: int) -> ProjClass:
    cw = amb.p - (term.i - term.q_i)
    ccw = amb.q - (term.i - term.p_i)
    return pushed_s_kernel(amb, (0, 0, cw, ccw), term.defect, numerator)


def chiQ_class(amb: Ambient):
    """Two-chain decomposition of the twisted quadric class, with its
    verified cohomology value."""
    if amb.p < 1 or amb.q < 1:
        raise InfeasibleTerm("the twisted quadric chain needs p, q >= 1")
    terms = [InvariantChain(amb.p - 1, amb.q, 1, 0),
             InvariantChain(amb.p, amb.q - 1, 0, 1)]
    total = class_of(terms[0], amb) + class_of(terms[1], amb)
    if total != class_chi_Q(amb):
        raise AssertionError("twisted quadric decomposition failed")
    return terms, total


# ---------------------------------------------------------------------------
# expansions

@dataclass
class BezoutExpansion:
    ambient: tuple
    invariants: BundleInvariants
    terms: list  # [(numerator, GeometricTerm)]; coefficient = numerator / 2
    label: str = "bezout"

    def __post_init__(self):
        for num, term in self.terms:
            if num % 2 and not (isinstance(term, BinatePair)
                                and term.defect == 0 and term.singular is None):
                raise ArithmeticError(
                    f"half-integral coefficient {num}/2 on non-divisible term {term}")

    def nonzero_terms(self) -> list:
        return [(n, t) for (n, t) in self.terms if n]


def codim_data_roundtrip(term: GeometricTerm, amb: Ambient) -> bool:
    """Both notations must name the same stratum: converting the affine
    data to codimension data and back is the identity."""
    p, q = amb.p, amb.q
    if isinstance(term, FreeOrbit):
        lam = term.codim(amb)
        return p + q - lam == term.affine_dim
    if isinstance(term, InvariantChain):
        lam, lp, lm = p + q - term.pp - term.qq, p - term.pp, q - term.qq
        return (p - lp, q - lm) == (term.pp, term.qq) and lam == lp + lm
    if isinstance(term, BinatePair):
        lam, lp, lm = term.codim_data(amb)
        return (p + q - lam, p - lp, q - lm) == (term.i, term.p_i, term.q_i)
    return True


def expansion_class(exp: BezoutExpansion, amb: Ambient) -> ProjClass:
    out = ProjClass.zero(amb)
    for num, term in exp.terms:
        if num == 0:
            continue
        if num % 2 == 0:
            out = out + class_of(term, amb).scale(num // 2)
        else:
            out = out + half_class_of(term, amb).scale(num)
    return out


def _free_term(inv: BundleInvariants) -> FreeOrbit:
    return FreeOrbit(inv.m, inv.euler_degree())


def bezout_expansion(inv: BundleInvariants) -> BezoutExpansion:
    """The main expansion of the Euler class into Schubert classes."""
    inv.require_context()
    m, m0, m1 = inv.m, inv.m0, inv.m1
    terms = []
    if inv.ell <= 0:
        if m0 <= 0 and m1 <= 0:
            terms.append((inv.Delta, _free_term(inv)))
        elif m0 <= 0:
            terms.append((inv.Delta1, BinatePair(m, m0, m1)))
            terms.append((inv.Delta - inv.Delta1, _free_term(inv)))
        elif m1 <= 0:
            terms.append((inv.Delta0, BinatePair(m, m0, m1)))
            terms.append((inv.Delta - inv.Delta0, _free_term(inv)))
        else:
            # the reference value is min(Delta0, Delta1) whenever that is
            # admissible; for negative degrees the other representative
            # may be forced (the expansion is independent of the choice)
            dstar = bd._pick_delta_star(inv)
            terms.append((dstar, BinatePair(m, m0, m1)))
            terms.append((inv.Delta0 - dstar, BinatePair(m, m0, m1 - 1, "zeta1")))
            terms.append((inv.Delta1 - dstar, BinatePair(m, m0 - 1, m1, "zeta0")))
            terms.append((inv.Delta - (inv.Delta0 + inv.Delta1 - dstar),
                          _free_term(inv)))
    else:
        ell = inv.ell
        if inv.eps:
            for j in range(1, ell):
                if comb(ell, j) % 2:
                    terms.append((2, InvariantChain(m0 - j, m - m0 + j, j, ell - j)))
        terms.append((2 * inv.Delta0, InvariantChain(m0, m - m0, 0, ell)))
        terms.append((2 * inv.Delta1, InvariantChain(m - m1, m1, ell, 0)))
        cfree = inv.Delta - inv.Delta0 - inv.Delta1 - inv.eps * ((1 << beta(ell)) - 2)
        terms.append((cfree, _free_term(inv)))
    return BezoutExpansion((inv.p, inv.q), inv, [t for t in terms if t[0]])


# ---------------------------------------------------------------------------
# special cases, produced independently for cross-checking

def special_case(kind: str, inv: BundleInvariants, **params) -> BezoutExpansion:
    if kind == "codim1":
        return _codim1_case(inv)
    if kind == "dim0":
        return _dim0_case(inv)
    if kind == "dim1_table":
        return _dim1_table_case(inv)
    if kind == "dim2_examples":
        return _dim2_case(inv)
    raise ValueError(f"unknown special case {kind!r}")


def _codim1_case(inv: BundleInvariants) -> BezoutExpansion:
    if inv.n != 1:
        raise ContextViolation([f"codim-1 case needs n = 1, got {inv.n}"])
    inv.require_context()
    p, q = inv.p, inv.q
    counts = inv.n_by_family
    fam = next(f for f in counts if counts[f])
    d = inv.d_by_family[fam]
    k = d // 2
    top = p + q - 1
    if fam == "I":
        terms = [(2, InvariantChain(p - 1, q, 0, 0)),
                 (2 * k, BinatePair(top, p - 1, q - 1, "zeta1"))]
    elif fam == "II":
        terms = [(2 * k, BinatePair(top, p - 1, q - 1))]
    elif fam == "III":
        terms = [(2, InvariantChain(p, q - 1, 0, 0)),
                 (2 * k, BinatePair(top, p - 1, q - 1, "zeta0"))]
    else:
        terms = [(2, InvariantChain(p, q - 1, 0, 1)),
                 (2, InvariantChain(p - 1, q, 1, 0)),
                 (2 * (k - 1), _free_term(inv))]
    return BezoutExpansion((p, q), inv, [t for t in terms if t[0]], label=f"codim1-{fam}")


def _dim0_case(inv: BundleInvariants) -> BezoutExpansion:
    if inv.m != 1:
        raise ContextViolation([f"dim-0 case needs m = 1, got {inv.m}"])
    inv.require_context()
    terms = []
    if inv.Delta0:
        terms.append((2 * inv.Delta0, _FixedPoint(0, inv.m1, inv.euler_degree())))
    if inv.Delta1:
        terms.append((2 * inv.Delta1, _FixedPoint(1, inv.m0, inv.euler_degree())))
    nfree = inv.Delta - inv.Delta0 - inv.Delta1
    if nfree:
        terms.append((nfree, _free_term(inv)))
    return BezoutExpansion((inv.p, inv.q), inv, terms, label="dim0")


@dataclass(frozen=True)
class _FixedPoint:
    """A fixed point of the indicated component, regraded to its slot in
    the Euler-class degree.  component 0 lies in the pointwise-fixed
    projective subspace, component 1 in the twisted one."""

    component: int
    regrade: int  # m1 for component 0, m0 for component 1; <= 1
    target: PiBDegree

    def validate(self, amb: Ambient) -> None:
        if self.component not in (0, 1):
            raise InfeasibleTerm("bad fixed-point component")


def class_of_fixed_point(term: _FixedPoint, amb: Ambient) -> ProjClass:
    if term.component == 0:
        mono = (0, term.regrade, amb.p - 1, amb.q)
    else:
        mono = (term.regrade, 0, amb.p, amb.q - 1)
    cls = ProjClass.from_mono(amb, mono)
    if not cls.is_zero() and cls.degree() != term.target:
        raise InfeasibleTerm(f"fixed point regrade {term} misses its degree")
    return cls


def _dim1_table_case(inv: BundleInvariants) -> BezoutExpansion:
    if inv.m != 2:
        raise ContextViolation([f"dim-1 table needs m = 2, got {inv.m}"])
    inv.require_context()
    m0, m1 = inv.m0, inv.m1
    D, D0, D1 = inv.Delta, inv.Delta0, inv.Delta1
    row = 2 if m0 >= 2 else (1 if m0 == 1 else 0)
    col = 2 if m1 >= 2 else (1 if m1 == 1 else 0)
    fr = _free_term(inv)
    if row == 2 and col == 2:
        terms = [(2 * D0, InvariantChain(2, 0, 0, 2)),
                 (2 * D1, InvariantChain(0, 2, 2, 0)),
                 (D - D0 - D1, fr)]
    elif row == 2 and col == 1:
        terms = [(2 * D0, InvariantChain(2, 0, 0, 1)),
                 (2 * D1, InvariantChain(1, 1, 1, 0)),
                 (D - D0 - D1, fr)]
    elif row == 1 and col == 2:
        terms = [(2 * D0, InvariantChain(1, 1, 0, 1)),
                 (2 * D1, InvariantChain(0, 2, 1, 0)),
                 (D - D0 - D1, fr)]
    elif row == 1 and col == 1:
        dstar = bd._pick_delta_star(inv)  # = DeltaMin on the standard grid
        terms = [(dstar, BinatePair(2, 1, 1)),
                 (D0 - dstar, BinatePair(2, 1, 0, "zeta1")),
                 (D1 - dstar, BinatePair(2, 0, 1, "zeta0")),
                 (D - (D0 + D1 - dstar), fr)]
    elif row == 2 and col == 0:
        # table cell printed with Delta1 in the free coefficient; the
        # theorem's m1 <= 0 simplification fixes it to Delta0
        terms = [(D0, BinatePair(2, 2, m1)), (D - D0, fr)]
    elif row == 1 and col == 0:
        terms = [(D0, BinatePair(2, 1, m1)), (D - D0, fr)]
    elif row == 0 and col == 2:
        terms = [(D1, BinatePair(2, m0, 2)), (D - D1, fr)]
    elif row == 0 and col == 1:
        terms = [(D1, BinatePair(2, m0, 1)), (D - D1, fr)]
    else:
        terms = [(D, fr)]
    return BezoutExpansion((inv.p, inv.q), inv,
                           [t for t in terms if t[0]], label=f"dim1[{row},{col}]")


def _dim2_case(inv: BundleInvariants) -> BezoutExpansion:
    inv.require_context()
    m0, m1 = inv.m0, inv.m1
    D, D0, D1 = inv.Delta, inv.Delta0, inv.Delta1
    fr = _free_term(inv)
    if (inv.m, m0, m1, inv.ell) == (3, 3, 3, 3):
        if inv.eps != 1:
            raise ContextViolation(["the first dim-2 scenario forces eps = 1"])
        terms = [(2 * rem2(comb(3, 1)), InvariantChain(2, 1, 1, 2)),
                 (2 * rem2(comb(3, 2)), InvariantChain(1, 2, 2, 1)),
                 (2 * D0, InvariantChain(3, 0, 0, 3)),
                 (2 * D1, InvariantChain(0, 3, 3, 0)),
                 (D - D0 - D1 - 2, fr)]
        label = "dim2-a"
    elif (inv.m, m0, m1, inv.ell) == (3, 2, 1, 0):
        dstar = bd._pick_delta_star(inv)
        terms = [(dstar, BinatePair(3, 2, 1)),
                 (D0 - dstar, BinatePair(3, 2, 0, "zeta1")),
                 (D1 - dstar, BinatePair(3, 1, 1, "zeta0")),
                 (D - (D0 + D1 - dstar), fr)]
        label = "dim2-b"
    else:
        raise ContextViolation(
            [f"dim-2 worked cases need (m,m0,m1,l) in {{(3,3,3,3),(3,2,1,0)}}, "
             f"got ({inv.m},{m0},{m1},{inv.ell})"])
    return BezoutExpansion((inv.p, inv.q), inv, [t for t in terms if t[0]], label=label)


def expansion_class_full(exp: BezoutExpansion, amb: Ambient) -> ProjClass:
    """expansion_class extended with the dim-0 fixed-point terms."""
    out = ProjClass.zero(amb)
    for num, term in exp.terms:
        if num == 0:
            continue
        if isinstance(term, _FixedPoint):
            out = out + class_of_fixed_point(term, amb).scale(num // 2)
        elif num % 2 == 0:
            out = out + class_of(term, amb).scale(num // 2)
        else:
            out = out + half_class_of(term, amb).scale(num)
    return out
