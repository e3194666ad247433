"""The extended-graded cohomology ring of a finite projective space.

Classes are stored in canonical basis coordinates: a dict mapping normal
monomials (z0, z1, cw, ccw) -- exponents of zeta0, zeta1, c_w, c_xw -- to
point-ring coefficients.  The reducer rewrites an arbitrary product of
generators (and divided classes) into this form using the ring relations

    zeta0 zeta1 = xi
    zeta1 c_xw = (1-kappa) zeta0 c_w + e^2     (and its mirror)
    c_w^p c_xw^q = 0

together with the divided-class bookkeeping for saturated powers.  The
normal monomial set coincides, coset by coset, with the standard free
basis; that coincidence (and hence confluence) is enforced by tests, not
assumed.
"""

from __future__ import annotations

import os
import threading

from . import point as pt
from .grading import PiBDegree, GradingError
from .laurent import LTerms, mono_degree

Mono = tuple  # (z0, z1, cw, ccw)
UNIT: Mono = (0, 0, 0, 0)

MONO_ZETA0: Mono = (1, 0, 0, 0)
MONO_ZETA1: Mono = (0, 1, 0, 0)
MONO_CW: Mono = (0, 0, 1, 0)
MONO_CXW: Mono = (0, 0, 0, 1)


class KernelError(RuntimeError):
    """A normal form the rewrite system should never produce."""


# Test hook: when enabled, one rewrite rule is deliberately perturbed so
# the verification harness can demonstrate it is not vacuous.  Toggling
# drops all cached spaces; classes built beforehand keep their stale
# ambient and cannot be mixed with fresh ones.
_corrupt_rule = False
_lock = threading.Lock()


def set_corrupt_rule(enabled: bool) -> None:
    global _corrupt_rule
    with _lock:
        if _corrupt_rule != enabled:
            _corrupt_rule = enabled
            _AMBIENTS.clear()


def mono_mul(a: Mono, b: Mono) -> Mono:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def mono_degree_pib(m: Mono) -> PiBDegree:
    z0, z1, cw, ccw = m
    return PiBDegree(2 * (cw + ccw), 2 * (cw - z0), 2 * (ccw - z1))


def mono_coset(m: Mono) -> int:
    z0, z1, cw, ccw = m
    return -z0 + z1 + cw - ccw


def mono_rho(m: Mono) -> tuple:
    """Laurent exponents (iota, zeta, c) of the restriction."""
    z0, z1, cw, ccw = m
    return (2 * z0 + 2 * ccw, -z0 + z1 + cw - ccw, cw + ccw)


_CACHE_LIMIT = int(os.environ.get("C2BEZOUT_CACHE_SIZE", "2000000"))


class Ambient:
    """The projective space of lines in C^p + (C^sigma)^q, p + q > 0.

    Holds the per-space reduction and basis caches.  Reads are safe from
    multiple threads; concurrent inserts are idempotent (the value for a
    key is deterministic), so no locking is needed around the dicts.
    """

    def __init__(self, p: int, q: int):
        if p < 0 or q < 0 or p + q <= 0:
            raise ValueError(f"invalid ambient ({p},{q})")
        self.p = p
        self.q = q
        self._reduce: dict = {}
        self._basis: dict = {}
        self._basis_sets: dict = {}

    def __repr__(self) -> str:
        return f"Ambient({self.p},{self.q})"

    def _cache_guard(self) -> None:
        if len(self._reduce) > _CACHE_LIMIT:
            self._reduce.clear()

    # -- normal monomial predicate ---------------------------------------

    def is_normal_mono(self, m: Mono) -> bool:
        z0, z1, cw, ccw = m
        p, q = self.p, self.q
        if not (0 <= cw <= p and 0 <= ccw <= q):
            return False
        if cw >= p and ccw >= q:
            return False
        if z0 and z1:
            return False
        if z1 > 0 and (ccw > 0 or cw >= p):
            return False
        if z1 < 0 and ccw != q:
            return False
        if z0 > 0 and ccw >= q:
            return False
        if z0 >= 2 and cw != 0:
            return False
        if z0 < 0 and cw != p:
            return False
        return True

    # -- reduction --------------------------------------------------------

    def reduce_mono(self, m: Mono) -> dict:
        """Basis coordinates {normal_mono: point_terms} of a raw monomial."""
        cached = self._reduce.get(m)
        if cached is not None:
            return cached
        out = self._reduce_uncached(m, 0)
        self._cache_guard()
        return out

    def _reduce_uncached(self, m: Mono, depth: int) -> dict:
        if depth > 64 + 4 * sum(abs(e) for e in m):
            raise KernelError(f"reduction of {m} did not terminate")
        cached = self._reduce.get(m)
        if cached is not None:
            return cached
        out = self._reduce_step(m, depth)
        # every rewrite is degree-honest; check once per monomial
        want = mono_degree_pib(m)
        for mono, coeff in out.items():
            base = mono_degree_pib(mono)
            for s in coeff:
                if base + pt.sym_degree(s).to_pib() != want:
                    raise KernelError(
                        f"degree drift reducing {m}: term {mono} carries {s}")
        self._reduce[m] = out
        return out

    def _rec(self, m: Mono, coeff: pt.Terms, depth: int, acc: dict) -> None:
        for mono, c in self._reduce_uncached(m, depth + 1).items():
            prod = pt.p_mul(coeff, c)
            if not prod:
                continue
            cur = acc.get(mono)
            acc[mono] = pt.p_add(cur, prod) if cur is not None else prod

    def _reduce_step(self, m: Mono, depth: int) -> dict:
        z0, z1, cw, ccw = m
        p, q = self.p, self.q
        acc: dict = {}
        e2 = pt.p_sym(("e", 2))
        if _corrupt_rule:
            # deliberately wrong coefficient, used only by the soundness
            # check of the verification harness
            e2 = pt.p_scale(e2, 2)
        one_minus_kappa = pt.p_one_minus_kappa()
        if cw >= p and ccw >= q:
            return {}
        if z0 > 0 and z1 > 0:
            t = min(z0, z1)
            self._rec((z0 - t, z1 - t, cw, ccw), pt.p_sym(("xi", t)), depth, acc)
            return _strip(acc)
        if z1 > 0 and (z0 < 0 or cw >= p):
            self._rec((z0 - z1, 0, cw, ccw), pt.p_sym(("xi", z1)), depth, acc)
            return _strip(acc)
        if z0 > 0 and (z1 < 0 or ccw >= q):
            self._rec((0, z1 - z0, cw, ccw), pt.p_sym(("xi", z0)), depth, acc)
            return _strip(acc)
        if cw > p:
            # peel one (zeta0 c_w) = (1-kappa) zeta1 c_xw + e^2
            self._rec((z0 - 1, z1 + 1, cw - 1, ccw + 1), one_minus_kappa, depth, acc)
            self._rec((z0 - 1, z1, cw - 1, ccw), e2, depth, acc)
            return _strip(acc)
        if ccw > q or (z1 > 0 and ccw > 0):
            # peel one (zeta1 c_xw) = (1-kappa) zeta0 c_w + e^2
            self._rec((z0 + 1, z1 - 1, cw + 1, ccw - 1), one_minus_kappa, depth, acc)
            self._rec((z0, z1 - 1, cw, ccw - 1), e2, depth, acc)
            return _strip(acc)
        if z0 >= 2 and cw >= 1:
            # zeta0 * (zeta0 c_w) = xi c_xw + e^2 zeta0
            self._rec((z0 - 2, z1, cw - 1, ccw + 1), pt.p_sym(("xi", 1)), depth, acc)
            self._rec((z0 - 1, z1, cw - 1, ccw), e2, depth, acc)
            return _strip(acc)
        if not self.is_normal_mono(m):
            raise KernelError(f"stuck at non-normal monomial {m} in {self!r}")
        return {m: pt.p_sym(pt.S_ONE)}

    # -- basis ------------------------------------------------------------

    def basis(self, m: int) -> list:
        """Ordered free basis of the coset m*omega + RO(C2)."""
        got = self._basis.get(m)
        if got is not None:
            return got
        out = _basis_rec(self.p, self.q, m)
        self._basis[m] = out
        return out

    def basis_set(self, m: int) -> frozenset:
        got = self._basis_sets.get(m)
        if got is None:
            got = frozenset(self.basis(m))
            self._basis_sets[m] = got
        return got


def _basis_rec(p: int, q: int, m: int) -> list:
    if p == 0:
        return [(-m - j, 0, 0, j) for j in range(q)]
    if q == 0:
        return [(0, m - j, j, 0) for j in range(p)]
    if m >= 0:
        head = (0, m, 0, 0)
        tail = [(z0, z1, cw + 1, ccw) for (z0, z1, cw, ccw) in _basis_rec(p - 1, q, m - 1)]
    else:
        head = (-m, 0, 0, 0)
        tail = [(z0, z1, cw, ccw + 1) for (z0, z1, cw, ccw) in _basis_rec(p, q - 1, m + 1)]
    return [head] + tail


def _strip(acc: dict) -> dict:
    return {m: c for m, c in acc.items() if c}


_AMBIENTS: dict = {}


def ambient(p: int, q: int) -> Ambient:
    key = (p, q)
    amb = _AMBIENTS.get(key)
    if amb is None:
        amb = Ambient(p, q)
        _AMBIENTS[key] = amb
    return amb


# ---------------------------------------------------------------------------
# classes

class ProjClass:
    """An element of the cohomology ring, kept in basis coordinates."""

    __slots__ = ("amb", "terms")

    def __init__(self, amb: Ambient, terms: dict):
        self.amb = amb
        self.terms = terms

    # construction ---------------------------------------------------------

    @classmethod
    def zero(cls, amb: Ambient) -> "ProjClass":
        return cls(amb, {})

    @classmethod
    def from_mono(cls, amb: Ambient, m: Mono, coeff: pt.Terms | int = 1) -> "ProjClass":
        if isinstance(coeff, int):
            coeff = pt.p_int(coeff)
        out: dict = {}
        for mono, c in amb.reduce_mono(m).items():
            prod = pt.p_mul(coeff, c)
            if prod:
                out[mono] = prod
        return cls(amb, out)

    @classmethod
    def from_point(cls, amb: Ambient, coeff: pt.Terms) -> "ProjClass":
        return cls(amb, {UNIT: dict(coeff)}) if coeff else cls.zero(amb)

    @classmethod
    def unit(cls, amb: Ambient) -> "ProjClass":
        return cls(amb, {UNIT: pt.p_int(1)})

    # ring ops --------------------------------------------------------------

    def __add__(self, other: "ProjClass") -> "ProjClass":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            cur = out.get(m)
            s = pt.p_add(cur, c) if cur is not None else dict(c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return ProjClass(self.amb, out)

    def __sub__(self, other: "ProjClass") -> "ProjClass":
        return self + other.scale(-1)

    def scale(self, n: int) -> "ProjClass":
        if n == 0:
            return ProjClass.zero(self.amb)
        return ProjClass(self.amb, {m: pt.p_scale(c, n) for m, c in self.terms.items()
                                    if pt.p_scale(c, n)})

    def scale_point(self, h: pt.Terms) -> "ProjClass":
        out = ProjClass.zero(self.amb)
        for m, c in self.terms.items():
            out = out + ProjClass.from_mono(self.amb, m, pt.p_mul(h, c))
        return out

    def __mul__(self, other: "ProjClass") -> "ProjClass":
        self._check(other)
        out: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                coeff = pt.p_mul(ca, cb)
                if not coeff:
                    continue
                for mono, c in self.amb.reduce_mono(mono_mul(ma, mb)).items():
                    prod = pt.p_mul(coeff, c)
                    if not prod:
                        continue
                    cur = out.get(mono)
                    s = pt.p_add(cur, prod) if cur is not None else prod
                    if s:
                        out[mono] = s
                    else:
                        out.pop(mono, None)
        return ProjClass(self.amb, out)

    def __pow__(self, n: int) -> "ProjClass":
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = ProjClass.unit(self.amb)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjClass):
            return NotImplemented
        return self.amb is other.amb and self.terms == other.terms

    def __hash__(self):
        raise TypeError("ProjClass is not hashable")

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "ProjClass") -> None:
        if self.amb is not other.amb:
            raise ValueError("ambient mismatch")

    # degree ----------------------------------------------------------------

    def degrees(self) -> set:
        out = set()
        for m, c in self.terms.items():
            dm = mono_degree_pib(m)
            for d in pt.p_degrees(c):
                out.add(dm + d.to_pib())
        return out

    def degree(self) -> PiBDegree:
        ds = self.degrees()
        if len(ds) != 1:
            raise GradingError(f"class is not homogeneous: degrees {ds}")
        return next(iter(ds))

    def cosets(self) -> set:
        return {mono_coset(m) for m in self.terms}

    # shadows -----------------------------------------------------------------

    def rho(self) -> LTerms:
        trunc = self.amb.p + self.amb.q
        out: LTerms = {}
        for m, c in self.terms.items():
            ia, za, ca = mono_rho(m)
            if ca >= trunc:
                continue
            for ie, v in pt.p_rho(c).items():
                key = (ia + ie, za, ca)
                n = out.get(key, 0) + v
                if n:
                    out[key] = n
                else:
                    out.pop(key, None)
        return out

    def fixed(self) -> tuple:
        """Images in Z[c]/(c^p) and Z[c]/(c^q) over the two fixed components."""
        f0: dict = {}
        f1: dict = {}
        for m, c in self.terms.items():
            z0, z1, cw, ccw = m
            v = pt.p_fixed(c)
            if v == 0:
                continue
            if z0 <= 0 and cw < self.amb.p:
                f0[cw] = f0.get(cw, 0) + v
            if z1 <= 0 and ccw < self.amb.q:
                f1[ccw] = f1.get(ccw, 0) + v
        return ({k: v for k, v in f0.items() if v}, {k: v for k, v in f1.items() if v})

    # basis -------------------------------------------------------------------

    def reduce_to_basis(self) -> dict:
        """Coefficient vector over the basis of the class's single coset."""
        if not self.terms:
            return {}
        cosets = self.cosets()
        if len(cosets) != 1:
            raise GradingError(f"class spans several cosets: {sorted(cosets)}")
        mset = self.amb.basis_set(next(iter(cosets)))
        for m in self.terms:
            if m not in mset:
                raise KernelError(
                    f"normal form {m} escapes the basis of coset "
                    f"{mono_coset(m)} in {self.amb!r}")
        return dict(self.terms)


# ---------------------------------------------------------------------------
# generators and standard classes

def gen_zeta0(amb: Ambient) -> ProjClass:
    return ProjClass.from_mono(amb, MONO_ZETA0)


def gen_zeta1(amb: Ambient) -> ProjClass:
    return ProjClass.from_mono(amb, MONO_ZETA1)


def gen_cw(amb: Ambient) -> ProjClass:
    return ProjClass.from_mono(amb, MONO_CW)


def gen_cxw(amb: Ambient) -> ProjClass:
    return ProjClass.from_mono(amb, MONO_CXW)


def proj_tau(amb: Ambient, x: LTerms, target: PiBDegree | None = None) -> ProjClass:
    """Transfer of a shadow class, one Laurent monomial at a time.

    Each monomial iota^a zeta^b c^k determines its own target degree; the
    optional argument is checked against it.  Odd iota exponents lie
    outside the supported subring.
    """
    out = ProjClass.zero(amb)
    for (a, b, k), coeff in x.items():
        if target is not None and mono_degree((a, b, k)) != target:
            raise GradingError(
                f"tau target {target} does not match monomial degree "
                f"{mono_degree((a, b, k))}")
        if k < 0:
            raise ValueError(f"negative c-exponent {k} in transfer")
        if a % 2 != 0:
            raise pt.OutsideSupportedSubring(
                f"tau(iota^{a} zeta^{b} c^{k}) lies outside the supported subring")
        if k >= amb.p + amb.q:
            continue
        cw = min(k, amb.p)
        ccw = k - cw
        r = b - (cw - ccw)
        z0, z1 = (0, r) if r >= 0 else (-r, 0)
        witness = (z0, z1, cw, ccw)
        j = (a - 2 * (z0 + ccw)) // 2
        hcoeff = pt.p_tau({2 * j: coeff})
        out = out + ProjClass.from_mono(amb, witness, hcoeff)
    return out


def tau_c_power(amb: Ambient, k: int) -> ProjClass:
    """tau(c^k)."""
    return proj_tau(amb, {(0, 0, k): 1})


def s_kernel(amb: Ambient, k: int) -> ProjClass:
    """tau(c^k) + e^{-2k} kappa c_w^k c_xw^k; equals Q^k / 2^{k-1}.

    This is the class of the desingularized binate variety with isotropy
    defect k, before pushing forward.
    """
    if k < 0:
        raise ValueError("negative defect")
    if k == 0:
        return ProjClass.unit(amb).scale(2)
    kappa_part = ProjClass.from_mono(amb, (0, 0, k, k), pt.p_kappa(2 * k))
    return tau_c_power(amb, k) + kappa_part


def class_Q(amb: Ambient) -> ProjClass:
    """Euler class of the square of the dual tautological bundle."""
    return tau_c_power(amb, 1) + ProjClass.from_mono(amb, (0, 0, 1, 1), pt.p_kappa(2))


def class_chi_Q(amb: Ambient) -> ProjClass:
    """Euler class of the sign twist of that square."""
    return ProjClass.from_mono(amb, (1, 0, 1, 0)) + ProjClass.from_mono(amb, (0, 1, 0, 1))


def pushed_s_kernel(amb: Ambient, mono: Mono, defect: int, numerator: int) -> ProjClass:
    """(numerator/2) * mono * s_kernel(defect), evaluated without ever
    dividing a class by two.

    For defect 0 the kernel is the constant 2, so any integer numerator is
    fine.  For positive defect the transfer part is folded through the
    Frobenius relation, which also makes this safe for divided monomials
    (negative zeta exponents riding a saturated power).
    """
    if defect == 0:
        return ProjClass.from_mono(amb, mono, numerator)
    if numerator % 2:
        raise ArithmeticError(
            f"coefficient {numerator}/2 on a defect-{defect} term is not integral")
    half = numerator // 2
    if half == 0:
        return ProjClass.zero(amb)
    a, b, k = mono_rho(mono)
    tau_part = proj_tau(amb, {(a, b, k + defect): half})
    kappa_mono = mono_mul(mono, (0, 0, defect, defect))
    return tau_part + ProjClass.from_mono(amb, kappa_mono, pt.p_scale(pt.p_kappa(2 * defect), half))


def divided(amb: Ambient, k: int, which: int, extra_cw: int = 0, extra_cxw: int = 0) -> ProjClass:
    """zeta0^-k c_w^p (which=0) or zeta1^-k c_xw^q (which=1), times extras."""
    if k < 0:
        raise ValueError("divide by a positive power")
    if which == 0:
        return ProjClass.from_mono(amb, (-k, 0, amb.p + extra_cw, extra_cxw))
    return ProjClass.from_mono(amb, (0, -k, extra_cw, amb.q + extra_cxw))
