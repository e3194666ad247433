"""Degree arithmetic for the two grading lattices.

RO(C2) degrees are written a + b*sigma.  The extended grading lattice is
recorded as a triple of ranks (total, fixed0, fixed1): the underlying
nonequivariant rank and the ranks of the fixed parts over the two
components of the fixed set.  The two fixed ranks always share a parity,
and the triple determines the degree.
"""

from __future__ import annotations

from dataclasses import dataclass


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class ROC2Degree:
    """a + b*sigma with integer a (trivial rank) and b (sign rank)."""

    trivial_rank: int
    sign_rank: int

    def to_pib(self) -> "PiBDegree":
        a, b = self.trivial_rank, self.sign_rank
        return PiBDegree(a + b, a, a)

    def __str__(self) -> str:
        a, b = self.trivial_rank, self.sign_rank
        if b == 0:
            return str(a)
        sig = "sigma" if b == 1 else ("-sigma" if b == -1 else f"{b}sigma")
        if a == 0:
            return sig
        return f"{a}{'+' if b > 0 else ''}{sig}"


@dataclass(frozen=True)
class PiBDegree:
    """Rank triple (total, fixed0, fixed1); fixed ranks have equal parity."""

    total_rank: int
    fixed_rank_0: int
    fixed_rank_1: int

    def __post_init__(self) -> None:
        if (self.fixed_rank_0 - self.fixed_rank_1) % 2 != 0:
            raise GradingError(f"fixed ranks must share parity: {self}")

    def __add__(self, other: "PiBDegree") -> "PiBDegree":
        return PiBDegree(
            self.total_rank + other.total_rank,
            self.fixed_rank_0 + other.fixed_rank_0,
            self.fixed_rank_1 + other.fixed_rank_1,
        )

    def __sub__(self, other: "PiBDegree") -> "PiBDegree":
        return self + (-other)

    def __neg__(self) -> "PiBDegree":
        return PiBDegree(-self.total_rank, -self.fixed_rank_0, -self.fixed_rank_1)

    def __mul__(self, n: int) -> "PiBDegree":
        return PiBDegree(n * self.total_rank, n * self.fixed_rank_0, n * self.fixed_rank_1)

    __rmul__ = __mul__

    def is_roc2(self) -> bool:
        """True iff the degree is pulled back from RO(C2)."""
        return self.fixed_rank_0 == self.fixed_rank_1

    def to_roc2(self) -> ROC2Degree:
        # a + b*sigma has triple (a+b, a, a), so a = fixed rank and
        # b = total - fixed.
        if not self.is_roc2():
            raise GradingError(f"{self} is not an RO(C2) degree")
        a = self.fixed_rank_0
        return ROC2Degree(a, self.total_rank - a)

    def as_list(self) -> list[int]:
        return [self.total_rank, self.fixed_rank_0, self.fixed_rank_1]

    @classmethod
    def from_list(cls, triple) -> "PiBDegree":
        t, f0, f1 = triple
        return cls(int(t), int(f0), int(f1))

    def __str__(self) -> str:
        return f"({self.total_rank},{self.fixed_rank_0},{self.fixed_rank_1})"


def degree_add(a: PiBDegree, b: PiBDegree) -> PiBDegree:
    return a + b


ZERO = PiBDegree(0, 0, 0)
ONE = PiBDegree(1, 1, 1)
SIGMA = PiBDegree(1, 0, 0)
OMEGA = PiBDegree(2, 2, 0)       # omega = 2 + Omega1
CHI_OMEGA = PiBDegree(2, 0, 2)   # chi omega = 2 + Omega0
OMEGA0 = PiBDegree(0, -2, 0)     # 2sigma-2 on the first fixed component
OMEGA1 = PiBDegree(0, 0, -2)
TWO = PiBDegree(2, 2, 2)

# Degrees of the ring generators.
DEG_ZETA0 = CHI_OMEGA - TWO      # = OMEGA0
DEG_ZETA1 = OMEGA - TWO          # = OMEGA1
DEG_CW = OMEGA
DEG_CXW = CHI_OMEGA
DEG_E = SIGMA
DEG_XI = 2 * SIGMA - 2 * ONE     # (0,-2,-2)
DEG_IOTA = SIGMA - ONE           # (0,-1,-1)
DEG_ZETA = OMEGA - TWO           # nonequivariant regrading unit
DEG_C = TWO                      # nonequivariant Chern class


def standard_degrees() -> dict[str, PiBDegree]:
    """Named degree constants, including all ring generators."""
    return {
        "zero": ZERO,
        "one": ONE,
        "sigma": SIGMA,
        "omega": OMEGA,
        "chi_omega": CHI_OMEGA,
        "Omega0": OMEGA0,
        "Omega1": OMEGA1,
        "zeta0": DEG_ZETA0,
        "zeta1": DEG_ZETA1,
        "c_w": DEG_CW,
        "c_xw": DEG_CXW,
        "e": DEG_E,
        "xi": DEG_XI,
        "iota": DEG_IOTA,
        "zeta": DEG_ZETA,
        "c": DEG_C,
    }
