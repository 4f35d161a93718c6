"""The 2x2 zero-sum game: payoffs, strategies and best responses.

Player 1 picks a row and maximizes; player 2 picks a column and minimizes.
A mixed strategy is stored as the probability of the player's first
action ``a1`` (the top row or the left column).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .numeric import RationalLike, sign, to_rational

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class PayoffMatrix:
    """Payoffs ``u[i][j]`` to the row player when row ``i`` meets column ``j``."""

    u11: Fraction
    u12: Fraction
    u21: Fraction
    u22: Fraction

    def __post_init__(self):
        for name in ("u11", "u12", "u21", "u22"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "PayoffMatrix":
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("payoff matrix must be 2x2")
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @property
    def delta(self) -> Fraction:
        return self.u11 - self.u12 - self.u21 + self.u22

    def rows(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return ((self.u11, self.u12), (self.u21, self.u22))

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows()[i - 1][j - 1]

    def affine(self, scale: RationalLike, shift: RationalLike = 0) -> "PayoffMatrix":
        a, c = to_rational(scale), to_rational(shift)
        return PayoffMatrix(*(a * u + c for u in self.entries()))

    def transpose(self) -> "PayoffMatrix":
        return PayoffMatrix(self.u11, self.u21, self.u12, self.u22)

    def __neg__(self) -> "PayoffMatrix":
        return PayoffMatrix(-self.u11, -self.u12, -self.u21, -self.u22)

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.u11, self.u12, self.u21, self.u22)

    def is_mixed(self) -> bool:
        """Whether the game has a unique, strictly mixed equilibrium."""
        return (self.u11 - self.u12) * (self.u22 - self.u21) > 0 and (
            self.u11 - self.u21
        ) * (self.u22 - self.u12) > 0


@dataclass(frozen=True)
class MixedStrategy:
    p: Fraction

    def __post_init__(self):
        p = to_rational(self.p)
        if not ZERO <= p <= ONE:
            raise ValueError(f"probability {p} outside [0, 1]")
        object.__setattr__(self, "p", p)

    @property
    def complement(self) -> Fraction:
        return ONE - self.p


@dataclass(frozen=True)
class StrategyPair:
    row: MixedStrategy
    col: MixedStrategy

    @classmethod
    def of(cls, p: RationalLike, q: RationalLike) -> "StrategyPair":
        return cls(MixedStrategy(p), MixedStrategy(q))

    def as_tuple(self) -> tuple[Fraction, Fraction]:
        return (self.row.p, self.col.p)


_BR_SHAPES = {(ZERO, ZERO), (ONE, ONE), (ZERO, ONE)}


@dataclass(frozen=True)
class BestResponseSet:
    """One of {0}, {1} or the whole simplex [0, 1], over P(a1).

    ``branch`` records which case of the best-response table fired.
    """

    lo: Fraction
    hi: Fraction
    branch: str = field(default="", compare=False)

    def __post_init__(self):
        if (self.lo, self.hi) not in _BR_SHAPES:
            raise AssertionError(f"best response [{self.lo}, {self.hi}] is not admissible")

    def __contains__(self, p: RationalLike) -> bool:
        return self.lo <= to_rational(p) <= self.hi

    def __str__(self) -> str:
        return f"{{{self.lo}}}" if self.lo == self.hi else f"[{self.lo},{self.hi}]"


def payoff(m: PayoffMatrix, s: StrategyPair) -> Fraction:
    p, q = s.row.p, s.col.p
    return (
        p * q * m.u11
        + p * (1 - q) * m.u12
        + (1 - p) * q * m.u21
        + (1 - p) * (1 - q) * m.u22
    )


def threshold_col(m: PayoffMatrix) -> Optional[Fraction]:
    """Column probability of ``a1`` that leaves the row player indifferent.

    Not clamped to [0, 1]; ``None`` when the discriminant vanishes.
    """
    d = m.delta
    return None if d == 0 else (m.u22 - m.u12) / d


def threshold_row(m: PayoffMatrix) -> Optional[Fraction]:
    """Row probability of ``a1`` that leaves the column player indifferent."""
    d = m.delta
    return None if d == 0 else (m.u22 - m.u21) / d


_POINT0 = (ZERO, ZERO)
_POINT1 = (ONE, ONE)
_FULL = (ZERO, ONE)


def best_response_row(m: PayoffMatrix, col: MixedStrategy) -> BestResponseSet:
    d = m.delta
    q = col.p
    if d == 0:
        s = sign(m.u12 - m.u22)
        rel = {1: ">", -1: "<", 0: "="}[s]
        shape = {1: _POINT1, -1: _POINT0, 0: _FULL}[s]
        return BestResponseSet(*shape, branch=f"δ=0, u12 {rel} u22")
    t = (m.u22 - m.u12) / d
    if q == t:
        return BestResponseSet(*_FULL, branch="indifferent; P(a1) = p(2)")
    dsign = ">" if d > 0 else "<"
    rel = "<" if q < t else ">"
    # above the threshold a1 pays more when delta > 0, less when delta < 0
    top = (q > t) == (d > 0)
    return BestResponseSet(*(_POINT1 if top else _POINT0), branch=f"δ{dsign}0, P(a1) {rel} p(2)")


def best_response_col(m: PayoffMatrix, row: MixedStrategy) -> BestResponseSet:
    d = m.delta
    p = row.p
    if d == 0:
        s = sign(m.u21 - m.u22)
        rel = {1: ">", -1: "<", 0: "="}[s]
        shape = {1: _POINT0, -1: _POINT1, 0: _FULL}[s]
        return BestResponseSet(*shape, branch=f"δ=0, u21 {rel} u22")
    t = (m.u22 - m.u21) / d
    if p == t:
        return BestResponseSet(*_FULL, branch="indifferent; P(a1) = p(1)")
    dsign = ">" if d > 0 else "<"
    rel = "<" if p < t else ">"
    left = (p < t) == (d > 0)
    return BestResponseSet(*(_POINT1 if left else _POINT0), branch=f"δ{dsign}0, P(a1) {rel} p(1)")


def pure_row_payoffs(m: PayoffMatrix, col: MixedStrategy) -> tuple[Fraction, Fraction]:
    """Payoffs of the rows a1 and a2 against a column mixture."""
    q = col.p
    return (q * m.u11 + (1 - q) * m.u12, q * m.u21 + (1 - q) * m.u22)


def pure_col_payoffs(m: PayoffMatrix, row: MixedStrategy) -> tuple[Fraction, Fraction]:
    """Payoffs of the columns a1 and a2 against a row mixture."""
    p = row.p
    return (p * m.u11 + (1 - p) * m.u21, p * m.u12 + (1 - p) * m.u22)


def is_nash(m: PayoffMatrix, s: StrategyPair) -> bool:
    # payoff is linear in each player's own mixture, so pure deviations suffice
    v = payoff(m, s)
    return max(pure_row_payoffs(m, s.col)) <= v <= min(pure_col_payoffs(m, s.row))
