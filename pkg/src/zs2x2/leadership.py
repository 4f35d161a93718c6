"""Commitment analysis when player 2 moves first.

Player 2 announces a column mixture ``beta``; player 1 observes it and
best-responds.  The resulting payoff ``leader_payoff(m, beta)`` is the upper
envelope of the two pure-row payoff lines, a convex piecewise-linear function
with at most one breakpoint.  Player 2 picks ``beta`` to minimize it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .equilibrium import ProbabilityInterval
from .game import ONE, ZERO, MixedStrategy, PayoffMatrix, pure_row_payoffs
from .numeric import sign, to_rational


@dataclass(frozen=True)
class LinearSegment:
    slope: Fraction
    intercept: Fraction
    domain: ProbabilityInterval

    def __call__(self, beta) -> Fraction:
        return self.intercept + self.slope * to_rational(beta)

    def __str__(self) -> str:
        return f"{self.slope}*beta + {self.intercept} on {self.domain}"


@dataclass(frozen=True)
class LeaderPayoffCurve:
    segments: tuple[LinearSegment, ...]
    breakpoints: tuple[Fraction, ...]

    def __call__(self, beta) -> Fraction:
        beta = to_rational(beta)
        for seg in self.segments:
            if beta in seg.domain:
                return seg(beta)
        raise ValueError(f"beta={beta} outside [0, 1]")


class LeaderOptimum(NamedTuple):
    minimizers: ProbabilityInterval
    value: Fraction


def leader_payoff(m: PayoffMatrix, col: MixedStrategy) -> Fraction:
    return max(pure_row_payoffs(m, col))


def _row_lines(m: PayoffMatrix) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    # (slope, intercept) in beta for row a1 and row a2
    return (m.u11 - m.u12, m.u12), (m.u21 - m.u22, m.u22)


def leader_curve(m: PayoffMatrix) -> LeaderPayoffCurve:
    (s1, b1), (s2, b2) = _row_lines(m)
    # row a1 minus row a2 is (u12 - u22) + delta * beta
    diff0, diff1 = b1 - b2, (s1 + b1) - (s2 + b2)
    if diff0 * diff1 < 0:
        x = (b2 - b1) / (s1 - s2)
        left, right = ((s1, b1), (s2, b2)) if diff0 > 0 else ((s2, b2), (s1, b1))
        segments = (
            LinearSegment(*left, ProbabilityInterval(ZERO, x)),
            LinearSegment(*right, ProbabilityInterval(x, ONE)),
        )
        return LeaderPayoffCurve(segments, (x,))
    # one line weakly dominates the other on all of [0, 1]
    top = (s1, b1) if diff0 + diff1 >= 0 else (s2, b2)
    return LeaderPayoffCurve((LinearSegment(*top, ProbabilityInterval.full()),), ())


def leader_optimum(m: PayoffMatrix) -> LeaderOptimum:
    """Minimum of the leader curve and the exact set where it is attained."""
    curve = leader_curve(m)
    best = min(min(seg(seg.domain.lo), seg(seg.domain.hi)) for seg in curve.segments)
    lo, hi = None, None
    for seg in curve.segments:
        d = seg.domain
        if seg.slope == 0:
            pts = [d.lo, d.hi] if seg(d.lo) == best else []
        else:
            pts = [x for x in (d.lo, d.hi) if seg(x) == best]
        for x in pts:
            lo = x if lo is None else min(lo, x)
            hi = x if hi is None else max(hi, x)
    return LeaderOptimum(ProbabilityInterval(lo, hi), best)


def monotonicity_check(m: PayoffMatrix, p: MixedStrategy, q: MixedStrategy) -> int:
    """``sign(leader_payoff(p) - leader_payoff(q))`` for ``p.p < q.p``.

    Only defined for games with a unique strictly mixed equilibrium.  On the
    left of the equilibrium column mixture the curve strictly decreases, on
    the right it strictly increases; an ``AssertionError`` is raised if the
    computed order contradicts that.
    """
    if not m.is_mixed():
        raise ValueError("monotonicity requires a unique strictly mixed equilibrium")
    if not p.p < q.p:
        raise ValueError("need p < q")
    star = (m.u22 - m.u12) / m.delta
    order = sign(leader_payoff(m, p) - leader_payoff(m, q))
    if q.p <= star and order != 1:
        raise AssertionError(f"curve not decreasing on [{p.p}, {q.p}]")
    if p.p >= star and order != -1:
        raise AssertionError(f"curve not increasing on [{p.p}, {q.p}]")
    return order


# Player 1 commits first.  Derived by symmetry: in the game -u^T the roles
# swap, and the commitment payoff is the negated player-2-leads payoff.


def row_leader_payoff(m: PayoffMatrix, row: MixedStrategy) -> Fraction:
    return -leader_payoff(-m.transpose(), row)


def row_leader_optimum(m: PayoffMatrix) -> LeaderOptimum:
    """Maximizers and value of player 1's commitment payoff."""
    opt = leader_optimum(-m.transpose())
    return LeaderOptimum(opt.minimizers, -opt.value)
