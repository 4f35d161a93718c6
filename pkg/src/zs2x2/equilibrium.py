"""Closed-form classification of the Nash equilibrium set.

Every 2x2 zero-sum game falls into exactly one of eighteen cases: a unique
strictly mixed equilibrium, one of four unique pure saddle points, or one of
thirteen families with infinitely many equilibria.  Each family is the
product of an interval of row mixtures and an interval of column mixtures.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Optional

from .game import ONE, ZERO, PayoffMatrix
from .numeric import to_rational


class ClassificationError(RuntimeError):
    """The case table matched zero or several cases. Should be unreachable."""


@dataclass(frozen=True)
class ProbabilityInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = to_rational(self.lo), to_rational(self.hi)
        if not ZERO <= lo <= hi <= ONE:
            raise ValueError(f"[{lo}, {hi}] is not a sub-interval of [0, 1]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x) -> "ProbabilityInterval":
        return cls(x, x)

    @classmethod
    def full(cls) -> "ProbabilityInterval":
        return cls(ZERO, ONE)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def is_full(self) -> bool:
        return self.lo == ZERO and self.hi == ONE

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= to_rational(x) <= self.hi

    def __str__(self) -> str:
        return f"{{{self.lo}}}" if self.is_point else f"[{self.lo},{self.hi}]"

    def as_strings(self) -> list[str]:
        return [str(self.lo), str(self.hi)]


class CaseLabel(str, enum.Enum):
    UniqueMixed = "UniqueMixed"
    UniquePure11 = "UniquePure11"
    UniquePure10 = "UniquePure10"
    UniquePure01 = "UniquePure01"
    UniquePure00 = "UniquePure00"
    Inf1RowTop = "Inf1RowTop"
    Inf1RowBottom = "Inf1RowBottom"
    Inf1ColLeft = "Inf1ColLeft"
    Inf1ColRight = "Inf1ColRight"
    Inf1Full = "Inf1Full"
    Inf2_i = "Inf2_i"
    Inf2_ii = "Inf2_ii"
    Inf2_iii = "Inf2_iii"
    Inf2_iv = "Inf2_iv"
    Inf2_v = "Inf2_v"
    Inf2_vi = "Inf2_vi"
    Inf2_vii = "Inf2_vii"
    Inf2_viii = "Inf2_viii"

    def __str__(self) -> str:
        return self.value


class Cardinality(str, enum.Enum):
    One = "one"
    Infinite = "infinite"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class EquilibriumSet:
    """All equilibria ``row_set x col_set`` with their common value."""

    row_set: ProbabilityInterval
    col_set: ProbabilityInterval
    value: Fraction
    label: CaseLabel
    condition: str

    @property
    def cardinality(self) -> Cardinality:
        if self.row_set.is_point and self.col_set.is_point:
            return Cardinality.One
        return Cardinality.Infinite

    def __contains__(self, pair) -> bool:
        p, q = pair
        return p in self.row_set and q in self.col_set

    def corners(self) -> list[tuple[Fraction, Fraction]]:
        r, c = self.row_set, self.col_set
        return [(r.lo, c.lo), (r.lo, c.hi), (r.hi, c.lo), (r.hi, c.hi)]


class _Case(NamedTuple):
    label: CaseLabel
    # each alternative is (condition text, predicate); the first that holds is reported
    alternatives: tuple[tuple[str, Callable[[PayoffMatrix], bool]], ...]
    build: Callable[[PayoffMatrix], tuple[ProbabilityInterval, ProbabilityInterval, Fraction]]


def _p1(m: PayoffMatrix) -> Fraction:
    return (m.u22 - m.u21) / m.delta


def _p2(m: PayoffMatrix) -> Fraction:
    return (m.u22 - m.u12) / m.delta


_pt = ProbabilityInterval.point
_full = ProbabilityInterval.full
_iv = ProbabilityInterval

_MIXED_TEXT = (
    "(u_{1,1} - u_{1,2})(u_{2,2} - u_{2,1}) > 0 and "
    "(u_{1,1} - u_{2,1})(u_{2,2} - u_{1,2}) > 0"
)

# Fixed evaluation order: unique mixed, unique pure, the interval families,
# then the row/column/full families.
_CASES: tuple[_Case, ...] = (
    _Case(
        CaseLabel.UniqueMixed,
        ((_MIXED_TEXT, PayoffMatrix.is_mixed),),
        lambda m: (_pt(_p1(m)), _pt(_p2(m)), (m.u11 * m.u22 - m.u12 * m.u21) / m.delta),
    ),
    _Case(
        CaseLabel.UniquePure11,
        (("u_{1,2} > u_{1,1} > u_{2,1}", lambda m: m.u12 > m.u11 > m.u21),),
        lambda m: (_pt(1), _pt(1), m.u11),
    ),
    _Case(
        CaseLabel.UniquePure10,
        (("u_{1,1} > u_{1,2} > u_{2,2}", lambda m: m.u11 > m.u12 > m.u22),),
        lambda m: (_pt(1), _pt(0), m.u12),
    ),
    _Case(
        CaseLabel.UniquePure01,
        (("u_{2,2} > u_{2,1} > u_{1,1}", lambda m: m.u22 > m.u21 > m.u11),),
        lambda m: (_pt(0), _pt(1), m.u21),
    ),
    _Case(
        CaseLabel.UniquePure00,
        (("u_{2,1} > u_{2,2} > u_{1,2}", lambda m: m.u21 > m.u22 > m.u12),),
        lambda m: (_pt(0), _pt(0), m.u22),
    ),
    _Case(
        CaseLabel.Inf2_i,
        (("u_{1,1} > u_{2,1} = u_{2,2} > u_{1,2}", lambda m: m.u11 > m.u21 == m.u22 > m.u12),),
        lambda m: (_pt(0), _iv(0, _p2(m)), m.u21),
    ),
    _Case(
        CaseLabel.Inf2_ii,
        (("u_{1,1} < u_{2,1} = u_{2,2} < u_{1,2}", lambda m: m.u11 < m.u21 == m.u22 < m.u12),),
        lambda m: (_pt(0), _iv(_p2(m), 1), m.u21),
    ),
    _Case(
        CaseLabel.Inf2_iii,
        (("u_{2,2} > u_{1,2} = u_{1,1} > u_{2,1}", lambda m: m.u22 > m.u12 == m.u11 > m.u21),),
        lambda m: (_pt(1), _iv(_p2(m), 1), m.u11),
    ),
    _Case(
        CaseLabel.Inf2_iv,
        (("u_{2,2} < u_{1,2} = u_{1,1} < u_{2,1}", lambda m: m.u22 < m.u12 == m.u11 < m.u21),),
        lambda m: (_pt(1), _iv(0, _p2(m)), m.u11),
    ),
    _Case(
        CaseLabel.Inf2_v,
        (("u_{1,1} > u_{1,2} = u_{2,2} > u_{2,1}", lambda m: m.u11 > m.u12 == m.u22 > m.u21),),
        lambda m: (_iv(_p1(m), 1), _pt(0), m.u12),
    ),
    _Case(
        CaseLabel.Inf2_vi,
        (("u_{1,1} < u_{1,2} = u_{2,2} < u_{2,1}", lambda m: m.u11 < m.u12 == m.u22 < m.u21),),
        lambda m: (_iv(0, _p1(m)), _pt(0), m.u12),
    ),
    _Case(
        CaseLabel.Inf2_vii,
        (("u_{2,2} > u_{2,1} = u_{1,1} > u_{1,2}", lambda m: m.u22 > m.u21 == m.u11 > m.u12),),
        lambda m: (_iv(0, _p1(m)), _pt(1), m.u11),
    ),
    _Case(
        CaseLabel.Inf2_viii,
        (("u_{2,2} < u_{2,1} = u_{1,1} < u_{1,2}", lambda m: m.u22 < m.u21 == m.u11 < m.u12),),
        lambda m: (_iv(_p1(m), 1), _pt(1), m.u11),
    ),
    _Case(
        CaseLabel.Inf1RowTop,
        (
            ("u_{1,1} = u_{1,2} > u_{2,1} = u_{2,2}", lambda m: m.u11 == m.u12 > m.u21 == m.u22),
            (
                "u_{1,1} = u_{1,2} >= max{u_{2,1}, u_{2,2}} > min{u_{2,1}, u_{2,2}}",
                lambda m: m.u11 == m.u12 >= max(m.u21, m.u22) > min(m.u21, m.u22),
            ),
        ),
        lambda m: (_pt(1), _full(), m.u11),
    ),
    _Case(
        CaseLabel.Inf1RowBottom,
        (
            ("u_{2,1} = u_{2,2} > u_{1,1} = u_{1,2}", lambda m: m.u21 == m.u22 > m.u11 == m.u12),
            (
                "u_{2,1} = u_{2,2} >= max{u_{1,1}, u_{1,2}} > min{u_{1,1}, u_{1,2}}",
                lambda m: m.u21 == m.u22 >= max(m.u11, m.u12) > min(m.u11, m.u12),
            ),
        ),
        lambda m: (_pt(0), _full(), m.u21),
    ),
    _Case(
        CaseLabel.Inf1ColLeft,
        (
            ("u_{1,1} = u_{2,1} < u_{1,2} = u_{2,2}", lambda m: m.u11 == m.u21 < m.u12 == m.u22),
            (
                "u_{1,1} = u_{2,1} <= min{u_{1,2}, u_{2,2}} < max{u_{1,2}, u_{2,2}}",
                lambda m: m.u11 == m.u21 <= min(m.u12, m.u22) < max(m.u12, m.u22),
            ),
        ),
        lambda m: (_full(), _pt(1), m.u11),
    ),
    _Case(
        CaseLabel.Inf1ColRight,
        (
            ("u_{1,2} = u_{2,2} < u_{1,1} = u_{2,1}", lambda m: m.u12 == m.u22 < m.u11 == m.u21),
            (
                "u_{1,2} = u_{2,2} <= min{u_{1,1}, u_{2,1}} < max{u_{1,1}, u_{2,1}}",
                lambda m: m.u12 == m.u22 <= min(m.u11, m.u21) < max(m.u11, m.u21),
            ),
        ),
        lambda m: (_full(), _pt(0), m.u12),
    ),
    _Case(
        CaseLabel.Inf1Full,
        (
            (
                "u_{1,1} = u_{1,2} = u_{2,1} = u_{2,2}",
                lambda m: m.u11 == m.u12 == m.u21 == m.u22,
            ),
        ),
        lambda m: (_full(), _full(), m.u11),
    ),
)

CASE_ORDER: tuple[CaseLabel, ...] = tuple(c.label for c in _CASES)


def _fired(case: _Case, m: PayoffMatrix) -> Optional[str]:
    for text, pred in case.alternatives:
        if pred(m):
            return text
    return None


def matching_cases(m: PayoffMatrix) -> list[tuple[CaseLabel, str]]:
    """Every case whose condition holds, with the alternative that fired."""
    hits = []
    for case in _CASES:
        text = _fired(case, m)
        if text is not None:
            hits.append((case.label, text))
    return hits


def classify(m: PayoffMatrix, check_exclusive: bool = True) -> EquilibriumSet:
    """Return the complete equilibrium set of ``m``.

    With ``check_exclusive`` every case condition is evaluated and a
    :class:`ClassificationError` is raised unless exactly one holds.  Without
    it the first match in :data:`CASE_ORDER` wins.
    """
    if check_exclusive:
        hits = matching_cases(m)
        if len(hits) != 1:
            names = ", ".join(str(label) for label, _ in hits) or "none"
            raise ClassificationError(f"{len(hits)} cases matched for {m.rows()}: {names}")
        label, text = hits[0]
        case = _CASES[CASE_ORDER.index(label)]
    else:
        for case in _CASES:
            text = _fired(case, m)
            if text is not None:
                break
        else:
            raise ClassificationError(f"no case matched for {m.rows()}")
    row_set, col_set, value = case.build(m)
    return EquilibriumSet(row_set, col_set, value, case.label, text)


class PureBounds(NamedTuple):
    maximin: Fraction
    minimax: Fraction


def pure_bounds(m: PayoffMatrix) -> PureBounds:
    maximin = max(min(m.u11, m.u12), min(m.u21, m.u22))
    minimax = min(max(m.u11, m.u21), max(m.u12, m.u22))
    return PureBounds(maximin, minimax)


def game_value(m: PayoffMatrix) -> Fraction:
    if m.is_mixed():
        return (m.u11 * m.u22 - m.u12 * m.u21) / m.delta
    lo, hi = pure_bounds(m)
    if lo != hi:
        raise ClassificationError(
            f"pure maximin {lo} differs from pure minimax {hi} for {m.rows()}"
        )
    return hi
