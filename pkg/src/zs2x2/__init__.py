"""Exact Nash equilibria, values and commitment payoffs of 2x2 zero-sum games."""

from .equilibrium import (
    CaseLabel,
    Cardinality,
    ClassificationError,
    EquilibriumSet,
    ProbabilityInterval,
    classify,
    game_value,
    pure_bounds,
)
from .game import (
    BestResponseSet,
    MixedStrategy,
    PayoffMatrix,
    StrategyPair,
    best_response_col,
    best_response_row,
    is_nash,
    payoff,
    threshold_col,
    threshold_row,
)
from .leadership import (
    LeaderPayoffCurve,
    LinearSegment,
    leader_curve,
    leader_optimum,
    leader_payoff,
    monotonicity_check,
    row_leader_optimum,
    row_leader_payoff,
)
from .numeric import Rational, rat_arith, rat_cmp, rat_parse, to_string
from .oracle import OracleReport, grid_epsilon_nash, maximin_oracle, support_enumeration

__version__ = "0.1.0"
