"""Deterministic simulator of a non-binding joint gas purchasing platform.

Pipeline: bid construction -> per-DP pro-rata matching -> simultaneous
match dropping -> utilities, plus exhaustive strategy-game analysis and
alternative contracting mechanisms (deferred acceptance, supplier
overbid prohibition) and a one-round preference-matching toy model.
"""

from .bidding import BidSet, allocate_bids, build_bids, supplier_prices, total_bid_quantity
from .contracting import KeptMatch, Outcome, kept_quantities, per_unit_utility, realize, utilities
from .game import SweepTable, evaluate_profile, nash_equilibria, dominant_strategies, sweep
from .matching import Match, MatchSet, dp_totals, match_all, match_dp
from .model import (
    Consumer,
    Scenario,
    StrategyProfile,
    Supplier,
    builtin_scenario,
    load_scenario,
    validate,
)
from .rapid import PreferenceScenario, example_scenario, run_rapid
from .stable import (
    StableContractSet,
    deferred_acceptance,
    is_stable,
    sweep_supplier_restricted,
)

__all__ = [
    "BidSet",
    "Consumer",
    "KeptMatch",
    "Match",
    "MatchSet",
    "Outcome",
    "PreferenceScenario",
    "Scenario",
    "StableContractSet",
    "StrategyProfile",
    "Supplier",
    "SweepTable",
    "allocate_bids",
    "build_bids",
    "builtin_scenario",
    "deferred_acceptance",
    "dominant_strategies",
    "dp_totals",
    "evaluate_profile",
    "example_scenario",
    "is_stable",
    "kept_quantities",
    "load_scenario",
    "match_all",
    "match_dp",
    "nash_equilibria",
    "per_unit_utility",
    "realize",
    "run_rapid",
    "supplier_prices",
    "sweep",
    "sweep_supplier_restricted",
    "total_bid_quantity",
    "utilities",
    "validate",
]

__version__ = "0.1.0"
