"""Exhaustive strategy-profile evaluation, Nash equilibria and dominance.

Every player picks 'N' or 'O'; the full pipeline (bidding, matching,
dropping, utilities) is deterministic, so the game is a finite normal-form
game that can be swept exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bidding import build_bids
from .contracting import Outcome, realize, utilities
from .matching import match_all
from .model import Scenario, StrategyProfile, all_profiles

#: absolute tolerance absorbing float noise in utility comparisons
UTILITY_CMP_TOL = 1e-6

MAX_PLAYERS = 24


@dataclass(frozen=True)
class SweepTable:
    """Outcomes for a set of strategy profiles, in report order."""

    scenario: Scenario
    profiles: tuple[StrategyProfile, ...]
    outcomes: tuple[Outcome, ...]

    def outcome(self, profile: StrategyProfile) -> Outcome:
        return self._index()[str(profile)]

    def has(self, profile: StrategyProfile) -> bool:
        return str(profile) in self._index()

    def _index(self) -> dict[str, Outcome]:
        return dict(zip(map(str, self.profiles), self.outcomes))


@dataclass(frozen=True)
class DominanceEntry:
    """Dominance verdict for one player: a strategy and how strongly it
    dominates, or ``None`` when neither strategy dominates."""

    player: str
    strategy: Optional[str]
    strict: bool


@dataclass(frozen=True)
class EquilibriumReport:
    nash: tuple[StrategyProfile, ...]
    dominant: tuple[DominanceEntry, ...]
    #: improving unilateral deviation per (profile text, player index), if any
    best_responses: dict


def evaluate_profile(scenario: Scenario, profile: StrategyProfile) -> Outcome:
    """Run the full pipeline for one profile."""
    bids = build_bids(scenario, profile)
    match_set = match_all(bids)
    contracts = realize(match_set, scenario)
    return utilities(contracts, scenario, match_set.tmq)


def sweep(scenario: Scenario) -> SweepTable:
    """Evaluate every strategy profile of the scenario."""
    if scenario.n_players > MAX_PLAYERS:
        raise ValueError(
            f"{scenario.n_players} players exceed the sweep bound of {MAX_PLAYERS}"
        )
    profiles = tuple(all_profiles(scenario))
    outcomes = tuple(evaluate_profile(scenario, p) for p in profiles)
    return SweepTable(scenario=scenario, profiles=profiles, outcomes=outcomes)


def nash_equilibria(table: SweepTable) -> list[StrategyProfile]:
    """Pure-strategy equilibria: no player gains strictly by flipping.

    Deviations leading to profiles absent from the table (as in the
    supplier-restricted game) are treated as unavailable.
    """
    result = []
    for profile, outcome in zip(table.profiles, table.outcomes):
        if all(
            not table.has(flip := profile.flipped(p))
            or table.outcome(flip).utility_of(p)
            <= outcome.utility_of(p) + UTILITY_CMP_TOL
            for p in range(table.scenario.n_players)
        ):
            result.append(profile)
    return result


def dominant_strategies(table: SweepTable) -> list[DominanceEntry]:
    """Per-player dominance report over the profiles present in the table."""
    scenario = table.scenario
    entries = []
    for p, pid in enumerate(scenario.player_ids()):
        # utility gain of playing 'O' over 'N', per opponent profile
        gains = []
        for profile, outcome in zip(table.profiles, table.outcomes):
            if profile.strategies[p] != "N":
                continue
            flip = profile.flipped(p)
            if not table.has(flip):
                continue
            gains.append(
                table.outcome(flip).utility_of(p) - outcome.utility_of(p)
            )
        if not gains:
            entries.append(DominanceEntry(player=pid, strategy=None, strict=False))
        elif all(g > UTILITY_CMP_TOL for g in gains):
            entries.append(DominanceEntry(player=pid, strategy="O", strict=True))
        elif all(g < -UTILITY_CMP_TOL for g in gains):
            entries.append(DominanceEntry(player=pid, strategy="N", strict=True))
        elif all(g >= -UTILITY_CMP_TOL for g in gains) and any(
            g > UTILITY_CMP_TOL for g in gains
        ):
            entries.append(DominanceEntry(player=pid, strategy="O", strict=False))
        elif all(g <= UTILITY_CMP_TOL for g in gains) and any(
            g < -UTILITY_CMP_TOL for g in gains
        ):
            entries.append(DominanceEntry(player=pid, strategy="N", strict=False))
        else:
            entries.append(DominanceEntry(player=pid, strategy=None, strict=False))
    return entries


def best_responses(table: SweepTable) -> dict:
    """Improving deviation (or None) for every (profile text, player index)."""
    moves = {}
    for profile, outcome in zip(table.profiles, table.outcomes):
        for p in range(table.scenario.n_players):
            flip = profile.flipped(p)
            improving = None
            if (
                table.has(flip)
                and table.outcome(flip).utility_of(p)
                > outcome.utility_of(p) + UTILITY_CMP_TOL
            ):
                improving = flip.strategies[p]
            moves[(str(profile), p)] = improving
    return moves


def equilibrium_report(table: SweepTable) -> EquilibriumReport:
    return EquilibriumReport(
        nash=tuple(nash_equilibria(table)),
        dominant=tuple(dominant_strategies(table)),
        best_responses=best_responses(table),
    )
