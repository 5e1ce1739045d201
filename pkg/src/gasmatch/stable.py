"""Alternative contracting mechanisms: supplier-overbid prohibition and
deferred acceptance over the platform's matches, with a stability checker.

The deferred-acceptance stage replaces the simultaneous drop phase: the
proposing side repeatedly offers quantities on its preferred matches, the
other side keeps the best offers up to capacity and rejects the rest for
good, until no rejection occurs.  Preferences are per-unit utilities with a
deterministic tie-break (lower DP index, then lower counterpart index), so
every participant has a strict ordering over its matches.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contracting import per_unit_utility
from .game import SweepTable, evaluate_profile
from .matching import Match, MatchSet
from .model import Scenario, StrategyProfile

_EPS = 1e-9


@dataclass(frozen=True)
class StableContractSet:
    """Contracts produced by deferred acceptance."""

    contracts: tuple[tuple[Match, float], ...]
    rounds: int
    proposer_side: str

    @property
    def tcq(self) -> float:
        return sum(q for _, q in self.contracts)


def sweep_supplier_restricted(scenario: Scenario) -> SweepTable:
    """Sweep the game in which suppliers may not overbid.

    Only the 2^{n_C} profiles with every supplier pinned to 'N' are
    evaluated; consumer deviations stay inside the table.
    """
    from itertools import combinations

    n_c = scenario.n_consumers
    profiles = []
    for k in range(n_c + 1):
        for positions in combinations(range(n_c), k):
            strategies = ["N"] * n_c
            for p in positions:
                strategies[p] = "O"
            profiles.append(
                StrategyProfile(tuple(strategies), ("N",) * scenario.n_suppliers)
            )
    outcomes = tuple(evaluate_profile(scenario, p) for p in profiles)
    return SweepTable(
        scenario=scenario, profiles=tuple(profiles), outcomes=outcomes
    )


def _preference_order(
    matches: list[int], all_matches: tuple[Match, ...], side: str, scenario: Scenario
) -> list[int]:
    def key(k: int):
        m = all_matches[k]
        counterpart = m.supplier if side == "consumer" else m.consumer
        return (-per_unit_utility(m, side, scenario), m.dp, counterpart)

    return sorted(matches, key=key)


def deferred_acceptance(
    match_set: MatchSet, scenario: Scenario, proposer_side: str = "consumer"
) -> StableContractSet:
    """Quantity-based deferred acceptance over a set of matches.

    Proposers offer their best unused match quantities up to remaining
    capacity (respecting per-DP access caps); responders keep the best
    offers up to capacity and permanently reject the rest.  Marginal
    offers and rejections may be fractional.  Terminates when a round
    passes with no rejection.
    """
    if proposer_side not in ("consumer", "supplier"):
        raise ValueError(f"invalid proposer_side {proposer_side!r}")
    responder_side = "supplier" if proposer_side == "consumer" else "consumer"
    matches = match_set.matches
    if not matches:
        return StableContractSet(contracts=(), rounds=0, proposer_side=proposer_side)

    def participants(side: str):
        if side == "consumer":
            return [
                (i, c.qr, c.qbar, [k for k, m in enumerate(matches) if m.consumer == i])
                for i, c in enumerate(scenario.consumers)
            ]
        return [
            (j, s.qa, s.qbar, [k for k, m in enumerate(matches) if m.supplier == j])
            for j, s in enumerate(scenario.suppliers)
        ]

    proposers = [
        (cap, qbar, _preference_order(ms, matches, proposer_side, scenario))
        for _, cap, qbar, ms in participants(proposer_side)
    ]
    responders = [
        (cap, qbar, _preference_order(ms, matches, responder_side, scenario))
        for _, cap, qbar, ms in participants(responder_side)
    ]

    rejected = [0.0] * len(matches)
    rounds = 0
    # safety net only; convergence is expected within len(matches) + 1 rounds
    max_rounds = 1000 * (len(matches) + 1)
    kept = [0.0] * len(matches)
    while True:
        rounds += 1
        offers = [0.0] * len(matches)
        for cap, qbar, order in proposers:
            remaining = cap
            dp_left = list(qbar)
            for k in order:
                m = matches[k]
                amount = min(m.quantity - rejected[k], remaining, dp_left[m.dp])
                if amount > _EPS:
                    offers[k] = amount
                    remaining -= amount
                    dp_left[m.dp] -= amount
        kept = [0.0] * len(matches)
        for cap, qbar, order in responders:
            remaining = cap
            dp_left = list(qbar)
            for k in order:
                m = matches[k]
                amount = min(offers[k], remaining, dp_left[m.dp])
                if amount > _EPS:
                    kept[k] = amount
                    remaining -= amount
                    dp_left[m.dp] -= amount
        newly_rejected = [o - h for o, h in zip(offers, kept)]
        if max(newly_rejected) <= _EPS:
            break
        for k, r in enumerate(newly_rejected):
            if r > _EPS:
                rejected[k] += r
        if rounds >= max_rounds:
            raise RuntimeError(
                f"deferred acceptance did not converge in {max_rounds} rounds"
            )
    contracts = tuple(
        (matches[k], kept[k]) for k in range(len(matches)) if kept[k] > _EPS
    )
    return StableContractSet(
        contracts=contracts, rounds=rounds, proposer_side=proposer_side
    )


def is_stable(
    contracts: list[tuple[Match, float]],
    match_set: MatchSet,
    scenario: Scenario,
) -> list[Match]:
    """Blocking matches of a contract set; an empty list certifies stability.

    A match with unrealized quantity blocks when both its consumer and its
    supplier either have residual capacity or hold a contract they strictly
    disprefer to that match.
    """
    realized: dict[tuple, float] = {}
    for m, q in contracts:
        realized[(m.consumer, m.supplier, m.dp)] = (
            realized.get((m.consumer, m.supplier, m.dp), 0.0) + q
        )

    used_c = [0.0] * scenario.n_consumers
    used_s = [0.0] * scenario.n_suppliers
    for m, q in contracts:
        used_c[m.consumer] += q
        used_s[m.supplier] += q

    def wants_more(m: Match, side: str) -> bool:
        util = per_unit_utility(m, side, scenario)
        if side == "consumer":
            residual = scenario.consumers[m.consumer].qr - used_c[m.consumer]
            held = (c for c, q in contracts if c.consumer == m.consumer and q > _EPS)
        else:
            residual = scenario.suppliers[m.supplier].qa - used_s[m.supplier]
            held = (c for c, q in contracts if c.supplier == m.supplier and q > _EPS)
        if residual > _EPS:
            return True
        return any(per_unit_utility(c, side, scenario) < util - _EPS for c in held)

    blocking = []
    for m in match_set.matches:
        unrealized = m.quantity - realized.get((m.consumer, m.supplier, m.dp), 0.0)
        if unrealized <= _EPS:
            continue
        if wants_more(m, "consumer") and wants_more(m, "supplier"):
            blocking.append(m)
    return blocking
