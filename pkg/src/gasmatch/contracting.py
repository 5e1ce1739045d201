"""Simultaneous match dropping, realized contracts and utilities.

Overmatched participants keep their best matches up to their true capacity
and drop the rest; both sides decide at the same time with no information
exchange.  A match survives at the minimum of the two kept quantities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matching import Match, MatchSet
from .model import Scenario

#: absolute tolerance for detecting equal per-unit utilities
UTILITY_TIE_TOL = 1e-9

_EPS = 1e-12


@dataclass(frozen=True)
class KeptMatch:
    """A match after the drop phase.

    ``q_mo`` is the originally matched quantity, ``q_mu`` the realized
    (contracted) quantity: the minimum of what either side kept.
    """

    match: Match
    q_mo: float
    kept_by_consumer: float
    kept_by_supplier: float
    q_mu: float


@dataclass(frozen=True)
class Outcome:
    """Per-player utilities plus aggregates for one strategy profile."""

    u_consumers: tuple[float, ...]
    u_suppliers: tuple[float, ...]
    tmq: float
    tcq: float
    tu: float

    def utility_of(self, player: int) -> float:
        """Utility by canonical player index (consumers first)."""
        n_c = len(self.u_consumers)
        if player < n_c:
            return self.u_consumers[player]
        return self.u_suppliers[player - n_c]


def per_unit_utility(match: Match, side: str, scenario: Scenario) -> float:
    """Utility one traded unit of this match brings to the given side."""
    if side == "consumer":
        c = scenario.consumers[match.consumer]
        return c.u - match.price - c.ct[match.dp]
    if side == "supplier":
        s = scenario.suppliers[match.supplier]
        return match.price - s.cp - s.ct[match.dp]
    raise ValueError(f"side must be 'consumer' or 'supplier', got {side!r}")


def kept_quantities(
    matches: list[Match],
    side: str,
    scenario: Scenario,
    drop_negative: bool = False,
) -> list[float]:
    """How much of each match one participant keeps, aligned with input.

    Matches are filled in descending per-unit utility until the capacity
    (qr for consumers, qa for suppliers) runs out; the utility level at
    which it runs out is filled pro rata across all matches tied at that
    level, and strictly worse matches are kept at zero.

    All matches must belong to the same participant on the given side.
    ``drop_negative`` additionally discards loss-making matches even when
    capacity would allow keeping them (exploratory, off by default).
    """
    if not matches:
        return []
    if side == "consumer":
        owners = {m.consumer for m in matches}
        capacity = scenario.consumers[matches[0].consumer].qr
    else:
        owners = {m.supplier for m in matches}
        capacity = scenario.suppliers[matches[0].supplier].qa
    if len(owners) != 1:
        raise ValueError(f"matches belong to several {side}s: {sorted(owners)}")

    utils = [per_unit_utility(m, side, scenario) for m in matches]
    kept = [0.0] * len(matches)
    order = sorted(range(len(matches)), key=lambda k: -utils[k])
    remaining = capacity
    pos = 0
    while pos < len(order) and remaining > _EPS:
        # group of matches tied at the current utility level
        group = [order[pos]]
        while (
            pos + len(group) < len(order)
            and utils[order[pos]] - utils[order[pos + len(group)]] <= UTILITY_TIE_TOL
        ):
            group.append(order[pos + len(group)])
        if drop_negative and utils[group[0]] < 0:
            break
        group_total = sum(matches[k].quantity for k in group)
        if group_total <= remaining + _EPS:
            for k in group:
                kept[k] = matches[k].quantity
            remaining -= group_total
        else:
            ratio = remaining / group_total
            for k in group:
                kept[k] = matches[k].quantity * ratio
            remaining = 0.0
        pos += len(group)
    return kept


def realize(
    match_set: MatchSet, scenario: Scenario, drop_negative: bool = False
) -> list[KeptMatch]:
    """Apply the simultaneous drop phase to every participant.

    Kept quantities are computed independently per participant (no
    information flows between them); each match is contracted at the
    minimum of the two sides' kept quantities.
    """
    key = lambda m: (m.consumer, m.supplier, m.dp)
    kept_c: dict[tuple, float] = {}
    kept_s: dict[tuple, float] = {}
    for i in range(scenario.n_consumers):
        ms = match_set.by_consumer(i)
        for m, q in zip(ms, kept_quantities(ms, "consumer", scenario, drop_negative)):
            kept_c[key(m)] = q
    for j in range(scenario.n_suppliers):
        ms = match_set.by_supplier(j)
        for m, q in zip(ms, kept_quantities(ms, "supplier", scenario, drop_negative)):
            kept_s[key(m)] = q
    return [
        KeptMatch(
            match=m,
            q_mo=m.quantity,
            kept_by_consumer=kept_c[key(m)],
            kept_by_supplier=kept_s[key(m)],
            q_mu=min(kept_c[key(m)], kept_s[key(m)]),
        )
        for m in match_set.matches
    ]


def utilities(
    contracts: list[KeptMatch], scenario: Scenario, tmq: float
) -> Outcome:
    """Sum realized per-unit utilities into player utilities and aggregates."""
    u_c = [0.0] * scenario.n_consumers
    u_s = [0.0] * scenario.n_suppliers
    tcq = 0.0
    for km in contracts:
        m = km.match
        u_c[m.consumer] += km.q_mu * per_unit_utility(m, "consumer", scenario)
        u_s[m.supplier] += km.q_mu * per_unit_utility(m, "supplier", scenario)
        tcq += km.q_mu
    return Outcome(
        u_consumers=tuple(u_c),
        u_suppliers=tuple(u_s),
        tmq=tmq,
        tcq=tcq,
        tu=sum(u_c) + sum(u_s),
    )
