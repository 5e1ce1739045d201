"""Per-DP matching of demand and supply bids.

The platform clears each delivery point independently.  When supply exceeds
demand at a DP, supply bids are admitted by size: larger bids take priority
and the marginal bid is trimmed (ties broken by lower price, then supplier
index).  Admitted supply is then split among the demand bids pro rata, in
proportion to the submitted demand quantities.

Note on priority: the published reference tables for the two bundled
scenarios are only consistent with quantity-descending supply priority,
so that is the rule implemented here (see the golden tests).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bidding import BidSet

_EPS = 1e-12


@dataclass(frozen=True)
class Match:
    """A platform match: (consumer i, supplier j, DP t, quantity, price)."""

    consumer: int
    supplier: int
    dp: int
    quantity: float
    price: float


@dataclass(frozen=True)
class MatchSet:
    matches: tuple[Match, ...]
    dp_demand: tuple[float, ...]
    dp_supply: tuple[float, ...]
    n_demanders: tuple[int, ...]  # count of positive demand bids per DP
    tmq: float

    def by_consumer(self, i: int) -> list[Match]:
        return [m for m in self.matches if m.consumer == i]

    def by_supplier(self, j: int) -> list[Match]:
        return [m for m in self.matches if m.supplier == j]


def dp_totals(bids: BidSet) -> tuple[list[float], list[float]]:
    """Column sums of the demand and supply quantity matrices."""
    n_dp = len(bids.bps[0]) if bids.bps else len(bids.bqc[0])
    q_d = [sum(row[t] for row in bids.bqc) for t in range(n_dp)]
    q_s = [sum(row[t] for row in bids.bqs) for t in range(n_dp)]
    return q_d, q_s


def _admitted_supply(t: int, bids: BidSet, q_d: float) -> list[tuple[int, float]]:
    """Supply quantities admitted at DP t, largest bids first, marginal
    bid trimmed so the admitted total equals min(q_d, q_s)."""
    offers = [
        (j, row[t]) for j, row in enumerate(bids.bqs) if row[t] > _EPS
    ]
    offers.sort(key=lambda jq: (-jq[1], bids.bps[jq[0]][t], jq[0]))
    admitted = []
    remaining = q_d
    for j, q in offers:
        take = min(q, remaining)
        if take <= _EPS:
            break
        admitted.append((j, take))
        remaining -= take
    return admitted


def match_dp(t: int, bids: BidSet) -> list[Match]:
    """Match one delivery point, splitting each admitted supply bid among
    the demand bids in proportion to demand quantity."""
    q_d = sum(row[t] for row in bids.bqc)
    q_s = sum(row[t] for row in bids.bqs)
    if q_d <= _EPS or q_s <= _EPS:
        return []
    matches = []
    for j, supply in _admitted_supply(t, bids, q_d):
        for i, row in enumerate(bids.bqc):
            quantity = supply * row[t] / q_d
            if quantity > _EPS:
                matches.append(
                    Match(
                        consumer=i,
                        supplier=j,
                        dp=t,
                        quantity=quantity,
                        price=bids.bps[j][t],
                    )
                )
    matches.sort(key=lambda m: (m.supplier, m.consumer))
    return matches


def match_all(bids: BidSet) -> MatchSet:
    """Match every delivery point and aggregate totals."""
    q_d, q_s = dp_totals(bids)
    matches: list[Match] = []
    for t in range(len(q_d)):
        matches.extend(match_dp(t, bids))
    matches.sort(key=lambda m: (m.dp, m.supplier, m.consumer))
    return MatchSet(
        matches=tuple(matches),
        dp_demand=tuple(q_d),
        dp_supply=tuple(q_s),
        n_demanders=tuple(
            sum(1 for row in bids.bqc if row[t] > _EPS) for t in range(len(q_d))
        ),
        tmq=sum(min(d, s) for d, s in zip(q_d, q_s)),
    )
