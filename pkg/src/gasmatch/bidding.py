"""Bid construction: quantity matrices for both sides and supply prices.

Each participant turns its strategy ('N' = bid the true requirement,
'O' = bid twice the true requirement, both subject to access caps) into a
row of per-DP bid quantities by filling the cheapest delivery points first.
Suppliers additionally attach a price to every delivery point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .model import Consumer, Scenario, StrategyProfile, Supplier

Participant = Union[Consumer, Supplier]


@dataclass(frozen=True)
class BidSet:
    """The submitted bids of one strategy profile.

    ``bqc[i][t]`` is consumer i's demand quantity at DP t, ``bqs[j][t]`` and
    ``bps[j][t]`` are supplier j's supply quantity and price.
    """

    bqc: tuple[tuple[float, ...], ...]
    bqs: tuple[tuple[float, ...], ...]
    bps: tuple[tuple[float, ...], ...]


def _true_quantity(participant: Participant) -> float:
    return participant.qr if isinstance(participant, Consumer) else participant.qa


def total_bid_quantity(participant: Participant, strategy: str) -> float:
    """Total quantity a participant bids under 'N' or 'O'.

    'N' bids the required/available quantity, 'O' twice that; both are capped
    by the summed per-DP access caps.
    """
    q = _true_quantity(participant)
    if strategy == "O":
        q = 2 * q
    return min(q, sum(participant.qbar))


def allocate_bids(
    ct: tuple[float, ...], caps: tuple[float, ...], total: float
) -> list[float]:
    """Split ``total`` over DPs minimising transfer cost, greedily.

    Solves min sum x_t*ct_t s.t. sum x_t = total, 0 <= x_t <= caps[t] by
    filling DPs in ascending cost order (exact for this box-constrained LP).
    Equal costs are broken by lower DP index.
    """
    if total > sum(caps) + 1e-9:
        raise ValueError(f"total {total} exceeds summed caps {sum(caps)}")
    x = [0.0] * len(caps)
    remaining = total
    for t in sorted(range(len(caps)), key=lambda t: (ct[t], t)):
        take = min(caps[t], remaining)
        x[t] = take
        remaining -= take
        if remaining <= 0:
            break
    return x


def supplier_prices(supplier: Supplier) -> list[float]:
    """Per-DP bid prices: baseline covering the worst DP, plus half the
    local transfer cost."""
    baseline = supplier.cp + max(supplier.ct)
    return [baseline + c / 2 for c in supplier.ct]


def _bid_row(participant: Participant, strategy: str) -> tuple[float, ...]:
    q = _true_quantity(participant)
    caps = tuple(min(cap, q) for cap in participant.qbar)
    total = min(total_bid_quantity(participant, strategy), sum(caps))
    return tuple(allocate_bids(participant.ct, caps, total))


def build_bids(scenario: Scenario, profile: StrategyProfile) -> BidSet:
    """Assemble the full bid set for a scenario and strategy profile.

    Prices are strategy-independent; only quantities react to 'N'/'O'.
    """
    bqc = tuple(
        _bid_row(c, s)
        for c, s in zip(scenario.consumers, profile.consumer_strategies)
    )
    bqs = tuple(
        _bid_row(s, st)
        for s, st in zip(scenario.suppliers, profile.supplier_strategies)
    )
    bps = tuple(tuple(supplier_prices(s)) for s in scenario.suppliers)
    for c, row in zip(scenario.consumers, bqc):
        for t, q in enumerate(row):
            assert q <= min(c.qbar[t], c.qr) + 1e-9
    for s, row in zip(scenario.suppliers, bqs):
        for t, q in enumerate(row):
            assert q <= min(s.qbar[t], s.qa) + 1e-9
    return BidSet(bqc=bqc, bqs=bqs, bps=bps)
