"""Market description types, validation and the scenario JSON schema.

A scenario fixes everything that is not a strategic choice: the delivery
points (DPs), the consumers with their required quantities, willingness to
pay, per-DP access caps and transfer costs, and the suppliers with their
available quantities, production costs, caps and transfer costs.

All types are immutable after construction and safe to share between
concurrent evaluations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Iterable

CONSUMER = "consumer"
SUPPLIER = "supplier"

BUILTIN_SCENARIOS = ("scenario1", "scenario2")


@dataclass(frozen=True)
class Consumer:
    """A buyer: needs ``qr`` units and values each at ``u`` money/unit."""

    id: str
    qr: float
    u: float
    qbar: tuple[float, ...]  # per-DP access caps
    ct: tuple[float, ...]  # per-DP unit transfer costs


@dataclass(frozen=True)
class Supplier:
    """A seller: has ``qa`` units at unit production cost ``cp``."""

    id: str
    qa: float
    cp: float
    qbar: tuple[float, ...]
    ct: tuple[float, ...]


@dataclass(frozen=True)
class Scenario:
    name: str
    dp_names: tuple[str, ...]
    consumers: tuple[Consumer, ...]
    suppliers: tuple[Supplier, ...]

    @property
    def n_dp(self) -> int:
        return len(self.dp_names)

    @property
    def n_consumers(self) -> int:
        return len(self.consumers)

    @property
    def n_suppliers(self) -> int:
        return len(self.suppliers)

    @property
    def n_players(self) -> int:
        return self.n_consumers + self.n_suppliers

    def player_ids(self) -> tuple[str, ...]:
        """Ids in canonical player order: consumers first, then suppliers."""
        return tuple(c.id for c in self.consumers) + tuple(
            s.id for s in self.suppliers
        )


@dataclass(frozen=True)
class StrategyProfile:
    """One strategy ('N' or 'O') per player, consumers first.

    The text rendering concatenates consumer strategies and supplier
    strategies, e.g. ``"ONNO"`` for (C1=O, C2=N, S1=N, S2=O).
    """

    consumer_strategies: tuple[str, ...]
    supplier_strategies: tuple[str, ...]

    def __post_init__(self) -> None:
        for s in self.consumer_strategies + self.supplier_strategies:
            if s not in ("N", "O"):
                raise ValueError(f"invalid strategy {s!r}; expected 'N' or 'O'")

    def __str__(self) -> str:
        return "".join(self.consumer_strategies) + "".join(self.supplier_strategies)

    @property
    def strategies(self) -> tuple[str, ...]:
        return self.consumer_strategies + self.supplier_strategies

    @classmethod
    def parse(cls, text: str, n_consumers: int, n_suppliers: int) -> "StrategyProfile":
        text = text.strip().upper()
        if len(text) != n_consumers + n_suppliers:
            raise ValueError(
                f"profile {text!r} has length {len(text)}, "
                f"expected {n_consumers + n_suppliers}"
            )
        if any(ch not in "NO" for ch in text):
            raise ValueError(f"profile {text!r} may only contain 'N' and 'O'")
        return cls(tuple(text[:n_consumers]), tuple(text[n_consumers:]))

    def flipped(self, player: int) -> "StrategyProfile":
        """Profile with the strategy of one player (canonical index) toggled."""
        strategies = list(self.strategies)
        strategies[player] = "O" if strategies[player] == "N" else "N"
        n_c = len(self.consumer_strategies)
        return StrategyProfile(tuple(strategies[:n_c]), tuple(strategies[n_c:]))


def validate(scenario: Scenario) -> list[str]:
    """Check all scenario invariants, returning one message per violation."""
    violations: list[str] = []
    n_dp = scenario.n_dp
    if n_dp < 1:
        violations.append("scenario must have at least one delivery point")
    if scenario.n_consumers < 1:
        violations.append("scenario must have at least one consumer")
    if scenario.n_suppliers < 1:
        violations.append("scenario must have at least one supplier")

    def check_vectors(pid: str, qbar: tuple, ct: tuple) -> None:
        if len(qbar) != n_dp:
            violations.append(f"{pid}: qbar has length {len(qbar)}, expected {n_dp}")
        if len(ct) != n_dp:
            violations.append(f"{pid}: ct has length {len(ct)}, expected {n_dp}")
        for t, v in enumerate(qbar):
            if v < 0:
                violations.append(f"{pid}: qbar[{t}] = {v} < 0")
        for t, v in enumerate(ct):
            if v < 0:
                violations.append(f"{pid}: ct[{t}] = {v} < 0")

    for c in scenario.consumers:
        if c.qr <= 0:
            violations.append(f"{c.id}: qr = {c.qr} must be > 0")
        if c.u < 0:
            violations.append(f"{c.id}: u = {c.u} must be >= 0")
        check_vectors(c.id, c.qbar, c.ct)
    for s in scenario.suppliers:
        if s.qa <= 0:
            violations.append(f"{s.id}: qa = {s.qa} must be > 0")
        if s.cp < 0:
            violations.append(f"{s.id}: cp = {s.cp} must be >= 0")
        check_vectors(s.id, s.qbar, s.ct)

    ids = [p.id for p in scenario.consumers] + [p.id for p in scenario.suppliers]
    for dup in {i for i in ids if ids.count(i) > 1}:
        violations.append(f"duplicate participant id {dup!r}")
    return violations


def scenario_from_dict(data: dict) -> Scenario:
    """Build a scenario from the JSON object layout (see ``scenario_to_dict``)."""
    try:
        consumers = tuple(
            Consumer(
                id=str(c["id"]),
                qr=float(c["qr"]),
                u=float(c["u"]),
                qbar=tuple(float(v) for v in c["qbar"]),
                ct=tuple(float(v) for v in c["ct"]),
            )
            for c in data["consumers"]
        )
        suppliers = tuple(
            Supplier(
                id=str(s["id"]),
                qa=float(s["qa"]),
                cp=float(s["cp"]),
                qbar=tuple(float(v) for v in s["qbar"]),
                ct=tuple(float(v) for v in s["ct"]),
            )
            for s in data["suppliers"]
        )
        return Scenario(
            name=str(data["name"]),
            dp_names=tuple(str(d) for d in data["delivery_points"]),
            consumers=consumers,
            suppliers=suppliers,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed scenario object: {exc}") from exc


def scenario_to_dict(scenario: Scenario) -> dict:
    return {
        "name": scenario.name,
        "delivery_points": list(scenario.dp_names),
        "consumers": [
            {
                "id": c.id,
                "qr": c.qr,
                "u": c.u,
                "qbar": list(c.qbar),
                "ct": list(c.ct),
            }
            for c in scenario.consumers
        ],
        "suppliers": [
            {
                "id": s.id,
                "qa": s.qa,
                "cp": s.cp,
                "qbar": list(s.qbar),
                "ct": list(s.ct),
            }
            for s in scenario.suppliers
        ],
    }


def load_scenario(path: str) -> Scenario:
    """Load a scenario from a JSON file or a ``builtin:<name>`` reference."""
    if path.startswith("builtin:"):
        return builtin_scenario(path[len("builtin:"):])
    with open(path, encoding="utf-8") as fh:
        return scenario_from_dict(json.load(fh))


def builtin_scenario(name: str) -> Scenario:
    if name not in BUILTIN_SCENARIOS:
        raise ValueError(
            f"unknown builtin scenario {name!r}; available: {BUILTIN_SCENARIOS}"
        )
    text = resources.files("gasmatch.data").joinpath(f"{name}.json").read_text()
    return scenario_from_dict(json.loads(text))


def dump_scenario(scenario: Scenario, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(scenario_to_dict(scenario), fh, indent=2)
        fh.write("\n")


def all_profiles(scenario: Scenario) -> Iterable[StrategyProfile]:
    """All strategy profiles, ordered by overbidder count then position.

    This matches the conventional report row order: the all-N profile first,
    then single-overbidder profiles in player order, and so on up to all-O.
    """
    from itertools import combinations

    n = scenario.n_players
    n_c = scenario.n_consumers
    for k in range(n + 1):
        for positions in combinations(range(n), k):
            strategies = ["N"] * n
            for p in positions:
                strategies[p] = "O"
            yield StrategyProfile(
                tuple(strategies[:n_c]), tuple(strategies[n_c:])
            )
