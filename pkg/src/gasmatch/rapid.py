"""One-round rapid matching on a two-sided preference market.

Proposers send offers to their top choices (one offer normally, several
when overbidding); responders accept the most preferred acceptable offers.
Everyone then simultaneously keeps only their top matches up to their date
capacity; a date happens only if both sides kept the match.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class PreferenceScenario:
    """Two sides with ordered, possibly incomplete preference lists.

    Ids missing from a list are unacceptable.  ``k`` is the number of
    offers/acceptances allowed under overbidding; ``capacity`` is how many
    matches a participant ultimately keeps.
    """

    proposers: tuple[tuple[str, tuple[str, ...]], ...]
    responders: tuple[tuple[str, tuple[str, ...]], ...]
    k: int = 2
    capacity: int = 1

    def __post_init__(self) -> None:
        responder_ids = {rid for rid, _ in self.responders}
        proposer_ids = {pid for pid, _ in self.proposers}
        for pid, prefs in self.proposers:
            if len(set(prefs)) != len(prefs) or not set(prefs) <= responder_ids:
                raise ValueError(f"invalid preference list for proposer {pid!r}")
        for rid, prefs in self.responders:
            if len(set(prefs)) != len(prefs) or not set(prefs) <= proposer_ids:
                raise ValueError(f"invalid preference list for responder {rid!r}")


def preference_scenario_from_dict(data: dict) -> PreferenceScenario:
    return PreferenceScenario(
        proposers=tuple(
            (str(p["id"]), tuple(str(x) for x in p["prefs"]))
            for p in data["proposers"]
        ),
        responders=tuple(
            (str(r["id"]), tuple(str(x) for x in r["prefs"]))
            for r in data["responders"]
        ),
        k=int(data.get("k", 2)),
        capacity=int(data.get("capacity", 1)),
    )


def load_preference_scenario(path: str) -> PreferenceScenario:
    with open(path, encoding="utf-8") as fh:
        return preference_scenario_from_dict(json.load(fh))


def example_scenario(number: int) -> PreferenceScenario:
    """The two bundled 3x3 marriage examples."""
    if number == 1:
        proposers = (("A", ("F", "E", "D")), ("B", ("D", "F", "E")), ("C", ("E", "D", "F")))
    elif number == 2:
        proposers = (("A", ("D", "E", "F")), ("B", ("E", "F", "D")), ("C", ("F", "D", "E")))
    else:
        raise ValueError(f"unknown example {number}; available: 1, 2")
    responders = (("D", ("C", "A")), ("E", ("A", "B")), ("F", ("B", "C")))
    return PreferenceScenario(proposers=proposers, responders=responders)


def run_rapid(
    scenario: PreferenceScenario, overbid: bool
) -> tuple[list[tuple[str, str]], list[tuple[str, str]]]:
    """Run one offer/accept round plus the simultaneous drop.

    Returns ``(matches, dates)`` as (proposer id, responder id) pairs.
    """
    n_offers = scenario.k if overbid else 1
    offers: dict[str, list[str]] = {rid: [] for rid, _ in scenario.responders}
    for pid, prefs in scenario.proposers:
        for rid in prefs[:n_offers]:
            offers[rid].append(pid)

    matches: list[tuple[str, str]] = []
    for rid, prefs in scenario.responders:
        acceptable = [pid for pid in prefs if pid in offers[rid]]
        for pid in acceptable[:n_offers]:
            matches.append((pid, rid))

    def kept(matched: list[str], prefs: tuple[str, ...]) -> set[str]:
        ranked = sorted(matched, key=prefs.index)
        return set(ranked[: scenario.capacity])

    kept_by_proposer = {
        pid: kept([r for p, r in matches if p == pid], prefs)
        for pid, prefs in scenario.proposers
    }
    kept_by_responder = {
        rid: kept([p for p, r in matches if r == rid], prefs)
        for rid, prefs in scenario.responders
    }
    dates = [
        (p, r)
        for p, r in matches
        if r in kept_by_proposer[p] and p in kept_by_responder[r]
    ]
    return matches, dates
