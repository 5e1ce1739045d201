"""Command-line front end.

Subcommands:

* ``validate`` -- check a scenario file against the schema invariants
* ``run``      -- full pipeline for one strategy profile
* ``sweep``    -- outcomes for every strategy profile
* ``equilibria`` -- Nash equilibria and dominance (optionally with
  suppliers barred from overbidding)
* ``da``       -- deferred-acceptance contracting on a profile's matches
* ``rapid``    -- the one-round preference-market examples

Exit codes: 0 success, 2 scenario parse/validation failure, 3 malformed
strategy profile.
"""

from __future__ import annotations

import argparse
import sys

from . import game, model, rapid, reports, stable
from .bidding import build_bids
from .contracting import realize, utilities
from .matching import match_all
from .reports import DEFAULT_PRECISION, Report

EXIT_SCENARIO_ERROR = 2
EXIT_PROFILE_ERROR = 3


class CliError(Exception):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def _load_scenario(path: str) -> model.Scenario:
    try:
        scenario = model.load_scenario(path)
    except (OSError, ValueError) as exc:
        raise CliError(f"cannot load scenario {path!r}: {exc}", EXIT_SCENARIO_ERROR)
    violations = model.validate(scenario)
    if violations:
        listing = "\n".join(f"  - {v}" for v in violations)
        raise CliError(
            f"scenario {path!r} is invalid:\n{listing}", EXIT_SCENARIO_ERROR
        )
    return scenario


def _parse_profile(text: str, scenario: model.Scenario) -> model.StrategyProfile:
    try:
        return model.StrategyProfile.parse(
            text, scenario.n_consumers, scenario.n_suppliers
        )
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PROFILE_ERROR)


def _dp_headers(scenario: model.Scenario) -> list[str]:
    return list(scenario.dp_names)


def cmd_run(
    scenario_path: str,
    profile_text: str,
    fmt: str = "csv",
    precision: int = DEFAULT_PRECISION,
) -> Report:
    scenario = _load_scenario(scenario_path)
    profile = _parse_profile(profile_text, scenario)
    bids = build_bids(scenario, profile)
    match_set = match_all(bids)
    contracts = realize(match_set, scenario)
    outcome = utilities(contracts, scenario, match_set.tmq)

    bid_rows = []
    for c, row in zip(scenario.consumers, bids.bqc):
        bid_rows.append([c.id, "demand"] + list(row))
    for s, row in zip(scenario.suppliers, bids.bqs):
        bid_rows.append([s.id, "supply"] + list(row))
    for s, row in zip(scenario.suppliers, bids.bps):
        bid_rows.append([s.id, "price"] + list(row))

    match_rows = [
        [
            scenario.consumers[m.consumer].id,
            scenario.suppliers[m.supplier].id,
            scenario.dp_names[m.dp],
            m.quantity,
            m.price,
        ]
        for m in match_set.matches
    ]
    contract_rows = [
        [
            scenario.consumers[km.match.consumer].id,
            scenario.suppliers[km.match.supplier].id,
            scenario.dp_names[km.match.dp],
            km.q_mo,
            km.kept_by_consumer,
            km.kept_by_supplier,
            km.q_mu,
            km.match.price,
        ]
        for km in contracts
    ]
    utility_rows = [
        [pid, u]
        for pid, u in zip(
            scenario.player_ids(), outcome.u_consumers + outcome.u_suppliers
        )
    ]
    utility_rows += [["TMQ", outcome.tmq], ["TCQ", outcome.tcq], ["TU", outcome.tu]]

    body = reports.render_sections(
        [
            ("bids", ["participant", "kind"] + _dp_headers(scenario), bid_rows),
            (
                "matches",
                ["consumer", "supplier", "dp", "quantity", "price"],
                match_rows,
            ),
            (
                "contracts",
                [
                    "consumer",
                    "supplier",
                    "dp",
                    "matched",
                    "kept_by_consumer",
                    "kept_by_supplier",
                    "contracted",
                    "price",
                ],
                contract_rows,
            ),
            ("utilities", ["player", "utility"], utility_rows),
        ],
        fmt,
        precision,
    )
    return Report(kind="run", format=fmt, body=body)


def _sweep_report(
    table: game.SweepTable, fmt: str, precision: int, kind: str
) -> Report:
    scenario = table.scenario
    header = (
        ["profile"]
        + [f"U_{pid}" for pid in scenario.player_ids()]
        + ["TMQ", "TCQ", "TU"]
    )
    rows = [
        [str(p)]
        + list(o.u_consumers + o.u_suppliers)
        + [o.tmq, o.tcq, o.tu]
        for p, o in zip(table.profiles, table.outcomes)
    ]
    return Report(
        kind=kind,
        format=fmt,
        body=reports.render_table(header, rows, fmt, precision),
    )


def cmd_sweep(
    scenario_path: str, fmt: str = "csv", precision: int = DEFAULT_PRECISION
) -> Report:
    table = game.sweep(_load_scenario(scenario_path))
    return _sweep_report(table, fmt, precision, "sweep")


def cmd_equilibria(
    scenario_path: str,
    restricted: bool = False,
    fmt: str = "csv",
    precision: int = DEFAULT_PRECISION,
) -> Report:
    scenario = _load_scenario(scenario_path)
    table = (
        stable.sweep_supplier_restricted(scenario)
        if restricted
        else game.sweep(scenario)
    )
    report = game.equilibrium_report(table)
    nash_rows = [[str(p)] for p in report.nash]
    dom_rows = [
        [e.player, e.strategy if e.strategy else "none", e.strict]
        for e in report.dominant
    ]
    body = reports.render_sections(
        [
            ("nash_equilibria", ["profile"], nash_rows),
            ("dominant_strategies", ["player", "strategy", "strict"], dom_rows),
        ],
        fmt,
        precision,
    )
    return Report(kind="equilibria", format=fmt, body=body)


def cmd_da(
    scenario_path: str,
    profile_text: str,
    proposer_side: str = "consumer",
    fmt: str = "csv",
    precision: int = DEFAULT_PRECISION,
) -> Report:
    scenario = _load_scenario(scenario_path)
    profile = _parse_profile(profile_text, scenario)
    match_set = match_all(build_bids(scenario, profile))
    result = stable.deferred_acceptance(match_set, scenario, proposer_side)
    blocking = stable.is_stable(list(result.contracts), match_set, scenario)
    contract_rows = [
        [
            scenario.consumers[m.consumer].id,
            scenario.suppliers[m.supplier].id,
            scenario.dp_names[m.dp],
            q,
            m.price,
        ]
        for m, q in result.contracts
    ]
    summary_rows = [
        ["rounds", result.rounds],
        ["TCQ", result.tcq],
        ["stable", not blocking],
    ]
    body = reports.render_sections(
        [
            (
                "contracts",
                ["consumer", "supplier", "dp", "quantity", "price"],
                contract_rows,
            ),
            ("summary", ["metric", "value"], summary_rows),
        ],
        fmt,
        precision,
    )
    return Report(kind="da", format=fmt, body=body)


def cmd_rapid(
    example: str,
    overbid: bool = False,
    fmt: str = "csv",
    precision: int = DEFAULT_PRECISION,
) -> Report:
    if example in ("1", "2"):
        scenario = rapid.example_scenario(int(example))
    else:
        try:
            scenario = rapid.load_preference_scenario(example)
        except (OSError, ValueError, KeyError) as exc:
            raise CliError(
                f"cannot load preference scenario {example!r}: {exc}",
                EXIT_SCENARIO_ERROR,
            )
    matches, dates = rapid.run_rapid(scenario, overbid)
    body = reports.render_sections(
        [
            ("matches", ["proposer", "responder"], [list(m) for m in matches]),
            ("dates", ["proposer", "responder"], [list(d) for d in dates]),
        ],
        fmt,
        precision,
    )
    return Report(kind="rapid", format=fmt, body=body)


def cmd_validate(scenario_path: str) -> Report:
    _load_scenario(scenario_path)  # raises CliError on any problem
    return Report(kind="validate", format="text", body="scenario is valid\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gasmatch",
        description="Non-binding joint-purchasing market simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, scenario=True):
        if scenario:
            p.add_argument(
                "--scenario",
                required=True,
                help="scenario JSON path or builtin:scenario1|scenario2",
            )
        p.add_argument("--format", choices=("csv", "md"), default="csv")
        p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
        p.add_argument("--out", help="write report to this path instead of stdout")

    p = sub.add_parser("validate", help="validate a scenario file")
    p.add_argument("--scenario", required=True)

    p = sub.add_parser("run", help="evaluate one strategy profile")
    add_common(p)
    p.add_argument("--profile", required=True, help="e.g. NNOO, consumers first")

    p = sub.add_parser("sweep", help="evaluate all strategy profiles")
    add_common(p)

    p = sub.add_parser("equilibria", help="Nash equilibria and dominance")
    add_common(p)
    p.add_argument(
        "--restricted",
        action="store_true",
        help="pin all suppliers to N (no supplier overbidding)",
    )

    p = sub.add_parser("da", help="deferred-acceptance contracting")
    add_common(p)
    p.add_argument("--profile", required=True)
    p.add_argument(
        "--proposer", choices=("consumer", "supplier"), default="consumer"
    )

    p = sub.add_parser("rapid", help="one-round preference matching")
    add_common(p, scenario=False)
    p.add_argument(
        "--example",
        required=True,
        help="builtin example number (1 or 2) or a preference scenario JSON path",
    )
    p.add_argument("--overbid", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "validate":
            report = cmd_validate(args.scenario)
        elif args.command == "run":
            report = cmd_run(args.scenario, args.profile, args.format, args.precision)
        elif args.command == "sweep":
            report = cmd_sweep(args.scenario, args.format, args.precision)
        elif args.command == "equilibria":
            report = cmd_equilibria(
                args.scenario, args.restricted, args.format, args.precision
            )
        elif args.command == "da":
            report = cmd_da(
                args.scenario,
                args.profile,
                args.proposer,
                args.format,
                args.precision,
            )
        elif args.command == "rapid":
            report = cmd_rapid(args.example, args.overbid, args.format, args.precision)
        else:  # pragma: no cover
            raise AssertionError(args.command)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.exit_code

    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(report.body)
    else:
        sys.stdout.write(report.body)
    return 0


if __name__ == "__main__":
    sys.exit(main())
