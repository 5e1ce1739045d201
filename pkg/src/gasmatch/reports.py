"""Tabular report rendering (CSV and markdown) with fixed decimal precision."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

DEFAULT_PRECISION = 3


@dataclass(frozen=True)
class Report:
    kind: str
    format: str
    body: str


def fmt_cell(value, precision: int) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.{precision}f}"
    return str(value)


def render_table(
    header: list[str],
    rows: list[list],
    fmt: str,
    precision: int = DEFAULT_PRECISION,
) -> str:
    cells = [[fmt_cell(v, precision) for v in row] for row in rows]
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
        return out.getvalue()
    if fmt == "md":
        widths = [
            max(len(h), *(len(r[k]) for r in cells)) if cells else len(h)
            for k, h in enumerate(header)
        ]
        lines = [
            "| " + " | ".join(h.ljust(w) for h, w in zip(header, widths)) + " |",
            "|" + "|".join("-" * (w + 2) for w in widths) + "|",
        ]
        for row in cells:
            lines.append(
                "| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |"
            )
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected 'csv' or 'md'")


def render_sections(
    sections: list[tuple[str, list[str], list[list]]],
    fmt: str,
    precision: int = DEFAULT_PRECISION,
) -> str:
    """Concatenate named tables; CSV sections carry a ``# name`` comment line."""
    parts = []
    for name, header, rows in sections:
        title = f"# {name}\n" if fmt == "csv" else f"### {name}\n\n"
        parts.append(title + render_table(header, rows, fmt, precision))
    return "\n".join(parts)
