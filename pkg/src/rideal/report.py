"""Rendering of verification results and the atom-complexity table.

Text renderings (markdown, JSON, CSV) are deterministic: identical inputs
produce byte-identical output.  JSON omits timings unless asked, so two
runs with the same flags compare equal.  Figure rendering is file-only
(Agg backend) and lives behind functions so importing this module stays
cheap.
"""

from __future__ import annotations

import csv
import io
import json

from .atoms import AtomTable
from .verify import ComplexityReport, VerifyResult


def _fmt(value: int | float | None, impossible: bool = False) -> str:
    if impossible:
        return "*"
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.2f}"
    return str(value)


def render_table1_markdown(table: AtomTable) -> str:
    ns = list(range(1, table.n_max + 1))
    lines = [
        "| r \\ n | " + " | ".join(str(n) for n in ns) + " |",
        "|" + "---|" * (len(ns) + 1),
    ]
    for r in range(0, table.n_max + 1):
        row = [f"r={r}"]
        for n in ns:
            if r > n:
                row.append("")
                continue
            cell = table.cell(n, r)
            row.append(
                _fmt(cell.right_ideal, cell.impossible) + "/" + _fmt(cell.regular)
            )
        lines.append("| " + " | ".join(row) + " |")
    max_cells = [
        _fmt(table.max_row[n][0]) + "/" + _fmt(table.max_row[n][1]) for n in ns
    ]
    lines.append("| max | " + " | ".join(max_cells) + " |")
    ratio_cells = []
    for n in ns:
        pair = table.ratio_row.get(n)
        ratio_cells.append("-" if pair is None else _fmt(pair[0]) + "/" + _fmt(pair[1]))
    lines.append("| ratio | " + " | ".join(ratio_cells) + " |")
    return "\n".join(lines) + "\n"


def render_table1_json(table: AtomTable) -> str:
    records = [
        {
            "n": c.n,
            "r": c.r,
            "right_ideal": c.right_ideal,
            "regular": c.regular,
            "impossible": c.impossible,
        }
        for c in table.cells
    ]
    obj = {
        "cells": records,
        "max": {
            str(n): {"right_ideal": v[0], "regular": v[1]}
            for n, v in sorted(table.max_row.items())
        },
        "ratio": {
            str(n): {
                "right_ideal": None if v[0] is None else round(v[0], 2),
                "regular": None if v[1] is None else round(v[1], 2),
            }
            for n, v in sorted(table.ratio_row.items())
        },
    }
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def render_table1_csv(table: AtomTable) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "r", "right_ideal", "regular"])
    for c in table.cells:
        writer.writerow(
            [
                c.n,
                c.r,
                "*" if c.impossible else ("" if c.right_ideal is None else c.right_ideal),
                "" if c.regular is None else c.regular,
            ]
        )
    return out.getvalue()


def _params_text(report: ComplexityReport) -> str:
    return " ".join(f"{k}={report.params[k]}" for k in ("n", "m", "r") if k in report.params)


def _status(report: ComplexityReport) -> str:
    if report.skipped:
        return "SKIP"
    if report.passed is None:
        return "INFO"
    return "PASS" if report.passed else "FAIL"


def render_verify_markdown(result: VerifyResult) -> str:
    lines = ["# Claim verification", ""]
    for report in result.claims:
        line = (
            f"{_status(report)} {report.claim.value} {_params_text(report)}"
            f" expected={_fmt(report.expected)} measured={_fmt(report.measured)}"
        )
        if report.note:
            line += f"  ({report.note})"
        lines.append(line)
    if result.degenerate:
        lines += ["", "## Degenerate cells (n < 3, measured only)", ""]
        for report in result.degenerate:
            lines.append(
                f"INFO {report.claim.value} {_params_text(report)}"
                f" measured={_fmt(report.measured)}"
            )
    passed = sum(1 for r in result.claims if r.passed)
    failed = len(result.failures)
    skipped = len(result.skips)
    lines += [
        "",
        f"Summary: {passed} passed, {failed} failed, {skipped} skipped, "
        f"{len(result.degenerate)} degenerate.",
    ]
    return "\n".join(lines) + "\n"


def render_verify_json(
    result: VerifyResult, flags: dict, include_timings: bool = False
) -> str:
    obj = {
        "flags": flags,
        "claims": [r.to_dict(include_timings) for r in result.claims],
        "degenerate": [r.to_dict(include_timings) for r in result.degenerate],
        "summary": {
            "passed": sum(1 for r in result.claims if r.passed),
            "failed": len(result.failures),
            "skipped": len(result.skips),
            "degenerate": len(result.degenerate),
        },
    }
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def render_verify_csv(result: VerifyResult) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["claim", "n", "m", "r", "expected", "measured", "status", "note"])
    for section in (result.claims, result.degenerate):
        for r in section:
            writer.writerow(
                [
                    r.claim.value,
                    r.params.get("n", ""),
                    r.params.get("m", ""),
                    r.params.get("r", ""),
                    "" if r.expected is None else r.expected,
                    "" if r.measured is None else r.measured,
                    _status(r),
                    r.note,
                ]
            )
    return out.getvalue()


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_table1_figure(table: AtomTable, path: str) -> None:
    """Two panels: per-co-basis-size atom complexity of the right-ideal
    witness, and the growth of the column maxima for both language classes."""
    plt = _pyplot()
    fig, (left, right) = plt.subplots(1, 2, figsize=(11, 4.5))

    ns = list(range(1, table.n_max + 1))
    for r in range(0, table.n_max):
        xs = [n for n in ns if n > r and table.cell(n, r).right_ideal is not None]
        ys = [table.cell(n, r).right_ideal for n in xs]
        if xs:
            left.plot(xs, ys, marker="o", label=f"r={r}")
    left.set_yscale("log")
    left.set_xlabel("n")
    left.set_ylabel("atom complexity")
    left.set_title("Right-ideal witness, by co-basis size")
    left.legend(fontsize=8)

    for side, label in ((0, "right ideals"), (1, "regular")):
        xs = [n for n in ns if table.max_row[n][side] is not None]
        ys = [table.max_row[n][side] for n in xs]
        if xs:
            right.plot(xs, ys, marker="s", label=label)
    right.set_yscale("log")
    right.set_xlabel("n")
    right.set_ylabel("max atom complexity")
    right.set_title("Column maxima")
    right.legend(fontsize=8)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_verify_figure(result: VerifyResult, path: str) -> None:
    """Stacked per-claim bar chart of pass/fail/skip counts."""
    plt = _pyplot()
    claims = sorted({r.claim.value for r in result.claims})
    passed = [
        sum(1 for r in result.claims if r.claim.value == c and r.passed) for c in claims
    ]
    failed = [
        sum(1 for r in result.claims if r.claim.value == c and r.passed is False)
        for c in claims
    ]
    skipped = [
        sum(1 for r in result.claims if r.claim.value == c and r.skipped) for c in claims
    ]
    fig, ax = plt.subplots(figsize=(10, 4.5))
    xs = range(len(claims))
    ax.bar(xs, passed, label="pass", color="#2a9d2a")
    ax.bar(xs, failed, bottom=passed, label="fail", color="#cc3333")
    bottoms = [p + f for p, f in zip(passed, failed)]
    ax.bar(xs, skipped, bottom=bottoms, label="skipped", color="#999999")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(claims, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("cells")
    ax.set_title("Claim cells by outcome")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
