"""Command-line interface.

Subcommands: witness, complexity, semigroup, atoms, op, verify, table1.
Results go to standard output, diagnostics to standard error.  Exit codes:
0 all checks passed, 1 claim failure, 2 input error, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .atoms import atom_table, atoms_with_complexity
from .automata import Dfa, Nfa, complexity, determinize, minimize, reverse
from .errors import InputError, ResourceLimitError
from .operations import BooleanOp, boolean, concat, star
from .report import (
    render_table1_csv,
    render_table1_json,
    render_table1_markdown,
    render_verify_csv,
    render_verify_json,
    render_verify_markdown,
    save_table1_figure,
    save_verify_figure,
)
from .serialize import automaton_from_json, automaton_to_json, dfa_to_dict, dfa_to_dot
from .transformations import DEFAULT_SEMIGROUP_CAP, syntactic_semigroup_size
from .verify import random_operation_audit, verify_main_results
from .witnesses import CLI_FAMILIES, WitnessSpec, build_witness

_OPS = {
    "union": BooleanOp.UNION,
    "intersect": BooleanOp.INTERSECTION,
    "diff": BooleanOp.DIFFERENCE,
    "symdiff": BooleanOp.SYMMETRIC_DIFFERENCE,
}


def _load_dfa(path: str) -> Dfa:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            automaton = automaton_from_json(handle.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if isinstance(automaton, Nfa):
        automaton, _ = determinize(automaton)
    return automaton


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rideal",
        description="Witness automata, atoms, and complexity-claim verification "
        "for regular right ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    witness = sub.add_parser("witness", help="emit a witness automaton")
    witness.add_argument("family", choices=CLI_FAMILIES)
    witness.add_argument("n", type=int)
    fmt = witness.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    fmt.add_argument("--json", action="store_true", help="emit JSON (default)")

    comp = sub.add_parser("complexity", help="complexity of an automaton file")
    comp.add_argument("file")

    semi = sub.add_parser("semigroup", help="syntactic semigroup size of a file")
    semi.add_argument("file")
    semi.add_argument("--cap", type=int, default=DEFAULT_SEMIGROUP_CAP)

    atoms = sub.add_parser("atoms", help="atoms of an automaton file")
    atoms.add_argument("file")
    atoms.add_argument("--table", action="store_true", help="markdown table output")

    op = sub.add_parser("op", help="apply an operation and report the result")
    op.add_argument("operation", choices=list(_OPS) + ["concat", "star", "reverse"])
    op.add_argument("file1")
    op.add_argument("file2", nargs="?")

    verify = sub.add_parser("verify", help="replay the complexity-claim grid")
    verify.add_argument("--n-min", type=int, default=3)
    verify.add_argument("--n-max", type=int, default=7)
    verify.add_argument("--m-max", type=int, default=6)
    verify.add_argument("--json", action="store_true", help="JSON report to stdout")
    verify.add_argument("--seed", type=int, default=0,
                        help="seed for the randomized word-sample oracle")
    verify.add_argument("--oracle-pairs", type=int, default=20,
                        help="random DFA pairs audited against word-set arithmetic")
    verify.add_argument("--semigroup-cap", type=int, default=DEFAULT_SEMIGROUP_CAP)
    verify.add_argument("--workers", type=int, default=None,
                        help="cell workers (default: RIDEAL_WORKERS or cpu-bound)")
    verify.add_argument("--timings", action="store_true",
                        help="include per-cell elapsed_ms in JSON output")
    verify.add_argument("--out-dir", default=None,
                        help="write verify.json, verify.csv and verify.png here")

    table1 = sub.add_parser("table1", help="measured atom-complexity table")
    table1.add_argument("--n-max", type=int, default=6)
    table1.add_argument("--format", choices=("markdown", "json", "csv"),
                        default="markdown")
    table1.add_argument("--out-dir", default=None,
                        help="write table1.md/.json/.csv and table1.png here")
    return parser


def _cmd_witness(args) -> int:
    dfa = build_witness(WitnessSpec(family=args.family, n=args.n))
    print(dfa_to_dot(dfa) if args.dot else automaton_to_json(dfa))
    return 0


def _cmd_complexity(args) -> int:
    print(complexity(_load_dfa(args.file)))
    return 0


def _cmd_semigroup(args) -> int:
    print(syntactic_semigroup_size(_load_dfa(args.file), cap=args.cap))
    return 0


def _cmd_atoms(args) -> int:
    atoms = atoms_with_complexity(_load_dfa(args.file))
    if args.table:
        print("| basis | co-basis size | complexity |")
        print("|---|---|---|")
        for atom in atoms:
            basis = "{" + ",".join(str(q + 1) for q in sorted(atom.basis)) + "}"
            print(f"| {basis} | {atom.cobasis_size} | {atom.complexity} |")
    else:
        print(
            json.dumps(
                {
                    "count": len(atoms),
                    "atoms": [
                        {
                            "basis": sorted(q + 1 for q in atom.basis),
                            "cobasis": sorted(q + 1 for q in atom.cobasis),
                            "r": atom.cobasis_size,
                            "complexity": atom.complexity,
                        }
                        for atom in atoms
                    ],
                },
                indent=2,
            )
        )
    return 0


def _cmd_op(args) -> int:
    d1 = _load_dfa(args.file1)
    if args.operation in ("star", "reverse"):
        if args.file2 is not None:
            raise InputError(f"op {args.operation} takes a single automaton")
        if args.operation == "star":
            result = star(d1)
        else:
            result = minimize(determinize(reverse(d1))[0])
    else:
        if args.file2 is None:
            raise InputError(f"op {args.operation} needs two automaton files")
        d2 = _load_dfa(args.file2)
        if args.operation == "concat":
            result = concat(d1, d2)
        else:
            result = boolean(d1, d2, _OPS[args.operation])
    print(
        json.dumps(
            {
                "operation": args.operation,
                "complexity": result.n,
                "result": dfa_to_dict(result),
            },
            indent=2,
        )
    )
    return 0


def _cmd_verify(args) -> int:
    result = verify_main_results(
        n_min=args.n_min,
        n_max=args.n_max,
        m_max=args.m_max,
        semigroup_cap=args.semigroup_cap,
        workers=args.workers,
    )
    audit = random_operation_audit(seed=args.seed, pairs=args.oracle_pairs)
    flags = {
        "n_min": args.n_min,
        "n_max": args.n_max,
        "m_max": args.m_max,
        "seed": args.seed,
        "oracle_pairs": args.oracle_pairs,
    }
    json_text = render_verify_json(result, flags, include_timings=args.timings)
    # splice the oracle outcome into the JSON deterministically
    obj = json.loads(json_text)
    obj["oracle"] = {
        "seed": audit.seed,
        "pairs": audit.pairs,
        "checks": audit.checks,
        "mismatches": audit.mismatches,
        "pass": audit.all_agree,
    }
    json_text = json.dumps(obj, indent=2, sort_keys=True) + "\n"

    if args.json:
        sys.stdout.write(json_text)
    else:
        sys.stdout.write(render_verify_markdown(result))
        status = "agree" if audit.all_agree else "DISAGREE"
        sys.stdout.write(
            f"Oracle: {audit.pairs} random pairs, {audit.checks} checks, {status}.\n"
        )

    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        with open(os.path.join(args.out_dir, "verify.json"), "w", encoding="utf-8") as f:
            f.write(json_text)
        with open(os.path.join(args.out_dir, "verify.csv"), "w", encoding="utf-8") as f:
            f.write(render_verify_csv(result))
        save_verify_figure(result, os.path.join(args.out_dir, "verify.png"))
        print(f"report written to {args.out_dir}", file=sys.stderr)

    if not result.all_passed or not audit.all_agree:
        return 1
    if result.skips:
        return 3
    return 0


def _cmd_table1(args) -> int:
    table = atom_table(args.n_max)
    renderers = {
        "markdown": render_table1_markdown,
        "json": render_table1_json,
        "csv": render_table1_csv,
    }
    sys.stdout.write(renderers[args.format](table))
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        for name, renderer in (
            ("table1.md", render_table1_markdown),
            ("table1.json", render_table1_json),
            ("table1.csv", render_table1_csv),
        ):
            with open(os.path.join(args.out_dir, name), "w", encoding="utf-8") as f:
                f.write(renderer(table))
        save_table1_figure(table, os.path.join(args.out_dir, "table1.png"))
        print(f"table written to {args.out_dir}", file=sys.stderr)
    return 0


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "witness": _cmd_witness,
        "complexity": _cmd_complexity,
        "semigroup": _cmd_semigroup,
        "atoms": _cmd_atoms,
        "op": _cmd_op,
        "verify": _cmd_verify,
        "table1": _cmd_table1,
    }
    try:
        return handlers[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
