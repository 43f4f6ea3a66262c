"""Command line front end.

Subcommands:

    supercodiff catalog list [--algebra 2|1]
    supercodiff catalog show ENTRY_ID
    supercodiff cohomology EXPR --space m|n [--bind "p=1,q=-2"] [--max-degree N]
    supercodiff bracket EXPR EXPR --space m|n [--bind ...]
    supercodiff structure EXPR --space m|n [--bind ...]
    supercodiff verify tables [--out FILE]
    supercodiff verify claims [--out FILE] [--budget N]

Exit status: 0 on success, 1 when a verification fails or an input is not
a codifferential where one is required, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .catalog import load_catalog
from .cochains import Cochain, bracket, is_codifferential
from .cohomology import cohomology_row
from .literals import (
    InstantiationError,
    ParseError,
    instantiate,
    parse_bindings,
    parse_cochain,
    print_cochain,
)
from .spaces import GradedSpace
from .structure import (
    center,
    derived_series,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    to_superalgebra,
)
from .verify import report_json, verify_claims, verify_tables

__all__ = ["main"]


def _space(text: str) -> GradedSpace:
    try:
        return GradedSpace.parse(text)
    except ValueError as exc:
        raise SystemExit(f"bad --space value {text!r}: {exc}") from exc


def _cochain(expr_text: str, space: GradedSpace, bind_text: str | None) -> Cochain:
    bindings = parse_bindings(bind_text) if bind_text else {}
    expr = parse_cochain(expr_text)
    return instantiate(expr, space, bindings)


def _h_line(row: tuple) -> str:
    return " ".join(f"h{n}={h}" for n, h in enumerate(row))


def _cmd_catalog(args: argparse.Namespace) -> int:
    catalog = load_catalog()
    if args.catalog_cmd == "list":
        for entry in catalog.entries:
            if args.algebra and str(entry.algebra) != args.algebra:
                continue
            params = f"({':'.join(entry.params)})" if entry.params else ""
            print(f"{entry.id:10s} {params:10s} {len(entry.rows):3d} rows  {entry.expr}")
        return 0
    entry = catalog.get(args.entry_id)
    print(f"id:      {entry.id}")
    print(f"algebra: {entry.algebra}")
    print(f"space:   {entry.space}")
    print(f"expr:    {entry.expr}")
    if entry.params:
        print(f"params:  {', '.join(entry.params)}")
    print("rows:")
    for row in entry.rows:
        label = row.label or "-"
        h = " ".join(str(h) for h in row.expected)
        print(f"  {label:14s} {row.kind:10s} {h}")
    return 0


def _cmd_cohomology(args: argparse.Namespace) -> int:
    space = _space(args.space)
    d = _cochain(args.expr, space, args.bind)
    if not is_codifferential(d):
        square = bracket(d, d)
        print("not a codifferential; [d,d] =", print_cochain(square), file=sys.stderr)
        return 1
    row = cohomology_row(d, args.max_degree)
    print(_h_line(row))
    return 0


def _cmd_bracket(args: argparse.Namespace) -> int:
    space = _space(args.space)
    left = _cochain(args.left, space, args.bind)
    right = _cochain(args.right, space, args.bind)
    print(print_cochain(bracket(left, right)))
    return 0


def _cmd_structure(args: argparse.Namespace) -> int:
    space = _space(args.space)
    d = _cochain(args.expr, space, args.bind)
    if not is_codifferential(d):
        print("not a codifferential", file=sys.stderr)
        return 1
    algebra = to_superalgebra(d)
    print("solvable: ", "yes" if is_solvable(algebra) else "no")
    print("nilpotent:", "yes" if is_nilpotent(algebra) else "no")
    print("center:   ", center(algebra)[1])
    derived = " > ".join(str(s.bidim) for s in derived_series(algebra))
    lower = " > ".join(str(s.bidim) for s in lower_central_series(algebra))
    print("derived series:      ", derived)
    print("lower central series:", lower)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.verify_cmd == "tables":
        report = verify_tables()
        summary = report["summary"]
        print(
            f"rows {summary['rows']}  codifferentials {summary['codifferentials']}"
            f"  matched {summary['match_fraction']}"
            f"  center matches {summary['center_matches']}"
        )
        for record in report["rows"]:
            if not record["ok"]:
                print(
                    f"  MISMATCH {record['id']} {record['label']}:"
                    f" expected {' '.join(record['expected'])}"
                    f" computed {' '.join(record['computed'])}"
                )
    else:
        report = verify_claims(budget=args.budget)
        for section in ("structure", "equivalences", "jumps"):
            part = report["summary"][section]
            state = "ok" if part["ok"] else "FAILED"
            print(f"{section}: {part['checks']} checks {state}")
            for record in report[section]:
                if not record["ok"]:
                    print(f"  FAILED {record['id']}")
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(report_json(report))
        print(f"report written to {args.out}")
    return 0 if report["summary"]["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercodiff",
        description="Cohomology and deformation checks for odd codifferentials.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_catalog = sub.add_parser("catalog", help="inspect the bundled dataset")
    sub_catalog = p_catalog.add_subparsers(dest="catalog_cmd", required=True)
    p_list = sub_catalog.add_parser("list", help="list catalog entries")
    p_list.add_argument("--algebra", help="restrict to one algebra dimension, e.g. 2|1")
    p_show = sub_catalog.add_parser("show", help="show one entry with its rows")
    p_show.add_argument("entry_id", help="entry id, e.g. 2|1:d_3")
    p_catalog.set_defaults(func=_cmd_catalog)

    def expr_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--space", required=True, help="graded dimension m|n")
        p.add_argument("--bind", help="parameter values, e.g. \"p=1,q=-2/3\"")

    p_cohom = sub.add_parser("cohomology", help="cohomology row of a codifferential")
    p_cohom.add_argument("expr", help="cochain expression, e.g. \"4*ps(1,1;2)\"")
    expr_args(p_cohom)
    p_cohom.add_argument("--max-degree", type=int, default=3)
    p_cohom.set_defaults(func=_cmd_cohomology)

    p_bracket = sub.add_parser("bracket", help="bracket of two cochains")
    p_bracket.add_argument("left")
    p_bracket.add_argument("right")
    expr_args(p_bracket)
    p_bracket.set_defaults(func=_cmd_bracket)

    p_struct = sub.add_parser("structure", help="solvability, nilpotency, center")
    p_struct.add_argument("expr")
    expr_args(p_struct)
    p_struct.set_defaults(func=_cmd_structure)

    p_verify = sub.add_parser("verify", help="recompute the catalog and claims")
    sub_verify = p_verify.add_subparsers(dest="verify_cmd", required=True)
    p_tables = sub_verify.add_parser("tables", help="recompute all cohomology rows")
    p_tables.add_argument("--out", help="write the full JSON report here")
    p_claims = sub_verify.add_parser("claims", help="check structure/equivalence/jump claims")
    p_claims.add_argument("--out", help="write the full JSON report here")
    p_claims.add_argument("--budget", type=int, default=20000, help="witness search budget")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InstantiationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
