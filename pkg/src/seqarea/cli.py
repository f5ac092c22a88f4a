"""Command-line interface.

Subcommands:
  gen     print sequence terms
  area    compute a polygon area by oracle and/or closed form
  verify  sweep a parameter grid and cross-check oracle vs closed form
  table   emit the polygonal-coefficient or third-order reference tables

Every subcommand accepts ``--format {json,csv,markdown}`` (default markdown),
``--out FILE`` and ``--seed N``.  Exit codes: 0 success / all match,
1 verification mismatch, 2 usage error.  Rationals are always emitted as
exact ``p/q`` strings, never floats.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction
from typing import Sequence

from .closedforms import mgon_area, polygonal_mgon_area
from .geometry import PolygonSpec, build_vertices, shoelace_area
from .numerics import rational_str
from .sequences import (
    FamilyKind,
    SequenceFamily,
    UnsupportedFamilyError,
    family_term,
)
from .verify import (
    COLLINEAR_KINDS,
    PolygonalTable,
    ThirdOrderTable,
    VerificationReport,
    polygonal_table,
    rank_name,
    third_order_table,
    verify_collinearity,
    verify_family,
)

DEFAULT_SEED = 20240901

FAMILY_NAMES = [
    "fibonacci",
    "lucas",
    "generalized",
    "pell",
    "pell-lucas",
    "jacobsthal",
    "jacobsthal-lucas",
    "polygonal",
    "tribonacci",
    "perrin",
    "padovan",
]

_SIMPLE_FAMILIES = {
    "fibonacci": SequenceFamily.fibonacci,
    "lucas": SequenceFamily.lucas,
    "pell": SequenceFamily.pell,
    "pell-lucas": SequenceFamily.pell_lucas,
    "jacobsthal": SequenceFamily.jacobsthal,
    "jacobsthal-lucas": SequenceFamily.jacobsthal_lucas,
    "tribonacci": SequenceFamily.tribonacci,
    "perrin": SequenceFamily.perrin,
}


def parse_range(text: str) -> range:
    """Inclusive range syntax: ``a..b`` or a single value ``a``."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return range(lo, hi + 1)
    value = int(text)
    return range(value, value + 1)


def parse_triple(text: str) -> tuple[int, int, int]:
    parts = [int(p) for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated integers, got {text!r}")
    return (parts[0], parts[1], parts[2])


def resolve_family(args: argparse.Namespace) -> SequenceFamily:
    """Build a SequenceFamily from CLI arguments, rejecting stray parameters."""
    name = args.family
    s = getattr(args, "s", None)
    t = getattr(args, "t", None)
    rank = getattr(args, "rank", None)
    initial = getattr(args, "initial_terms", None)
    if name == "generalized":
        if s is None or t is None:
            raise ValueError("family 'generalized' requires --s and --t")
    elif s is not None or t is not None:
        raise ValueError("--s and --t apply only to family 'generalized'")
    if name == "polygonal":
        if rank is None:
            raise ValueError("family 'polygonal' requires --rank")
    elif rank is not None:
        raise ValueError("--rank applies only to family 'polygonal'")
    if name != "padovan" and initial is not None:
        raise ValueError("--initial-terms applies only to family 'padovan'")

    if name == "generalized":
        return SequenceFamily.generalized(s, t)
    if name == "polygonal":
        return SequenceFamily.polygonal(rank)
    if name == "padovan":
        return SequenceFamily.padovan(initial) if initial else SequenceFamily.padovan()
    return _SIMPLE_FAMILIES[name]()


def closed_area_for(family: SequenceFamily, k: int, m: int) -> Fraction:
    """The closed-form m-gon area, or an error for families without one."""
    if family.kind is FamilyKind.POLYGONAL:
        assert family.rank is not None
        return polygonal_mgon_area(family.rank, k, m)
    if family.is_binet:
        return mgon_area(family, k, m)
    raise UnsupportedFamilyError(f"no closed form for {family.label}")


# ---------------------------------------------------------------------------
# Serialization


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _markdown_table(header: list[str], rows: list[list[str]]) -> str:
    lines = [
        "| " + " | ".join(header) + " |",
        "| " + " | ".join("---" for _ in header) + " |",
    ]
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return "\n".join(lines)


def render_gen(values: list[int], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([str(v) for v in values], indent=2) + "\n"
    if fmt == "csv":
        return _csv_text(["n", "value"], [[str(i), str(v)] for i, v in enumerate(values)])
    return "\n".join(str(v) for v in values) + ("\n" if values else "")


def render_area(
    spec: PolygonSpec,
    method: str,
    oracle: Fraction | None,
    closed: Fraction | None,
    fmt: str,
) -> str:
    match = oracle == closed if method == "both" else None
    if fmt == "json":
        payload: dict[str, object] = {
            "family": spec.family.label,
            "n": spec.n,
            "k": spec.k,
            "m": spec.m,
            "method": method,
        }
        if oracle is not None:
            payload["oracle"] = rational_str(oracle)
        if closed is not None:
            payload["closed"] = rational_str(closed)
        if match is not None:
            payload["match"] = match
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        row = [
            spec.family.label,
            str(spec.n),
            str(spec.k),
            str(spec.m),
            rational_str(oracle) if oracle is not None else "",
            rational_str(closed) if closed is not None else "",
            "" if match is None else str(match).lower(),
        ]
        return _csv_text(["family", "n", "k", "m", "oracle", "closed", "match"], [row])
    if method == "both":
        assert oracle is not None and closed is not None
        verdict = "MATCH" if match else "MISMATCH"
        return (
            f"oracle: {rational_str(oracle)}\n"
            f"closed: {rational_str(closed)}\n{verdict}\n"
        )
    value = oracle if method == "oracle" else closed
    assert value is not None
    return rational_str(value) + "\n"


def render_report(report: VerificationReport, fmt: str) -> str:
    """Serialize a report; wall-clock time is deliberately omitted so equal
    inputs give byte-identical output."""
    if fmt == "json":
        payload = {
            "grid": report.grid,
            "cells": [
                {
                    "family": c.spec.family.label,
                    "n": c.spec.n,
                    "k": c.spec.k,
                    "m": c.spec.m,
                    "oracle": rational_str(c.oracle_area),
                    "closed": (
                        rational_str(c.closed_area)
                        if c.closed_area is not None
                        else None
                    ),
                    "match": c.match,
                    "note": c.note,
                }
                for c in report.cells
            ],
            "pass_count": report.pass_count,
            "fail_count": report.fail_count,
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        rows = [
            [
                c.spec.family.label,
                str(c.spec.n),
                str(c.spec.k),
                str(c.spec.m),
                rational_str(c.oracle_area),
                rational_str(c.closed_area) if c.closed_area is not None else "",
                str(c.match).lower(),
                c.note,
            ]
            for c in report.cells
        ]
        return _csv_text(
            ["family", "n", "k", "m", "oracle", "closed", "match", "note"], rows
        )
    rows = [
        [
            str(c.spec.n),
            str(c.spec.k),
            str(c.spec.m),
            rational_str(c.oracle_area),
            rational_str(c.closed_area) if c.closed_area is not None else "",
            "MATCH" if c.match else "MISMATCH",
            c.note,
        ]
        for c in report.cells
    ]
    table = _markdown_table(["n", "k", "m", "oracle", "closed", "match", "note"], rows)
    return (
        f"grid: {report.grid}\n"
        f"pass_count: {report.pass_count}\n"
        f"fail_count: {report.fail_count}\n\n" + table + "\n"
    )


def render_polygonal_table(table: PolygonalTable, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "m_values": list(table.m_values),
            "ranks": list(table.ranks),
            "cells": [
                {
                    "m": c.m,
                    "rank": c.rank,
                    "coefficient": c.coefficient,
                    "published": c.published,
                    "match": c.match,
                }
                for c in table.cells
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        rows = [
            [
                str(c.m),
                str(c.rank),
                str(c.coefficient),
                "" if c.published is None else str(c.published),
                "" if c.match is None else str(c.match).lower(),
            ]
            for c in table.cells
        ]
        return _csv_text(["m", "rank", "coefficient", "published", "match"], rows)
    header = ["m"] + [rank_name(r) for r in table.ranks]
    rows = []
    for m in table.m_values:
        rows.append([str(m)] + [str(table.cell(m, r).coefficient) for r in table.ranks])
    checked = [c for c in table.cells if c.match is not None]
    lines = [
        "Coefficient of k^4 in the m-gon area on polygonal-number vertices",
        "",
        _markdown_table(header, rows),
        "",
    ]
    for c in table.mismatches:
        lines.append(
            f"MISMATCH at m={c.m} rank={c.rank}: "
            f"computed {c.coefficient}, published {c.published}"
        )
    if checked:
        matched = sum(1 for c in checked if c.match)
        lines.append(f"published check: {matched}/{len(checked)} cells match")
    else:
        lines.append("published check: no reference cells in range")
    return "\n".join(lines) + "\n"


def render_third_order_table(table: ThirdOrderTable, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "n": table.n,
            "k_max": table.k_max,
            "padovan_initial": list(table.padovan_initial),
            "cells": [
                {
                    "column": c.column,
                    "k": c.k,
                    "computed": rational_str(c.computed),
                    "published": (
                        rational_str(c.published) if c.published is not None else None
                    ),
                    "status": c.status,
                }
                for c in table.cells
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        rows = [
            [
                c.column,
                str(c.k),
                rational_str(c.computed),
                rational_str(c.published) if c.published is not None else "",
                c.status,
            ]
            for c in table.cells
        ]
        return _csv_text(["column", "k", "computed", "published", "status"], rows)

    def cell_text(column: str, k: int) -> str:
        c = table.cell(column, k)
        text = rational_str(c.computed)
        if c.status and c.published is not None and c.computed != c.published:
            return f"{text} [{c.status}; published {rational_str(c.published)}]"
        if c.status:
            return f"{text} [{c.status}]"
        return text

    initial = ",".join(str(v) for v in table.padovan_initial)
    rows = [
        [str(k)] + [cell_text(col, k) for col in ("tribonacci", "perrin", "padovan")]
        for k in range(1, table.k_max + 1)
    ]
    title = (
        f"Triangle areas on third-order sequence vertices, "
        f"n={table.n}, k=1..{table.k_max} (padovan initial {initial})"
    )
    body = _markdown_table(["k", "Tribonacci", "Perrin", "Padovan"], rows)
    return f"{title}\n\n{body}\n"


# ---------------------------------------------------------------------------
# Subcommand handlers


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.count < 0:
        raise ValueError(f"--count must be >= 0, got {args.count}")
    family = resolve_family(args)
    values = [family_term(family, i) for i in range(args.count)]
    _emit(render_gen(values, args.format), args.out)
    return 0


def _cmd_area(args: argparse.Namespace) -> int:
    family = resolve_family(args)
    spec = PolygonSpec(family, args.n, args.k, args.m)
    oracle = closed = None
    if args.method in ("oracle", "both"):
        oracle = shoelace_area(build_vertices(spec))
    if args.method in ("closed", "both"):
        closed = closed_area_for(family, args.k, args.m)
    _emit(render_area(spec, args.method, oracle, closed, args.format), args.out)
    if args.method == "both" and oracle != closed:
        return 1
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    family = resolve_family(args)
    if family.kind in COLLINEAR_KINDS:
        report = verify_collinearity(family, args.n, args.k, args.m)
    else:
        report = verify_family(family, args.n, args.k, args.m)
    _emit(render_report(report, args.format), args.out)
    return 0 if report.fail_count == 0 else 1


def _cmd_table(args: argparse.Namespace) -> int:
    if args.which == "polygonal":
        table = polygonal_table(args.m, args.rank)
        _emit(render_polygonal_table(table, args.format), args.out)
    else:
        table = third_order_table(args.n, args.k_max, args.padovan_initial)
        _emit(render_third_order_table(table, args.format), args.out)
    return 0


# ---------------------------------------------------------------------------
# Parser


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["json", "csv", "markdown"],
        default="markdown",
        help="output format (default: markdown)",
    )
    common.add_argument("--out", metavar="FILE", help="write output to FILE")
    common.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help="seed for any randomized checks (fixed default for reproducibility)",
    )
    return common


def _add_family_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("family", choices=FAMILY_NAMES)
    parser.add_argument("--s", type=int, help="first parameter of 'generalized'")
    parser.add_argument("--t", type=int, help="second parameter of 'generalized'")
    parser.add_argument("--rank", type=int, help="rank of 'polygonal' (>= 3)")
    parser.add_argument(
        "--initial-terms",
        type=parse_triple,
        metavar="A,B,C",
        help="start values for 'padovan' (default 1,1,1)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqarea",
        description="Exact areas of polygons with integer-sequence vertices.",
    )
    common = _common_options()
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", parents=[common], help="print sequence terms")
    _add_family_options(p_gen)
    p_gen.add_argument("--count", type=int, required=True, help="number of terms")
    p_gen.set_defaults(handler=_cmd_gen)

    p_area = sub.add_parser(
        "area", parents=[common], help="area of one sequence polygon"
    )
    _add_family_options(p_area)
    p_area.add_argument("--n", type=int, required=True, help="start index (>= 0)")
    p_area.add_argument("--k", type=int, required=True, help="stride (>= 1)")
    p_area.add_argument("--m", type=int, required=True, help="vertex count (>= 3)")
    p_area.add_argument(
        "--method",
        choices=["oracle", "closed", "both"],
        default="oracle",
        help="shoelace oracle, closed form, or both with a verdict",
    )
    p_area.set_defaults(handler=_cmd_area)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="cross-check a parameter grid"
    )
    _add_family_options(p_verify)
    p_verify.add_argument(
        "--n", type=parse_range, required=True, metavar="A..B", help="start indices"
    )
    p_verify.add_argument(
        "--k", type=parse_range, required=True, metavar="A..B", help="strides"
    )
    p_verify.add_argument(
        "--m", type=parse_range, required=True, metavar="A..B", help="vertex counts"
    )
    p_verify.set_defaults(handler=_cmd_verify)

    p_table = sub.add_parser(
        "table", parents=[common], help="emit a reference table"
    )
    p_table.add_argument("which", choices=["polygonal", "third-order"])
    p_table.add_argument(
        "--m", type=parse_range, default=range(3, 8), metavar="A..B",
        help="m values for the polygonal table (default 3..7)",
    )
    p_table.add_argument(
        "--rank", type=parse_range, default=range(3, 8), metavar="A..B",
        help="ranks for the polygonal table (default 3..7)",
    )
    p_table.add_argument(
        "--k-max", type=int, default=6, help="third-order table: largest k"
    )
    p_table.add_argument(
        "--n", type=int, default=1, help="third-order table: start index"
    )
    p_table.add_argument(
        "--padovan-initial",
        type=parse_triple,
        default=(1, 1, 1),
        metavar="A,B,C",
        help="third-order table: padovan start values",
    )
    p_table.set_defaults(handler=_cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    random.seed(args.seed)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
