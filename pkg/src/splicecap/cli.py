"""Command-line interface.

Projection inputs are Gauss-code record files (``name: tokens`` per line);
``<file>:<name>`` picks one record.  Exit codes: 0 success, 1 input error,
2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .curvemap import CurveMap, extract_code, render_code
from .errors import SpliceCapError
from .families import (
    classify_projection,
    connected_sum,
    gen_pretzel,
    gen_rational,
    gen_torus,
)
from .pipeline import (
    emit_report,
    ingest_external,
    ingest_table,
    verify_observation,
)
from .search import SearchBudget, Witness, u_minus, u_upper, verify_witness
from .surfaces import ak_min_genus, crosscap_alt


def _load_entries(path: str):
    return ingest_table(path)


def _load_one(spec: str) -> tuple[str, CurveMap]:
    if ":" not in spec:
        raise SpliceCapError(f"expected <file>:<name>, got {spec!r}")
    path, name = spec.rsplit(":", 1)
    for entry in ingest_table(path):
        if entry.name == name:
            return name, entry.map
    raise SpliceCapError(f"no record named {name!r} in {path}")


def _emit_record(name: str, m: CurveMap) -> None:
    print(f"{name}: {render_code(extract_code(m))}")


def cmd_canon(args) -> None:
    for entry in _load_entries(args.file):
        print(f"{entry.name}: {entry.map.canonical_key.decode()}")


def cmd_u_minus(args) -> None:
    blocks = []
    for entry in _load_entries(args.file):
        value, witness = u_minus(entry.map)
        print(f"{entry.name}: u- = {value}")
        blocks.append((entry.name, witness))
    if args.witness:
        lines = []
        for name, witness in blocks:
            lines.append(f"BASE {name}")
            lines.extend(witness.steps)
        Path(args.witness).write_text("\n".join(lines) + "\n")


def cmd_u_upper(args) -> None:
    for entry in _load_entries(args.file):
        budget = None
        if args.max_crossings or args.max_cost is not None or args.max_nodes:
            value, _ = u_minus(entry.map)
            budget = SearchBudget(
                max_crossings=args.max_crossings or entry.map.n + 6,
                max_cost=args.max_cost if args.max_cost is not None else value,
                max_nodes=args.max_nodes or 10**7,
            )
        result = u_upper(entry.map, budget)
        shown = "-" if result.value is None else result.value
        print(f"{entry.name}: u <= {shown} ({result.status.value})")


def _surface_csv(args) -> None:
    print("name,n,chi_max,nonorientable_at_max,crosscap,genus")
    for entry in _load_entries(args.file):
        r = ak_min_genus(entry.map)
        crosscap = crosscap_alt(entry.map)
        print(
            f"{entry.name},{entry.n},{r.chi_max},"
            f"{str(r.nonorientable_at_max).lower()},{crosscap},{r.genus}"
        )


def cmd_classify(args) -> None:
    for entry in _load_entries(args.file):
        print(f"{entry.name}: {classify_projection(entry.map)}")


def cmd_gen(args) -> None:
    kind = args.family
    if kind == "torus":
        _require(args.params, 1, "gen torus <l>")
        m = gen_torus(int(args.params[0]))
        _emit_record(f"torus_{args.params[0]}", m)
    elif kind == "rational":
        _require(args.params, 2, "gen rational <m> <n>")
        m = gen_rational(int(args.params[0]), int(args.params[1]))
        _emit_record(f"rational_{args.params[0]}_{args.params[1]}", m)
    elif kind == "pretzel":
        _require(args.params, 3, "gen pretzel <p> <q> <r>")
        m = gen_pretzel(*(int(x) for x in args.params))
        _emit_record("pretzel_" + "_".join(args.params), m)
    elif kind == "sum":
        _require(args.params, 2, "gen sum <file:name> <file:name>")
        n1, m1 = _load_one(args.params[0])
        n2, m2 = _load_one(args.params[1])
        _emit_record(f"{n1}_sum_{n2}", connected_sum(m1, None, m2, None))
    else:
        raise SpliceCapError(f"unknown family {kind!r}")


def _require(params, count, usage) -> None:
    if len(params) != count:
        raise SpliceCapError(f"usage: {usage}")


def cmd_sum(args) -> None:
    n1, m1 = _load_one(args.left)
    n2, m2 = _load_one(args.right)
    _emit_record(f"{n1}_sum_{n2}", connected_sum(m1, None, m2, None))


def cmd_verify_witness(args) -> None:
    name, m = _load_one(args.projection)
    lines = [
        ln.strip()
        for ln in Path(args.script).read_text().splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if lines and lines[0].startswith("BASE"):
        base = lines[0].split(None, 1)[1].strip()
        if base != name and base != m.canonical_key.decode():
            raise SpliceCapError(
                f"witness is for base {base!r}, not {name!r}"
            )
        lines = lines[1:]
    witness = Witness(m.canonical_key, tuple(lines))
    result = verify_witness(m, witness)
    print(
        f"{name}: valid={str(result.valid).lower()} "
        f"s_count={result.s_count} ri_count={result.ri_count}"
    )
    if not result.valid:
        if result.failed_at is not None:
            print(f"  failed at step {result.failed_at}: {result.error}")
        raise SpliceCapError("witness rejected")


def cmd_verify_table(args) -> None:
    entries = ingest_table(args.projections)
    external = ingest_external(args.external) if args.external else None
    rows, summary = verify_observation(entries, external)
    emit_report(rows, args.report)
    print(
        f"{summary['rows']} rows, {summary['mismatches']} mismatches, "
        f"{summary['external_rows_joined']} external rows joined, "
        f"{summary['external_mismatches']} external mismatches"
    )
    if summary["mismatches"] or summary["external_mismatches"]:
        raise SpliceCapError("verification found mismatches")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splicecap",
        description="Splice unknotting counts and crosscap numbers "
        "of knot projections.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="canonical keys of records")
    p.add_argument("file")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("u-minus", help="exact splice unknotting counts")
    p.add_argument("file")
    p.add_argument("--witness", help="write witness scripts to this file")
    p.set_defaults(func=cmd_u_minus)

    p = sub.add_parser("u-upper", help="bounded two-way search upper bounds")
    p.add_argument("file")
    p.add_argument("--max-crossings", type=int)
    p.add_argument("--max-cost", type=int)
    p.add_argument("--max-nodes", type=int)
    p.set_defaults(func=cmd_u_upper)

    p = sub.add_parser("crosscap", help="state-surface crosscap CSV")
    p.add_argument("file")
    p.set_defaults(func=_surface_csv)

    p = sub.add_parser("genus", help="state-surface genus CSV")
    p.add_argument("file")
    p.set_defaults(func=_surface_csv)

    p = sub.add_parser("classify", help="small splice-count classes")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gen", help="emit a family projection record")
    p.add_argument("family", choices=["torus", "rational", "pretzel", "sum"])
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sum", help="connected sum of two records")
    p.add_argument("left", metavar="file:name")
    p.add_argument("right", metavar="file:name")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("verify-witness", help="replay a witness script")
    p.add_argument("projection", metavar="file:name")
    p.add_argument("script")
    p.set_defaults(func=cmd_verify_witness)

    p = sub.add_parser("verify-table", help="recompute the table invariants")
    p.add_argument("--projections", required=True)
    p.add_argument("--external")
    p.add_argument("--report", required=True)
    p.set_defaults(func=cmd_verify_table)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (SpliceCapError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
