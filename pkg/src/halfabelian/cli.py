"""Command-line interface: ``halfabelian <subcommand> ...``.

Exit status is 0 on success, 1 when a verification finds a disagreement and
2 for usage errors or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import paperdata
from .classify import classify
from .commgraph import for_diagram
from .grading import check_g0_generation
from .harness import SCAN_GUARDS, scan
from .mis import enumerate_independent_sets, max_independent_set
from .orbits import (
    ClassicalOrbit,
    Partition,
    WeightedDiagram,
    diagram_parity_class,
    family_rank,
    partition_to_diagram,
)
from .reduction import (
    AlreadyStrictlyOdd,
    ReductionError,
    crosscheck,
    partitions_for_diagram,
    reduce_diagram,
    reduce_partition,
)
from .rootsys import SimpleType, ValidationError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt_root(r) -> str:
    return "(" + ",".join(map(str, r)) + ")"


def resolve_input(args) -> tuple[WeightedDiagram, ClassicalOrbit | None]:
    """The diagram named on the command line, plus its classical orbit when known."""
    if (args.partition is None) == (args.diagram is None):
        raise UsageError("give exactly one of --partition and --diagram")
    rank = args.rank
    try:
        if rank is None and args.partition is not None and args.family.strip().isalpha():
            rank = family_rank(args.family.strip().upper(), Partition.parse(args.partition).size)
        stype = SimpleType.parse(args.family, rank)
    except ValidationError as exc:
        raise UsageError(str(exc)) from exc
    try:
        if args.partition is not None:
            if not stype.is_classical:
                raise UsageError(f"--partition needs a classical family, not {stype}")
            orbit = ClassicalOrbit(stype.family, Partition.parse(args.partition))
            if orbit.rank != stype.rank:
                raise UsageError(
                    f"partition of {orbit.partition.size} gives rank {orbit.rank}, not {stype.rank}"
                )
            orbit.validate()
            return partition_to_diagram(orbit), orbit
        d = WeightedDiagram.parse(stype, args.diagram)
    except ValidationError as exc:
        raise UsageError(str(exc)) from exc
    if not stype.is_classical:
        return d, None
    parts = partitions_for_diagram(d)
    if not parts:
        raise UsageError(f"{d} is not the diagram of a nilpotent orbit of {stype}")
    # a diagram determines its partition (very even pairs differ only in the diagram)
    return d, ClassicalOrbit(stype.family, parts[0])


def orbit_record(d: WeightedDiagram, orbit: ClassicalOrbit | None, cap: str,
                 enumerate_d: int | None = None, limit: int = 10) -> dict:
    grading, graph = for_diagram(d)
    dim = graph.n
    res = max_independent_set(graph, cap=dim // 2 if cap == "half" else None)
    rec = {
        "type": str(d.stype),
        "partition": orbit.partition.compact() if orbit else None,
        "diagram": str(d),
        "parity": str(diagram_parity_class(d)),
        "dims": {str(k): v for k, v in grading.dims.items()},
        "dim_g1": dim,
        "g0_generates_g1": check_g0_generation(grading, d),
        "mis": {
            "size": res.size,
            "witness": [list(graph.vertices[i]) for i in res.witness],
            "proven_optimal": res.proven_optimal,
            "capped_by_bound": res.capped_by_bound,
            "half_abelian": 2 * res.size == dim,
        },
        "classifier": classify(orbit).as_dict() if orbit else None,
    }
    if enumerate_d is not None:
        sets = []
        count = 0
        for s in enumerate_independent_sets(graph, enumerate_d):
            if count < limit:
                sets.append([list(graph.vertices[i]) for i in s])
            count += 1
        rec["enumerate"] = {"d": enumerate_d, "count": count, "sets": sets}
    return rec


def _print_orbit(rec: dict) -> None:
    print(f"type:        {rec['type']}")
    if rec["partition"]:
        print(f"partition:   {rec['partition']}")
    print(f"diagram:     {rec['diagram']}")
    print(f"parity:      {rec['parity']}")
    print("dims:        " + "  ".join(f"g{k}={v}" for k, v in rec["dims"].items()))
    print(f"dim g1:      {rec['dim_g1']}")
    m = rec["mis"]
    how = "capped by dim/2" if m["capped_by_bound"] else "proven optimal"
    print(f"max abelian: {m['size']} ({how}){'  half-abelian' if m['half_abelian'] else ''}")
    print("witness:")
    for r in m["witness"]:
        print("  " + _fmt_root(r))
    c = rec["classifier"]
    if c:
        print(f"s:           {tuple(c['s'])}")
        if c["reduced_partition"]:
            print(f"reduced:     {Partition(c['reduced_partition']).compact()}")
        for cand in c["candidates"]:
            print(f"  candidate {cand['label']} = {cand['value']}")
        print(f"predicted:   {c['predicted_max']} (half-abelian: {c['half_abelian_predicted']})")
    if "enumerate" in rec:
        e = rec["enumerate"]
        print(f"independent sets of size {e['d']}: {e['count']}")
        for s in e["sets"]:
            print("  " + " ".join(_fmt_root(r) for r in s))


def cmd_orbit_info(args) -> int:
    d, orbit = resolve_input(args)
    if args.enumerate is not None and args.enumerate < 0:
        raise UsageError("--enumerate needs a non-negative size")
    rec = orbit_record(d, orbit, args.cap, args.enumerate, args.limit)
    if args.enumerate is not None and args.enumerate > rec["dim_g1"]:
        raise UsageError(f"--enumerate {args.enumerate} exceeds dim g1 = {rec['dim_g1']}")
    if args.json:
        print(json.dumps(rec, sort_keys=True))
    else:
        _print_orbit(rec)
    c = rec["classifier"]
    if c and c["predicted_max"] != rec["mis"]["size"]:
        print(f"prediction {c['predicted_max']} disagrees with MIS {rec['mis']['size']}",
              file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_reduce(args) -> int:
    d, orbit = resolve_input(args)
    try:
        res = reduce_diagram(d)
    except AlreadyStrictlyOdd:
        print(f"{d.stype} {d} is already strictly odd")
        return EXIT_OK
    except ReductionError as exc:
        raise UsageError(str(exc)) from exc
    rec = {
        "type": str(d.stype),
        "diagram": str(d),
        "subtype": str(res.subtype),
        "subdiagram": str(res.subdiagram),
        "nodes": [i + 1 for i in res.embedding],
        "reduced_partition": res.partition.compact() if res.partition else None,
    }
    status = EXIT_OK
    if orbit is not None:
        red = reduce_partition(orbit)
        rec["partition"] = orbit.partition.compact()
        rec["partition_reduction"] = red.partition.compact()
        rec["crosscheck"] = crosscheck(orbit)
        if not rec["crosscheck"]:
            status = EXIT_MISMATCH
    if args.json:
        print(json.dumps(rec, sort_keys=True))
    else:
        print(f"subtype:    {rec['subtype']}")
        print(f"subdiagram: {rec['subdiagram']}")
        print(f"nodes:      {' '.join(map(str, rec['nodes']))}")
        if rec["reduced_partition"]:
            print(f"partition:  {rec['reduced_partition']}")
        if "crosscheck" in rec:
            print(f"crosscheck: {'ok' if rec['crosscheck'] else 'FAILED'}")
    return status


def _load_rows(path: str | None) -> list[paperdata.TableRow]:
    if path is None:
        return paperdata.load_tables()
    try:
        return paperdata.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValidationError, ValueError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def cmd_tables(args) -> int:
    rows = _load_rows(args.data)
    if args.print:
        if args.print not in paperdata.TABLE_IDS:
            raise UsageError(f"unknown table {args.print!r}")
        for r in paperdata.rows_of(rows, args.print):
            print(r.to_line())
        return EXIT_OK
    ids = args.verify or list(paperdata.TABLE_IDS)
    unknown = [t for t in ids if t not in paperdata.TABLE_IDS]
    if unknown:
        raise UsageError(f"unknown table(s) {', '.join(unknown)}")
    chosen = [r for r in rows if r.table_id in ids]
    reports = paperdata.verify_all(chosen, args.jobs) if chosen else []
    bad = 0
    for rep in reports:
        if args.json:
            print(json.dumps({
                "table_id": rep.row.table_id,
                "orbit_name": rep.row.orbit_name,
                "dim_g1": rep.dim_g1,
                "mis": rep.mis_size,
                "ok": rep.ok,
                "mismatches": rep.mismatches,
            }, sort_keys=True))
        else:
            print(rep.summary())
        bad += not rep.ok
    if not args.json:
        print(f"{len(reports) - bad}/{len(reports)} rows verified")
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_scan(args) -> int:
    fam = args.family.upper()
    if fam not in SCAN_GUARDS:
        raise UsageError(f"scan covers A, B, C, D, not {args.family}")
    if args.max_rank > SCAN_GUARDS[fam] and not args.force:
        raise UsageError(f"max rank {args.max_rank} exceeds the guard {SCAN_GUARDS[fam]}; use --force")
    rows = scan(fam, args.max_rank, args.min_rank, args.jobs)
    bad = 0
    if not args.json:
        print(f"{'type':5} {'partition':20} {'parity':13} {'dim':>4} {'pred':>4} {'graph':>5}  agree")
    for r in rows:
        bad += not r.agree
        if args.json:
            print(json.dumps(r.as_dict(), sort_keys=True))
        else:
            flag = "yes" if r.agree else "NO " + "; ".join(r.problems)
            print(f"{r.family}{r.rank:<4} {r.partition:20} {r.parity:13} {r.dim_g1:4} "
                  f"{r.predicted:4} {r.mis:5}  {flag}")
    if not args.json:
        print(f"{len(rows) - bad}/{len(rows)} orbits agree")
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_graph_dump(args) -> int:
    d, _ = resolve_input(args)
    _, graph = for_diagram(d)
    text = graph.dumps()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _orbit_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, help="A..G, optionally with rank (E6, G2)")
    p.add_argument("--rank", type=int)
    p.add_argument("--partition", help='e.g. "8,6,3,3,2,1,1" or "3,2^2,1"')
    p.add_argument("--diagram", help='weights in Bourbaki order, e.g. "0 1 0 0 0 0"')
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="halfabelian", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit-info", help="grading, dim g1 and maximum abelian subspace")
    _orbit_args(p)
    p.add_argument("--enumerate", type=int, metavar="D", help="list independent sets of size D")
    p.add_argument("--limit", type=int, default=10, help="sets shown by --enumerate")
    p.add_argument("--cap", choices=("half", "none"), default="half",
                   help="stop the search once dim/2 is reached (default) or never")
    p.set_defaults(func=cmd_orbit_info)

    p = sub.add_parser("reduce", help="strictly odd reduction")
    _orbit_args(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("tables", help="print or verify the stored exceptional tables")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--verify", nargs="*", metavar="ID", help="tables to verify (default all)")
    g.add_argument("--print", metavar="ID")
    p.add_argument("--data", metavar="FILE", help="alternative data file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("scan", help="compare formulas with the graph search over all orbits")
    p.add_argument("--family", required=True)
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--min-rank", type=int)
    p.add_argument("--force", action="store_true", help="ignore the rank guard")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("graph-dump", help="write the commutation graph of g1")
    _orbit_args(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_graph_dump)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
