"""Published tables of strictly odd and odd orbits in the exceptional algebras.

Records live in ``data/tables.txt``, one per line::

    table_id|orbit_name|family rank|w1 ... wr|dim_g1|max_abelian|strict_piece|half

Weights are in Bourbaki node order; the stored dim g_1 values pin that
ordering down, since any other labelling of the nodes changes them.
``half`` is ``yes`` when g_1 has an abelian subspace of half its dimension.
Empty fields are columns a table does not list.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable

from .commgraph import for_diagram
from .grading import check_g0_generation
from .mis import max_independent_set
from .orbits import WeightedDiagram, diagram_parity_class, Parity, Partition
from .reduction import ReductionError, equivalent_subdiagrams, partitions_for_diagram, reduce_diagram
from .rootsys import SimpleType, ValidationError

STRICT_TABLES = ("G2s", "F4s", "E6s", "E7s", "E8s")
ODD_TABLES = ("F4o", "E6o", "E7o", "E8o")
TABLE_IDS = STRICT_TABLES + ODD_TABLES

HEADER = """\
# Strictly odd (..s) and odd (..o) nilpotent orbits of the exceptional Lie algebras.
# table_id|orbit_name|family rank|w1 ... wr|dim_g1|max_abelian|strict_piece|half
# weights in Bourbaki node order; empty field = column not listed for that table
"""


@dataclass(frozen=True)
class TableRow:
    table_id: str
    orbit_name: str
    diagram: WeightedDiagram
    dim_g1: int | None
    max_abelian: int | None
    strict_piece: str | None
    half_abelian: bool

    @property
    def is_strict_table(self) -> bool:
        return self.table_id in STRICT_TABLES

    def to_line(self) -> str:
        st = self.diagram.stype
        opt = lambda v: "" if v is None else str(v)  # noqa: E731
        return "|".join([
            self.table_id,
            self.orbit_name,
            f"{st.family} {st.rank}",
            " ".join(map(str, self.diagram.weights)),
            opt(self.dim_g1),
            opt(self.max_abelian),
            opt(self.strict_piece),
            "yes" if self.half_abelian else "no",
        ])

    @classmethod
    def from_line(cls, line: str) -> "TableRow":
        f = line.split("|")
        if len(f) != 8:
            raise ValidationError(f"expected 8 fields, got {len(f)}: {line!r}")
        tid, name, typ, ws, dim, mx, piece, half = f
        if tid not in TABLE_IDS:
            raise ValidationError(f"unknown table {tid!r}")
        if half not in ("yes", "no"):
            raise ValidationError(f"half field must be yes/no: {line!r}")
        stype = SimpleType.parse(typ)
        return cls(
            tid,
            name,
            WeightedDiagram(stype, tuple(int(w) for w in ws.split())),
            int(dim) if dim else None,
            int(mx) if mx else None,
            piece or None,
            half == "yes",
        )


def loads(text: str) -> list[TableRow]:
    rows = []
    for line in text.splitlines():
        if line.strip() and not line.startswith("#"):
            rows.append(TableRow.from_line(line))
    return rows


def dumps(rows: Iterable[TableRow]) -> str:
    return HEADER + "".join(r.to_line() + "\n" for r in rows)


def load_tables() -> list[TableRow]:
    text = resources.files(__package__).joinpath("data/tables.txt").read_text(encoding="utf-8")
    return loads(text)


def rows_of(rows: Iterable[TableRow], table_id: str) -> list[TableRow]:
    return [r for r in rows if r.table_id == table_id]


_PIECE = re.compile(r"\s*([A-G]\d+)\s*(?:\((.*)\))?\s*$")


def parse_piece(piece: str) -> tuple[SimpleType, str | None]:
    """``"D6 (3,2^4,1)"`` -> (D6, "3,2^4,1"); ``"E6 (A3+A1)"`` -> (E6, "A3+A1")."""
    m = _PIECE.match(piece)
    if not m:
        raise ValidationError(f"bad strict piece {piece!r}")
    return SimpleType.parse(m.group(1)), m.group(2)


@dataclass
class RowReport:
    row: TableRow
    dim_g1: int
    mis_size: int
    proven_optimal: bool
    capped_by_bound: bool
    subtype: str | None = None
    reduced_partition: str | None = None
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        r = self.row
        status = "ok" if self.ok else "MISMATCH " + "; ".join(self.mismatches)
        extra = ""
        if self.subtype:
            extra = f" piece={self.subtype}"
            if self.reduced_partition:
                extra += f" ({self.reduced_partition})"
        return (
            f"{r.table_id:4} {r.orbit_name:14} dim={self.dim_g1:3} mis={self.mis_size:3}"
            f"{extra}  {status}"
        )


def verify_row(row: TableRow, all_rows: list[TableRow] | None = None) -> RowReport:
    """Recompute a row from its diagram and list every field that disagrees."""
    d = row.diagram
    g, graph = for_diagram(d)
    dim = graph.n
    res = max_independent_set(graph, cap=dim // 2)
    rep = RowReport(row, dim, res.size, res.proven_optimal, res.capped_by_bound)
    bad = rep.mismatches

    if dim % 2:
        bad.append(f"dim g1 = {dim} is odd")
    if not check_g0_generation(g, d):
        bad.append("g1 not generated by weight-1 simple roots")
    if (2 * res.size == dim) != row.half_abelian:
        bad.append(f"half-abelian status: table {row.half_abelian}, computed {2 * res.size == dim}")
    if row.dim_g1 is not None and row.dim_g1 != dim:
        bad.append(f"dim_g1: table {row.dim_g1}, computed {dim}")
    if row.max_abelian is not None and row.max_abelian != res.size:
        bad.append(f"max_abelian: table {row.max_abelian}, computed {res.size}")
    if not (res.proven_optimal or res.capped_by_bound):
        bad.append("search did not finish")

    cls = diagram_parity_class(d)
    if row.is_strict_table:
        if cls is not Parity.STRICTLY_ODD:
            bad.append(f"strict-table diagram is {cls}")
        return rep
    if cls is not Parity.ODD:
        bad.append(f"odd-table diagram is {cls}")
        return rep
    try:
        red = reduce_diagram(d)
    except ReductionError as exc:
        bad.append(f"reduction failed: {exc}")
        return rep
    rep.subtype = str(red.subtype)
    if red.partition is not None:
        rep.reduced_partition = red.partition.compact()
    _, sub_graph = for_diagram(red.subdiagram)
    if sub_graph.n != dim:
        bad.append(f"reduced dim g1 {sub_graph.n} != {dim}")
    if row.strict_piece:
        want_type, label = parse_piece(row.strict_piece)
        if want_type != red.subtype:
            bad.append(f"strict piece type: table {want_type}, computed {red.subtype}")
        elif label is not None:
            variants = equivalent_subdiagrams(red, d)
            if red.subtype.is_classical:
                want = Partition.parse(label)
                found = {p for v in variants for p in partitions_for_diagram(v)}
                if want not in found:
                    got = ", ".join(sorted(p.compact() for p in found)) or "none"
                    bad.append(f"strict piece partition: table {label}, computed {got}")
                else:
                    rep.reduced_partition = want.compact()
            else:
                ref = [r for r in (all_rows or load_tables())
                       if r.table_id == f"{red.subtype}s" and r.orbit_name == label]
                if not ref:
                    bad.append(f"no row {label} in table {red.subtype}s")
                elif ref[0].diagram not in variants:
                    bad.append(f"reduced diagram {red.subdiagram} differs from {red.subtype}s {label}")
                else:
                    rep.reduced_partition = label
    return rep


def verify_all(rows: list[TableRow], jobs: int = 1) -> list[RowReport]:
    if jobs <= 1:
        return [verify_row(r, rows) for r in rows]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(verify_row, rows, [rows] * len(rows)))
