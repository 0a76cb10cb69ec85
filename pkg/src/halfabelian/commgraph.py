"""Non-commutation graph on the root-vector basis of g_1.

Two root vectors ``e_a``, ``e_b`` of degree 1 fail to commute exactly when
``a + b`` is a root, so that is the edge relation.  Adjacency is kept as one
Python ``int`` bit row per vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .grading import GOneBasis, Grading, g1_basis, grade
from .orbits import WeightedDiagram
from .rootsys import Root, RootSystem, ValidationError, build_root_system


@dataclass(frozen=True)
class CommutationGraph:
    vertices: tuple[Root, ...]
    rows: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return [v for v in range(self.n) if self.rows[u] >> v & 1]

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def is_independent(self, vs: Sequence[int]) -> bool:
        mask = 0
        for v in vs:
            mask |= 1 << v
        return all(not (self.rows[v] & mask) for v in vs) and len(set(vs)) == len(vs)

    def induced(self, keep: Sequence[int]) -> "CommutationGraph":
        """Subgraph on ``keep``; old vertex ``keep[i]`` becomes vertex ``i``."""
        pos = {old: new for new, old in enumerate(keep)}
        rows = []
        for old in keep:
            r = 0
            for nb in self.neighbors(old):
                if nb in pos:
                    r |= 1 << pos[nb]
            rows.append(r)
        return CommutationGraph(tuple(self.vertices[i] for i in keep), tuple(rows))

    def permuted(self, perm: Sequence[int]) -> "CommutationGraph":
        if sorted(perm) != list(range(self.n)):
            raise ValidationError("not a permutation of the vertices")
        return self.induced(perm)

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]]) -> "CommutationGraph":
        """Abstract graph on ``n`` vertices (vertex labels are 1-tuples)."""
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValidationError("self-loop")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(tuple((i,) for i in range(n)), tuple(rows))

    def dumps(self) -> str:
        """One line per vertex: ``index | root coefficients | neighbour indices``."""
        lines = []
        for i, root in enumerate(self.vertices):
            coeffs = " ".join(map(str, root))
            nbrs = " ".join(map(str, self.neighbors(i)))
            lines.append(f"{i} | {coeffs} | {nbrs}".rstrip())
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def loads(cls, text: str) -> "CommutationGraph":
        verts, rows = [], []
        for k, line in enumerate(l for l in text.splitlines() if l.strip()):
            fields = [f.strip() for f in line.split("|")]
            if len(fields) != 3 or int(fields[0]) != k:
                raise ValidationError(f"bad graph line {line!r}")
            verts.append(tuple(int(x) for x in fields[1].split()))
            r = 0
            for x in fields[2].split():
                r |= 1 << int(x)
            rows.append(r)
        g = cls(tuple(verts), tuple(rows))
        for u in range(g.n):
            if g.adjacent(u, u) or any(not g.adjacent(v, u) for v in g.neighbors(u)):
                raise ValidationError("adjacency is not symmetric and loop-free")
        return g


def build(g1: GOneBasis, rs: RootSystem) -> CommutationGraph:
    idx = list(g1.indices)
    n = len(idx)
    rows = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if rs.sum_index(idx[a], idx[b]) is not None:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return CommutationGraph(tuple(rs.roots[i] for i in idx), tuple(rows))


def for_diagram(d: WeightedDiagram) -> tuple[Grading, CommutationGraph]:
    rs = build_root_system(d.stype)
    g = grade(rs, d)
    return g, build(g1_basis(g), rs)
