"""Strictly odd reduction of odd nilpotent orbits.

Erasing the weight-2 nodes of an odd diagram leaves exactly one connected
component carrying nonzero weights; that component, read as a weighted
diagram of its own type, is the strictly odd reduction and has the same g_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .orbits import (
    ClassicalOrbit,
    Parity,
    Partition,
    WeightedDiagram,
    diagram_parity_class,
    orbits_of,
    parity_class,
    partition_to_diagram,
)
from .rootsys import SimpleType, cartan_matrix


class ReductionError(ValueError):
    pass


class EvenOrbit(ReductionError):
    """The diagram has no weight 1, so g_1 = 0."""


class AlreadyStrictlyOdd(ReductionError):
    """The diagram has no weight 2; it is its own reduction."""


class MultipleNonzeroComponents(ReductionError):
    """More than one component survives with nonzero weights (not an orbit diagram)."""


@dataclass(frozen=True)
class ReductionResult:
    subtype: SimpleType
    subdiagram: WeightedDiagram
    embedding: tuple[int, ...]  # subdiagram node i sits at parent node embedding[i] (0-based)
    partition: Partition | None = None


_PREFERENCE = "ABCDEFG"


def _candidate_types(rank: int) -> list[SimpleType]:
    out = []
    for fam in _PREFERENCE:
        try:
            out.append(SimpleType(fam, rank))
        except ValueError:
            pass
    return out


def _isomorphisms(std: tuple[tuple[int, ...], ...], sub: list[list[int]]) -> list[tuple[int, ...]]:
    """All maps ``p`` with ``std[i][j] == sub[p[i]][p[j]]``, in lexicographic order."""
    n = len(std)
    found: list[tuple[int, ...]] = []

    def rec(i: int, p: list[int], used: set[int]) -> None:
        if i == n:
            found.append(tuple(p))
            return
        for c in range(n):
            if c in used or sub[c][c] != std[i][i]:
                continue
            if all(std[i][j] == sub[c][p[j]] and std[j][i] == sub[p[j]][c] for j in range(i)):
                p.append(c)
                used.add(c)
                rec(i + 1, p, used)
                used.discard(c)
                p.pop()

    rec(0, [], set())
    return found


def identify_component(
    parent: SimpleType, nodes: list[int], prefer: str | None = None
) -> tuple[SimpleType, list[tuple[int, ...]]]:
    """Type of the subdiagram on ``nodes`` and every node ordering realising it.

    Identification uses only the Cartan integers among the surviving nodes.
    Where two labels fit the same shape (``B2``/``C2``, ``A3``/``D3``) the
    parent family wins if it is one of them.
    """
    nodes = sorted(nodes)
    full = cartan_matrix(parent)
    sub = [[full[a][b] for b in nodes] for a in nodes]
    matches = []
    for st in _candidate_types(len(nodes)):
        isos = _isomorphisms(cartan_matrix(st), sub)
        if isos:
            matches.append((st, [tuple(nodes[k] for k in iso) for iso in isos]))
    if not matches:
        raise AssertionError(f"unidentifiable subdiagram {nodes} of {parent}")
    prefer = prefer or parent.family
    for st, isos in matches:
        if st.family == prefer:
            return st, isos
    return matches[0]


def _components(parent: SimpleType, keep: list[int]) -> list[list[int]]:
    cm = cartan_matrix(parent)
    left = set(keep)
    comps = []
    while left:
        start = min(left)
        comp, stack = {start}, [start]
        left.discard(start)
        while stack:
            a = stack.pop()
            for b in list(left):
                if cm[a][b]:
                    left.discard(b)
                    comp.add(b)
                    stack.append(b)
        comps.append(sorted(comp))
    return comps


@lru_cache(maxsize=None)
def _diagram_to_partitions(stype: SimpleType) -> dict[tuple[int, ...], tuple[Partition, ...]]:
    table: dict[tuple[int, ...], list[Partition]] = {}
    for o in orbits_of(stype.family, stype.rank):
        table.setdefault(partition_to_diagram(o).weights, []).append(o.partition)
    return {k: tuple(v) for k, v in table.items()}


def partitions_for_diagram(d: WeightedDiagram) -> tuple[Partition, ...]:
    """Invert the partition-to-diagram map by searching all orbits of the type."""
    if not d.stype.is_classical:
        return ()
    return _diagram_to_partitions(d.stype).get(d.weights, ())


def reduce_diagram(d: WeightedDiagram) -> ReductionResult:
    w = d.weights
    cls = diagram_parity_class(d)
    if cls is Parity.EVEN:
        raise EvenOrbit(f"{d.stype} diagram {d} has no weight 1")
    if cls is Parity.STRICTLY_ODD:
        raise AlreadyStrictlyOdd(f"{d.stype} diagram {d} has no weight 2")
    keep = [i for i, x in enumerate(w) if x != 2]
    live = [c for c in _components(d.stype, keep) if any(w[i] for i in c)]
    if len(live) != 1:
        raise MultipleNonzeroComponents(
            f"{len(live)} components with nonzero weights after erasing the 2s of {d}"
        )
    subtype, isos = identify_component(d.stype, live[0])
    emb = isos[0]
    sub = WeightedDiagram(subtype, tuple(w[i] for i in emb))
    parts = partitions_for_diagram(sub)
    return ReductionResult(subtype, sub, emb, parts[0] if parts else None)


def equivalent_subdiagrams(res: ReductionResult, parent: WeightedDiagram) -> list[WeightedDiagram]:
    """The reduced diagram read through every admissible node ordering."""
    _, isos = identify_component(parent.stype, list(res.embedding), res.subtype.family)
    seen = []
    for emb in isos:
        sd = WeightedDiagram(res.subtype, tuple(parent.weights[i] for i in emb))
        if sd not in seen:
            seen.append(sd)
    return seen


def reduce_partition(orbit: ClassicalOrbit, idempotent: bool = False) -> ClassicalOrbit:
    """Replace every part above ``k`` by ``k+1``.

    ``k`` is the largest part whose parity differs from that of the largest
    part.  Only defined for odd, not strictly odd, orbits unless
    ``idempotent`` is set, in which case strictly odd input comes back as is.
    """
    orbit.validate()
    p = orbit.partition
    cls = parity_class(p)
    if cls is Parity.EVEN:
        raise EvenOrbit(f"{orbit} is even")
    if cls is Parity.STRICTLY_ODD:
        if idempotent:
            return orbit
        raise AlreadyStrictlyOdd(f"{orbit} is already strictly odd")
    mu = p.largest
    k = max(x for x in p.parts if (x - mu) % 2)
    above = sum(1 for x in p.parts if x > k)
    out = ClassicalOrbit(orbit.family, Partition([k + 1] * above + [x for x in p.parts if x <= k]))
    out.validate()
    assert parity_class(out.partition) is Parity.STRICTLY_ODD
    return out


def crosscheck(orbit: ClassicalOrbit) -> bool:
    """Partition-level and diagram-level reductions agree, node for node."""
    red = reduce_partition(orbit)
    expected = partition_to_diagram(red)
    parent = partition_to_diagram(orbit)
    res = reduce_diagram(parent)
    if res.subtype != expected.stype or res.subdiagram != expected:
        return False
    # the reduced algebra sits on the last nodes (B, C, D) or the middle ones (A)
    n, r = orbit.rank, red.rank
    off = (n - r) // 2 if orbit.family == "A" else n - r
    return res.embedding == tuple(range(off, off + r))

