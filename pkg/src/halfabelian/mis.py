"""Exact maximum independent sets on small dense graphs.

The optimiser is a branch and bound over bit-row candidate sets: it branches
on a vertex of maximum degree inside the candidate set (include it, or drop
it), and prunes with a greedy clique cover, since an independent set meets
each clique at most once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .commgraph import CommutationGraph

BRUTE_FORCE_LIMIT = 30


@dataclass(frozen=True)
class MisResult:
    size: int
    witness: tuple[int, ...]
    proven_optimal: bool
    capped_by_bound: bool
    nodes: int = 0


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def clique_cover_bound(rows: tuple[int, ...], cand: int) -> int:
    """Number of cliques in a greedy cover of ``cand`` (lowest index first)."""
    k = 0
    while cand:
        v = _low(cand)
        cand &= ~(1 << v)
        q = cand & rows[v]
        while q:
            u = _low(q)
            cand &= ~(1 << u)
            q &= rows[u]
        k += 1
    return k


class _Search:
    def __init__(self, rows: tuple[int, ...], target: int | None):
        self.rows = rows
        self.best = 0
        self.best_set = 0
        self.target = target
        self.nodes = 0
        self.done = False

    def run(self, cand: int, chosen: int) -> None:
        self.nodes += 1
        rows = self.rows
        # vertices with no neighbour left in cand belong to some maximum set
        while True:
            free = 0
            for v in _bits(cand):
                if not rows[v] & cand:
                    free |= 1 << v
            if not free:
                break
            chosen |= free
            cand &= ~free
        size = chosen.bit_count()
        if size > self.best:
            self.best, self.best_set = size, chosen
            if self.target is not None and size >= self.target:
                self.done = True
                return
        if not cand or size + clique_cover_bound(rows, cand) <= self.best:
            return
        pick, deg = -1, -1
        for v in _bits(cand):
            d = (rows[v] & cand).bit_count()
            if d > deg:
                pick, deg = v, d
        self.run(cand & ~rows[pick] & ~(1 << pick), chosen | 1 << pick)
        if self.done:
            return
        self.run(cand & ~(1 << pick), chosen)


def _first_in_order(rows: tuple[int, ...], n: int, need: int) -> int | None:
    """Lexicographically smallest independent set of size ``need``, as a bit mask.

    Vertices are decided in index order, inclusion first, so the first
    complete set reached is the smallest one.
    """
    best: list[int] = []

    def rec(cand: int, chosen: int, k: int) -> bool:
        if k == need:
            best.append(chosen)
            return True
        if cand.bit_count() < need - k or k + clique_cover_bound(rows, cand) < need:
            return False
        v = _low(cand)
        rest = cand & ~(1 << v)
        if rec(rest & ~rows[v], chosen | 1 << v, k + 1):
            return True
        return rec(rest, chosen, k)

    rec((1 << n) - 1, 0, 0)
    return best[0] if best else None


def max_independent_set(g: CommutationGraph, cap: int | None = None) -> MisResult:
    """Exact maximum independent set.

    ``cap`` must be a known upper bound (e.g. half of ``dim g_1``); the search
    stops as soon as a set of that size appears.  The witness is the
    lexicographically smallest maximum independent set.
    """
    n = g.n
    if n == 0:
        return MisResult(0, (), True, False)
    s = _Search(g.rows, cap)
    s.run((1 << n) - 1, 0)
    capped = cap is not None and s.best >= cap
    if capped and s.best > cap:
        raise ValueError(f"cap {cap} is not an upper bound: found {s.best}")
    mask = _first_in_order(g.rows, n, s.best)
    assert mask is not None
    witness = tuple(_bits(mask))
    assert g.is_independent(witness)
    return MisResult(s.best, witness, not capped, capped, s.nodes)


def enumerate_independent_sets(g: CommutationGraph, d: int) -> Iterator[tuple[int, ...]]:
    """Every independent set of exactly ``d`` vertices, in lexicographic order."""
    if d < 0 or d > g.n:
        raise ValueError(f"cardinality {d} outside 0..{g.n}")
    rows = g.rows

    def rec(cand: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == d:
            yield prefix
            return
        need = d - len(prefix)
        while cand and cand.bit_count() >= need:
            if clique_cover_bound(rows, cand) < need:
                return
            v = _low(cand)
            cand &= ~(1 << v)
            yield from rec(cand & ~rows[v], prefix + (v,))

    yield from rec((1 << g.n) - 1, ())


def brute_force_mis(g: CommutationGraph) -> int:
    """Maximum independent set size by walking the whole subset lattice.

    Only supersets of non-independent sets and branches too short to beat
    the incumbent are skipped.
    """
    n = g.n
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force refused on {n} > {BRUTE_FORCE_LIMIT} vertices")
    adj = [sum(1 << u for u in range(n) if g.adjacent(v, u)) for v in range(n)]
    best = 0

    def rec(i: int, size: int, blocked: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if i == n:
            return
        if size + (n - i) <= best:
            return
        if not blocked >> i & 1:
            rec(i + 1, size + 1, blocked | adj[i])
        rec(i + 1, size, blocked)

    rec(0, 0, 0)
    return best
