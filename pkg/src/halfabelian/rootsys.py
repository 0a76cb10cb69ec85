"""Root systems of the simple Lie algebras, stored over the simple-root basis.

Nodes follow the Bourbaki numbering throughout.  For ``E_n`` node 2 is the
branch node hanging off node 4, for ``D_n`` nodes ``n-1`` and ``n`` are the
fork tips, and for ``F_4`` nodes 1 and 2 carry the long roots.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")
CLASSICAL = ("A", "B", "C", "D")
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_MIN_RANK = {"A": 1, "B": 1, "C": 1, "D": 3}

Root = tuple[int, ...]


class ValidationError(ValueError):
    """Raised when an input violates a structural precondition."""


@dataclass(frozen=True, order=True)
class SimpleType:
    """A simple type such as ``A5`` or ``E8``."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown family {self.family!r}")
        if self.family in _EXCEPTIONAL_RANKS:
            if self.rank not in _EXCEPTIONAL_RANKS[self.family]:
                raise ValidationError(f"no simple type {self.family}{self.rank}")
        elif self.rank < _MIN_RANK[self.family]:
            raise ValidationError(
                f"type {self.family} needs rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> "SimpleType":
        """Parse ``"E6"``, ``"D 6"``, ``"G2"`` or a bare family with ``rank``."""
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d*)\s*", text)
        if not m:
            raise ValidationError(f"cannot parse simple type {text!r}")
        family = m.group(1).upper()
        if m.group(2):
            r = int(m.group(2))
            if rank is not None and rank != r:
                raise ValidationError(f"rank {rank} conflicts with {text!r}")
        elif rank is not None:
            r = rank
        elif family in _EXCEPTIONAL_RANKS and len(_EXCEPTIONAL_RANKS[family]) == 1:
            r = _EXCEPTIONAL_RANKS[family][0]
        else:
            raise ValidationError(f"rank missing for family {family}")
        return cls(family, r)

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def expected_root_count(stype: SimpleType) -> int:
    """Closed-form number of roots (positive and negative)."""
    n = stype.rank
    return {
        "A": lambda: n * (n + 1),
        "B": lambda: 2 * n * n,
        "C": lambda: 2 * n * n,
        "D": lambda: 2 * n * (n - 1),
        "E": lambda: {6: 72, 7: 126, 8: 240}[n],
        "F": lambda: 48,
        "G": lambda: 12,
    }[stype.family]()


def _edges(stype: SimpleType) -> list[tuple[int, int]]:
    n, fam = stype.rank, stype.family
    if fam in "ABCFG":
        return [(i, i + 1) for i in range(n - 1)]
    if fam == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    # E_n, 0-based: chain 1-3-4-...-n, branch 2 on 4
    return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]


def gram_matrix(stype: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Integer multiple of the Gram matrix ``(alpha_i, alpha_j)`` of the simple roots.

    Short roots have squared length 2, long ones 4 (6 for ``G2``).
    """
    n, fam = stype.rank, stype.family
    if fam == "B":
        length = [4] * (n - 1) + [2]
    elif fam == "C":
        length = [2] * (n - 1) + [4]
    elif fam == "F":
        length = [4, 4, 2, 2]
    elif fam == "G":
        length = [2, 6]
    else:
        length = [2] * n
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = length[i]
    for i, j in _edges(stype):
        v = -max(length[i], length[j]) // 2
        g[i][j] = g[j][i] = v
    return tuple(tuple(r) for r in g)


def cartan_matrix(stype: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Cartan integers ``a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``."""
    g = gram_matrix(stype)
    n = stype.rank
    return tuple(tuple(2 * g[i][j] // g[j][j] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class RootSystem:
    """All roots of a simple type, in lexicographic order of coefficient vectors."""

    stype: SimpleType
    roots: tuple[Root, ...]
    gram: tuple[tuple[int, ...], ...] = field(repr=False)
    _index: dict[Root, int] = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.stype.rank

    def __len__(self) -> int:
        return len(self.roots)

    def _check(self, v: Sequence[int]) -> Root:
        if len(v) != self.rank:
            raise ValidationError(f"vector of length {len(v)} for a rank {self.rank} system")
        return tuple(v)

    def is_root(self, v: Sequence[int]) -> bool:
        return self._check(v) in self._index

    def index(self, v: Sequence[int]) -> int:
        """Index of root ``v``; raises ``KeyError`` if ``v`` is not a root."""
        return self._index[self._check(v)]

    def find(self, v: Sequence[int]) -> int | None:
        return self._index.get(tuple(v))

    def sum_index(self, i: int, j: int) -> int | None:
        """Index of ``roots[i] + roots[j]`` if that sum is a root."""
        a, b = self.roots[i], self.roots[j]
        return self._index.get(tuple(x + y for x, y in zip(a, b)))

    @property
    def positive(self) -> list[int]:
        return [i for i, r in enumerate(self.roots) if any(c > 0 for c in r)]

    def simple_index(self, node: int) -> int:
        """Root index of the simple root at 0-based ``node``."""
        return self._index[tuple(int(k == node) for k in range(self.rank))]

    def edge_multiplicity(self, i: int, j: int) -> int:
        """Number of bonds joining nodes ``i`` and ``j`` of the Dynkin diagram."""
        g = self.gram
        return (2 * g[i][j] // g[j][j]) * (2 * g[j][i] // g[i][i]) if i != j else 0

    def is_long(self, node: int) -> bool:
        lengths = [self.gram[k][k] for k in range(self.rank)]
        return lengths[node] == max(lengths)


def _positive_roots(stype: SimpleType) -> list[Root]:
    n = stype.rank
    cartan = cartan_matrix(stype)
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # <beta, alpha_i^vee> in terms of the Cartan integers
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) not in found:
                        break
                    p += 1
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    t = tuple(up)
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
        layer = nxt
    return sorted(found)


@lru_cache(maxsize=None)
def build_root_system(stype: SimpleType) -> RootSystem:
    """Enumerate every root of ``stype`` by simple-root strings."""
    if not isinstance(stype, SimpleType):
        raise ValidationError("expected a SimpleType")
    pos = _positive_roots(stype)
    roots = tuple(sorted(pos + [tuple(-c for c in r) for r in pos]))
    rs = RootSystem(stype, roots, gram_matrix(stype), {r: i for i, r in enumerate(roots)})
    assert len(roots) == expected_root_count(stype), stype
    return rs
