"""Dynkin gradings: the degree of every root under a weighted diagram."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .orbits import ClassicalOrbit, WeightedDiagram, h_eigenvalues
from .rootsys import Root, RootSystem, ValidationError, build_root_system


@dataclass(frozen=True)
class Grading:
    rs: RootSystem
    degree: tuple[int, ...]  # indexed like rs.roots

    @property
    def dims(self) -> dict[int, int]:
        """Dimension of each graded piece; degree 0 includes the Cartan subalgebra."""
        c = Counter(self.degree)
        c[0] += self.rs.rank
        return dict(sorted(c.items()))

    def dim(self, j: int) -> int:
        return self.dims.get(j, 0)

    def component(self, j: int) -> list[int]:
        """Root indices of degree ``j``, in root-system order."""
        return [i for i, d in enumerate(self.degree) if d == j]


@dataclass(frozen=True)
class GOneBasis:
    rs: RootSystem
    indices: tuple[int, ...]

    @property
    def roots(self) -> list[Root]:
        return [self.rs.roots[i] for i in self.indices]

    def __len__(self) -> int:
        return len(self.indices)


def grade(rs: RootSystem, d: WeightedDiagram) -> Grading:
    if d.stype != rs.stype:
        raise ValidationError(f"diagram of {d.stype} applied to root system {rs.stype}")
    w = d.weights
    return Grading(rs, tuple(sum(c * x for c, x in zip(r, w)) for r in rs.roots))


def _epsilon_roots(family: str, n: int) -> list[dict[int, int]]:
    """Roots of B_n, C_n, D_n as sparse epsilon-vectors."""
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    out.append({i: si, j: sj})
        if family == "B":
            out += [{i: 1}, {i: -1}]
        elif family == "C":
            out += [{i: 2}, {i: -2}]
    return out


def _epsilon_basis(family: str, n: int) -> list[list[Fraction]]:
    """Coordinates of each epsilon_i over the simple roots of B_n, C_n or D_n."""
    basis = []
    for i in range(n):
        v = [Fraction(0)] * n
        if family == "B":
            for k in range(i, n):
                v[k] = Fraction(1)
        elif family == "C":
            for k in range(i, n - 1):
                v[k] = Fraction(1)
            v[n - 1] = Fraction(1, 2)
        else:
            for k in range(i, n - 2):
                v[k] = Fraction(1)
            if i < n - 1:
                v[n - 2] = v[n - 1] = Fraction(1, 2)
            else:
                v[n - 2], v[n - 1] = Fraction(-1, 2), Fraction(1, 2)
        basis.append(v)
    return basis


def epsilon_to_simple(family: str, n: int, eps: dict[int, int]) -> Root:
    """Rewrite a root given in epsilon-coordinates over the simple roots."""
    if family == "A":
        # eps_i - eps_j = alpha_i + ... + alpha_{j-1}
        (i, a), (j, b) = sorted(eps.items())
        sign = 1 if a > 0 else -1
        return tuple(sign if i <= k < j else 0 for k in range(n))
    basis = _epsilon_basis(family, n)
    acc = [Fraction(0)] * n
    for i, c in eps.items():
        for k in range(n):
            acc[k] += c * basis[i][k]
    if any(x.denominator != 1 for x in acc):
        raise AssertionError(f"non-integral root {eps}")
    return tuple(int(x) for x in acc)


def grade_classical(orbit: ClassicalOrbit) -> Grading:
    """Grade a classical algebra straight from the ``h``-eigenvalues of the partition.

    Degrees are read off in epsilon-coordinates (``deg(eps_i - eps_j) = h_i - h_j``
    and so on) without going through the weighted diagram.
    """
    orbit.validate()
    fam, n = orbit.family, orbit.rank
    ev = h_eigenvalues(orbit.partition)
    rs = build_root_system(orbit.stype)
    degree = [None] * len(rs.roots)
    if fam == "A":
        for i in range(n + 1):
            for j in range(n + 1):
                if i != j:
                    r = epsilon_to_simple("A", n, {i: 1, j: -1})
                    degree[rs.index(r)] = ev[i] - ev[j]
    else:
        h = ev[:n]
        for eps in _epsilon_roots(fam, n):
            r = epsilon_to_simple(fam, n, eps)
            degree[rs.index(r)] = sum(c * h[i] for i, c in eps.items())
    assert all(d is not None for d in degree)
    return Grading(rs, tuple(degree))


def g1_basis(g: Grading) -> GOneBasis:
    return GOneBasis(g.rs, tuple(g.component(1)))


def check_g0_generation(g: Grading, d: WeightedDiagram) -> bool:
    """Whether the weight-1 simple roots generate all of degree 1 under degree-0 roots."""
    rs = g.rs
    target = set(g.component(1))
    zero = g.component(0)
    seen = {rs.simple_index(node) for node, w in enumerate(d.weights) if w == 1}
    frontier = list(seen)
    while frontier:
        nxt = []
        for i in frontier:
            for z in zero:
                k = rs.sum_index(i, z)
                if k is not None and k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return seen == target
