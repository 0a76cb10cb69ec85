"""Exhaustive comparison of the classical formulas with the exact graph search."""

from __future__ import annotations

from dataclasses import dataclass

from .classify import (
    classify,
    is_half_abelian,
    is_half_abelian_strict,
    maximize_x_oracle,
    reduce_for_classify,
    s_values,
)
from .commgraph import for_diagram
from .grading import grade_classical
from .mis import max_independent_set
from .orbits import ClassicalOrbit, Parity, orbits_of, parity_class, partition_to_diagram
from .rootsys import SimpleType

SCAN_GUARDS = {"A": 10, "B": 8, "C": 8, "D": 8}


@dataclass(frozen=True)
class ScanRow:
    family: str
    rank: int
    partition: str
    parity: str
    dim_g1: int
    predicted: int
    oracle: int | None
    mis: int
    half_predicted: bool
    strict_predicted: bool | None
    problems: tuple[str, ...]

    @property
    def agree(self) -> bool:
        return not self.problems

    @property
    def half(self) -> bool:
        return 2 * self.mis == self.dim_g1

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "partition": self.partition,
            "parity": self.parity,
            "dim_g1": self.dim_g1,
            "predicted": self.predicted,
            "oracle": self.oracle,
            "mis": self.mis,
            "half_abelian": self.half,
            "half_predicted": self.half_predicted,
            "agree": self.agree,
            "problems": list(self.problems),
        }


def scan_orbit(orbit: ClassicalOrbit) -> ScanRow:
    """Compare every available prediction for ``orbit`` against the exact MIS."""
    cls = parity_class(orbit.partition)
    diagram = partition_to_diagram(orbit)
    grading, graph = for_diagram(diagram)
    dim = graph.n
    res = max_independent_set(graph, cap=dim // 2)
    rep = classify(orbit)
    problems = []
    if grade_classical(orbit).dims != grading.dims:
        problems.append("epsilon grading differs from diagram grading")
    if rep.dim_g1 != dim:
        problems.append(f"dim from s = {rep.dim_g1}, graph has {dim} vertices")
    if rep.predicted_max != res.size:
        problems.append(f"predicted {rep.predicted_max} != MIS {res.size}")

    oracle = None
    strict = None
    if orbit.family == "A":
        half_pred = True
    else:
        half_pred = is_half_abelian(orbit)
        if cls is not Parity.EVEN:
            red = reduce_for_classify(orbit)
            oracle = maximize_x_oracle(red.family, s_values(red.partition))
            if oracle != res.size:
                problems.append(f"x-oracle {oracle} != MIS {res.size}")
        if cls is Parity.STRICTLY_ODD:
            strict = is_half_abelian_strict(orbit)
            if strict != (2 * res.size == dim):
                problems.append(f"strict criterion says {strict}")
    if half_pred != (2 * res.size == dim):
        problems.append(f"half-abelian criterion says {half_pred}")
    return ScanRow(
        orbit.family,
        orbit.rank,
        orbit.partition.compact(),
        str(cls),
        dim,
        rep.predicted_max,
        oracle,
        res.size,
        half_pred,
        strict,
        tuple(problems),
    )


def min_rank(family: str) -> int:
    for r in range(1, 5):
        try:
            SimpleType(family, r)
            return r
        except ValueError:
            pass
    raise ValueError(family)


def scan_orbits(family: str, max_rank: int, start: int | None = None) -> list[ClassicalOrbit]:
    lo = max(start or 1, min_rank(family))
    return [o for r in range(lo, max_rank + 1) for o in orbits_of(family, r)]


def scan(family: str, max_rank: int, start: int | None = None, jobs: int = 1) -> list[ScanRow]:
    orbits = scan_orbits(family, max_rank, start)
    if jobs <= 1:
        return [scan_orbit(o) for o in orbits]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(scan_orbit, orbits, chunksize=8))
