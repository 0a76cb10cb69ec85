"""Closed-form maxima of abelian subspaces of g_1 for classical types.

Everything here is driven by the eigenvalue multiplicities ``s_k`` of ``h``
on the standard representation.  For a strictly odd orbit of type B, C or D
the maximum is the largest of a handful of alternating sums of products
``s_i s_{i+1}``; odd orbits are first replaced by their strictly odd
reduction, which has the same g_1.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .orbits import (
    ClassicalOrbit,
    Parity,
    Partition,
    h_eigenvalues,
    parity_class,
    s_from_multiplicities,
)


class DomainError(ValueError):
    """Input outside the domain where a formula applies."""


def s_values(p: Partition) -> tuple[int, ...]:
    """Multiplicities ``s_0 .. s_{mu-1}`` of the eigenvalues ``0 .. mu-1``."""
    return s_from_multiplicities(p)


def dim_g1_from_s(s: tuple[int, ...]) -> int:
    return sum(a * b for a, b in zip(s, s[1:]))


def _chain(s: tuple[int, ...], start: int) -> int:
    """``s_start s_{start+1} + s_{start+2} s_{start+3} + ...``; absent entries are 0."""
    return sum(s[i] * s[i + 1] for i in range(start, len(s) - 1, 2))


def candidate_sums(family: str, s: tuple[int, ...]) -> list[tuple[str, int]]:
    if family not in ("B", "C", "D"):
        raise DomainError(f"candidate sums are defined for B, C, D, not {family}")
    if len(s) < 2 or any(x == 0 for x in s):
        raise DomainError(f"s = {s} has a zero entry; reduce the orbit first")
    s0 = s[0]
    s1 = s[1]
    tail_odd = _chain(s, 1)
    tail_even = _chain(s, 2)
    mixed = s0 + (s1 - 1) * (s[2] if len(s) > 2 else 0) + _chain(s, 3)
    if family == "B":
        return [
            ("(s0-1)/2*s1+1+s2s3+...", (s0 - 1) // 2 * s1 + 1 + tail_even),
            ("s1s2+s3s4+...", tail_odd),
            ("s0+s2s3+...", s0 + tail_even),
            ("s0+(s1-1)s2+s3s4+...", mixed),
        ]
    out = [("s0/2*s1+s2s3+...", s0 // 2 * s1 + tail_even), ("s1s2+s3s4+...", tail_odd)]
    if family == "D":
        out += [("s0+s2s3+...", s0 + tail_even), ("s0+(s1-1)s2+s3s4+...", mixed)]
    return out


def _first_piece(family: str, s0: int, x1: int) -> int:
    """Largest contribution of ``S_0^* (x) S_1`` once ``x1`` basis vectors of S_1 are fixed."""
    if x1 == 0:
        return 0
    if family == "C":
        return s0 // 2 * x1
    if x1 == 1:
        return s0
    if family == "B":
        return (s0 - 1) // 2 * x1 + 1
    return s0 // 2 * x1


def maximize_x_oracle(family: str, s: tuple[int, ...], max_mu: int = 12) -> int:
    """Maximise the abelian-dimension expression over every admissible x-vector.

    ``x_k`` ranges over ``0..s_k`` for ``k = 1..mu-1`` and the value is
    ``first(x_1) + sum_k (s_k - x_k) x_{k+1}``.  Exhaustive; independent of
    the alternating-choice shortcut behind :func:`candidate_sums`.
    """
    if family not in ("B", "C", "D"):
        raise DomainError(f"no oracle for family {family}")
    mu = len(s)
    if mu < 2 or any(x == 0 for x in s):
        raise DomainError(f"s = {s} is not the profile of a strictly odd orbit")
    if mu > max_mu:
        raise DomainError(f"mu = {mu} exceeds the guard {max_mu}")
    best = 0
    for xs in itertools.product(*(range(s[k] + 1) for k in range(1, mu))):
        x = (None,) + xs  # x[k] for k >= 1
        val = _first_piece(family, s[0], x[1])
        val += sum((s[k] - x[k]) * x[k + 1] for k in range(1, mu - 1))
        best = max(best, val)
    return best


def reduce_for_classify(orbit: ClassicalOrbit) -> ClassicalOrbit:
    from .reduction import reduce_partition

    if parity_class(orbit.partition) is Parity.ODD:
        return reduce_partition(orbit)
    return orbit


def dim_g1(orbit: ClassicalOrbit) -> int:
    if orbit.family == "A":
        # sl_N: count ordered pairs of h-eigenvalues differing by one
        c = Counter(h_eigenvalues(orbit.partition))
        return sum(c[e] * c[e + 1] for e in c)
    return dim_g1_from_s(s_values(orbit.partition))


def predicted_max(orbit: ClassicalOrbit) -> int:
    orbit.validate()
    if orbit.family == "A":
        # half-dimensional abelian subspaces always exist in type A
        return dim_g1(orbit) // 2
    cls = parity_class(orbit.partition)
    if cls is Parity.EVEN:
        return 0
    red = reduce_for_classify(orbit)
    return max(v for _, v in candidate_sums(red.family, s_values(red.partition)))


def is_half_abelian_strict(orbit: ClassicalOrbit) -> bool:
    """Half-dimensional criterion for strictly odd orbits of type B, C, D."""
    fam, p = orbit.family, orbit.partition
    if fam not in ("B", "C", "D"):
        raise DomainError(f"family {fam} not in B, C, D")
    if parity_class(p) is not Parity.STRICTLY_ODD:
        raise DomainError(f"{p} is not strictly odd")
    mu = p.largest
    others = [x for x in p.distinct if x != mu]
    if mu % 2 == 0:
        if any(x % 2 == 0 for x in others):
            return False
        return fam != "B" or p.m(mu) == 2
    if all(x % 2 == 0 for x in others):
        return True
    if fam == "C":
        return False
    return set(others) <= {mu - 1, 1} and p.m(mu - 1) == 2


def is_half_abelian(orbit: ClassicalOrbit) -> bool:
    """Half-dimensional criterion for arbitrary orbits of type B, C, D, via parity changes."""
    fam, p = orbit.family, orbit.partition
    if fam not in ("B", "C", "D"):
        raise DomainError(f"family {fam} not in B, C, D")
    changes = p.parity_changes()
    if changes == 0:
        return True
    if fam == "C":
        return changes <= 1
    if changes > 2:
        return False
    mu = p.largest
    evens = [x for x in p.distinct if x % 2 == 0]
    if mu % 2 == 0:
        if changes != 1:
            return False
        return fam != "B" or (evens == [mu] and p.m(mu) == 2)
    if changes == 2:
        if len(evens) != 1 or p.m(evens[0]) != 2:
            return False
        return all(x == 1 for x in p.parts if x < evens[0])
    return True


@dataclass(frozen=True)
class ClassifierReport:
    family: str
    partition: Partition
    mu: int
    s: tuple[int, ...]
    dim_g1: int
    reduced: Partition | None
    candidates: tuple[tuple[str, int], ...]
    predicted_max: int
    half_abelian_predicted: bool

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "partition": list(self.partition.parts),
            "mu": self.mu,
            "s": list(self.s),
            "dim_g1": self.dim_g1,
            "reduced_partition": list(self.reduced.parts) if self.reduced else None,
            "candidates": [{"label": k, "value": v} for k, v in self.candidates],
            "predicted_max": self.predicted_max,
            "half_abelian_predicted": self.half_abelian_predicted,
        }


def classify(orbit: ClassicalOrbit) -> ClassifierReport:
    orbit.validate()
    p = orbit.partition
    s = s_values(p)
    dim = dim_g1(orbit)
    cls = parity_class(p)
    reduced = None
    candidates: list[tuple[str, int]] = []
    if orbit.family == "A" or cls is Parity.EVEN:
        pred = predicted_max(orbit)
    else:
        red = reduce_for_classify(orbit)
        if red is not orbit:
            reduced = red.partition
        candidates = candidate_sums(red.family, s_values(red.partition))
        pred = max(v for _, v in candidates)
    assert 2 * pred <= dim
    return ClassifierReport(
        orbit.family, p, p.largest, s, dim, reduced, tuple(candidates), pred, 2 * pred == dim
    )
