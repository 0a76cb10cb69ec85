"""Nilpotent orbits of classical type, labelled by partitions.

A partition of ``N`` lists the Jordan block sizes of a nilpotent acting on
the standard representation.  Each part ``p`` contributes the ``h``-eigenvalues
``1-p, 3-p, ..., p-1``; sorting all of them and taking consecutive differences
gives the weighted Dynkin diagram.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .rootsys import SimpleType, ValidationError


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    STRICTLY_ODD = "strictly odd"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        ps = tuple(sorted((int(p) for p in parts), reverse=True))
        if not ps:
            raise ValidationError("empty partition")
        if ps[-1] <= 0:
            raise ValidationError(f"non-positive part in {ps}")
        object.__setattr__(self, "parts", ps)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"8,6,3,3,2,1,1"``; exponents as in ``"3,2^2,1"`` are accepted."""
        parts: list[int] = []
        for tok in re.split(r"[,\s]+", text.strip()):
            if not tok:
                continue
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValidationError(f"bad partition token {tok!r}")
            parts += [int(m.group(1))] * int(m.group(2) or 1)
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0]

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def m(self, k: int) -> int:
        """Multiplicity of part size ``k`` (0 if absent)."""
        return self.parts.count(k)

    @property
    def distinct(self) -> list[int]:
        return sorted(set(self.parts), reverse=True)

    def parity_changes(self) -> int:
        d = self.distinct
        return sum(1 for a, b in zip(d, d[1:]) if (a - b) % 2)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def compact(self) -> str:
        """Exponent notation, e.g. ``3,2^2,1``."""
        return ",".join(
            f"{k}^{c}" if c > 1 else str(k)
            for k, c in sorted(Counter(self.parts).items(), reverse=True)
        )


def family_rank(family: str, n: int) -> int:
    """Rank of the classical algebra whose standard representation has dimension ``n``."""
    if family == "A":
        return n - 1
    if family == "B":
        if n % 2 == 0:
            raise ValidationError(f"type B needs an odd dimension, got {n}")
        return (n - 1) // 2
    if family in "CD":
        if n % 2:
            raise ValidationError(f"type {family} needs an even dimension, got {n}")
        return n // 2
    raise ValidationError(f"{family} is not a classical family")


def standard_dimension(family: str, rank: int) -> int:
    return {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[family]


@dataclass(frozen=True)
class ClassicalOrbit:
    family: str
    partition: Partition

    def __post_init__(self) -> None:
        if isinstance(self.partition, (tuple, list)):
            object.__setattr__(self, "partition", Partition(self.partition))
        if self.family not in "ABCD" or len(self.family) != 1:
            raise ValidationError(f"{self.family!r} is not a classical family")

    @property
    def rank(self) -> int:
        return family_rank(self.family, self.partition.size)

    @property
    def stype(self) -> SimpleType:
        return SimpleType(self.family, self.rank)

    def violation(self) -> str | None:
        """Describe why the partition is not an orbit of this family, or ``None``."""
        try:
            r = self.rank
        except ValidationError as exc:
            return str(exc)
        if r < 1:
            return f"rank {r} is too small"
        if self.family == "A":
            return None
        bad_parity = 0 if self.family in "BD" else 1
        for k, c in sorted(self.partition.multiplicities.items(), reverse=True):
            if k % 2 == bad_parity and c % 2:
                kind = "even" if bad_parity == 0 else "odd"
                return f"{kind} part {k} has odd multiplicity {c}"
        return None

    def validate(self) -> "ClassicalOrbit":
        msg = self.violation()
        if msg:
            raise ValidationError(f"{self.family} {self.partition}: {msg}")
        return self

    def __str__(self) -> str:
        return f"{self.stype}[{self.partition}]"


def validate(orbit: ClassicalOrbit) -> str | None:
    """``None`` if the orbit is admissible, else a description of the offending part."""
    return orbit.violation()


@dataclass(frozen=True)
class WeightedDiagram:
    """One weight per Dynkin node, in Bourbaki node order."""

    stype: SimpleType
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.weights) != self.stype.rank:
            raise ValidationError(
                f"{len(self.weights)} weights given for {self.stype} (rank {self.stype.rank})"
            )
        if any(w not in (0, 1, 2) for w in self.weights):
            raise ValidationError(f"weights must lie in {{0,1,2}}: {self.weights}")

    @classmethod
    def parse(cls, stype: SimpleType, text: str) -> "WeightedDiagram":
        toks = [t for t in re.split(r"[,\s]+", text.strip()) if t]
        if len(toks) == 1 and len(toks[0]) == stype.rank and stype.rank > 1:
            toks = list(toks[0])
        try:
            return cls(stype, tuple(int(t) for t in toks))
        except ValueError as exc:
            raise ValidationError(f"bad diagram {text!r}") from exc

    def shape_violation(self) -> str | None:
        """Check the necessary conditions every orbit diagram satisfies."""
        w = self.weights
        if self.stype.family == "A" and w != w[::-1]:
            return "type A diagram is not palindromic"
        if self.stype.family in "BCD":
            first1 = next((i for i, x in enumerate(w) if x == 1), None)
            if first1 is not None and 2 in w[first1:]:
                return "a weight 1 occurs to the left of a weight 2"
        return None

    def __str__(self) -> str:
        return " ".join(map(str, self.weights))


@dataclass(frozen=True)
class HWeights:
    eigenvalues: tuple[int, ...]
    h: tuple[int, ...]
    s: tuple[int, ...]


def h_eigenvalues(p: Partition) -> tuple[int, ...]:
    """All eigenvalues of ``h`` on the standard representation, decreasing."""
    vals = [v for part in p.parts for v in range(1 - part, part, 2)]
    return tuple(sorted(vals, reverse=True))


def s_from_multiplicities(p: Partition) -> tuple[int, ...]:
    """``s_k = m_{k+1} + m_{k+3} + ...`` for ``k = 0 .. mu-1``."""
    mu = p.largest
    return tuple(sum(p.m(j) for j in range(k + 1, mu + 1, 2)) for k in range(mu))


def h_weights(orbit: ClassicalOrbit) -> HWeights:
    ev = h_eigenvalues(orbit.partition)
    counts = Counter(ev)
    s = tuple(counts.get(k, 0) for k in range(max(ev) + 1))
    assert s == s_from_multiplicities(orbit.partition)
    return HWeights(ev, ev[: orbit.rank], s)


def partition_to_diagram(orbit: ClassicalOrbit) -> WeightedDiagram:
    orbit.validate()
    fam, n = orbit.family, orbit.rank
    ev = h_eigenvalues(orbit.partition)
    if fam == "A":
        w = [a - b for a, b in zip(ev, ev[1:])]
    else:
        h = ev[:n]
        if fam == "D":
            w = [h[i] - h[i + 1] for i in range(n - 2)]
            w += [h[n - 2] - h[n - 1], h[n - 2] + h[n - 1]]
        else:
            w = [h[i] - h[i + 1] for i in range(n - 1)]
            w.append(h[n - 1] if fam == "B" else 2 * h[n - 1])
    return WeightedDiagram(orbit.stype, tuple(w))


def parity_class(p: Partition) -> Parity:
    d = p.distinct
    if len({x % 2 for x in d}) == 1:
        return Parity.EVEN
    if d[0] - d[1] == 1:
        return Parity.STRICTLY_ODD
    return Parity.ODD


def diagram_parity_class(d: WeightedDiagram) -> Parity:
    if 1 not in d.weights:
        return Parity.EVEN
    if 2 not in d.weights:
        return Parity.STRICTLY_ODD
    return Parity.ODD


def first_one_position(p: Partition) -> int:
    """1-based node carrying the first weight 1 of an odd orbit's diagram.

    With ``l'`` the largest part whose parity differs from the largest part,
    each larger part ``l`` contributes ``m_l (l - l' + 1) / 2`` eigenvalues
    above ``l' - 1``.  When those parts run ``l'+1, l'+3, ...`` this is
    ``k m_n + (k-1) m_{n-1} + ... + m_{n-k+1}``.
    """
    mu = p.largest
    other = [x for x in p.distinct if (x - mu) % 2]
    if not other:
        raise ValidationError(f"{p} is even; its diagram has no weight 1")
    lp = other[0]
    return sum(p.m(x) * (x - lp + 1) // 2 for x in p.distinct if x > lp)


def partitions_of(n: int) -> Iterator[Partition]:
    from sympy.utilities.iterables import partitions

    for mult in partitions(n):
        yield Partition([k for k, c in mult.items() for _ in range(c)])


def orbits_of(family: str, rank: int) -> list[ClassicalOrbit]:
    """All nilpotent orbits of a classical algebra, sorted by partition (descending)."""
    out = []
    for p in partitions_of(standard_dimension(family, rank)):
        o = ClassicalOrbit(family, p)
        if o.violation() is None:
            out.append(o)
    out.sort(key=lambda o: o.partition.parts, reverse=True)
    return out


def as_partition(parts: Sequence[int] | Partition | str) -> Partition:
    if isinstance(parts, Partition):
        return parts
    if isinstance(parts, str):
        return Partition.parse(parts)
    return Partition(parts)
