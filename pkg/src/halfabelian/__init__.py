"""Maximal abelian subspaces of g_1 for Dynkin gradings of nilpotent orbits."""

from .classify import classify, is_half_abelian, is_half_abelian_strict, predicted_max
from .commgraph import CommutationGraph, for_diagram
from .grading import grade, grade_classical
from .mis import max_independent_set
from .orbits import ClassicalOrbit, Parity, Partition, WeightedDiagram, partition_to_diagram
from .reduction import reduce_diagram, reduce_partition
from .rootsys import SimpleType, ValidationError, build_root_system

__all__ = [
    "ClassicalOrbit",
    "CommutationGraph",
    "Parity",
    "Partition",
    "SimpleType",
    "ValidationError",
    "WeightedDiagram",
    "build_root_system",
    "classify",
    "for_diagram",
    "grade",
    "grade_classical",
    "is_half_abelian",
    "is_half_abelian_strict",
    "max_independent_set",
    "partition_to_diagram",
    "predicted_max",
    "reduce_diagram",
    "reduce_partition",
]
