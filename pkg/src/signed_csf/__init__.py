"""Exact chromatic signed-symmetric functions of signed graphs."""

__version__ = "0.1.0"

from .chromatic import (
    chromatic_polynomials,
    connectivity_certificate,
    project_positive,
    reciprocity_check,
    x_flats,
    x_subset,
    xbar_flats,
)
from .graph import EdgeRef, SignedGraph, decompose, parse_graph, type_of_subset
from .kernels import BACKEND
from .partitions import PartitionType, canonicalize
from .ssym import SSymFunction, SymFunction, omega, serialize, truncate

__all__ = [
    "BACKEND",
    "EdgeRef",
    "PartitionType",
    "SSymFunction",
    "SignedGraph",
    "SymFunction",
    "canonicalize",
    "chromatic_polynomials",
    "connectivity_certificate",
    "decompose",
    "omega",
    "parse_graph",
    "project_positive",
    "reciprocity_check",
    "serialize",
    "truncate",
    "type_of_subset",
    "x_flats",
    "x_subset",
    "xbar_flats",
]
