"""Exact enumeration of polynomial permutation classes described by peg permutations."""

from .enumeration import (
    BinomialPolynomial,
    CountingFunction,
    CrossSection,
    Enumeration,
    build_cross_sections,
    enumerate_pegset,
    gf,
    to_binomial_poly,
)
from .peg import PegParseError, PegPermutation, downclose, grid_member, parse_pegset
from .perm import Permutation
from .rearrange import OperationKind, apply_perm, peg_set_for
from .vectors import VectorClass

__version__ = "0.1.0"

__all__ = [
    "BinomialPolynomial",
    "CountingFunction",
    "CrossSection",
    "Enumeration",
    "OperationKind",
    "PegParseError",
    "PegPermutation",
    "Permutation",
    "VectorClass",
    "apply_perm",
    "build_cross_sections",
    "downclose",
    "enumerate_pegset",
    "gf",
    "grid_member",
    "parse_pegset",
    "peg_set_for",
    "to_binomial_poly",
]
