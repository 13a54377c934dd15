"""Exact computations in Thompson's group F."""

from ._core import (
    Element,
    SynthesisResult,
    ThompsonError,
    certify,
    cli,
    companion,
    complete_basis,
    complete_generating_pair,
    corpus,
    find_uvw,
    finite_index_pair,
    lattice_index,
    synthesize,
)

x0 = Element.x0()
x1 = Element.x1()

__all__ = [
    "Element",
    "SynthesisResult",
    "ThompsonError",
    "certify",
    "cli",
    "companion",
    "complete_basis",
    "complete_generating_pair",
    "corpus",
    "find_uvw",
    "finite_index_pair",
    "lattice_index",
    "synthesize",
    "x0",
    "x1",
]
