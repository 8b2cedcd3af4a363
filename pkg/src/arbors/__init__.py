"""Exact invariants of arbors: lattice polytopes, posets and their polynomials."""

from .arbor import Arbor, ArborSyntaxError, canonicalize, enumerate_arbors, parse_arbor

__version__ = "0.1.0"

__all__ = ["Arbor", "ArborSyntaxError", "canonicalize", "enumerate_arbors", "parse_arbor"]
