"""Exact computation with group-graded algebras and their PI invariants."""

from . import cyclo, groups, cocycles, galg, structure, embed, cli

__all__ = ["cyclo", "groups", "cocycles", "galg", "structure", "embed", "cli"]
__version__ = "0.1.0"
