"""Exact tools for Lefschetz properties of A(Delta) and Rees-algebra invariants."""
__version__ = "0.1.0"
