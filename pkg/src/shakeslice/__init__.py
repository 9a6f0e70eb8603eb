"""Exact knot invariants from Seifert matrices, with shake-sliceness reports."""

__version__ = "0.1.0"
