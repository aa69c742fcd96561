"""Exact reconstruction and audit toolkit for a reduced quantum geometry at q^4 = 1."""

__version__ = "0.1.0"
