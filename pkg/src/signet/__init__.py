# src/signet/__init__.py
"""Exact signatures of forms and the invariants built on them."""

__version__ = "0.1.0"
