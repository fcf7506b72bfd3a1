"""GF(2) workbench for the hit problem, group invariants, and the transfer."""

from __future__ import annotations

__version__ = "0.1.0"

from . import action, dual, hit, lam, linalg, poly, transfer  # noqa: F401
