"""dswave: exact scalar waves in the de Sitter static patch.

Hypergeometric wave families, horizon/flat-limit asymptotics, the
zero-reflection verdict with an independent ODE cross-check, the small
lam/R expansion machinery, and a singular-point classifier — plus a CLI
(`dswave`) that emits reproducible CSV/JSON tables for every claim.
"""
from __future__ import annotations

__version__ = "0.1.0"
