"""Exact kernel for skew polynomial rings over coefficient-field towers,
truncated pseudodifferential series with their canonical valuation, and
the integer-matrix orbit machinery that classifies the associated
skewfields up to (valued) isomorphism."""

__version__ = "0.1.0"

from . import fields, ratfunc, skewpoly, pdo, presentations, orbits

__all__ = ["fields", "ratfunc", "skewpoly", "pdo", "presentations", "orbits", "__version__"]
