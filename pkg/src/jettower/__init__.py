"""Exact intersection computations on jet towers of hypersurfaces in P^4."""

__version__ = "0.1.0"
