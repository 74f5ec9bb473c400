"""Exact wall-and-chamber computations for Bridgeland stability on Picard-rank-one K3 surfaces."""

__version__ = "0.1.0"
