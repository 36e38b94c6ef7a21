"""Exact computations for Lie algebra cohomology of parabolic geometries modeled on su(2,1) + su(2,1) and sl(3,C)."""

__version__ = "0.1.0"
