"""Exact-arithmetic construction and analysis of level point configurations.

The package builds reduced point and line configurations in projective 2- and
3-space over a prime field, measures Hilbert functions and socle profiles of
their Artinian reductions, and checks maximal-rank behavior of multiplication
by general forms — all with exact linear algebra, no tolerances anywhere.
"""

from .core import KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
