"""Exact computational models for affine Weyl groups, their torus
quotients and induced characters, rank-1 p-adic fixed-point counts,
Fourier transform matrices, and self-dual Lie lattices."""

__version__ = "0.1.0"
