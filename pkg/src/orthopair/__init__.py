"""Exact classification of orthogonal pairs of polynomial maps between
Hermitian projective spaces, over the field Q(i)."""

from orthopair.scalar import GaussianRational, gr

__all__ = ["GaussianRational", "gr"]
__version__ = "0.1.0"
