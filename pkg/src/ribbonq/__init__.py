"""Shifted ribbon tableaux, k-quotients and ribbon Schur Q-functions."""

__version__ = "0.1.0"
