"""Poincare polynomials of Kummer 3-folds A^3/G for finite G < SL(3, Z)."""

__version__ = "0.1.0"
