"""Exact computations for Turk's Head knots THK(m, n).

Determinants, Fox colorings, checkerboard graphs, transfer-matrix
characteristic polynomials and the conjectural determinant G(m, n).
"""

__version__ = "0.1.0"
