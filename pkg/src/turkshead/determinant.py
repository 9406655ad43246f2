"""Knot determinants of THK(m, n) by independent routes and closed forms."""

from dataclasses import dataclass
from math import gcd

import mpmath

from .braid import Diagram, build_thk, coloring_matrix
from .graphs import build_checkerboard, spanning_tree_count
from .linalg import bareiss_det
from .numbertheory import is_prime
from .sequences import fibonacci, lucas

__all__ = [
    "DeterminantResult", "PrecisionError", "CompositeVerdict",
    "knot_determinant", "tree_determinant", "det_closed_form_m3",
    "trig_count", "trig_product", "trig_precision_bits", "composite_determinant_check",
    "determinants", "METHODS", "TRIG_TOLERANCE",
]

METHODS = ("minor", "trees", "closed", "trig")
TRIG_TOLERANCE = mpmath.mpf(2) ** -32


class PrecisionError(ArithmeticError):
    """A floating-point product was not close enough to an integer."""


@dataclass(frozen=True)
class DeterminantResult:
    value: int
    method: str  # "coloring-minor", "matrix-tree", "closed-form", "trig-product"

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("determinants are reported as absolute values")


def knot_determinant(d: Diagram) -> DeterminantResult:
    """|first minor| of the coloring matrix (last row and column deleted)."""
    minor = coloring_matrix(d).minor(-1, -1)
    return DeterminantResult(abs(bareiss_det(minor)), "coloring-minor")


def tree_determinant(d: Diagram) -> DeterminantResult:
    return DeterminantResult(spanning_tree_count(build_checkerboard(d)),
                             "matrix-tree")


def det_closed_form_m3(n: int) -> int:
    """Determinant of THK(3, n): L_{2n} - 2.

    Equals 5 F_n^2 for even n and L_n^2 for odd n; both are checked here.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    value = lucas(2 * n) - 2
    split = 5 * fibonacci(n) ** 2 if n % 2 == 0 else lucas(n) ** 2
    if split != value:
        raise AssertionError(f"parity factorization fails at n={n}")
    return value


def trig_precision_bits(m: int, n: int) -> int:
    return max(128, 8 * m * n)


def trig_count(m: int, n: int) -> int:
    """n * prod_{h<n, k<m/2} (4 sin^2(h pi/n) + 4 sin^2(k pi/m)), rounded.

    Evaluated with ``trig_precision_bits(m, n)`` bits; the double product
    must land within ``TRIG_TOLERANCE`` of an integer.
    """
    if m % 2 or m < 4:
        raise ValueError(f"trig product needs even m >= 4, got {m}")
    if n < 3:
        raise ValueError(f"trig product needs n >= 3, got {n}")
    value, _ = trig_product(m, n)
    return n * value


def trig_product(m: int, n: int):
    """(nearest integer, residue) of the double product without the factor n."""
    bits = trig_precision_bits(m, n)
    with mpmath.workprec(bits):
        prod = mpmath.mpf(1)
        for h in range(1, n):
            a = 4 * mpmath.sin(h * mpmath.pi / n) ** 2
            for k in range(1, m // 2):
                prod *= a + 4 * mpmath.sin(k * mpmath.pi / m) ** 2
        nearest = int(mpmath.nint(prod))
        residue = abs(prod - nearest)
    # Without 32 fractional bits left the residue test means nothing.
    if mpmath.mag(prod) + 32 > bits:
        raise PrecisionError(f"{bits} bits cannot resolve a product of "
                             f"magnitude 2^{mpmath.mag(prod)}")
    if residue >= TRIG_TOLERANCE:
        raise PrecisionError(f"trig product for ({m}, {n}) is {residue} away "
                             "from an integer")
    return nearest, residue


@dataclass(frozen=True)
class CompositeVerdict:
    m: int
    n: int
    determinant: int
    composite: bool
    witness: tuple  # factors whose product is the determinant
    reason: str


def composite_determinant_check(m: int, n: int) -> CompositeVerdict:
    """Compositeness of det THK(m, n) for coprime m = 3 or even m, n >= 3."""
    if gcd(m, n) != 1 or n < 3 or not (m == 3 or (m % 2 == 0 and m >= 4)):
        raise ValueError("needs gcd(m, n) = 1, n >= 3 and m = 3 or m even")
    det = knot_determinant(build_thk(m, n)).value
    if m == 3:
        if det != det_closed_form_m3(n):
            raise AssertionError(f"THK(3, {n}) determinant disagrees with "
                                 "L_2n - 2")
        if n % 2:
            witness = (lucas(n), lucas(n))
            reason = f"L_{n}^2"
        else:
            witness = (5, fibonacci(n), fibonacci(n))
            reason = f"5 F_{n}^2"
    else:
        witness = (n, det // n)
        reason = f"n = {n} divides the determinant"
    product = 1
    for f in witness:
        product *= f
    composite = (product == det and len([f for f in witness if f > 1]) >= 2
                 and not is_prime(det).is_prime)
    return CompositeVerdict(m, n, det, composite, witness, reason)


def determinants(m: int, n: int, methods=METHODS) -> dict:
    """Determinant of THK(m, n) by every requested method that applies."""
    out = {}
    d = build_thk(m, n)
    for method in methods:
        if method == "minor":
            out[method] = knot_determinant(d).value
        elif method == "trees":
            out[method] = tree_determinant(d).value
        elif method == "closed":
            if m == 3:
                out[method] = det_closed_form_m3(n)
        elif method == "trig":
            if m % 2 == 0 and m >= 4 and n >= 3:
                out[method] = trig_count(m, n)
        else:
            raise ValueError(f"unknown method {method!r}")
    return out
