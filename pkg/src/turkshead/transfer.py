"""Transfer matrices A_m, the polynomials g_m and d_m, and G(m, n).

One period ``s_1 s_2^-1 s_3 ...`` of the THK braid maps the colors
``x`` entering at the left to ``A_m x`` leaving at the right, so colorings
of THK(m, n) are the vectors fixed by ``A_m^n``.  ``g_m`` is the
characteristic polynomial of ``A_m`` normalized to constant term +1,
``d_m = g_m / (1 - x)``, and ``G(m, n) = |d_m^(n)(1)|`` where ``d_m^(n)``
has the n-th powers of the roots of ``d_m`` as its roots.
"""

from dataclasses import dataclass
from math import gcd, lcm
from typing import Optional

import mpmath

from .braid import build_thk, coloring_matrix
from .determinant import PrecisionError, knot_determinant
from .linalg import berkowitz_charpoly, matpow, nullspace_mod
from .numbertheory import is_perfect_square, is_prime
from .polynomial import IntPolynomial, count_real_roots, squarefree_part

__all__ = [
    "TransferMatrix", "GValue", "SquareVerdict", "RootReport",
    "AgreementRecord", "PrecisionError",
    "build_Am", "charpoly", "g_recursive", "dm", "power_poly",
    "numeric_power_poly", "G", "square_structure", "roots_analysis",
    "verify_G_equals_det", "transfer_kernel_dimension",
    "eigen_coloring_bridge",
]

ONE_MINUS_X = IntPolynomial([1, -1])


@dataclass(frozen=True)
class TransferMatrix:
    m: int
    entries: tuple

    def rows(self):
        return [list(r) for r in self.entries]


def build_Am(m: int) -> TransferMatrix:
    """Compose the crossing rule ``under_out = 2*over - under_in`` over one period.

    Each position carries its color as a linear form in the entering colors
    ``x_1..x_m``; row ``p`` of the result is the form leaving at position p.
    """
    if m < 2:
        raise ValueError(f"A_m needs m >= 2, got {m}")
    forms = [[int(i == p) for i in range(m)] for p in range(m)]
    for i in range(1, m):
        lo, up = forms[i - 1], forms[i]
        if i % 2:
            # over strand runs lower-left to upper-right
            forms[i - 1] = [2 * a - b for a, b in zip(lo, up)]
            forms[i] = lo
        else:
            forms[i - 1] = up
            forms[i] = [2 * b - a for a, b in zip(lo, up)]
    return TransferMatrix(m, tuple(tuple(r) for r in forms))


def charpoly(matrix) -> IntPolynomial:
    """``+-det(x I - M)`` with the sign chosen to make the constant term positive."""
    if isinstance(matrix, TransferMatrix):
        matrix = matrix.rows()
    return IntPolynomial.from_descending(berkowitz_charpoly(matrix)) \
        .with_positive_constant()


_G_SEEDS = {2: IntPolynomial([1, -2, 1]), 3: IntPolynomial([1, -4, 4, -1])}


def _recurse(m, seeds):
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if m in seeds:
        return seeds[m]
    prev, cur = seeds[2], seeds[3]
    for _ in range(4, m + 1):
        prev, cur = cur, ONE_MINUS_X * cur - IntPolynomial([0, 1]) * prev
    return cur


def g_recursive(m: int) -> IntPolynomial:
    """``g_{m+1} = (1 - x) g_m - x g_{m-1}`` from g_2, g_3."""
    return _recurse(m, _G_SEEDS)


def dm(m: int) -> IntPolynomial:
    """``g_m / (1 - x)`` computed from the characteristic polynomial of A_m."""
    return charpoly(build_Am(m)).exact_div(ONE_MINUS_X)


def power_poly(p: IntPolynomial, n: int) -> IntPolynomial:
    """Polynomial whose roots are the n-th powers of the roots of ``p``.

    Needs constant term +-1.  The result is ``prod (1 - x / alpha_i^n)``,
    so its constant term is +1.  Power sums of the reciprocal roots come
    from Newton's identities on the (monic up to sign) reversed polynomial;
    every division by k on the way back is exact.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    c = p.coeffs
    if not c or c[0] not in (1, -1):
        raise ValueError("power_poly needs constant term +-1")
    d = p.degree
    c0 = c[0]
    # Elementary symmetric functions of the reciprocal roots 1/alpha_i.
    e = [(-1) ** k * c[k] * c0 for k in range(d + 1)]
    s = [d]
    for j in range(1, n * d + 1):
        acc = sum((-1) ** (i - 1) * e[i] * s[j - i] for i in range(1, min(j - 1, d) + 1))
        if j <= d:
            acc += (-1) ** (j - 1) * j * e[j]
        s.append(acc)
    # Power sums of beta_i = alpha_i^-n, then back to elementary functions.
    t = [s[n * k] for k in range(d + 1)]
    f = [1]
    for k in range(1, d + 1):
        acc = sum((-1) ** (i - 1) * f[k - i] * t[i] for i in range(1, k + 1))
        q, r = divmod(acc, k)
        if r:
            raise ArithmeticError("inexact Newton division: corrupted input")
        f.append(q)
    return IntPolynomial((-1) ** k * f[k] for k in range(d + 1))


def numeric_roots(p: IntPolynomial, dps: int = 50):
    """All complex roots of ``p`` to ``dps`` digits (mpmath)."""
    with mpmath.workdps(dps):
        try:
            roots, err = mpmath.polyroots(list(reversed(p.coeffs)), maxsteps=400,
                                          extraprec=4 * dps + 10 * p.degree,
                                          error=True)
        except mpmath.libmp.NoConvergence as exc:
            raise PrecisionError(f"root finding did not converge: {exc}") from exc
        if err > mpmath.mpf(10) ** (-dps // 2):
            raise PrecisionError(f"root error estimate {err} too large for "
                                 f"{dps} digits")
    return roots


def numeric_power_poly(p: IntPolynomial, n: int, dps: int = 60):
    """Ascending coefficients of ``prod (1 - x / alpha^n)`` from numeric roots."""
    roots = numeric_roots(p, dps)
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpc(1)]
        for r in roots:
            z = 1 / r ** n
            nxt = coeffs + [mpmath.mpc(0)]
            for k in range(len(coeffs), 0, -1):
                nxt[k] -= z * coeffs[k - 1]
            coeffs = nxt
        return [mpmath.re(v) for v in coeffs]


@dataclass(frozen=True)
class GValue:
    """``value = cofactor * root**2`` when the square structure holds.

    ``cofactor`` is 1 for odd n and G(m, 2) for even n; ``root`` is None if
    the extraction failed.
    """

    m: int
    n: int
    value: int
    root: Optional[int]
    cofactor: int


def _require_odd_m(m):
    if m < 3 or m % 2 == 0:
        raise ValueError(f"G(m, n) is defined for odd m >= 3, got m={m}")


def G(m: int, n: int) -> GValue:
    _require_odd_m(m)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    value = abs(power_poly(dm(m), n)(1))
    if n % 2:
        cofactor = 1
    else:
        cofactor = abs(power_poly(dm(m), 2)(1))
    root = None
    if cofactor and value % cofactor == 0:
        root = is_perfect_square(value // cofactor)
    return GValue(m, n, value, root, cofactor)


@dataclass(frozen=True)
class SquareVerdict:
    m: int
    n: int
    value: int
    cofactor: int
    root: Optional[int]
    holds: bool
    composite: bool


def square_structure(m: int, n: int) -> SquareVerdict:
    """G(m, n) = root^2 (n odd) or G(m, 2) * root^2 (n even), root > 1."""
    _require_odd_m(m)
    if n < 3:
        raise ValueError(f"square structure needs n >= 3, got {n}")
    g = G(m, n)
    holds = g.root is not None and g.root > 1 and g.cofactor * g.root ** 2 == g.value
    verdict = is_prime(g.value)
    composite = holds and verdict.status == "composite"
    return SquareVerdict(m, n, g.value, g.cofactor, g.root, holds, composite)


@dataclass(frozen=True)
class RootReport:
    m: int
    polynomial: str  # "d" or "g"
    degree: int
    distinct_positive_roots: int
    squarefree_degree: int
    certified: bool
    roots: tuple
    reciprocal_error: object

    @property
    def smallest(self):
        return self.roots[0]


def roots_analysis(m: int, precision: int = 30, which: str = "d") -> RootReport:
    """Exact real-positive certificate plus numeric roots of d_m (or g_m).

    The certificate: the square-free part has as many distinct roots in
    ``(0, oo)`` as its degree, by Sturm's theorem, which forces every root
    of the polynomial to be real and positive.
    """
    if m < 3:
        raise ValueError(f"roots_analysis needs m >= 3, got {m}")
    if which == "d":
        p = dm(m)
    elif which == "g":
        p = charpoly(build_Am(m))
    else:
        raise ValueError(f"which must be 'd' or 'g', got {which!r}")
    sf = squarefree_part(p)
    positive = count_real_roots(sf, lo=0, hi=None)
    sf_degree = len(sf) - 1
    certified = positive == sf_degree
    # Separate the multiple roots before calling the numeric solver.
    roots = []
    dps = precision + 10
    with mpmath.workdps(dps):
        sf_int = _clear_denominators(sf)
        for r in numeric_roots(sf_int, dps):
            if abs(mpmath.im(r)) > mpmath.mpf(10) ** (-precision):
                raise PrecisionError(f"numeric root {r} is not real at the "
                                     "requested precision")
            roots.append(mpmath.re(r))
        roots.sort()
        # Restore multiplicity for the pairing check on the full polynomial.
        full = []
        for r in roots:
            k = _multiplicity(p, r, precision)
            full.extend([r] * k)
        if len(full) != p.degree:
            raise PrecisionError("could not resolve root multiplicities")
        err = max(abs(a * b - 1) for a, b in zip(full, reversed(full)))
    return RootReport(m, which, p.degree, positive, sf_degree, certified,
                      tuple(full), err)


def _clear_denominators(coeffs):
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    return IntPolynomial(int(c * den) for c in coeffs)


def _multiplicity(p, r, precision):
    tol = mpmath.mpf(10) ** (-precision // 2)
    k = 0
    q = p
    scale = max(1, max(abs(c) for c in p.coeffs))
    while q.coeffs and abs(q(r)) < tol * scale:
        k += 1
        q = q.derivative()
    return k


@dataclass(frozen=True)
class AgreementRecord:
    m: int
    n: int
    g_value: int
    determinant: int

    @property
    def agree(self):
        return self.g_value == self.determinant


def verify_G_equals_det(m: int, n: int) -> AgreementRecord:
    _require_odd_m(m)
    if n < 2 or gcd(m, n) != 1:
        raise ValueError(f"needs n >= 2 coprime to m, got ({m}, {n})")
    g = G(m, n).value
    det = knot_determinant(build_thk(m, n)).value
    return AgreementRecord(m, n, g, det)


def transfer_kernel_dimension(m: int, n: int, p: int) -> int:
    """dim ker(A_m^n - I) over GF(p)."""
    if not is_prime(p).is_prime:
        raise ValueError(f"p must be prime, got {p}")
    a = matpow(build_Am(m).rows(), n)
    for i in range(m):
        a[i][i] -= 1
    return len(nullspace_mod(a, p))


def eigen_coloring_bridge(m: int, n: int, p: int) -> bool:
    """Extra fixed vectors of A_m^n mod p exist iff THK(m, n) is p-colorable."""
    fixed = transfer_kernel_dimension(m, n, p)
    colorings = len(nullspace_mod(coloring_matrix(build_thk(m, n)).rows, p))
    return (fixed > 1) == (colorings > 1)
