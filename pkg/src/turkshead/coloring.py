"""Fox p-colorings, Harary-Kauffman checks, and the THK(m, 2) a-coefficients."""

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .braid import Diagram, build_thk, coloring_matrix, SW, NW
from .determinant import knot_determinant
from .linalg import nullspace_mod
from .numbertheory import is_prime
from .sequences import pell

__all__ = [
    "ColoringVector", "Nullspace", "HKVerdict", "CoefficientSequence",
    "NotColorableError", "is_valid_coloring", "nullspace_mod_p",
    "translation_classes", "iter_colorings", "hk_verify",
    "thk_m2_coefficients", "bound_check", "scaling_heterogeneity",
    "entering_arcs",
]


class NotColorableError(ValueError):
    pass


def _require_prime(p):
    if not is_prime(p).is_prime:
        raise ValueError(f"modulus must be prime, got {p}")


def is_valid_coloring(d: Diagram, colors, p: int) -> bool:
    """Check ``2*over - under_in - under_out == 0 mod p`` at every crossing."""
    if len(colors) != d.num_arcs:
        return False
    return all((2 * colors[o] - colors[a] - colors[b]) % p == 0
               for o, a, b in d.crossings)


@dataclass(frozen=True)
class ColoringVector:
    p: int
    colors: tuple

    @property
    def nontrivial(self):
        return len(set(c % self.p for c in self.colors)) > 1

    @property
    def heterogeneous(self):
        return len(set(c % self.p for c in self.colors)) == len(self.colors)

    def collision(self):
        """First pair of arcs with equal colors, as ``(i, j, color)``, or None."""
        seen = {}
        for i, c in enumerate(self.colors):
            c %= self.p
            if c in seen:
                return seen[c], i, c
            seen[c] = i
        return None


@dataclass(frozen=True)
class Nullspace:
    p: int
    basis: tuple

    @property
    def dimension(self):
        return len(self.basis)


def nullspace_mod_p(matrix, p: int) -> Nullspace:
    _require_prime(p)
    rows = matrix.rows if hasattr(matrix, "rows") else matrix
    return Nullspace(p, tuple(tuple(v) for v in nullspace_mod(rows, p)))


def translation_classes(d: Diagram, p: int) -> list:
    """Basis of the colorings with arc 0 colored 0.

    Every coloring is uniquely a translate of one of these, so their span
    minus zero is the set of non-trivial colorings up to translation.
    """
    ns = nullspace_mod_p(coloring_matrix(d), p)
    shifted = [[(x - v[0]) % p for x in v] for v in ns.basis]
    return _independent_rows(shifted, p)


def _independent_rows(rows, p):
    out = []
    reduced = []  # (pivot column, row) in echelon form
    for row in rows:
        r = list(row)
        for col, piv in reduced:
            if r[col]:
                f = r[col]
                r = [(x - f * y) % p for x, y in zip(r, piv)]
        lead = next((j for j, x in enumerate(r) if x), None)
        if lead is None:
            continue
        inv = pow(r[lead], -1, p)
        reduced.append((lead, [x * inv % p for x in r]))
        out.append(tuple(row))
    return out


def iter_colorings(d: Diagram, p: int):
    """Yield each non-trivial p-coloring up to translation (arc 0 colored 0)."""
    _require_prime(p)
    basis = translation_classes(d, p)
    n = d.num_arcs
    for coeffs in product(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        colors = [0] * n
        for c, v in zip(coeffs, basis):
            if c:
                for j in range(n):
                    colors[j] += c * v[j]
        yield ColoringVector(p, tuple(x % p for x in colors))


@dataclass(frozen=True)
class HKVerdict:
    p: int
    nullspace_dimension: int
    colorings_checked: int
    heterogeneous: bool
    witness: Optional[tuple]  # (arc i, arc j, color) of a repeated color
    complete: bool = True

    def to_json(self):
        return {
            "p": self.p,
            "nullspace_dimension": self.nullspace_dimension,
            "colorings_checked": self.colorings_checked,
            "heterogeneous": self.heterogeneous,
            "witness": list(self.witness) if self.witness else None,
            "complete": self.complete,
        }


def hk_verify(d: Diagram, p: int, cap: Optional[int] = None,
              determinant: Optional[int] = None) -> HKVerdict:
    """Check that every non-trivial p-coloring of ``d`` is heterogeneous.

    Colorings are enumerated up to translation, which changes neither
    validity nor which arcs share a color; enumeration stops at the first
    collision.  ``cap`` bounds the number of colorings examined, and
    ``complete`` is False when it was hit.
    """
    _require_prime(p)
    det = knot_determinant(d).value if determinant is None else determinant
    if det % p:
        raise NotColorableError(f"not {p}-colorable: {p} does not divide "
                                f"the determinant {det}")
    dim = len(translation_classes(d, p)) + 1
    checked = 0
    for vec in iter_colorings(d, p):
        if cap is not None and checked >= cap:
            return HKVerdict(p, dim, checked, True, None, complete=False)
        checked += 1
        hit = vec.collision()
        if hit is not None:
            return HKVerdict(p, dim, checked, False, hit)
    return HKVerdict(p, dim, checked, True, None)


def entering_arcs(d: Diagram) -> list:
    """Arc entering the braid at the left on each position 1..m."""
    out = []
    for p in range(1, d.m + 1):
        c = next(c for c, (i, _) in enumerate(d.word.letters) if p in (i, i + 1))
        gen = d.word.letters[c][0]
        out.append(d.edge_arc[d.slots[c][SW if gen == p else NW]])
    return out


@dataclass(frozen=True)
class CoefficientSequence:
    """a-coefficients of the THK(m, 2) coloring seeded with 0, a.

    ``colors`` is arc-indexed, ``entering`` lists the colors entering the
    braid at positions 1..m, ``S`` the positive element of each pair.
    """

    m: int
    S: tuple
    colors: tuple
    entering: tuple

    @property
    def max_abs(self):
        return max(abs(c) for c in self.colors)


def _propagate(d, seeds):
    colors = dict(seeds)
    progress = True
    while progress:
        progress = False
        for over, u_in, u_out in d.crossings:
            if over not in colors:
                continue
            if u_in in colors and u_out not in colors:
                colors[u_out] = 2 * colors[over] - colors[u_in]
                progress = True
            elif u_out in colors and u_in not in colors:
                colors[u_in] = 2 * colors[over] - colors[u_out]
                progress = True
    return colors


def thk_m2_coefficients(m: int) -> CoefficientSequence:
    """Integer propagation of the coloring 0, a through THK(m, 2).

    The bottom strand entering at the left gets 0 and the one above it a;
    the crossing rule is solved only for under-strands, so every arc gets an
    integer multiple of a.  The closing crossings then hold only modulo P_m.
    """
    if m < 3 or m % 2 == 0:
        raise ValueError(f"m must be odd and >= 3, got {m}")
    d = build_thk(m, 2)
    entering = entering_arcs(d)
    colors = _propagate(d, {entering[0]: 0, entering[1]: 1})
    if len(colors) != d.num_arcs:
        raise AssertionError("propagation did not reach every arc")
    arc_colors = tuple(colors[a] for a in range(d.num_arcs))
    enter = tuple(colors[a] for a in entering)

    # Entering strands above the first pair up as (x_2, x_3), (x_4, x_5), ...
    for j in range(1, m - 1, 2):
        x, y = enter[j], enter[j + 1]
        if x * y >= 0 or abs(abs(x) - abs(y)) != 1:
            raise AssertionError(f"entering pair {(x, y)} breaks the pattern")
    values = set(arc_colors)
    S = tuple(sorted(v for v in values if v > 0))
    for s in S:
        if -(s + 1) not in values:
            raise AssertionError(f"{s} has no partner {-(s + 1)}")
    if len(S) != m - 2:
        raise AssertionError(f"expected {m - 2} pairs, found {len(S)}")
    for k in range(2, len(S)):
        if S[k] != 2 * S[k - 1] + S[k - 2] + 1:
            raise AssertionError(f"S recursion fails at index {k + 1}")
    return CoefficientSequence(m, S, arc_colors, enter)


def bound_check(m: int) -> bool:
    """``S_{m-2} < P_m / 2 - 1``, hence every |a-coefficient| is below P_m / 2.

    The largest |coefficient| is the partner ``S_{m-2} + 1``; both facts
    are checked here.
    """
    seq = thk_m2_coefficients(m)
    top = seq.S[-1]
    P = pell(m)
    return seq.max_abs == top + 1 and 2 * top < P - 2


def scaling_heterogeneity(d: Diagram, p: int, a: int, base=None) -> bool:
    """``a * base`` is a valid coloring, heterogeneous exactly when ``base`` is.

    ``base`` defaults to the 0, 1 propagation for THK(m, 2) with odd m and to
    the first coloring with arc 0 colored 0 otherwise.
    """
    _require_prime(p)
    if a % p == 0:
        raise ValueError("a = 0 gives the trivial coloring")
    if base is None:
        if d.n == 2 and d.m % 2 == 1:
            base = thk_m2_coefficients(d.m).colors
        else:
            basis = translation_classes(d, p)
            if not basis:
                raise NotColorableError(f"THK({d.m}, {d.n}) is not "
                                        f"{p}-colorable")
            base = basis[0]
    base_vec = ColoringVector(p, tuple(c % p for c in base))
    scaled = ColoringVector(p, tuple(a * c % p for c in base))
    if not (is_valid_coloring(d, base_vec.colors, p)
            and is_valid_coloring(d, scaled.colors, p)):
        return False
    return scaled.heterogeneous == base_vec.heterogeneous
