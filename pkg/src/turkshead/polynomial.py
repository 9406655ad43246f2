"""Dense univariate polynomials with integer coefficients."""

from fractions import Fraction
from itertools import zip_longest

__all__ = ["IntPolynomial", "sturm_sequence", "count_real_roots", "squarefree_part"]


class IntPolynomial:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of ``x**k``.

    Trailing zero coefficients are stripped, so the zero polynomial has
    ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def from_descending(cls, coeffs):
        return cls(list(coeffs)[::-1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def pretty(self, var="x"):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            body = (str(mag) if k == 0 or mag != 1 else "") + \
                ("" if k == 0 else var if k == 1 else f"{var}^{k}")
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in terms[1:]])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        return IntPolynomial(a + b for a, b in
                             zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def exact_div(self, other):
        """Quotient ``self / other``; raises ``ArithmeticError`` on a remainder."""
        other = _lift(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.leading
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            if rem:
                raise ArithmeticError("division is not exact")
            return IntPolynomial()
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if c % lead:
                raise ArithmeticError("division is not exact")
            q = c // lead
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        if any(rem):
            raise ArithmeticError("division is not exact")
        return IntPolynomial(quot)

    def derivative(self):
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def reversed(self):
        """``x**deg * p(1/x)``."""
        return IntPolynomial(self.coeffs[::-1])

    def is_palindromic(self):
        """Coefficients equal their reverse up to one overall sign."""
        c, r = self.coeffs, self.coeffs[::-1]
        return c == r or c == tuple(-v for v in r)

    def with_positive_constant(self):
        """Flip the overall sign so the lowest nonzero coefficient is positive."""
        low = next((c for c in self.coeffs if c), 0)
        return -self if low < 0 else self


def _lift(v):
    return v if isinstance(v, IntPolynomial) else IntPolynomial([v])


def _frac_rem(a, b):
    a = list(a)
    while len(a) >= len(b) and a:
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for j, c in enumerate(b):
            a[shift + j] -= q * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _frac_gcd(a, b):
    while b:
        a, b = b, _frac_rem(a, b)
    return a


def squarefree_part(p: IntPolynomial):
    """``p / gcd(p, p')`` over the rationals, as Fraction coefficients."""
    a = [Fraction(c) for c in p.coeffs]
    g = _frac_gcd(a, [Fraction(c) for c in p.derivative().coeffs])
    if len(g) <= 1:
        return a
    # Long division a / g.
    rem = list(a)
    quot = [Fraction(0)] * (len(a) - len(g) + 1)
    for k in range(len(quot) - 1, -1, -1):
        q = rem[k + len(g) - 1] / g[-1]
        quot[k] = q
        for j, c in enumerate(g):
            rem[k + j] -= q * c
    return quot


def sturm_sequence(coeffs):
    """Sturm chain of a polynomial with rational ascending coefficients."""
    p0 = [Fraction(c) for c in coeffs]
    while p0 and p0[-1] == 0:
        p0.pop()
    p1 = [k * c for k, c in enumerate(p0) if k]
    chain = [p0, p1]
    while chain[-1]:
        r = _frac_rem(chain[-2], chain[-1])
        chain.append([-c for c in r])
    chain.pop()
    return chain


def _eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign(v):
    return (v > 0) - (v < 0)


def count_real_roots(coeffs, lo=None, hi=None):
    """Distinct real roots in ``(lo, hi]`` by Sturm's theorem.

    ``None`` bounds mean minus/plus infinity.  ``lo`` must not be a root.
    """
    chain = sturm_sequence(coeffs)

    def signs_at(x, end):
        if x is None:
            # Sign of the leading term at +-infinity.
            return [_sign(p[-1]) * (1 if end > 0 or (len(p) - 1) % 2 == 0 else -1)
                    for p in chain]
        return [_sign(_eval(p, Fraction(x))) for p in chain]

    if lo is not None and _eval(chain[0], Fraction(lo)) == 0:
        raise ValueError("lower bound is a root")
    return _variations(signs_at(lo, -1)) - _variations(signs_at(hi, 1))
