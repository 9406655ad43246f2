"""Primality verdicts with checkable witnesses, square roots, Pell primes."""

import random
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Optional

from .sequences import pell

__all__ = [
    "PrimalityVerdict", "is_prime", "is_perfect_square", "find_factor",
    "pell_prime_scan", "proves_composite", "PROBABLE_PRIME_ROUNDS", "TRIAL_DIVISION_LIMIT",
]

# Miller-Rabin with these bases is exact below 3.3e24 > 2^64.
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 1 << 64
PROBABLE_PRIME_ROUNDS = 40
TRIAL_DIVISION_LIMIT = 10**6
RHO_ITERATION_CAP = 200_000
PELL_SCAN_DEFAULT = 200


@dataclass(frozen=True)
class PrimalityVerdict:
    """``status`` is ``"prime"``, ``"composite"`` or ``"probable-prime"``.

    A composite verdict carries ``factor`` (a proper divisor) when one was
    found, ``square_root`` when the value is a perfect square, and always
    ``mr_base`` for odd values: a base failing the strong probable-prime
    test, checkable with :func:`proves_composite`.  Units 0 and 1 are
    composite by convention with no witness.
    """

    value: int
    status: str
    factor: Optional[int] = None
    square_root: Optional[int] = None
    rounds: int = 0
    mr_base: Optional[int] = None

    @property
    def is_prime(self):
        return self.status in ("prime", "probable-prime")

    def to_json(self):
        out = {"value": str(self.value), "status": self.status}
        if self.factor is not None:
            out["factor"] = str(self.factor)
        if self.square_root is not None:
            out["square_root"] = str(self.square_root)
        if self.mr_base is not None:
            out["mr_base"] = self.mr_base
        if self.status == "probable-prime":
            out["rounds"] = self.rounds
        return out


def _strong_probable_prime(n, a):
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def proves_composite(n: int, a: int) -> bool:
    """True when base ``a`` proves odd ``n > 3`` composite."""
    return not _strong_probable_prime(n, a)


def _miller_rabin(n):
    """(passed, rounds, failing_base); rounds == 0 means the answer is exact.

    Above 2^64 the extra bases come from a generator seeded with ``n``, so
    verdicts are reproducible.
    """
    for a in _DETERMINISTIC_BASES:
        if a % n and not _strong_probable_prime(n, a):
            return False, 0, a
    if n < _DETERMINISTIC_LIMIT:
        return True, 0, None
    rng = random.Random(n)
    for _ in range(PROBABLE_PRIME_ROUNDS - len(_DETERMINISTIC_BASES)):
        a = rng.randrange(2, n - 1)
        if not _strong_probable_prime(n, a):
            return False, 0, a
    return True, PROBABLE_PRIME_ROUNDS, None


def _small_factor(n):
    if n % 2 == 0:
        return 2
    limit = min(TRIAL_DIVISION_LIMIT, isqrt(n))
    f = 3
    while f <= limit:
        if n % f == 0:
            return f
        f += 2
    return None


def _pollard_rho(n, seed):
    rng = random.Random(seed)
    for _ in range(8):
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        steps = 0
        while d == 1 and steps < RHO_ITERATION_CAP:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
            steps += 1
        if 1 < d < n:
            return d
    return None


def find_factor(n: int) -> Optional[int]:
    """A proper divisor of composite ``n``: trial division then rho."""
    if n < 4:
        return None
    f = _small_factor(n)
    if f is not None and f < n:
        return f
    if n <= TRIAL_DIVISION_LIMIT ** 2:
        return None
    return _pollard_rho(n, n)


def is_prime(v: int) -> PrimalityVerdict:
    if v < 0:
        raise ValueError("primality is defined here for v >= 0")
    if v < 2:
        return PrimalityVerdict(v, "composite")
    if v < 4:
        return PrimalityVerdict(v, "prime")
    if v % 2 == 0:
        return PrimalityVerdict(v, "composite", factor=2)
    passed, rounds, base = _miller_rabin(v)
    if passed:
        return PrimalityVerdict(v, "probable-prime" if rounds else "prime",
                                rounds=rounds)
    root = is_perfect_square(v)
    factor = _small_factor(v)
    if factor is None:
        # A square root is already a divisor; rho only runs without one.
        factor = root if root is not None else find_factor(v)
    return PrimalityVerdict(v, "composite", factor=factor, square_root=root,
                            mr_base=base)


def is_perfect_square(v: int) -> Optional[int]:
    if v < 0:
        return None
    r = isqrt(v)
    return r if r * r == v else None


def pell_prime_scan(max_m: int = PELL_SCAN_DEFAULT) -> list:
    """Indices ``m <= max_m`` with ``pell(m)`` prime (probable beyond 2^64)."""
    if max_m < 1:
        return []
    found = []
    for m in range(1, max_m + 1):
        p = pell(m)
        if p > 1 and (p == 2 or (p % 2 and _miller_rabin(p)[0])):
            if not is_prime(m).is_prime:
                raise AssertionError(f"P_{m} is prime but {m} is not")
            found.append(m)
    return found
