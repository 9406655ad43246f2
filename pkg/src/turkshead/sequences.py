"""Pell, Lucas, Fibonacci and Delannoy numbers.

Values are plain Python ints and are memoized, so ``pell(200)`` or a
Delannoy row of length 400 costs one linear pass the first time.
"""

__all__ = ["pell", "lucas", "fibonacci", "delannoy", "delannoy_row"]


def _check_index(k, lowest):
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError(f"index must be an int, got {type(k).__name__}")
    if k < lowest:
        raise ValueError(f"index must be >= {lowest}, got {k}")


_PELL = [0, 1, 2]
_LUCAS = [2, 1]
_FIB = [0, 1, 1]


def _extend(table, k, a, b):
    while len(table) <= k:
        table.append(a * table[-1] + b * table[-2])
    return table[k]


def pell(k: int) -> int:
    """P_k with P_1 = 1, P_2 = 2 and P_k = 2 P_{k-1} + P_{k-2}."""
    _check_index(k, 1)
    return _extend(_PELL, k, 2, 1)


def lucas(k: int) -> int:
    """L_k with L_0 = 2, L_1 = 1."""
    _check_index(k, 0)
    return _extend(_LUCAS, k, 1, 1)


def fibonacci(k: int) -> int:
    """F_k with F_1 = F_2 = 1."""
    _check_index(k, 1)
    return _extend(_FIB, k, 1, 1)


_DELANNOY = [(1,), (1, 1)]


def delannoy_row(i: int) -> tuple:
    """Row ``i`` of the centered Delannoy triangle, ``i + 1`` entries.

    In the centered layout every entry is the sum of the three entries
    directly above it: the two neighbours in row ``i - 1`` and the entry
    two rows up in the same column, ``D[i][k] = D[i-1][k-1] + D[i-1][k]
    + D[i-2][k-1]``, out-of-range entries read as 0.
    """
    _check_index(i, 0)
    while len(_DELANNOY) <= i:
        prev2, prev = _DELANNOY[-2], _DELANNOY[-1]
        padded = (0,) + prev + (0,)
        above2 = (0,) + prev2 + (0,)
        _DELANNOY.append(tuple(padded[k] + padded[k + 1] + above2[k]
                               for k in range(len(prev) + 1)))
    return _DELANNOY[i]


def delannoy(i: int, k: int) -> int:
    """Entry ``k`` of Delannoy row ``i``; 0 when ``k > i``."""
    _check_index(i, 0)
    _check_index(k, 0)
    if k > i:
        return 0
    return delannoy_row(i)[k]
