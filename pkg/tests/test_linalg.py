from itertools import permutations, product

import sympy
from hypothesis import given, strategies as st

from turkshead.linalg import bareiss_det, berkowitz_charpoly, matmul, matpow, nullspace_mod


def square(max_n=5, lo=-9, hi=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                           min_size=n, max_size=n))


def _leibniz(a):
    n = len(a)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i, j in enumerate(perm):
            term *= a[i][j]
        total += term
    return total


@given(square())
def test_bareiss_matches_leibniz(a):
    assert bareiss_det(a) == _leibniz(a)


@given(square(max_n=9, lo=-10**12, hi=10**12))
def test_bareiss_matches_sympy_on_big_entries(a):
    assert bareiss_det(a) == sympy.Matrix(a).det()


def test_bareiss_needs_pivot_swap():
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[0, 0], [0, 1]]) == 0
    assert bareiss_det([]) == 1


@given(square(max_n=7))
def test_berkowitz_matches_sympy(a):
    x = sympy.Symbol("x")
    expect = [int(c) for c in sympy.Matrix(a).charpoly(x).all_coeffs()]
    assert berkowitz_charpoly(a) == expect


@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 4), st.integers(1, 4), st.data())
def test_nullspace_mod_against_enumeration(p, r, c, data):
    rows = data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c),
                              min_size=r, max_size=r))
    basis = nullspace_mod(rows, p)
    for v in basis:
        assert all(sum(x * y for x, y in zip(row, v)) % p == 0 for row in rows)
    kernel = sum(1 for v in product(range(p), repeat=c)
                 if all(sum(x * y for x, y in zip(row, v)) % p == 0 for row in rows))
    assert kernel == p ** len(basis)


@given(square(max_n=4, lo=-3, hi=3), st.integers(0, 6))
def test_matpow(a, k):
    expect = [[int(i == j) for j in range(len(a))] for i in range(len(a))]
    for _ in range(k):
        expect = matmul(expect, a)
    assert matpow(a, k) == expect
