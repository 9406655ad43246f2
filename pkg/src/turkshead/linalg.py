"""Exact integer and prime-field linear algebra on lists of lists."""

__all__ = ["bareiss_det", "berkowitz_charpoly", "nullspace_mod", "matmul", "matpow"]


def bareiss_det(matrix) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Every intermediate entry is a minor of the input, so the division in
    the update step is exact.
    """
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            if f == 0:
                if pivot != prev:
                    for j in range(k + 1, n):
                        row_i[j] = row_i[j] * pivot // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def berkowitz_charpoly(matrix) -> list:
    """Coefficients of ``det(x I - M)``, descending-degree, leading 1.

    Division-free (Berkowitz), so exact over the integers.
    """
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return [1]
    poly = [1, -a[0][0]]
    for r in range(1, n):
        # Leading principal submatrix of size r is a[:r][:r]; border row R,
        # column C and corner a[r][r].
        R = a[r][:r]
        C = [a[i][r] for i in range(r)]
        sub = [row[:r] for row in a[:r]]
        # Toeplitz column: 1, -a_rr, -R C, -R A C, -R A^2 C, ...
        col = [1, -a[r][r]]
        v = C
        for _ in range(r):
            col.append(-sum(x * y for x, y in zip(R, v)))
            v = [sum(sub[i][j] * v[j] for j in range(r)) for i in range(r)]
        new = [0] * (r + 2)
        for i in range(r + 2):
            new[i] = sum(col[i - j] * poly[j]
                         for j in range(max(0, i - r - 1), min(i, r) + 1)
                         if i - j < len(col))
        poly = new
    return poly


def nullspace_mod(matrix, p: int) -> list:
    """Basis of the right kernel of ``matrix`` over GF(p), ``p`` prime.

    Vectors have entries in ``range(p)``; one basis vector per free column of
    the reduced row echelon form, with a 1 in that column.
    """
    rows = [[int(v) % p for v in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for i, c in enumerate(pivots):
            v[c] = -rows[i][free] % p
        basis.append(v)
    return basis


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matpow(a, k: int):
    n = len(a)
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    base = [list(row) for row in a]
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result
