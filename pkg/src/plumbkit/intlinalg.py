"""Exact integer linear algebra on plain nested lists of Python ints.

Everything here is arbitrary precision; matrices are lists of rows. No
floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def copy_matrix(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(map(int, row)) for row in a]


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = transpose(b) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def det(a: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    n = len(a)
    if n == 0:
        return 1
    m = copy_matrix(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def leading_minors(a: Sequence[Sequence[int]]) -> list[int]:
    return [det([row[:k] for row in a[:k]]) for k in range(1, len(a) + 1)]


def smith_diagonal(a: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form of ``a``, length ``min(rows, cols)``.

    Pivots on the entry of least absolute value in the remaining block, which
    keeps intermediate entries small. Entries are nonnegative and each divides
    the next; zeros come last.
    """
    m = copy_matrix(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag: list[int] = []
    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                diag.extend([0] * (min(rows, cols) - t))
                return diag
            pi, pj = pivot
            m[t], m[pi] = m[pi], m[t]
            for row in m:
                row[t], row[pj] = row[pj], row[t]
            p = m[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = m[i][t] // p
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                if m[i][t]:
                    clean = False
            for j in range(t + 1, cols):
                q = m[t][j] // p
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                if m[t][j]:
                    clean = False
            if not clean:
                continue
            # pivot must divide the whole remaining block
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if m[i][j] % p),
                None,
            )
            if bad is None:
                break
            m[t] = [x + y for x, y in zip(m[t], m[bad])]
        diag.append(abs(m[t][t]))
    return diag


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def column_echelon(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, int]:
    """Unimodular column reduction ``a @ u == h``.

    ``h`` is in lower column-echelon form: its first ``rank`` columns have
    strictly increasing pivot rows with positive pivots, and the remaining
    columns are zero. Returns ``(h, u, rank)``; the trailing ``n - rank``
    columns of ``u`` are a basis of the integer kernel of ``a``.
    """
    h = copy_matrix(a)
    rows = len(h)
    n = len(h[0]) if rows else 0
    u = identity(n)

    def colop(j: int, k: int, p: int, q: int, r: int, s: int) -> None:
        # (col_j, col_k) <- (p col_j + q col_k, r col_j + s col_k)
        for mat in (h, u):
            for row in mat:
                x, y = row[j], row[k]
                row[j], row[k] = p * x + q * y, r * x + s * y

    rank = 0
    for i in range(rows):
        if rank == n:
            break
        for k in range(rank + 1, n):
            b = h[i][k]
            if b == 0:
                continue
            a0 = h[i][rank]
            g, x, y = _egcd(a0, b)
            colop(rank, k, x, y, -b // g, a0 // g)
        if h[i][rank] == 0:
            continue
        if h[i][rank] < 0:
            for mat in (h, u):
                for row in mat:
                    row[rank] = -row[rank]
        for j in range(rank):
            q = h[i][j] // h[i][rank]
            if q:
                for mat in (h, u):
                    for row in mat:
                        row[j] -= q * row[rank]
        rank += 1
    return h, u, rank


def hermite_lower(a: Sequence[Sequence[int]]) -> Matrix:
    """Lower-triangular column Hermite form of a nonsingular square matrix.

    The columns of the result span the same lattice as the columns of ``a``;
    the diagonal is positive and entries left of the diagonal are reduced into
    ``[0, h[i][i])``.
    """
    h, _, rank = column_echelon(a)
    if rank != len(a):
        raise ValueError("matrix is singular")
    return h


def reduce_mod_lattice(v: Sequence[int], h: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Unique representative of ``v`` mod the columns of lower-triangular ``h``
    lying in the box ``0 <= v[i] < h[i][i]``."""
    w = list(v)
    for i in range(len(w)):
        q = w[i] // h[i][i]
        if q:
            for r in range(i, len(w)):
                w[r] -= q * h[r][i]
    return tuple(w)


def integer_kernel(a: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Z-basis of ``{x in Z^n : a x = 0}``.

    ``ncols`` is needed when ``a`` has no rows.
    """
    if not a:
        return [list(row) for row in identity(ncols or 0)]
    _, u, rank = column_echelon(a)
    n = len(a[0])
    return [[u[r][j] for r in range(n)] for j in range(rank, n)]


def solve_rational(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction]:
    """Solve ``a x = b`` exactly for nonsingular square ``a``."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for r in range(n):
            if r != k and m[r][k] != 0:
                f = m[r][k]
                m[r] = [x - f * y for x, y in zip(m[r], m[k])]
    return [row[n] for row in m]


def inverse_rational(a: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(a)
    cols = [solve_rational(a, e) for e in identity(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def ldl(a: Sequence[Sequence[int]]) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Exact rational LDL^T of a symmetric matrix.

    Returns ``(mu, d)`` with ``a[i][j] = sum_k mu[i][k] d[k] mu[j][k]``,
    ``mu`` unit lower triangular. Raises ``ValueError`` on a zero pivot.
    """
    n = len(a)
    mu = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d: list[Fraction] = []
    for j in range(n):
        dj = Fraction(a[j][j]) - sum(mu[j][k] ** 2 * d[k] for k in range(j))
        if dj == 0:
            raise ValueError("zero pivot in LDL decomposition")
        d.append(dj)
        for i in range(j + 1, n):
            mu[i][j] = (Fraction(a[i][j]) - sum(mu[i][k] * mu[j][k] * d[k] for k in range(j))) / dj
    return mu, d
