"""Small dense exact linear algebra over the rationals.

Matrices are lists of lists of Fractions (rows).  Everything here is
desk scale (dimensions well under a few hundred), so plain Gaussian
elimination with exact arithmetic is the right tool.
"""

from __future__ import annotations

from fractions import Fraction

Row = list[Fraction]
Matrix = list[Row]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac_rows(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = ONE / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def in_span(vectors: Matrix, v: Row) -> bool:
    """Is v in the row span of vectors?"""
    if all(x == 0 for x in v):
        return True
    if not vectors:
        return False
    base = rank(vectors)
    return rank(vectors + [v]) == base


def span_contains(vectors: Matrix, others: Matrix) -> bool:
    return all(in_span(vectors, v) for v in others)


def spans_equal(a: Matrix, b: Matrix) -> bool:
    return span_contains(a, b) and span_contains(b, a)


def span_basis(vectors: Matrix) -> Matrix:
    """Canonical basis (RREF nonzero rows) of the span."""
    if not vectors or not vectors[0]:
        return []
    red, pivots = rref(vectors)
    return [red[i] for i in range(len(pivots))]


def nullspace(m: Matrix, ncols: int | None = None) -> Matrix:
    """Basis of the right kernel {x : m x = 0}."""
    if not m:
        n = ncols if ncols is not None else 0
        return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    n = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * n
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(m: Matrix, b: Row) -> Row | None:
    """One solution of m x = b, or None if inconsistent."""
    if not m:
        return None if any(x != 0 for x in b) else []
    n = len(m[0])
    aug = [row[:] + [bb] for row, bb in zip(m, b)]
    red, pivots = rref(aug)
    for r in range(len(pivots)):
        if pivots[r] == n:
            return None
    x = [ZERO] * n
    for r, pc in enumerate(pivots):
        x[pc] = red[r][n]
    return x


def intersect_spans(a: Matrix, b: Matrix) -> Matrix:
    """Basis of (row span of a) intersect (row span of b)."""
    if not a or not b:
        return []
    n = len(a[0])
    # Solve for coefficient pairs (x, y) with x.a = y.b.
    m = []
    for col in range(n):
        m.append([a[i][col] for i in range(len(a))]
                 + [-b[j][col] for j in range(len(b))])
    vecs = []
    for coeff in nullspace(m, len(a) + len(b)):
        x = coeff[: len(a)]
        v = [sum((x[i] * a[i][col] for i in range(len(a))), ZERO)
             for col in range(n)]
        if any(c != 0 for c in v):
            vecs.append(v)
    return span_basis(vecs)
