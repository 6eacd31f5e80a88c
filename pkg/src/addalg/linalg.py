"""Exact linear algebra over the rationals.

Everything works on tuples of Fraction.  Row-echelon forms are fully
reduced and canonical (pivot entries 1, pivot columns cleared), so two
subspaces are equal iff their basis tuples compare equal.
"""

from __future__ import annotations

from fractions import Fraction

Vec = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def vec(values) -> Vec:
    return tuple(Fraction(v) for v in values)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


def rref(rows) -> tuple[tuple[Vec, ...], tuple[int, ...]]:
    """Canonical reduced row echelon form.

    Returns (nonzero rows, pivot columns).  Fraction-free forward
    elimination is not needed here because rows are normalized as we go;
    Fraction keeps everything exact.
    """
    work = [list(r) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots: list[int] = []
    out: list[list[Fraction]] = []
    for row in work:
        # reduce against existing pivot rows
        for prow, pc in zip(out, pivots):
            c = row[pc]
            if c:
                for j in range(pc, ncols):
                    row[j] -= c * prow[j]
        # find pivot
        for j in range(ncols):
            if row[j]:
                inv = 1 / row[j]
                for k in range(j, ncols):
                    row[k] *= inv
                # clear this column in earlier rows
                for prow in out:
                    c = prow[j]
                    if c:
                        for k in range(j, ncols):
                            prow[k] -= c * row[k]
                # insert keeping pivot columns increasing
                pos = 0
                while pos < len(pivots) and pivots[pos] < j:
                    pos += 1
                out.insert(pos, row)
                pivots.insert(pos, j)
                break
    return tuple(tuple(r) for r in out), tuple(pivots)


def rank(rows) -> int:
    return len(rref(rows)[0])


def reduce_against(basis: tuple[Vec, ...], pivots: tuple[int, ...], v: Vec) -> Vec:
    """Residual of v after elimination against a canonical RREF basis."""
    row = list(v)
    n = len(row)
    for brow, pc in zip(basis, pivots):
        c = row[pc]
        if c:
            for j in range(pc, n):
                row[j] -= c * brow[j]
    return tuple(row)


def in_span(basis: tuple[Vec, ...], pivots: tuple[int, ...], v: Vec) -> bool:
    return is_zero_vec(reduce_against(basis, pivots, v))


def nullspace(rows, ncols: int | None = None) -> tuple[Vec, ...]:
    """Canonical basis of {x : M x = 0} (right kernel)."""
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for empty matrix")
        ncols = len(rows[0])
    basis, pivots = rref(rows)
    free = [j for j in range(ncols) if j not in pivots]
    out = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for brow, pc in zip(basis, pivots):
            x[pc] = -brow[f]
        out.append(tuple(x))
    return tuple(out)


def solve(matrix, rhs: Vec) -> Vec | None:
    """One solution x of M x = rhs, or None if inconsistent.

    Free variables are set to zero.
    """
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    ncols = len(matrix[0]) if matrix else 0
    basis, pivots = rref(rows)
    x = [ZERO] * ncols
    for brow, pc in zip(basis, pivots):
        if pc == ncols:
            return None  # pivot in augmented column
        x[pc] = brow[ncols]
    return tuple(x)


def mat_vec(matrix, x: Vec) -> Vec:
    return tuple(sum((r[j] * x[j] for j in range(len(x))), ZERO) for r in matrix)


def det(matrix) -> Fraction:
    """Determinant by fraction-free style elimination over Fraction."""
    n = len(matrix)
    m = [list(r) for r in matrix]
    sign = 1
    result = ONE
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            return ZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            c = m[r][col] / p
            if c:
                for j in range(col, n):
                    m[r][j] -= c * m[col][j]
    return sign * result
