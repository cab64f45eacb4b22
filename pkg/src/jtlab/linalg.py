"""Exact linear algebra over the rationals.

Ranks are computed by fraction-free (Bareiss) elimination on integer
matrices obtained by clearing denominators row by row, so no intermediate
rationals appear.  Reduced row echelon form over Fraction is kept for
basis extraction and normal forms, where the reduced rows themselves are
needed.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["rank", "rref", "kernel_basis"]


def _integer_rows(rows):
    out = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        scale = 1
        for v in fr:
            if v.denominator != 1:
                scale = scale * v.denominator // _gcd(scale, v.denominator)
        out.append([int(v * scale) for v in fr])
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _exact_div(num, den):
    q, rem = divmod(num, den)
    assert rem == 0, "fraction-free elimination lost integrality"
    return q


def rank(rows):
    """Rank of a matrix given as a list of rows (Fraction or int entries)."""
    if not rows:
        return 0
    m = _integer_rows(rows)
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue  # column is zero below r; _exact_div guards the invariant
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        for i in range(r + 1, nrows):
            head = m[i][c]
            for k in range(c + 1, ncols):
                m[i][k] = _exact_div(m[i][k] * lead - head * m[r][k], prev)
            m[i][c] = 0
        prev = lead
        r += 1
        if r == nrows:
            break
    return r


def rref(rows, ncols):
    """Reduced row echelon form over Fraction.

    Returns (pivots, reduced) where pivots is the ordered list of pivot
    column indices and reduced the corresponding normalized rows.
    """
    work = [[Fraction(v) for v in row] for row in rows if any(row)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [v - f * w for v, w in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return pivots, work[: len(pivots)]


def kernel_basis(rows, ncols):
    """Basis of the null space {v : M v = 0} of the matrix with given rows.

    Vectors are returned RREF-style: one per free column, with a 1 in the
    free coordinate.
    """
    pivots, reduced = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for prow, pc in zip(reduced, pivots):
            vec[pc] = -prow[fc]
        basis.append(vec)
    return basis
