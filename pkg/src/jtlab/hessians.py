"""Higher and mixed Hessians of a Macaulay dual generator, their ranks at a
linear form, and the bijection between CIJT partitions and vanishing sets.

For A = R/Ann(F) of socle degree j, the i-th Hessian matrix is
[alpha_u alpha_v o F] over a monomial basis of A_i; its determinant
evaluated at the point (a, b) of a linear form L = a x + b y vanishes
exactly when multiplication by L^(j-2i) from A_i to A_(j-i) drops rank.
Vanishing is therefore always decided here by exact ranks of multiplication
maps; symbolic determinants are only for display.

Mixed orders are written (u, s) = (source degree, target degree): the rank
of L^(s-u): A_u -> A_s.  In the determinant picture this map corresponds to
the mixed Hessian of bases A_u and A_(j-s), i.e. (u, s) <-> (u, j-s) in the
two-basis indexing.
"""

from __future__ import annotations

from .algebra import annihilator, quotient, rank_mult_power
from .codes import cijt_from_composition, is_cijt
from .errors import (
    InvalidSubset,
    NotCIJT,
    OrderOutOfRange,
    TopRequiresKGe2,
)
from .linalg import rank as matrix_rank
from .partitions import (
    HilbertFunction,
    Partition,
    diagonal_lengths,
    sl_partition,
)
from .polynomials import BivariatePoly, contract

__all__ = [
    "hessian_matrix",
    "hessian_determinant",
    "evaluate_matrix",
    "hessian_rank_at",
    "active_hessian_indices",
    "nonvanishing_set",
    "predicted_nonvanishing_set",
    "cijt_from_hessian_subset",
    "predicted_rank_profile",
    "generic_jordan_type",
]


def hessian_matrix(F, i, algebra=None):
    """Symbolic i-th Hessian matrix of F.

    The basis of A_i is the full set of degree-i monomials (the ideal of a
    Gorenstein quotient of k[x,y] starts in degree d > i), ordered by
    descending x-exponent: (x^i, x^(i-1) y, ..., y^i).
    """
    A = algebra if algebra is not None else quotient(annihilator(F))
    T = HilbertFunction(A.hilbert)
    if not 0 <= i <= T.d - 1:
        raise OrderOutOfRange(f"order {i} outside [0, {T.d - 1}]")
    assert A.dim(i) == i + 1
    basis = [BivariatePoly.monomial(i - b, b) for b in range(i + 1)]
    return [[contract(mu * mv, F) for mv in basis] for mu in basis]


def hessian_determinant(F, i, algebra=None):
    """Symbolic determinant of the i-th Hessian matrix (display only;
    vanishing questions go through ranks)."""
    return _det(hessian_matrix(F, i, algebra))


def _det(mat):
    n = len(mat)
    if n == 0:
        return BivariatePoly.monomial(0, 0)
    if n == 1:
        return mat[0][0]
    total = BivariatePoly.zero()
    for c in range(n):
        minor = [row[:c] + row[c + 1 :] for row in mat[1:]]
        term = mat[0][c] * _det(minor)
        total = total + term if c % 2 == 0 else total - term
    return total


def evaluate_matrix(mat, a, b):
    """Substitute the point (a, b) into every entry."""
    return [[entry.evaluate(a, b) for entry in row] for row in mat]


def hessian_rank_at(F, i, point, algebra=None):
    """Rank of the i-th Hessian matrix of F evaluated at (a, b)."""
    return matrix_rank(evaluate_matrix(hessian_matrix(F, i, algebra), *point))


def active_hessian_indices(T):
    """Orders whose Hessian is not identically degenerate: 0..d-2 always,
    plus d-1 when k >= 2."""
    T = HilbertFunction(T)
    top = T.d - 1 if T.k >= 2 else T.d - 2
    return tuple(range(top + 1))


def nonvanishing_set(A, ell):
    """Active orders i with full-rank multiplication A_i -> A_(j-i) by
    ell^(j-2i): the convention-free meaning of h^i_ell != 0."""
    T = HilbertFunction(A.hilbert)
    return frozenset(
        i
        for i in active_hessian_indices(T)
        if rank_mult_power(A, ell, i, T.j - i) == i + 1
    )


def predicted_nonvanishing_set(P):
    """Active orders i with p_1 + ... + p_(i+1) = (i+1)(j+1-i).

    The partial sum of a Jordan type meets this bound exactly when the i-th
    Hessian is nonzero at the linear form.
    """
    P = Partition(P)
    T = HilbertFunction(diagonal_lengths(P))
    if not is_cijt(P):
        raise NotCIJT(f"{P} is not a CIJT partition")
    parts = P.parts + (0,) * (T.d + T.k)
    return frozenset(
        i
        for i in active_hessian_indices(T)
        if sum(parts[: i + 1]) == (i + 1) * (T.j + 1 - i)
    )


def cijt_from_hessian_subset(T, S):
    """The unique CIJT partition whose nonvanishing set is S.

    Sorting S as s_1 < ... < s_c, the gaps n_i = s_i - s_(i-1) (with
    s_0 = -1) form the composition building the partition; the empty set
    gives the rectangle (d)^(d+k-1).
    """
    T = HilbertFunction(T)
    S = frozenset(S)
    active = set(active_hessian_indices(T))
    if not S <= active:
        raise InvalidSubset(f"{sorted(S)} not within active orders {sorted(active)}")
    ordered = sorted(S)
    comp = []
    prev = -1
    for s in ordered:
        comp.append(s - prev)
        prev = s
    return cijt_from_composition(T, tuple(comp))


def _vanishing_runs(T, S):
    """Maximal runs of consecutive vanishing active orders, as (m, m+n)."""
    vanishing = sorted(set(active_hessian_indices(T)) - set(S))
    runs = []
    for i in vanishing:
        if runs and i == runs[-1][1] + 1:
            runs[-1][1] = i
        else:
            runs.append([i, i])
    return [tuple(r) for r in runs]


def predicted_rank_profile(P):
    """Exact ranks of multiplication maps A_u -> A_s forced by the Jordan
    type, as {(u, s): rank}.

    Nonvanishing orders i contribute full rank i+1 at (i, j-i).  A vanishing
    run h^m = ... = h^(m+n) = 0 bounded above by a nonvanishing order
    contributes rank max(j+i-(n+s), m) for s in [j-(m+n), j-(m+i)] and full
    rank m+i+1 for s in [d, j-(m+n+1)]; a run reaching the top order d-1
    (k >= 2) contributes rank max(2m+n+i+1-s, m) for i in [0, n+k//2-1] and
    s in [d, j-(m+i)].
    """
    P = Partition(P)
    T = HilbertFunction(diagonal_lengths(P))
    S = predicted_nonvanishing_set(P)
    d, k, j = T.d, T.k, T.j
    profile = {}
    for i in sorted(S):
        profile[(i, j - i)] = i + 1
    for m, top in _vanishing_runs(T, S):
        n = top - m
        if top <= d - 2:
            for i in range(n + 1):
                for s in range(j - (m + n), j - (m + i) + 1):
                    profile[(m + i, s)] = max(j + i - (n + s), m)
                for s in range(d, j - (m + n + 1) + 1):
                    profile[(m + i, s)] = m + i + 1
        else:
            assert k >= 2 and top == d - 1
            for i in range(n + k // 2):
                for s in range(d, j - (m + i) + 1):
                    profile[(m + i, s)] = max(2 * m + n + i + 1 - s, m)
    return profile


def generic_jordan_type(T, which):
    """Jordan types of a sufficiently general dual generator F.

    which = "sl": the strong Lefschetz type, the conjugate of T.
    which = "top" (k >= 2 only): the type at a root of the top Hessian,
    (j+1, j-1, ..., j+1-2(d-2), 1^k), with d+k-1 parts.
    which = i in [0, d-2]: the type at a simple root of h^i: the maximal
    d-element window of (..., j-2i+5, j-2i+3, j-2i, j-2i, j-2i-3, ...)
    whose entries all lie in [k, j+1].
    """
    T = HilbertFunction(T)
    d, k, j = T.d, T.k, T.j
    if which == "sl":
        return sl_partition(T)
    if which == "top":
        if k < 2:
            raise TopRequiresKGe2("top Hessian is only active when k >= 2")
        return Partition([j + 1 - 2 * t for t in range(d - 1)] + [1] * k)
    i = int(which)
    if not 0 <= i <= d - 2:
        raise OrderOutOfRange(f"which = {i} outside [0, {d - 2}]")
    center = j - 2 * i
    seq = (
        [center + 3 + 2 * t for t in range(d, -1, -1)]
        + [center, center]
        + [center - 3 - 2 * t for t in range(d + 1)]
    )
    windows = [
        tuple(seq[t : t + d])
        for t in range(len(seq) - d + 1)
        if all(k <= v <= j + 1 for v in seq[t : t + d])
    ]
    assert windows, "no admissible window; T too small for this order"
    return Partition(max(windows))
