"""Graded ideals and Artinian quotients of R = k[x,y], in exact arithmetic.

Within each degree i, monomials are ordered y^i > y^(i-1) x > ... > x^i
(reverse degree-lex with ordered basis (y, x)); leading monomials of an
echelonized ideal are the initial ideal, and the complementary standard
monomials fill the Ferrers diagram of a partition.

The Jordan type of multiplication by a linear form L is recovered from the
rank sequence of its powers: the number of Jordan strings of length >= s
equals rank(m_L^(s-1)) - rank(m_L^s).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    DegreeOutOfRange,
    NotArtinian,
    ParseError,
    ZeroForm,
    ZeroInput,
)
from .partitions import JordanDegreeType, Partition
from .polynomials import BivariatePoly, contract

__all__ = [
    "GradedIdeal",
    "ArtinAlgebra",
    "MonomialCell",
    "monomials",
    "annihilator",
    "quotient",
    "jordan_type",
    "rank_mult_power",
    "jordan_degree_type",
    "initial_ideal",
    "is_complete_intersection",
]


def monomials(n):
    """Monomials of degree n as (x-exp, y-exp), largest first: y^n, ..., x^n."""
    return [(n - b, b) for b in range(n, -1, -1)]


def _poly_vec(f, n):
    """Coordinates of a degree-n form in the y-descending monomial order."""
    return [f.coefficient(a, b) for a, b in monomials(n)]


def _vec_poly(vec, n):
    return BivariatePoly({key: c for key, c in zip(monomials(n), vec)})


class GradedIdeal:
    """An ideal of k[x,y] given by homogeneous generators."""

    __slots__ = ("generators",)

    def __init__(self, generators):
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, BivariatePoly):
                raise ParseError(f"generator {g!r} is not a polynomial")
            if g.is_zero():
                raise ZeroInput("zero generator")
            if not g.is_homogeneous():
                raise ParseError(f"generator {g} is not homogeneous")
        object.__setattr__(self, "generators", gens)

    def __setattr__(self, name, value):
        raise AttributeError("GradedIdeal is immutable")

    def degree_span(self, i):
        """Spanning set of the degree-i piece: monomial multiples of the
        generators."""
        rows = []
        for g in self.generators:
            shift = i - g.homogeneous_degree()
            if shift < 0:
                continue
            for a, b in monomials(shift):
                rows.append(_poly_vec(BivariatePoly.monomial(a, b) * g, i))
        return rows

    def __str__(self):
        return ", ".join(g.text() for g in self.generators)

    def __repr__(self):
        return f"GradedIdeal([{self}])"


class ArtinAlgebra:
    """A finite-dimensional graded quotient A = R/I with cached per-degree
    echelon bases of I and standard-monomial bases of A.

    Built through quotient(); all data is computed eagerly at construction
    and read-only afterwards.
    """

    def __init__(self, ideal, pivots, rows, stds, hilbert):
        self.ideal = ideal
        self._pivots = pivots  # degree -> pivot column indices of I_i
        self._rows = rows  # degree -> RREF rows of I_i (Fraction)
        self._stds = stds  # degree -> standard monomials (a, b), y-descending
        self.hilbert = tuple(hilbert)  # through the socle degree
        self.socle_degree = len(self.hilbert) - 1

    @property
    def dimension(self):
        return sum(self.hilbert)

    def dim(self, i):
        if 0 <= i < len(self.hilbert):
            return self.hilbert[i]
        return 0

    def basis(self, i):
        """Standard monomials of degree i, as (x-exp, y-exp) pairs."""
        if 0 <= i < len(self.hilbert):
            return self._stds[i]
        return []

    def ideal_rows(self, i):
        """Echelonized degree-i piece of the ideal (rows over Fraction)."""
        if i < len(self._rows):
            return self._rows[i]
        # beyond the socle the ideal is everything
        size = i + 1
        return [
            [Fraction(1) if c == r else Fraction(0) for c in range(size)]
            for r in range(size)
        ]

    def normal_form_vector(self, f):
        """Coordinates of a homogeneous form modulo I in the standard basis
        of its degree."""
        if f.is_zero():
            return []
        i = f.homogeneous_degree()
        if i > self.socle_degree:
            return []
        vec = _poly_vec(f, i)
        for prow, pc in zip(self._rows[i], self._pivots[i]):
            if vec[pc]:
                factor = vec[pc]
                vec = [v - factor * w for v, w in zip(vec, prow)]
        mono_index = {key: t for t, key in enumerate(monomials(i))}
        return [vec[mono_index[key]] for key in self._stds[i]]

    def __repr__(self):
        return f"ArtinAlgebra(H={self.hilbert}, I=({self.ideal}))"


def quotient(ideal):
    """Per-degree echelon bases of I, standard monomials of A = R/I, and the
    Hilbert function.  Raises NotArtinian when dim A_i stays positive past
    twice the generator degree bound (plus guard)."""
    maxdeg = max(g.homogeneous_degree() for g in ideal.generators)
    bound = 2 * maxdeg + 2
    pivots, rows, stds, hilbert = [], [], [], []
    for i in range(bound + 1):
        piv, red = linalg.rref(ideal.degree_span(i), i + 1)
        std = [key for t, key in enumerate(monomials(i)) if t not in piv]
        pivots.append(piv)
        rows.append(red)
        stds.append(std)
        hilbert.append(len(std))
        if not std:
            return ArtinAlgebra(ideal, pivots, rows, stds, hilbert[:-1])
    raise NotArtinian(f"dim A_{bound} = {hilbert[-1]} > 0 for I = ({ideal})")


def annihilator(F):
    """Minimal homogeneous generators of Ann(F) = {f : f o F = 0}.

    For each degree i the kernel of the contraction map R_i -> E_(j-i) is
    computed exactly; the new generators in degree i are a complement of
    R_1 * Ann(F)_(i-1) inside the kernel.
    """
    if not isinstance(F, BivariatePoly) or F.is_zero():
        raise ZeroInput("dual generator must be a nonzero polynomial")
    j = F.homogeneous_degree()
    generators = []
    prev_kernel = []  # basis of Ann(F)_(i-1), as polynomials
    for i in range(j + 2):
        target = monomials(j - i) if i <= j else []
        rows = []
        for a, b in monomials(i):
            image = contract(BivariatePoly.monomial(a, b), F)
            rows.append([image.coefficient(*key) for key in target])
        # kernel of the map sending coordinate vectors to their contraction
        kernel = [
            _vec_poly(vec, i)
            for vec in linalg.kernel_basis(_transpose(rows), i + 1)
        ]
        grown = []
        for p in prev_kernel:
            grown.append(_poly_vec(BivariatePoly.monomial(1, 0) * p, i))
            grown.append(_poly_vec(BivariatePoly.monomial(0, 1) * p, i))
        piv, red = linalg.rref(grown, i + 1)
        for p in kernel:
            vec = _poly_vec(p, i)
            for prow, pc in zip(red, piv):
                if vec[pc]:
                    factor = vec[pc]
                    vec = [v - factor * w for v, w in zip(vec, prow)]
            if any(vec):
                generators.append(_tidy(_vec_poly(vec, i)))
                newpiv, newred = linalg.rref(grown + [_poly_vec(p, i)], i + 1)
                piv, red, grown = newpiv, newred, grown + [_poly_vec(p, i)]
        prev_kernel = kernel
    return GradedIdeal(generators)


def _transpose(rows):
    if not rows:
        return []
    return [list(col) for col in zip(*rows)]


def _tidy(f):
    """Scale to coprime integer coefficients with positive leading term."""
    coeffs = list(f.terms.values())
    scale = 1
    for c in coeffs:
        scale = scale * c.denominator // _gcd_int(scale, c.denominator)
    ints = [int(c * scale) for c in coeffs]
    g = 0
    for v in ints:
        g = _gcd_int(g, v)
    lead = f.sorted_terms()[0][1]
    sign = -1 if lead < 0 else 1
    return f * Fraction(sign * scale, g)


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _require_linear(ell):
    if not isinstance(ell, BivariatePoly) or ell.is_zero():
        raise ZeroForm("linear form must be nonzero")
    if ell.homogeneous_degree() != 1:
        raise ParseError(f"{ell} is not linear")
    return ell


def rank_mult_power(A, ell, u, s):
    """Exact rank of multiplication by ell^(s-u) from A_u to A_s."""
    _require_linear(ell)
    if not 0 <= u <= s or s > A.socle_degree:
        raise DegreeOutOfRange(f"need 0 <= {u} <= {s} <= {A.socle_degree}")
    if u == s:
        return A.dim(u)
    power = ell ** (s - u)
    columns = [
        A.normal_form_vector(power * BivariatePoly.monomial(a, b))
        for a, b in A.basis(u)
    ]
    return linalg.rank(_transpose(columns)) if columns else 0


def _power_rank(A, ell, p):
    """Rank of m_ell^p on all of A."""
    return sum(
        rank_mult_power(A, ell, u, u + p)
        for u in range(A.socle_degree - p + 1)
    )


def jordan_type(A, ell):
    """Jordan block partition of the nilpotent multiplication map m_ell.

    The number of blocks of size >= s is rank(m^(s-1)) - rank(m^s).
    """
    _require_linear(ell)
    ranks = [A.dimension]  # rank of m^0
    p = 1
    while ranks[-1] > 0:
        ranks.append(_power_rank(A, ell, p) if p <= A.socle_degree else 0)
        p += 1
    parts = []
    for s in range(1, len(ranks)):
        ge_s = ranks[s - 1] - ranks[s]
        ge_s1 = ranks[s] - ranks[s + 1] if s + 1 < len(ranks) else 0
        parts.extend([s] * (ge_s - ge_s1))
    return Partition(sorted(parts, reverse=True))


def jordan_degree_type(A, ell):
    """Multiset of (start degree, length) of the Jordan strings of m_ell.

    Strings of length >= s starting in degree i are counted by
    rank(A_i -> A_(i+s-1)) - rank(A_(i-1) -> A_(i+s-1)).
    """
    _require_linear(ell)
    j = A.socle_degree

    def at_least(i, s):
        if i + s - 1 > j:
            return 0
        r = rank_mult_power(A, ell, i, i + s - 1)
        if i > 0:
            r -= rank_mult_power(A, ell, i - 1, i + s - 1)
        return r

    strings = {}
    for i in range(j + 1):
        for s in range(1, j + 2 - i):
            count = at_least(i, s) - at_least(i, s + 1)
            if count:
                strings[(i, s)] = count
    return JordanDegreeType(strings)


@dataclass(frozen=True)
class MonomialCell:
    """Initial data of an ideal in a linear direction: the partition Q whose
    Ferrers diagram the standard monomials fill, the monomial fill itself,
    and the minimal generators of the complementary monomial ideal."""

    partition: Partition
    fill: tuple  # standard monomials per degree
    generators: tuple  # minimal generators of (E_Q) as (x-exp, y-exp)

    def generator_polys(self):
        return tuple(BivariatePoly.monomial(a, b) for a, b in self.generators)


def cell_generators(Q):
    """Minimal generators (x^p1, x^p2 y^a1, ..., y^at) of the monomial ideal
    complementary to the Ferrers fill of Q."""
    pf = Q.power_form
    gens = [(pf[0][0], 0)]
    a = 0
    for t in range(1, len(pf)):
        a += pf[t - 1][1]
        gens.append((pf[t][0], a))
    gens.append((0, a + pf[-1][1]))
    return tuple(gens)


def initial_ideal(ideal, ell):
    """Initial monomial data of I in the direction ell.

    Coordinates are changed so that ell becomes x (complement y, or x when
    ell is proportional to y); the ideal is echelonized degree by degree in
    the order y^i > ... > x^i and the leading monomials collected.
    """
    ell = _require_linear(ell)
    a, b = ell.coefficient(1, 0), ell.coefficient(0, 1)
    x, y = BivariatePoly.monomial(1, 0), BivariatePoly.monomial(0, 1)
    if a != 0:
        # x = (x' - b y')/a, y = y'
        px = Fraction(1, 1) / a * x - Fraction(b, 1) / a * y
        py = y
    else:
        # ell = b*y: complement x; x = y', y = x'/b
        px = y
        py = Fraction(1, 1) / b * x
    moved = GradedIdeal([g.substitute(px, py) for g in ideal.generators])
    A = quotient(moved)
    rows = [0] * (A.socle_degree + 1)
    fill = []
    for i in range(A.socle_degree + 1):
        std = A.basis(i)
        fill.append(tuple(std))
        for xa, yb in std:
            rows[yb] = max(rows[yb], xa + 1)
    parts = [r for r in rows if r]
    assert all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)), (
        "standard monomials do not form a Ferrers diagram"
    )
    Q = Partition(parts)
    assert Q.size == A.dimension
    return MonomialCell(partition=Q, fill=tuple(fill), generators=cell_generators(Q))


def is_complete_intersection(ideal):
    """Whether I is minimally generated by two forms; also returns the
    minimal generator degrees.

    The count of new generators in degree i is dim I_i - dim R_1*I_(i-1).
    """
    A = quotient(ideal)
    degrees = []
    prev_basis = []  # polynomials spanning I_(i-1)
    for i in range(A.socle_degree + 2):
        dim_Ii = (i + 1) - A.dim(i)
        grown = []
        for p in prev_basis:
            grown.append(_poly_vec(BivariatePoly.monomial(1, 0) * p, i))
            grown.append(_poly_vec(BivariatePoly.monomial(0, 1) * p, i))
        piv, _ = linalg.rref(grown, i + 1)
        new = dim_Ii - len(piv)
        assert new >= 0
        degrees.extend([i] * new)
        prev_basis = [
            _vec_poly(row, i) for row in A.ideal_rows(i)
        ]
    return len(degrees) == 2, tuple(degrees)
