import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jtlab import linalg
from jtlab.algebra import (
    GradedIdeal,
    annihilator,
    cell_generators,
    initial_ideal,
    is_complete_intersection,
    jordan_degree_type,
    jordan_type,
    quotient,
    rank_mult_power,
)
from jtlab.errors import (
    DegreeOutOfRange,
    NotArtinian,
    ZeroForm,
    ZeroInput,
)
from jtlab.partitions import HilbertFunction, Partition, diagonal_lengths
from jtlab.polynomials import BivariatePoly, contract, parse_poly

X = BivariatePoly.monomial(1, 0)
Y = BivariatePoly.monomial(0, 1)
ELL_X = BivariatePoly.linear(1, 0)
ELL_Y = BivariatePoly.linear(0, 1)
ELL_XY = BivariatePoly.linear(1, 1)


def ideal(*texts):
    return GradedIdeal([parse_poly(t) for t in texts])


# -- polynomials and contraction ----------------------------------------------


def test_poly_parse_and_print():
    f = parse_poly("y^4 + x^4")
    assert f.text() == "y^4 + x^4"
    g = parse_poly("3/2*x*y^3")
    assert g.coefficient(1, 3) == Fraction(3, 2)
    assert g.text() == "3/2*x*y^3"
    assert parse_poly("x^2y") == parse_poly("x^2*y")
    assert parse_poly("2Y^3").coefficient(0, 3) == 2
    assert parse_poly("x - y").text() == "-y + x"
    assert parse_poly("0").is_zero()


@given(
    st.dictionaries(
        st.tuples(st.integers(0, 6), st.integers(0, 6)),
        st.fractions(min_value=-9, max_value=9, max_denominator=4),
        max_size=6,
    )
)
def test_poly_text_round_trip(terms):
    f = BivariatePoly(terms)
    assert parse_poly(f.text()) == f


def test_contract_examples():
    F = parse_poly("X^2*Y^3")
    assert contract(parse_poly("x"), F) == parse_poly("2*X*Y^3")
    assert contract(parse_poly("x^3"), F).is_zero()
    assert contract(parse_poly("x^2*y^2"), F) == parse_poly("12*Y")


def test_contract_is_bilinear_module_action():
    F = parse_poly("X^5 + 3*X^2*Y^3 - Y^5")
    f = parse_poly("x^2 - 2*x*y")
    g = parse_poly("y^2 + x")
    assert contract(f * g, F) == contract(f, contract(g, F))


# -- annihilator ----------------------------------------------------------------


def test_annihilator_monomial_duals():
    assert str(annihilator(parse_poly("X^2*Y^3"))) == "x^3, y^4"
    assert str(annihilator(parse_poly("X*Y^2"))) == "x^2, y^3"


def test_annihilator_hilbert_function_of_cubic_sum():
    F = parse_poly("X+Y") ** 4 + parse_poly("X-Y") ** 4 + parse_poly("X+2Y") ** 4
    assert quotient(annihilator(F)).hilbert == (1, 2, 3, 2, 1)


def test_annihilator_rejects_zero():
    with pytest.raises(ZeroInput):
        annihilator(BivariatePoly.zero())


def test_annihilator_is_gorenstein_symmetric():
    rng = random.Random(4711)
    for _ in range(30):
        j = rng.randint(3, 8)
        terms = {
            (a, j - a): Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3]))
            for a in range(j + 1)
        }
        F = BivariatePoly(terms)
        if F.is_zero():
            continue
        H = quotient(annihilator(F)).hilbert
        assert H == tuple(reversed(H))


# -- quotient --------------------------------------------------------------------


def test_quotient_hilbert_functions():
    assert quotient(ideal("x^2", "y^3")).hilbert == (1, 2, 2, 1)
    assert quotient(ideal("x^3", "y^4")).hilbert == (1, 2, 3, 3, 2, 1)
    assert quotient(ideal("x^2*y", "y^4+x^4")).hilbert == (1, 2, 3, 3, 2, 1)


def test_quotient_not_artinian():
    with pytest.raises(NotArtinian):
        quotient(ideal("x^2"))
    with pytest.raises(NotArtinian):
        quotient(ideal("x^2*y", "y^4"))


# -- jordan type ------------------------------------------------------------------


def test_jordan_type_monomial_ci():
    A = quotient(ideal("x^2", "y^3"))
    assert jordan_type(A, ELL_Y) == Partition([3, 3])
    assert jordan_type(A, ELL_X) == Partition([2, 2, 2])
    assert jordan_type(A, ELL_XY) == Partition([4, 2])


def test_jordan_type_non_sl_directions():
    A = quotient(ideal("x*y", "x^3+y^3"))
    assert jordan_type(A, ELL_X) == Partition([4, 1, 1])
    B = quotient(annihilator(parse_poly("X^2*Y^3")))
    assert jordan_type(B, ELL_X) == Partition([3, 3, 3, 3])
    assert jordan_type(B, ELL_Y) == Partition([4, 4, 4])
    assert jordan_type(B, ELL_XY) == Partition([6, 4, 2])


def test_jordan_type_zero_form():
    A = quotient(ideal("x^2", "y^3"))
    with pytest.raises(ZeroForm):
        jordan_type(A, BivariatePoly.zero())


def test_block_count_equals_nullity():
    A = quotient(ideal("x^2*y", "y^4+x^4"))
    for ell in (ELL_X, ELL_Y, ELL_XY):
        P = jordan_type(A, ell)
        rank_m = sum(
            rank_mult_power(A, ell, u, u + 1) for u in range(A.socle_degree)
        )
        assert len(P) == A.dimension - rank_m


# -- rank of powers ---------------------------------------------------------------


def test_rank_mult_power_values():
    B = quotient(annihilator(parse_poly("X^2*Y^3")))
    # x^3 lies in Ann(X^2 Y^3), so multiplication by x^3 vanishes: the
    # strings of P_x = (3^4) start in degrees 0,1,2,3 and none covers both
    # degrees 1 and 4
    assert rank_mult_power(B, ELL_X, 1, 4) == 0
    A = quotient(ideal("x^2", "y^3"))
    assert rank_mult_power(A, ELL_XY, 0, 3) == 1
    for u in range(A.socle_degree + 1):
        assert rank_mult_power(A, ELL_XY, u, u) == A.dim(u)


def test_rank_mult_power_monotone_and_bounded():
    A = quotient(ideal("x^2*y", "y^4+x^4"))
    for ell in (ELL_X, ELL_XY):
        for u in range(A.socle_degree + 1):
            prev = None
            for s in range(u, A.socle_degree + 1):
                r = rank_mult_power(A, ell, u, s)
                assert r <= min(A.dim(u), A.dim(s))
                if prev is not None:
                    assert r <= prev
                prev = r


def test_rank_mult_power_range_check():
    A = quotient(ideal("x^2", "y^3"))
    with pytest.raises(DegreeOutOfRange):
        rank_mult_power(A, ELL_X, 2, 1)
    with pytest.raises(DegreeOutOfRange):
        rank_mult_power(A, ELL_X, 0, 9)


# -- jordan degree type -------------------------------------------------------------


def test_jordan_degree_type_strings():
    A = quotient(ideal("x^2", "y^3"))
    jdt = jordan_degree_type(A, ELL_X)
    assert dict(jdt.strings) == {(0, 2): 1, (1, 2): 1, (2, 2): 1}
    B = quotient(annihilator(parse_poly("X^2*Y^3")))
    jdt = jordan_degree_type(B, ELL_XY)
    assert dict(jdt.strings) == {(0, 6): 1, (1, 4): 1, (2, 2): 1}


def test_jordan_degree_type_gorenstein_symmetry():
    rng = random.Random(99)
    for _ in range(15):
        j = rng.randint(3, 7)
        F = BivariatePoly(
            {(a, j - a): Fraction(rng.randint(-9, 9)) for a in range(j + 1)}
        )
        if F.is_zero():
            continue
        A = quotient(annihilator(F))
        for ell in (ELL_X, ELL_XY):
            jdt = jordan_degree_type(A, ell)
            assert jdt.is_symmetric(A.socle_degree)
            assert jdt.coverage() == A.hilbert
            assert jdt.partition() == jordan_type(A, ell)


# -- initial ideals --------------------------------------------------------------


def test_initial_ideal_example():
    cell = initial_ideal(ideal("x^2*y", "y^4+x^4"), ELL_X)
    assert cell.generators == ((6, 0), (2, 1), (0, 4))
    assert cell.partition == Partition([6, 2, 2, 2])


def test_initial_ideal_monomial_fixed_point():
    cell = initial_ideal(ideal("x^2", "y^3"), ELL_X)
    assert cell.generators == ((2, 0), (0, 3))
    assert cell.partition == Partition([2, 2, 2])


def test_initial_ideal_standard_monomial_count_is_hilbert():
    I = ideal("x^2*y", "y^4+x^4")
    A = quotient(I)
    for ell in (ELL_X, ELL_Y, ELL_XY):
        cell = initial_ideal(I, ell)
        assert tuple(len(deg) for deg in cell.fill) == A.hilbert
        assert diagonal_lengths(cell.partition) == A.hilbert


def test_initial_ideal_generic_direction_is_strong_lefschetz():
    rng = random.Random(7)
    for gens in (("x^3", "y^4"), ("x^2*y", "y^4+x^4"), ("x^2", "y^3")):
        I = ideal(*gens)
        T = HilbertFunction(quotient(I).hilbert)
        r = Fraction(rng.randint(1, 9), rng.choice([1, 2, 3]))
        ell = BivariatePoly.linear(1, r)
        from jtlab.partitions import sl_partition

        assert initial_ideal(I, ell).partition == sl_partition(T)


def test_initial_ideal_agrees_with_jordan_type():
    I = ideal("x^2*y", "y^4+x^4")
    A = quotient(I)
    for a, b in [(1, 0), (0, 1), (1, 1), (2, -3), (1, 5)]:
        ell = BivariatePoly.linear(a, b)
        assert initial_ideal(I, ell).partition == jordan_type(A, ell)


# -- complete intersection test ------------------------------------------------------


def test_is_complete_intersection():
    assert is_complete_intersection(ideal("x^2*y", "y^4+x^4")) == (True, (3, 4))
    assert is_complete_intersection(ideal("x*y", "x^3", "y^4")) == (False, (2, 3, 4))
    assert is_complete_intersection(ideal("x^3", "y^4")) == (True, (3, 4))


# -- fuzzed soundness -------------------------------------------------------------


def _random_artinian_ideal(rng):
    """Two generators of random degrees with random small rational
    coefficients, retried until Artinian.  Height d of the quotient <= 5."""
    while True:
        d1 = rng.randint(2, 5)
        d2 = rng.randint(d1, 6)
        gens = []
        for deg in (d1, d2):
            terms = {
                (a, deg - a): Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3]))
                for a in range(deg + 1)
            }
            g = BivariatePoly(terms)
            if g.is_zero():
                break
            gens.append(g)
        if len(gens) < 2:
            continue
        try:
            return GradedIdeal(gens), quotient(GradedIdeal(gens))
        except NotArtinian:
            continue


def test_diagonal_lengths_of_jordan_type_equal_hilbert_function():
    rng = random.Random(20260811)
    for _ in range(25):
        I, A = _random_artinian_ideal(rng)
        for a, b in [(1, 0), (0, 1), (1, 1), (1, 2)]:
            P = jordan_type(A, BivariatePoly.linear(a, b))
            assert diagonal_lengths(P) == A.hilbert


def test_monomial_cells_realize_their_partition():
    # multiplication by x on R/(E_Q) has Jordan type exactly Q
    from tests_support import partitions_of

    checked = 0
    for n in range(1, 13):
        for parts in partitions_of(n):
            Q = Partition(parts)
            I = GradedIdeal(
                [BivariatePoly.monomial(a, b) for a, b in cell_generators(Q)]
            )
            assert jordan_type(quotient(I), ELL_X) == Q
            checked += 1
    rng = random.Random(5)
    for _ in range(20):
        parts = sorted(
            (rng.randint(1, 8) for _ in range(rng.randint(1, 6))), reverse=True
        )
        if sum(parts) > 30:
            continue
        Q = Partition(parts)
        I = GradedIdeal([BivariatePoly.monomial(a, b) for a, b in cell_generators(Q)])
        assert jordan_type(quotient(I), ELL_X) == Q
        checked += 1
    assert checked > 100


def _brute_force_jordan_type(A, ell):
    """Assemble the full matrix of multiplication by ell on A and read the
    block sizes off the ranks of its literal matrix powers."""
    basis = [(i, mono) for i in range(A.socle_degree + 1) for mono in A.basis(i)]
    index = {b: t for t, b in enumerate(basis)}
    n = len(basis)
    M = [[Fraction(0)] * n for _ in range(n)]
    for col, (i, (a, b)) in enumerate(basis):
        if i + 1 > A.socle_degree:
            continue
        image = A.normal_form_vector(ell * BivariatePoly.monomial(a, b))
        for coeff, mono in zip(image, A.basis(i + 1)):
            M[index[(i + 1, mono)]][col] = coeff

    def matmul(P, Q):
        return [
            [sum(P[r][t] * Q[t][c] for t in range(n)) for c in range(n)]
            for r in range(n)
        ]

    ranks = [n]
    power = M
    while linalg.rank(power) > 0:
        ranks.append(linalg.rank(power))
        power = matmul(power, M)
    ranks.append(0)
    parts = []
    for s in range(1, len(ranks)):
        ge_s = ranks[s - 1] - ranks[s]
        ge_next = ranks[s] - ranks[s + 1] if s + 1 < len(ranks) else 0
        parts.extend([s] * (ge_s - ge_next))
    return Partition(sorted(parts, reverse=True))


def test_jordan_type_matches_full_matrix_power_ranks():
    rng = random.Random(271828)
    fixtures = [
        ideal("x^2", "y^3"),
        ideal("x*y", "x^3+y^3"),
        ideal("x^2*y", "y^4+x^4"),
        ideal("x*y", "x^3", "y^4"),
    ]
    for _ in range(6):
        fixtures.append(_random_artinian_ideal(rng)[0])
    for I in fixtures:
        A = quotient(I)
        for a, b in [(1, 0), (0, 1), (1, 1), (1, -2)]:
            ell = BivariatePoly.linear(a, b)
            assert jordan_type(A, ell) == _brute_force_jordan_type(A, ell)


# -- exact linear algebra ------------------------------------------------------------


@given(
    st.lists(
        st.lists(
            st.fractions(
                min_value=-9, max_value=9, max_denominator=3
            ),
            min_size=4,
            max_size=4,
        ),
        min_size=1,
        max_size=6,
    )
)
@settings(max_examples=200)
def test_bareiss_rank_matches_rref(rows):
    pivots, _ = linalg.rref(rows, 4)
    assert linalg.rank(rows) == len(pivots)


def test_kernel_basis_is_a_kernel():
    rows = [
        [Fraction(2), Fraction(1), Fraction(0), Fraction(-1)],
        [Fraction(4), Fraction(2), Fraction(1), Fraction(0)],
    ]
    for vec in linalg.kernel_basis(rows, 4):
        for row in rows:
            assert sum(r * v for r, v in zip(row, vec)) == 0
