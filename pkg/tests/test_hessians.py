import itertools
import random

import pytest

from jtlab.algebra import GradedIdeal, annihilator, quotient, rank_mult_power
from jtlab.codes import enumerate_cijt, iota
from jtlab.constructor import construct_ci
from jtlab.errors import InvalidSubset, NotCIJT, OrderOutOfRange, TopRequiresKGe2
from jtlab.hessians import (
    active_hessian_indices,
    cijt_from_hessian_subset,
    evaluate_matrix,
    generic_jordan_type,
    hessian_determinant,
    hessian_matrix,
    hessian_rank_at,
    nonvanishing_set,
    predicted_nonvanishing_set,
    predicted_rank_profile,
)
from jtlab.partitions import HilbertFunction, Partition, dominance_leq, sl_partition
from jtlab.polynomials import BivariatePoly, parse_poly

from tests_support import random_dual_generator

T33 = HilbertFunction("1,2,3,3,2,1")
ELL_X = BivariatePoly.linear(1, 0)
ELL_Y = BivariatePoly.linear(0, 1)


def all_dk(dmax, kmax, dmin=2):
    return itertools.product(range(dmin, dmax + 1), range(1, kmax + 1))


# -- symbolic matrices ---------------------------------------------------------


def test_hessian_matrices_of_x2y3():
    F = parse_poly("X^2*Y^3")
    m1 = hessian_matrix(F, 1)
    assert m1 == [
        [parse_poly("2Y^3"), parse_poly("6XY^2")],
        [parse_poly("6XY^2"), parse_poly("6X^2Y")],
    ]
    m2 = hessian_matrix(F, 2)
    zero = BivariatePoly.zero()
    assert m2 == [
        [zero, zero, parse_poly("12Y")],
        [zero, parse_poly("12Y"), parse_poly("12X")],
        [parse_poly("12Y"), parse_poly("12X"), zero],
    ]
    assert hessian_matrix(F, 0) == [[F]]


def test_hessian_determinants_of_x2y3():
    F = parse_poly("X^2*Y^3")
    assert hessian_determinant(F, 0) == F
    assert hessian_determinant(F, 1) == parse_poly("-24*X^2*Y^4")
    assert hessian_determinant(F, 2) == parse_poly("-1728*Y^3")
    # common root (1, 0): the direction x is maximally degenerate
    for i in range(3):
        assert hessian_determinant(F, i).evaluate(1, 0) == 0


def test_hessian_order_out_of_range():
    F = parse_poly("X^2*Y^3")
    with pytest.raises(OrderOutOfRange):
        hessian_matrix(F, 3)


# -- active orders and ground truth ---------------------------------------------


def test_active_hessian_indices():
    assert active_hessian_indices(T33) == (0, 1, 2)
    assert active_hessian_indices(HilbertFunction("1,2,3,2,1")) == (0, 1)
    assert active_hessian_indices(HilbertFunction("1,2,1")) == (0,)


def test_nonvanishing_ground_truth():
    A = quotient(GradedIdeal([parse_poly("x^2"), parse_poly("y^3")]))
    assert nonvanishing_set(A, ELL_Y) == {1}
    assert nonvanishing_set(A, ELL_X) == frozenset()
    B = quotient(GradedIdeal([parse_poly("x*y"), parse_poly("x^3+y^3")]))
    assert nonvanishing_set(B, ELL_X) == {0}


def test_predicted_nonvanishing_examples():
    assert predicted_nonvanishing_set(Partition("19^2,15^2,10^3,3^4")) == {1, 3, 6}
    assert predicted_nonvanishing_set(Partition("17^2,10^5,4,1^2")) == {1, 6, 7}
    assert predicted_nonvanishing_set(Partition("3^4")) == frozenset()


def test_predicted_nonvanishing_rejects_non_cijt():
    with pytest.raises(NotCIJT):
        predicted_nonvanishing_set(Partition([2, 2, 1, 1]))


# -- the bijection ---------------------------------------------------------------


def test_cijt_from_hessian_subset_examples():
    assert cijt_from_hessian_subset(T33, {0, 1, 2}) == Partition([6, 4, 2])
    assert cijt_from_hessian_subset(T33, {0, 2}) == Partition([6, 3, 3])
    assert cijt_from_hessian_subset(T33, set()) == Partition([3, 3, 3, 3])
    with pytest.raises(InvalidSubset):
        cijt_from_hessian_subset(T33, {3})


def test_subset_bijection_round_trip():
    for d, k in all_dk(6, 3):
        T = HilbertFunction.from_dk(d, k)
        active = active_hessian_indices(T)
        for P in enumerate_cijt(T):
            assert cijt_from_hessian_subset(T, predicted_nonvanishing_set(P)) == P
        for r in range(len(active) + 1):
            for S in itertools.combinations(active, r):
                P = cijt_from_hessian_subset(T, frozenset(S))
                assert predicted_nonvanishing_set(P) == frozenset(S)


def test_dominance_equals_subset_inclusion():
    for d, k in all_dk(6, 3):
        T = HilbertFunction.from_dk(d, k)
        cijt = enumerate_cijt(T)
        sets = {P: predicted_nonvanishing_set(P) for P in cijt}
        for Q in cijt:
            for P in cijt:
                assert dominance_leq(Q, P) == (sets[Q] <= sets[P])


def test_weak_lefschetz_characterization():
    # P has d parts iff d-1 is nonvanishing, except k = 1 where all CIJT do
    for d, k in all_dk(6, 3):
        T = HilbertFunction.from_dk(d, k)
        for P in enumerate_cijt(T):
            if k == 1:
                assert len(P) == d
            else:
                assert (len(P) == d) == (d - 1 in predicted_nonvanishing_set(P))


def test_iota_removes_top_hessian():
    for d, k in all_dk(6, 3):
        if k == 1:
            continue
        T = HilbertFunction.from_dk(d, k)
        for P in enumerate_cijt(T):
            if len(P) != d:
                continue
            assert predicted_nonvanishing_set(iota(P)) == (
                predicted_nonvanishing_set(P) - {d - 1}
            )


# -- rank profiles ----------------------------------------------------------------


FIG9_PURE_RANKS = {
    "6,4,2": (1, 2, 3),
    "5^2,2": (0, 2, 3),
    "6,3^2": (1, 1, 3),
    "6,4,1^2": (1, 2, 2),
    "4^3": (0, 1, 3),
    "5^2,1^2": (0, 2, 2),
    "6,2^3": (1, 1, 2),
    "3^4": (0, 0, 2),
}


def test_predicted_pure_ranks_match_reference_table():
    for parts, ranks in FIG9_PURE_RANKS.items():
        profile = predicted_rank_profile(Partition(parts))
        assert tuple(profile[(i, T33.j - i)] for i in range(3)) == ranks


def test_predicted_profile_matches_constructed_algebras():
    rng = random.Random(11)
    for d, k in all_dk(4, 3):
        T = HilbertFunction.from_dk(d, k)
        for P in enumerate_cijt(T):
            lam = tuple(rng.randint(-5, 5) for _ in range(P.power_form[0][1]))
            A = quotient(construct_ci(P, lambda2=lam).ideal)
            assert nonvanishing_set(A, ELL_X) == predicted_nonvanishing_set(P)
            for (u, s), rank in predicted_rank_profile(P).items():
                assert rank_mult_power(A, ELL_X, u, s) == rank, (P, u, s)


def test_symbolic_hessian_rank_equals_multiplication_rank():
    rng = random.Random(31337)
    for _ in range(40):
        F = random_dual_generator(rng, jmin=3, jmax=8)
        A = quotient(annihilator(F))
        T = HilbertFunction(A.hilbert)
        for a, b in [(1, 0), (0, 1), (1, 1), (1, 2), (2, -1)]:
            ell = BivariatePoly.linear(a, b)
            for i in active_hessian_indices(T):
                assert hessian_rank_at(F, i, (a, b), algebra=A) == rank_mult_power(
                    A, ell, i, T.j - i
                )


def test_evaluate_matrix():
    F = parse_poly("X^2*Y^3")
    m = evaluate_matrix(hessian_matrix(F, 1), 1, 1)
    assert m == [[2, 6], [6, 6]]


# -- generic Jordan types ------------------------------------------------------------


def test_generic_jordan_types_d3_k1():
    T = HilbertFunction("1,2,3,2,1")
    assert generic_jordan_type(T, "sl") == Partition([5, 3, 1])
    assert generic_jordan_type(T, 1) == Partition([5, 2, 2])
    assert generic_jordan_type(T, 0) == Partition([4, 4, 1])
    with pytest.raises(TopRequiresKGe2):
        generic_jordan_type(T, "top")


def test_generic_jordan_types_d3_k2():
    assert generic_jordan_type(T33, "sl") == Partition([6, 4, 2])
    assert generic_jordan_type(T33, 1) == Partition([6, 3, 3])
    assert generic_jordan_type(T33, 0) == Partition([5, 5, 2])
    assert generic_jordan_type(T33, "top") == Partition([6, 4, 1, 1])


def test_generic_type_is_cijt_with_singleton_vanishing():
    for d, k in all_dk(6, 3):
        T = HilbertFunction.from_dk(d, k)
        active = frozenset(active_hessian_indices(T))
        for i in range(d - 1):
            P = generic_jordan_type(T, i)
            assert len(P) == d
            assert predicted_nonvanishing_set(P) == active - {i}
        if k >= 2:
            P = generic_jordan_type(T, "top")
            assert len(P) == d + k - 1
            assert predicted_nonvanishing_set(P) == active - {d - 1}
        assert generic_jordan_type(T, "sl") == sl_partition(T)
