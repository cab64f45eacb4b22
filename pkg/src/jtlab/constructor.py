"""Explicit realization of a CIJT partition P: a complete intersection
ideal I = (f_t, f_(t+1)) with Hilbert function the diagonal lengths of P,
Jordan type P_x = P, and initial ideal the monomial cell of P.

The chain f_1, ..., f_(t+1) is built by the coefficient recurrence
Lambda_(i+1) = (Lambda_i, 0^(n_i)) + (0^(n_(i-1)+n_i-1), 1, Lambda_(i-1)),
starting from f_1 = x^(p_1) and a free parameter vector Lambda_2 of length
a_1; each f_i has leading term x^(p_i) y^(a_(i-1)) and the relation
f_(i-1) = x^(p_i - p_(i+1)) f_(i+1) - f_i y^(n_i) holds by construction,
which makes (f_t, f_(t+1)) generate the whole chain.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    GradedIdeal,
    cell_generators,
    initial_ideal,
    is_complete_intersection,
    jordan_type,
    quotient,
    rank_mult_power,
)
from .codes import enumerate_cijt, is_cijt
from .errors import NotArtinian, NotCIJT
from .hessians import nonvanishing_set, predicted_nonvanishing_set, predicted_rank_profile
from .partitions import HilbertFunction, Partition, diagonal_lengths, format_caret_list
from .polynomials import BivariatePoly

__all__ = [
    "Realization",
    "RealizationReport",
    "Check",
    "construct_ci",
    "verify_realization",
    "realize_all",
]

_X = BivariatePoly.monomial(1, 0)
_Y = BivariatePoly.monomial(0, 1)
_ELL_X = BivariatePoly.linear(1, 0)


@dataclass(frozen=True)
class Realization:
    """A constructed complete intersection realizing a Jordan type."""

    partition: Partition
    hilbert: HilbertFunction
    ideal: GradedIdeal
    chain: tuple = ()
    lambdas: tuple = ()  # Lambda_2, the free parameters

    def __str__(self):
        return ", ".join(g.text() for g in self.ideal.generators)


def _chain_poly(p_i, a_prev, lam):
    """x^p_i y^a_prev + sum lam_l x^(p_i+l) y^(a_prev-l)."""
    terms = {(p_i, a_prev): Fraction(1)}
    for offset, coeff in enumerate(lam, start=1):
        if coeff:
            terms[(p_i + offset, a_prev - offset)] = Fraction(coeff)
    return BivariatePoly(terms)


def construct_ci(P, lambda2=None, seed=None):
    """Build the chain and the ideal (f_t, f_(t+1)) for a CIJT partition.

    Free parameters: lambda2 explicitly, or drawn uniformly from the
    integers -5..5 with the given seed; default is the all-zero vector.
    A single-rectangle partition (t = 1) has no relation step and gives the
    monomial ideal (x^(p_1), y^(n_1)) directly.
    """
    P = Partition(P)
    T = HilbertFunction(diagonal_lengths(P))
    if not is_cijt(P):
        raise NotCIJT(f"{P} fails the equality criterion")
    pf = P.power_form
    t = len(pf)
    prefix = [0]
    for _, n_i in pf:
        prefix.append(prefix[-1] + n_i)  # prefix[i] = a_i

    if t == 1:
        f1 = BivariatePoly.monomial(pf[0][0], 0)
        f2 = BivariatePoly.monomial(0, pf[0][1])
        return Realization(
            partition=P,
            hilbert=T,
            ideal=GradedIdeal([f1, f2]),
            chain=(f1, f2),
            lambdas=(),
        )

    a1 = prefix[1]
    if lambda2 is None:
        if seed is None:
            lambda2 = (Fraction(0),) * a1
        else:
            rng = random.Random(seed)
            lambda2 = tuple(Fraction(rng.randint(-5, 5)) for _ in range(a1))
    lambda2 = tuple(Fraction(v) for v in lambda2)
    if len(lambda2) != a1:
        raise ValueError(f"Lambda_2 must have length a_1 = {a1}")

    lam = {1: (), 2: lambda2}
    for i in range(2, t + 1):
        n_i = pf[i - 1][1]
        n_prev = pf[i - 2][1]
        first = lam[i] + (Fraction(0),) * n_i
        second = (
            (Fraction(0),) * (n_prev + n_i - 1) + (Fraction(1),) + lam[i - 1]
        )
        assert len(first) == len(second) == prefix[i]
        lam[i + 1] = tuple(u + v for u, v in zip(first, second))

    p = [None] + [pi for pi, _ in pf] + [0]  # p[1..t+1], 1-based
    chain = [None]
    for i in range(1, t + 2):
        chain.append(_chain_poly(p[i], prefix[i - 1], lam[i]))
    for i in range(2, t + 1):
        # degree bookkeeping and the two-term relation of the chain
        assert p[i - 1] + prefix[i - 2] == p[i] + prefix[i]
        relation = _X ** (p[i] - p[i + 1]) * chain[i + 1] - chain[i] * _Y ** pf[i - 1][1]
        assert relation == chain[i - 1], "chain recurrence violated"

    return Realization(
        partition=P,
        hilbert=T,
        ideal=GradedIdeal([chain[t], chain[t + 1]]),
        chain=tuple(chain[1:]),
        lambdas=lambda2,
    )


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: str
    observed: str


@dataclass(frozen=True)
class RealizationReport:
    checks: tuple

    @property
    def all_passed(self):
        return all(c.passed for c in self.checks)

    def first_failure(self):
        return next((c for c in self.checks if not c.passed), None)

    def as_dict(self):
        return {
            c.name: {"passed": c.passed, "expected": c.expected, "observed": c.observed}
            for c in self.checks
        }

    def __str__(self):
        lines = []
        for c in self.checks:
            mark = "ok" if c.passed else "FAIL"
            lines.append(f"[{mark:4}] {c.name}: expected {c.expected}, observed {c.observed}")
        return "\n".join(lines)


def verify_realization(realization):
    """Run the six exact checks tying the ideal to its Jordan type.

    (a) complete intersection with generator degrees (d, d+k-1);
    (b) Hilbert function equals the diagonal lengths of P;
    (c) Jordan type of multiplication by x equals P;
    (d) initial ideal in the x direction has the monomial cell generators;
    (e) Hessian nonvanishing set equals the partial-sum prediction;
    (f) multiplication ranks match the predicted rank profile.
    Failures are recorded in the report, never raised.
    """
    P = realization.partition
    T = realization.hilbert
    ideal = realization.ideal
    d, k = T.d, T.k
    checks = []

    try:
        A = quotient(ideal)
    except NotArtinian as exc:
        reason = f"not Artinian ({exc})"
        names = (
            "complete_intersection",
            "hilbert_function",
            "jordan_type",
            "initial_ideal",
            "hessian_vanishing",
            "hessian_ranks",
        )
        expected = (f"degrees ({d}, {d + k - 1})", str(T), str(P), "", "", "")
        return RealizationReport(
            tuple(
                Check(name, False, exp, reason) for name, exp in zip(names, expected)
            )
        )

    is_ci, degs = is_complete_intersection(ideal)
    want_degs = (d, d + k - 1)
    checks.append(
        Check(
            "complete_intersection",
            is_ci and degs == want_degs,
            f"2 generators of degrees {want_degs}",
            f"{len(degs)} generators of degrees {degs}",
        )
    )

    checks.append(
        Check(
            "hilbert_function",
            A.hilbert == T.values,
            str(T),
            format_caret_list(A.hilbert),
        )
    )

    observed_jt = jordan_type(A, _ELL_X)
    checks.append(Check("jordan_type", observed_jt == P, str(P), str(observed_jt)))

    expected_gens = cell_generators(P)
    cell = initial_ideal(ideal, _ELL_X)
    checks.append(
        Check(
            "initial_ideal",
            cell.generators == expected_gens,
            _fmt_monomials(expected_gens),
            _fmt_monomials(cell.generators),
        )
    )

    if A.hilbert == T.values:
        predicted = predicted_nonvanishing_set(P)
        observed = nonvanishing_set(A, _ELL_X)
        checks.append(
            Check(
                "hessian_vanishing",
                observed == predicted,
                f"nonvanishing {sorted(predicted)}",
                f"nonvanishing {sorted(observed)}",
            )
        )
        profile = predicted_rank_profile(P)
        observed_ranks = {
            (u, s): rank_mult_power(A, _ELL_X, u, s) for (u, s) in profile
        }
        mismatches = {
            (u, s): (rk, observed_ranks[(u, s)])
            for (u, s), rk in sorted(profile.items())
            if observed_ranks[(u, s)] != rk
        }
        checks.append(
            Check(
                "hessian_ranks",
                not mismatches,
                f"{len(profile)} predicted ranks",
                "all match" if not mismatches else f"mismatches at {mismatches}",
            )
        )
    else:
        for name in ("hessian_vanishing", "hessian_ranks"):
            checks.append(
                Check(name, False, "CI Hilbert function", "skipped: wrong Hilbert function")
            )

    return RealizationReport(tuple(checks))


def _fmt_monomials(gens):
    return ", ".join(BivariatePoly.monomial(a, b).text() for a, b in gens)


def realize_all(T, seed=0):
    """One seeded realization and report per CIJT partition of T."""
    T = HilbertFunction(T)
    rng = random.Random(seed)
    out = []
    for P in enumerate_cijt(T):
        a1 = P.power_form[0][1]
        lambda2 = tuple(Fraction(rng.randint(-5, 5)) for _ in range(a1))
        realization = construct_ci(P, lambda2=lambda2)
        out.append((P, realization, verify_realization(realization)))
    return out
