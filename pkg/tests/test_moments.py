from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import admissible_corpus, gaussians, nonzero_gaussians, polys
from helpers import stieltjes
from lattice_opoly.classification import CanonicalClass, canonical_pair
from lattice_opoly.core_algebra import ONE, ParamPoly, Poly, gauss
from lattice_opoly.families import gms_forward
from lattice_opoly.moments import (
    InsufficientMoments,
    MomentSequence,
    continuous_pearson_residual,
    dual_actions,
    gram_check,
    hankel_b,
    hankel_det,
    limit_moments,
    moments_from_pearson,
    ops_from_recurrence,
    pair_with,
    pairing_moments,
    pearson_residual,
)
from lattice_opoly.pearson import PearsonPair, to_centered
from lattice_opoly.recurrence import recurrence_coeffs


def _prefix_equal(u, v):
    n = min(len(u), len(v))
    return list(u.mu[:n]) == list(v.mu[:n])


def test_hermite_against_oracle():
    pair = canonical_pair(CanonicalClass("hermite1", gauss(-2)))
    assert moments_from_pearson(pair, 16) == pairing_moments(pair, 16)


def test_laguerre_against_oracle():
    pair = canonical_pair(CanonicalClass("laguerre1", gauss(-1), gauss(3)))
    ms = moments_from_pearson(pair, 12)
    assert ms == pairing_moments(pair, 12)
    assert ms[1] == ParamPoly([gauss(3)])


def test_corpus_against_oracle():
    for pair in admissible_corpus(40, 11, 20):
        assert moments_from_pearson(pair, 14) == pairing_moments(pair, 14)


def test_unit_step_forms_agree_with_centered():
    for name, N in (("charlier", None), ("meixner", None), ("krawtchouk", None), ("hahn", 5)):
        fwd = gms_forward(name, gauss("-1/3"), N)
        direct = pairing_moments(fwd, 8)
        centered = moments_from_pearson(to_centered(fwd), 8).at(1)
        assert _prefix_equal(direct, centered)


def test_stops_at_vanishing_d():
    assert moments_from_pearson(PearsonPair.centered([1], [1]), 3).failure_index == 0
    pair = PearsonPair.centered([0, 0, 1], [1, -2])
    ms = moments_from_pearson(pair, 6)
    assert ms.failure_index == 2 and len(ms) == 3


def test_degree_bound():
    for pair in admissible_corpus(5, 2, 44):
        degs = moments_from_pearson(pair, 40).t_degrees()
        assert all((d or 0) <= n // 2 for n, d in enumerate(degs))


def test_residual_vanishes_and_detects_perturbation():
    pair = canonical_pair(CanonicalClass("jacobi1", gauss("-15/2"), gauss(2), gauss("1/3")))
    ms = moments_from_pearson(pair, 12)
    for k in range(11):
        assert pearson_residual(pair, ms, Poly.monomial(k)).is_zero()
    bumped = MomentSequence(ms.mu[:5] + (ms.mu[5] + ONE,) + ms.mu[6:])
    assert any(not pearson_residual(pair, bumped, Poly.monomial(k)).is_zero() for k in range(11))


def test_limit_hermite():
    ms0 = limit_moments(moments_from_pearson(canonical_pair(CanonicalClass("hermite1", -2)), 8))
    mu = ms0.values()
    assert mu[2] == gauss("1/2") and mu[4] == gauss("3/4") and mu[6] == gauss("15/8")
    assert all(not m for m in mu[1::2])


def test_limit_satisfies_continuous_equation():
    for pair in admissible_corpus(20, 4, 16):
        ms0 = limit_moments(moments_from_pearson(pair, 14))
        n_ok = len(ms0) - 2
        for k in range(n_ok):
            assert not continuous_pearson_residual(pair.phi, pair.psi, ms0, Poly.monomial(k))


def test_weak_limit_laguerre_gamma():
    # Laguerre1{-1, b} at t = 0 is the Gamma(b) moment sequence
    b = 3
    ms0 = limit_moments(moments_from_pearson(canonical_pair(CanonicalClass("laguerre1", -1, b)), 8))
    for n, m in enumerate(ms0.values()):
        assert m == math.factorial(b + n - 1) // math.factorial(b - 1)


def test_dual_pearson_equation():
    for pair in admissible_corpus(15, 8, 14):
        ms = moments_from_pearson(pair, 12)
        left = dual_actions(dual_actions(ms, "multiply", pair.phi), "dx_transpose")
        right = dual_actions(dual_actions(ms, "multiply", pair.psi), "sx_transpose")
        n = min(len(left), len(right))
        assert all((left[k] - right[k]).is_zero() for k in range(n - 1))


@settings(max_examples=40, deadline=None)
@given(gaussians, gaussians)
def test_translate_composes(a, b):
    ms = moments_from_pearson(canonical_pair(CanonicalClass("hermite1", 3)), 6)
    once = dual_actions(ms, "translate", a + b)
    twice = dual_actions(dual_actions(ms, "translate", a), "translate", b)
    assert once == twice


@settings(max_examples=40, deadline=None)
@given(nonzero_gaussians, nonzero_gaussians)
def test_scale_composes(a, b):
    ms = moments_from_pearson(canonical_pair(CanonicalClass("laguerre1", 2, 1)), 6)
    assert dual_actions(ms, "scale", a * b) == dual_actions(dual_actions(ms, "scale", a), "scale", b)


@settings(max_examples=30, deadline=None)
@given(polys(2), polys(2))
def test_multiply_is_linear(p, q):
    ms = moments_from_pearson(canonical_pair(CanonicalClass("hermite1", 1)), 8)
    lhs = dual_actions(ms, "multiply", p * q)
    rhs = dual_actions(dual_actions(ms, "multiply", p), "multiply", q)
    n = min(len(lhs), len(rhs))
    assert lhs.mu[:n] == rhs.mu[:n]


def test_unknown_action():
    ms = moments_from_pearson(canonical_pair(CanonicalClass("hermite1", 1)), 4)
    with pytest.raises(ValueError):
        dual_actions(ms, "rotate", 1)


def test_hankel_basics():
    ms = moments_from_pearson(canonical_pair(CanonicalClass("hermite1", -2)), 10).at(1)
    assert hankel_det(ms, 0) == 1
    with pytest.raises(InsufficientMoments):
        hankel_det(ms, 6)
    with pytest.raises(InsufficientMoments):
        pair_with(ms, Poly.monomial(11))


def test_hankel_matches_stieltjes():
    for pair in admissible_corpus(10, 21, 16):
        mu = moments_from_pearson(pair, 12).at(pair.lattice.t).values()
        _, b = hankel_b(mu, 5)
        _, b2 = stieltjes(mu, 6)
        assert b == b2[: len(b)]


def test_gram_diagonal():
    pair = canonical_pair(CanonicalClass("jacobi1", gauss("-19/2"), gauss(1), gauss("1/4")))
    rc = recurrence_coeffs(pair, 7, ONE)
    polys_ = ops_from_recurrence(rc, 5)
    ms = moments_from_pearson(pair, 12).at(1)
    g = gram_check(ms, polys_)
    norm = ONE
    for n in range(6):
        for m in range(6):
            if m != n:
                assert not g[n][m]
        assert g[n][n] == norm
        if n < 5:
            norm = norm * rc.b(n + 1)


def test_ops_needs_coefficients():
    rc = recurrence_coeffs(canonical_pair(CanonicalClass("jacobi1", -9, 1, gauss("1/4"))), 7, ONE)
    with pytest.raises(ValueError, match="not enough"):
        ops_from_recurrence(rc, 6)
