from __future__ import annotations

from fractions import Fraction

import pytest
import sympy

from conftest import admissible_corpus
from helpers import stieltjes, sympy_hankel, to_sympy
from lattice_opoly.classification import CanonicalClass, canonical_pair
from lattice_opoly.core_algebra import ONE, ParamPoly, T, gauss
from lattice_opoly.families import para_krawtchouk
from lattice_opoly.moments import dual_actions, hankel_b, moments_from_pearson
from lattice_opoly.pearson import PearsonPair
from lattice_opoly.recurrence import (
    DN_ZERO,
    FINITE,
    INFINITE,
    NOT_PD,
    PHI_SHIFT_ZERO,
    laguerre_positive_region,
    laguerre_table_note,
    positivity_classify,
    recurrence_coeffs,
    regularity_scan,
    transform_recurrence,
)


def test_para_krawtchouk_terminates():
    rep = regularity_scan(para_krawtchouk(3, 1), 8)
    assert not rep.regular and rep.index == 4
    rc = recurrence_coeffs(para_krawtchouk(3, 1), 8)
    assert rc.b_seq == (gauss("3/4"), gauss(1), gauss("3/4"), gauss(0))


def test_hermite_regular():
    rep = regularity_scan(canonical_pair(CanonicalClass("hermite1", 1)), 40)
    assert rep.regular and rep.checked == 40


def test_d_zero_at_start():
    rep = regularity_scan(PearsonPair.centered([1], [1]), 5)
    assert (rep.index, rep.reason) == (0, DN_ZERO)


def test_hermite_symbolic():
    alpha = gauss(3)
    rc = recurrence_coeffs(canonical_pair(CanonicalClass("hermite1", alpha)), 4, None)
    assert all(a == 0 for a in rc.a_seq)
    assert rc.b(1) == -alpha.inverse()
    assert rc.b(2) == (T * gauss("1/4") + alpha.inverse()) * -2


def test_laguerre_b1():
    alpha, beta = gauss(3), gauss(5)
    rc = recurrence_coeffs(canonical_pair(CanonicalClass("laguerre1", alpha, beta)), 3, ONE)
    assert rc.b(1) == beta / (alpha * alpha)
    mu = [gauss(1), -beta / alpha, beta * (1 + beta) / (alpha * alpha)]
    assert rc.b(1) == mu[2] - mu[1] * mu[1]


def test_jacobi_a_closed_form():
    alpha, beta, gamma = gauss("7/2"), gauss(-3), gauss(2)
    rc = recurrence_coeffs(canonical_pair(CanonicalClass("jacobi1", alpha, beta, gamma)), 10, ONE)
    for n, a in enumerate(rc.a_seq):
        if n == 0:
            assert a == -beta / alpha
            continue
        assert a == beta * (gauss(n) / (2 * n + alpha - 2) - gauss(n + 1) / (2 * n + alpha))


def test_b1_independent_of_slope():
    for pair in admissible_corpus(30, 3, 6):
        b1 = recurrence_coeffs(pair, 1, None).b(1)
        assert not isinstance(b1, ParamPoly) or (b1.degree or 0) == 0


def test_hermite_against_sympy_hankel():
    # closed form b_n = -n (1/alpha + (n-1) t / 4) on a symbolic slope
    alpha = gauss("-5/3")
    pair = canonical_pair(CanonicalClass("hermite1", alpha))
    ms = moments_from_pearson(pair, 14)
    t = sympy.Symbol("t")
    mu = [sum(to_sympy(c) * t**k for k, c in enumerate(m.coeffs)) for m in ms.mu]
    dets = [sympy.expand(sympy.Matrix(k + 1, k + 1, lambda i, j: mu[int(i + j)]).det(method="berkowitz")) for k in range(5)]
    rc = recurrence_coeffs(pair, 4, None)
    for n in range(1, 5):
        prev = dets[n - 2] if n >= 2 else 1
        ratio = sympy.cancel(dets[n] * prev / dets[n - 1] ** 2)
        mine = sum(to_sympy(c) * t**k for k, c in enumerate(ParamPoly([rc.b(n)]).coeffs if not isinstance(rc.b(n), ParamPoly) else rc.b(n).coeffs))
        assert sympy.simplify(ratio - mine) == 0
        closed = -n * (1 / to_sympy(alpha) + (n - 1) * t / 4)
        assert sympy.simplify(ratio - closed) == 0


def test_oracle_on_corpus_with_sympy():
    for pair in admissible_corpus(8, 5, 14):
        ms = moments_from_pearson(pair, 12).at(pair.lattice.t).values()
        rc = recurrence_coeffs(pair, 5)
        dets = [sympy_hankel(ms, k) for k in range(6)]
        for n in range(1, len(rc.b_seq) + 1):
            prev = dets[n - 2] if n >= 2 else 1
            assert sympy.simplify(dets[n] * prev / dets[n - 1] ** 2 - to_sympy(rc.b(n))) == 0


def test_transform_examples():
    rc = recurrence_coeffs(canonical_pair(CanonicalClass("hermite1", 1)), 4, ONE)
    assert transform_recurrence(rc, 1, 0) == rc
    tr = transform_recurrence(rc, 2, 1)
    assert all(c == 1 for c in tr.a_seq)
    assert tr.b(1) == gauss("-1/4")
    assert tr.b(2) == gauss(-2) * (1 + gauss("1/4")) / 4
    with pytest.raises(ValueError):
        transform_recurrence(rc, 0, 1)


def test_transform_against_moments():
    for pair in admissible_corpus(10, 9, 16):
        ms = moments_from_pearson(pair, 14).at(pair.lattice.t)
        rc = recurrence_coeffs(pair, 6)
        if not rc.report.regular:
            continue
        alpha, beta = gauss("3/2"), gauss(-2)
        moved = dual_actions(dual_actions(ms, "scale", alpha.inverse()), "translate", beta)
        a, b = stieltjes(moved.values(), 6)
        tr = transform_recurrence(rc, alpha, beta)
        assert list(tr.a_seq[:6]) == a[:6]
        assert list(tr.b_seq[:5]) == b[:5]


def test_transform_keeps_vanishing():
    rc = recurrence_coeffs(para_krawtchouk(5, 1), 8)
    assert not transform_recurrence(rc, 3, 2).b(6)


def test_positivity_hermite_finite():
    v = positivity_classify(CanonicalClass("hermite1", gauss("-1/2")), 4)
    assert v.kind == FINITE and v.N == 8 and v.first_nonpositive == 9
    rc = recurrence_coeffs(canonical_pair(CanonicalClass("hermite1", gauss("-1/2"))), 12, ONE, truncate=False)
    for n in range(1, 13):
        assert (rc.b(n).re > 0) == (n * (gauss(-2) + gauss(n - 1) / 4).re < 0)


def test_positivity_never_infinite_for_quadratic_families():
    for cls in (
        CanonicalClass("hermite1", 3),
        CanonicalClass("bessel1", 4, 1),
        CanonicalClass("jacobi1", -9, 1, gauss("1/4")),
        CanonicalClass("jacobi1", 6, 2, -1),
    ):
        assert positivity_classify(cls, 10).kind != INFINITE


def test_positivity_laguerre():
    assert positivity_classify(CanonicalClass("laguerre1", 1, 2), 200).kind == INFINITE
    assert positivity_classify(CanonicalClass("laguerre1", 1, -2), 200).kind == NOT_PD
    v = positivity_classify(CanonicalClass("laguerre1", 3, 2), 200)
    assert v.kind == FINITE and v.first_nonpositive == 3
    assert laguerre_positive_region(2, 1) == (True, None)


def test_positivity_rejects_complex():
    with pytest.raises(ValueError, match="real parameters"):
        positivity_classify(CanonicalClass("hermite1", gauss("i")), 5)


def test_laguerre_table_note_disagrees():
    note = laguerre_table_note(3, 2, 5)
    assert note["agree"] is False
    assert "beta" in note["note"]
    assert laguerre_table_note(3, 0, 5)["agree"] is True
