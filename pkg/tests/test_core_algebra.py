from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gaussians, nonzero_gaussians, polys
from lattice_opoly.core_algebra import (
    I,
    T,
    GaussianRational,
    ParamPoly,
    Poly,
    binomial,
    format_gauss,
    gauss,
    parse_gauss,
    poly_eval,
    poly_from_json,
    poly_mul,
    poly_scale_arg,
    poly_to_json,
    poly_translate,
)


def test_eval_examples():
    assert poly_eval(Poly([-1, 0, 1]), 1) == 0
    assert poly_eval(Poly(["3/16", 0, 1]), "-1/4") == gauss("1/4")
    assert poly_eval(Poly([]), gauss("7/3")) == 0


def test_translate_examples():
    assert poly_translate(Poly([0, 1]), 1) == Poly([-1, 1])
    # beta = -c/2 with c = 2
    assert poly_translate(Poly([0, 0, 1]), -1) == Poly([1, 2, 1])


def test_scale_examples():
    assert poly_scale_arg(Poly([0, 0, 1]), 2) == Poly([0, 0, 4])
    gamma = gauss(5)
    assert poly_scale_arg(Poly([-gamma, 0, 1]), I) == Poly([-gamma, 0, -1])


def test_mul_examples():
    x = Poly([0, 1])
    assert poly_mul(x, x) == Poly([0, 0, 1])
    assert poly_mul(Poly([-1, 1]), Poly([1, 1])) == Poly([-1, 0, 1])
    lhs = poly_translate(x * Poly([1, 1]), 1)
    assert lhs == poly_translate(x, 1) * poly_translate(Poly([1, 1]), 1) == Poly([-1, 1]) * x


def test_zero_polynomial_degree():
    assert Poly([0, 0]).degree is None
    assert Poly([]).coeffs == ()
    assert Poly([1, 0, 0]).degree == 0


@pytest.mark.parametrize(
    "text,re,im",
    [
        ("3/4", Fraction(3, 4), 0),
        ("-2", -2, 0),
        ("1/2-3/4i", Fraction(1, 2), Fraction(-3, 4)),
        ("1/2+i", Fraction(1, 2), 1),
        ("i", 0, 1),
        ("-i", 0, -1),
        ("5/3i", 0, Fraction(5, 3)),
        ("4/2", 2, 0),
    ],
)
def test_parse(text, re, im):
    assert parse_gauss(text) == GaussianRational(re, im)


@pytest.mark.parametrize("bad", ["", "1/0", "x", "1.5", "1//2", "i2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_gauss(bad)


@given(gaussians)
def test_text_round_trip(z):
    assert parse_gauss(format_gauss(z)) == z


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        gauss(1) / gauss(0)


@given(gaussians, nonzero_gaussians)
def test_field_inverse(a, b):
    assert (a / b) * b == a


def test_exact_sqrt():
    assert gauss(-4).sqrt_exact() == gauss("2i")
    assert gauss("9/16").sqrt_exact() == gauss("3/4")
    assert gauss("2i").sqrt_exact() == gauss("1+i")
    assert gauss(2).sqrt_exact() is None


def test_binomial_convention():
    assert binomial(3, 5) == 0
    assert binomial(5, 2) == 10
    assert binomial(4, -1) == 0


def test_big_integers_stay_exact():
    p = Poly([1, 1]) ** 60
    assert p.coeff(30) == binomial(60, 30)


@settings(max_examples=60)
@given(polys(), gaussians)
def test_translate_inverse(p, beta):
    assert poly_translate(poly_translate(p, beta), -beta) == p


@settings(max_examples=60)
@given(polys(), nonzero_gaussians)
def test_scale_inverse(p, alpha):
    assert poly_scale_arg(poly_scale_arg(p, alpha), alpha.inverse()) == p


@settings(max_examples=60)
@given(polys(5), polys(5), gaussians, nonzero_gaussians)
def test_multiplicativity(p, q, beta, alpha):
    assert poly_translate(p * q, beta) == poly_translate(p, beta) * poly_translate(q, beta)
    assert poly_scale_arg(p * q, alpha) == poly_scale_arg(p, alpha) * poly_scale_arg(q, alpha)


@settings(max_examples=60)
@given(polys(), polys(), gaussians, nonzero_gaussians)
def test_degree_contracts(p, q, beta, alpha):
    assert poly_translate(p, beta).degree == p.degree
    assert poly_scale_arg(p, alpha).degree == p.degree
    if p and q:
        assert (p * q).degree == p.degree + q.degree


def test_param_poly_nesting():
    q = Poly([T, 1])
    sq = q * q
    assert sq.coeff(0) == ParamPoly([0, 0, 1])
    assert sq(gauss(2)) == ParamPoly([4, 4, 1])
    assert (T * gauss(3)).coeff(1) == 3


@given(polys())
def test_json_round_trip(p):
    data = json.loads(json.dumps(poly_to_json(p)))
    assert poly_from_json(data) == p
