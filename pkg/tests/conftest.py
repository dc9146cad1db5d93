from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from lattice_opoly.cli import random_pair
from lattice_opoly.core_algebra import GaussianRational, Poly

small_ints = st.integers(min_value=-6, max_value=6)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=6))
nonzero_rationals = rationals.filter(bool)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(bool)
real_gaussians = st.builds(GaussianRational, rationals)


def polys(max_degree=8, coeffs=gaussians):
    return st.lists(coeffs, max_size=max_degree + 1).map(Poly)


def admissible_corpus(count: int, seed: int, depth: int = 25) -> list:
    """Random rational centered pairs with ``d_n != 0`` for ``n <= depth``."""
    rng = random.Random(seed)
    return [random_pair(rng, depth) for _ in range(count)]
