"""Divided-difference operators on linear lattices ``X(s) = c*s + d``.

The centered operators are expanded as finite Taylor sums so that the slope
can stay symbolic. Only even powers of the slope survive; the expansion
tracks powers of the half-step ``h = c/2`` and checks that claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .core_algebra import ONE, T, ZERO, GaussianRational, ParamPoly, Poly, gauss, specialize

__all__ = [
    "LinearLattice",
    "dx_apply",
    "sx_apply",
    "dx_symbolic",
    "sx_symbolic",
    "forward_diff",
    "backward_diff",
    "operator_shape_check",
]


@dataclass(frozen=True)
class LinearLattice:
    slope: GaussianRational
    intercept: GaussianRational = ZERO

    def __post_init__(self):
        object.__setattr__(self, "slope", gauss(self.slope))
        object.__setattr__(self, "intercept", gauss(self.intercept))
        if not self.slope:
            raise ValueError("degenerate lattice")

    @property
    def t(self) -> GaussianRational:
        """Squared slope."""
        return self.slope * self.slope

    def to_json(self) -> dict:
        return {"c": str(self.slope), "d": str(self.intercept)}

    @classmethod
    def from_json(cls, data: dict) -> "LinearLattice":
        return cls(gauss(str(data.get("c", "1"))), gauss(str(data.get("d", "0"))))


UNIT = LinearLattice(ONE, ZERO)


def _half_step_series(p: Poly, odd: bool) -> dict[int, Poly]:
    """Collect ``p(x+h) -/+ p(x-h)`` by powers of ``h``.

    Returns ``{k: coefficient polynomial}`` for the difference (``odd``) or
    the sum (not ``odd``), each already divided by 2.
    """
    out: dict[int, Poly] = {}
    deriv = p
    k = 0
    while deriv:
        # (+h)^k and (-h)^k cancel or double according to parity
        if (k % 2 == 1) == odd:
            out[k] = deriv / factorial(k)
        deriv = deriv.derivative()
        k += 1
    return out


def _collect_in_t(series: dict, odd: bool, var: str) -> Poly:
    """Same sum as :func:`_collect` with ``t`` symbolic, built coefficientwise."""
    grid: dict[int, dict[int, GaussianRational]] = {}
    for k, term in series.items():
        power = k - 1 if odd else k
        if power % 2:
            raise AssertionError("odd power of the slope in a centered operator")
        j = power // 2
        scale = gauss(1) / 4**j
        for m, c in enumerate(term.coeffs):
            if c:
                row = grid.setdefault(m, {})
                row[j] = row.get(j, ZERO) + c * scale
    if not grid:
        return Poly((), var)
    coeffs = []
    for m in range(max(grid) + 1):
        row = grid.get(m, {})
        coeffs.append(ParamPoly([row.get(j, ZERO) for j in range(max(row) + 1)] if row else ()))
    return Poly(coeffs, var)


def _collect(p: Poly, odd: bool, t) -> Poly:
    series = _half_step_series(p, odd)
    if t is T and all(isinstance(c, GaussianRational) for c in p.coeffs):
        return _collect_in_t(series, odd, p.var)
    acc = Poly((), p.var)
    quarter_t = t * gauss("1/4")
    for k, term in series.items():
        # after dividing the difference by c = 2h, the power of h is k - 1
        power = k - 1 if odd else k
        if power % 2:
            raise AssertionError("odd power of the slope in a centered operator")
        acc = acc + term * (quarter_t ** (power // 2)) if power else acc + term
    return acc


def dx_symbolic(p: Poly) -> Poly:
    """Centered divided difference with the squared slope kept as ``t``."""
    return _collect(p, True, T)


def sx_symbolic(p: Poly) -> Poly:
    """Centered average with the squared slope kept as ``t``."""
    return _collect(p, False, T)


def dx_apply(p: Poly, lat: LinearLattice) -> Poly:
    """``[p(x+c/2) - p(x-c/2)] / c`` computed exactly."""
    if not lat.slope:
        raise ValueError("degenerate lattice")
    return _collect(p, True, lat.t)


def sx_apply(p: Poly, lat: LinearLattice) -> Poly:
    """``[p(x+c/2) + p(x-c/2)] / 2`` computed exactly."""
    if not lat.slope:
        raise ValueError("degenerate lattice")
    return _collect(p, False, lat.t)


def forward_diff(p: Poly) -> Poly:
    return p.translate(-1) - p


def backward_diff(p: Poly) -> Poly:
    return p - p.translate(1)


def dx_by_translation(p: Poly, lat: LinearLattice) -> Poly:
    half = lat.slope / 2
    return (p.translate(-half) - p.translate(half)) / lat.slope


def sx_by_translation(p: Poly, lat: LinearLattice) -> Poly:
    half = lat.slope / 2
    return (p.translate(-half) + p.translate(half)) / 2


def operator_shape_check(p: Poly, lat: LinearLattice, shift=1) -> bool:
    """True when the Taylor forms match the translation forms and ignore the intercept and slope sign."""
    d = dx_apply(p, lat)
    s = sx_apply(p, lat)
    if d != dx_by_translation(p, lat) or s != sx_by_translation(p, lat):
        return False
    moved = LinearLattice(lat.slope, lat.intercept + gauss(shift))
    flipped = LinearLattice(-lat.slope, lat.intercept)
    for other in (moved, flipped):
        if dx_apply(p, other) != d or sx_apply(p, other) != s:
            return False
        if dx_by_translation(p, other) != d or sx_by_translation(p, other) != s:
            return False
    return specialize(dx_symbolic(p), lat.t) == d and specialize(sx_symbolic(p), lat.t) == s
