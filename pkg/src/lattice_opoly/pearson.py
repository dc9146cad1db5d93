"""Pearson pairs in centered, forward and backward form."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .core_algebra import ONE, ZERO, GaussianRational, Poly, gauss, poly_from_json, poly_to_json
from .lattice import LinearLattice

__all__ = [
    "Form",
    "PearsonPair",
    "KlsParameters",
    "to_centered",
    "from_centered",
    "affine_push",
    "kls_import",
    "pair_from_json",
]


class Form(enum.Enum):
    CENTERED = "centered"
    FORWARD = "forward"
    BACKWARD = "backward"


def _as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    return Poly(p)


@dataclass(frozen=True)
class PearsonPair:
    """Polynomials ``(phi, psi)`` with ``deg phi <= 2`` and ``deg psi <= 1``.

    Centered form: ``D(phi u) = S(psi u)`` on the lattice. Forward form:
    ``Delta(phi u) = psi u``. Backward form: ``Nabla(phi u) = psi u``.
    """

    phi: Poly
    psi: Poly
    form: Form = Form.CENTERED
    lattice: LinearLattice = LinearLattice(ONE, ZERO)

    def __post_init__(self):
        phi, psi = _as_poly(self.phi), _as_poly(self.psi)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "psi", psi)
        if isinstance(self.form, str):
            object.__setattr__(self, "form", Form(self.form))
        if phi.is_zero() and psi.is_zero():
            raise ValueError("phi and psi both zero")
        if (phi.degree or 0) > 2:
            raise ValueError("deg phi must be at most 2")
        if (psi.degree or 0) > 1:
            raise ValueError("deg psi must be at most 1")

    @classmethod
    def centered(cls, phi, psi, slope=1, intercept=0) -> "PearsonPair":
        return cls(_as_poly(phi), _as_poly(psi), Form.CENTERED, LinearLattice(gauss(slope), gauss(intercept)))

    @property
    def coefficients(self) -> tuple:
        """``(a, b, c, d, e)`` with ``phi = a x^2 + b x + c`` and ``psi = d x + e``."""
        return (self.phi.coeff(2), self.phi.coeff(1), self.phi.coeff(0), self.psi.coeff(1), self.psi.coeff(0))

    @property
    def slope(self) -> GaussianRational:
        return self.lattice.slope

    def scaled(self, k) -> "PearsonPair":
        k = gauss(k)
        return PearsonPair(self.phi * k, self.psi * k, self.form, self.lattice)

    def proportional_to(self, other: "PearsonPair"):
        """Return ``k`` with ``self = k * other`` (same form and lattice), or ``None``."""
        if self.form != other.form or self.lattice != other.lattice:
            return None
        mine = list(self.phi.coeffs) + [ZERO] * (3 - len(self.phi.coeffs))
        mine += list(self.psi.coeffs) + [ZERO] * (2 - len(self.psi.coeffs))
        theirs = list(other.phi.coeffs) + [ZERO] * (3 - len(other.phi.coeffs))
        theirs += list(other.psi.coeffs) + [ZERO] * (2 - len(other.psi.coeffs))
        k = None
        for u, v in zip(mine, theirs):
            if not v:
                if u:
                    return None
                continue
            r = u / v
            if k is None:
                k = r
            elif r != k:
                return None
        return k

    def to_json(self) -> dict:
        return {
            "phi": poly_to_json(self.phi),
            "psi": poly_to_json(self.psi),
            "form": self.form.value,
            "lattice": self.lattice.to_json(),
        }

    def __str__(self):
        return json.dumps(self.to_json(), sort_keys=True)


def pair_from_json(data: dict) -> PearsonPair:
    lat = LinearLattice.from_json(data.get("lattice", {}))
    return PearsonPair(
        poly_from_json(data.get("phi", [])),
        poly_from_json(data.get("psi", [])),
        Form(data.get("form", "centered")),
        lat,
    )


@dataclass(frozen=True)
class KlsParameters:
    """Parameters of ``phi(x) = e(x-1)^2 + 2f(x-1) + g``, ``psi(x) = 2 eps (x-1) + gamma``."""

    e: GaussianRational
    f: GaussianRational
    g: GaussianRational
    eps: GaussianRational
    gamma: GaussianRational

    def __post_init__(self):
        for name in ("e", "f", "g", "eps", "gamma"):
            object.__setattr__(self, name, gauss(getattr(self, name)))

    def backward_pair(self) -> PearsonPair:
        s = Poly([-1, 1])
        phi = s * s * self.e + s * (2 * self.f) + self.g
        psi = s * (2 * self.eps) + self.gamma
        return PearsonPair(phi, psi, Form.BACKWARD)


def _require_unit(pair: PearsonPair):
    if pair.lattice.slope != ONE:
        raise ValueError("unit-step form requires slope 1")


def to_centered(pair: PearsonPair) -> PearsonPair:
    if pair.form is Form.CENTERED:
        raise ValueError("already centered")
    _require_unit(pair)
    if pair.form is Form.FORWARD:
        phi = pair.phi * 2 + pair.psi
    else:
        phi = pair.phi * 2 - pair.psi
    return PearsonPair(phi, pair.psi * 2, Form.CENTERED, pair.lattice)


def from_centered(pair: PearsonPair, target: Form) -> PearsonPair:
    """Literal converse identities; the round trip through ``to_centered`` scales by 4."""
    target = Form(target)
    if pair.form is not Form.CENTERED:
        raise ValueError("from_centered expects a centered pair")
    if target is Form.CENTERED:
        raise ValueError("target must be forward or backward")
    _require_unit(pair)
    if target is Form.FORWARD:
        phi = pair.phi * 2 - pair.psi
    else:
        phi = pair.phi * 2 + pair.psi
    return PearsonPair(phi, pair.psi * 2, target, pair.lattice)


def affine_push(pair: PearsonPair, beta, alpha) -> PearsonPair:
    """Pair satisfied by the pushforward of the functional under ``x -> beta*x + alpha``."""
    beta, alpha = gauss(beta), gauss(alpha)
    if not beta:
        raise ValueError("non-invertible homothety")
    if pair.form is not Form.CENTERED:
        raise ValueError("affine_push expects a centered pair")
    inv = beta.inverse()
    phi = pair.phi.scale_arg(inv).translate(alpha) * beta
    psi = pair.psi.scale_arg(inv).translate(alpha)
    lat = LinearLattice(pair.lattice.slope * beta, pair.lattice.intercept * beta)
    return PearsonPair(phi, psi, Form.CENTERED, lat)


def kls_import(k: KlsParameters) -> PearsonPair:
    return to_centered(k.backward_pair())
