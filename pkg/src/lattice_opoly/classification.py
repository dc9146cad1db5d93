"""Reduction of centered Pearson pairs to the four canonical families."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core_algebra import ONE, ZERO, GaussianRational, Poly, gauss
from .pearson import Form, PearsonPair, affine_push

__all__ = [
    "CanonicalClass",
    "AffineReduction",
    "ClassificationError",
    "classify",
    "equivalent",
    "canonical_pair",
    "reduce_pair",
    "Equivalence",
]

KINDS = ("hermite1", "laguerre1", "bessel1", "jacobi1")
_PARAM_NAMES = {
    "hermite1": ("alpha",),
    "laguerre1": ("alpha", "beta"),
    "bessel1": ("alpha", "beta"),
    "jacobi1": ("alpha", "beta", "gamma"),
}


class ClassificationError(ValueError):
    pass


@dataclass(frozen=True)
class CanonicalClass:
    kind: str
    alpha: GaussianRational
    beta: GaussianRational = ZERO
    gamma: GaussianRational = ZERO

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown canonical family {self.kind!r}")
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, gauss(getattr(self, name)))
        if self.kind == "jacobi1" and not self.gamma:
            raise ValueError("jacobi1 requires gamma != 0")

    @property
    def params(self) -> dict:
        return {n: getattr(self, n) for n in _PARAM_NAMES[self.kind]}

    def is_real(self) -> bool:
        return all(v.is_real() for v in self.params.values())

    def pair(self) -> PearsonPair:
        return canonical_pair(self)

    def to_json(self) -> dict:
        return {"class": self.kind, "params": {k: str(v) for k, v in self.params.items()}}

    @classmethod
    def from_json(cls, data: dict) -> "CanonicalClass":
        params = {k: gauss(str(v)) for k, v in data.get("params", {}).items()}
        return cls(data["class"], **params)


@dataclass(frozen=True)
class AffineReduction:
    """The canonical functional is the pushforward under ``x -> scale*x + xi``."""

    xi: GaussianRational
    scale: GaussianRational = field(default=ONE)

    def __post_init__(self):
        object.__setattr__(self, "xi", gauss(self.xi))
        object.__setattr__(self, "scale", gauss(self.scale))
        if not self.scale:
            raise ValueError("reduction scale must be nonzero")

    def inverse(self) -> tuple:
        """``(beta, alpha)`` for :func:`affine_push` undoing the reduction."""
        inv = self.scale.inverse()
        return inv, -self.xi * inv

    def to_json(self) -> dict:
        return {"xi": str(self.xi), "scale": str(self.scale)}


def canonical_pair(cls: CanonicalClass) -> PearsonPair:
    """Canonical representative on the unit lattice."""
    if cls.kind == "hermite1":
        phi, psi = Poly([1]), Poly([0, cls.alpha])
    elif cls.kind == "laguerre1":
        phi, psi = Poly([0, 1]), Poly([cls.beta, cls.alpha])
    elif cls.kind == "bessel1":
        phi, psi = Poly([0, 0, 1]), Poly([cls.beta, cls.alpha])
    else:
        phi, psi = Poly([-cls.gamma, 0, 1]), Poly([cls.beta, cls.alpha])
    return PearsonPair(phi, psi, Form.CENTERED)


def classify(pair: PearsonPair) -> tuple[CanonicalClass, AffineReduction]:
    if pair.form is not Form.CENTERED:
        raise ClassificationError("classify expects a centered pair")
    a, b, c, d, e = pair.coefficients
    slope = pair.slope
    if pair.phi.is_zero():
        raise ClassificationError("phi zero: outside classification scope")
    if not a and not b:
        if not d:
            raise ClassificationError("psi degenerate: no regular functional")
        cls = CanonicalClass("hermite1", d / c * slope * slope)
        xi = e / (d * slope)
    elif not a:
        cls = CanonicalClass("laguerre1", d / b * slope, (b * e - d * c) / (b * b))
        xi = c / (b * slope)
    else:
        disc = b * b - 4 * a * c
        alpha = d / a
        beta = (2 * a * e - b * d) / (2 * a * a * slope)
        xi = b / (2 * a * slope)
        if not disc:
            cls = CanonicalClass("bessel1", alpha, beta)
        else:
            cls = CanonicalClass("jacobi1", alpha, beta, disc / (4 * a * a * slope * slope))
    return cls, AffineReduction(xi, slope.inverse())


def reduce_pair(pair: PearsonPair, red: AffineReduction) -> PearsonPair:
    """Push ``pair`` along its reduction; the result is a multiple of the canonical pair."""
    return affine_push(pair, red.scale, red.xi)


@dataclass(frozen=True)
class Equivalence:
    equivalent: bool
    beta: GaussianRational | None = None
    alpha: GaussianRational | None = None

    def __bool__(self):
        return self.equivalent

    def to_json(self) -> dict:
        out = {"equivalent": self.equivalent}
        if self.equivalent:
            out["witness"] = {"beta": str(self.beta), "alpha": str(self.alpha)}
        return out


def equivalent(pair_a: PearsonPair, pair_b: PearsonPair) -> Equivalence:
    """Same canonical class; the witness ``x -> beta*x + alpha`` carries A's functional to B's."""
    cls_a, red_a = classify(pair_a)
    cls_b, red_b = classify(pair_b)
    if cls_a != cls_b:
        return Equivalence(False)
    inv_beta, inv_alpha = red_b.inverse()
    beta = red_a.scale * inv_beta
    alpha = inv_beta * red_a.xi + inv_alpha
    return Equivalence(True, beta, alpha)
