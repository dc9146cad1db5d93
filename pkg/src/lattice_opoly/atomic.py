"""Atomic (point-mass) solutions of centered Pearson equations on the unit lattice.

A string with base ``xi`` and weights ``rho_k`` represents the functional
``p -> sum_k rho_k p(xi + k)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core_algebra import ONE, ZERO, GaussianRational, Poly, gauss
from .pearson import Form, PearsonPair

__all__ = [
    "AtomString",
    "AtomicRepresentation",
    "AnchorReport",
    "anchor_points",
    "string_weights",
    "residual_check",
    "gauge",
    "reflect",
    "moments_of",
    "TruncatedMoments",
    "DEFAULT_NMAX",
    "solve_pair",
]

DEFAULT_NMAX = 128


@dataclass(frozen=True)
class AtomString:
    """Weights ``rho_0 .. rho_M`` at ``base + direction * k``.

    ``finite`` marks a string closed by the terminal condition; otherwise the
    listed weights are a truncation of an infinite string.
    """

    base: GaussianRational
    weights: tuple
    finite: bool
    direction: int = 1

    def __post_init__(self):
        object.__setattr__(self, "base", gauss(self.base))
        object.__setattr__(self, "weights", tuple(gauss(w) for w in self.weights))
        if not self.weights or not self.weights[0]:
            raise ValueError("rho_0 must be nonzero")
        if self.direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")

    @property
    def length(self) -> dict:
        m = len(self.weights) - 1
        return {"Finite": m} if self.finite else {"Truncated": m}

    def node(self, k: int) -> GaussianRational:
        return self.base + k * self.direction

    def nodes(self) -> list:
        return [self.node(k) for k in range(len(self.weights))]

    def scaled(self, k) -> "AtomString":
        k = gauss(k)
        return AtomString(self.base, tuple(w * k for w in self.weights), self.finite, self.direction)

    def to_json(self) -> dict:
        return {
            "base": str(self.base),
            "direction": self.direction,
            "weights": [str(w) for w in self.weights],
            "length": self.length,
        }


@dataclass(frozen=True)
class AtomicRepresentation:
    strings: tuple
    normalization: str = "1"

    def __post_init__(self):
        strings = tuple(self.strings)
        object.__setattr__(self, "strings", strings)
        if not 1 <= len(strings) <= 2:
            raise ValueError("one or two strings are supported")
        if len(strings) == 2:
            _check_disjoint(strings[0], strings[1])

    @property
    def finite(self) -> bool:
        return all(s.finite for s in self.strings)

    def atom_count(self) -> int:
        return sum(len(s.weights) for s in self.strings)

    def pair_with(self, p: Poly) -> GaussianRational:
        acc = ZERO
        for s in self.strings:
            for k, w in enumerate(s.weights):
                acc = acc + w * p(s.node(k))
        return acc

    def to_json(self) -> dict:
        return {"strings": [s.to_json() for s in self.strings], "normalization": self.normalization}


def _half_support(s: AtomString) -> set:
    """Points ``xi + n + 1/2`` for ``n = -1 .. M`` carrying the residual coefficients."""
    half = gauss("1/2") * s.direction
    return {s.node(k) + half for k in range(-1, len(s.weights))}


def _check_disjoint(a: AtomString, b: AtomString):
    if _half_support(a) & _half_support(b):
        raise ValueError("strings collide")


# ---------------------------------------------------------------------------
# anchoring and weights
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AnchorReport:
    points: tuple
    exact: bool
    approximations: tuple = ()

    def to_json(self) -> dict:
        if self.exact:
            return {"exact": True, "points": [str(p) for p in self.points]}
        return {
            "exact": False,
            "marker": "inexact branch: irrational base points",
            "approximations": [[z.real, z.imag] for z in self.approximations],
        }


def anchor_points(Phi: Poly, Psi: Poly) -> AnchorReport:
    """Roots of ``2 Phi - Psi``."""
    q = Phi * 2 - Psi
    if q.is_zero():
        raise ValueError("anchoring degenerate")
    if q.degree == 0:
        return AnchorReport((), True)
    if q.degree == 1:
        return AnchorReport((-q.coeff(0) / q.coeff(1),), True)
    a, b, c = q.coeff(2), q.coeff(1), q.coeff(0)
    disc = b * b - 4 * a * c
    root = disc.sqrt_exact()
    if root is not None:
        r1 = (-b - root) / (2 * a)
        r2 = (-b + root) / (2 * a)
        pts = (r1,) if r1 == r2 else tuple(sorted({r1, r2}, key=lambda z: (z.re, z.im)))
        return AnchorReport(pts, True)
    s = cmath.sqrt(complex(disc))
    ca, cb = complex(a), complex(b)
    approx = ((-cb - s) / (2 * ca), (-cb + s) / (2 * ca))
    for z in approx:
        if abs(complex(q(ZERO)) + z * (cb + ca * z)) > 1e-12 * max(1.0, abs(z) ** 2):
            raise ArithmeticError("irrational anchor failed its tolerance check")
    return AnchorReport((), False, approx)


def string_weights(Phi: Poly, Psi: Poly, xi, N_max: int = DEFAULT_NMAX, rho0=ONE) -> AtomString:
    """Iterate ``(2Phi - Psi)(xi+n+1) rho_{n+1} = (2Phi + Psi)(xi+n) rho_n``."""
    xi = gauss(xi)
    left = Phi * 2 - Psi
    right = Phi * 2 + Psi
    if left(xi):
        raise ValueError("base point does not satisfy the anchoring condition")
    rho = [gauss(rho0)]
    for n in range(N_max):
        r = right(xi + n)
        if not r:
            return AtomString(xi, tuple(rho), True)
        lval = left(xi + n + 1)
        if not lval:
            raise ValueError(f"step degenerate at {n + 1}")
        rho.append(rho[-1] * r / lval)
    if not right(xi + N_max):
        return AtomString(xi, tuple(rho), True)
    return AtomString(xi, tuple(rho), False)


def _string_coefficients(s: AtomString, Phi: Poly, Psi: Poly) -> dict:
    """Residual coefficients keyed by the half-shifted points ``x_k +- 1/2``.

    Each atom ``rho_k`` at ``x_k`` contributes
    ``-(1/2) rho_k [(2Phi + Psi)(x_k) p(x_k + 1/2) - (2Phi - Psi)(x_k) p(x_k - 1/2)]``.
    For an upward string the collected value at ``xi + n + 1/2`` is
    ``(1/2)[(2Phi - Psi)(xi+n+1) rho_{n+1} - (2Phi + Psi)(xi+n) rho_n]``.
    """
    left = Phi * 2 - Psi
    right = Phi * 2 + Psi
    half = gauss("1/2")
    out: dict = {}
    for k, rho in enumerate(s.weights):
        x = s.node(k)
        up, down = x + half, x - half
        out[up] = out.get(up, ZERO) - right(x) * rho * half
        out[down] = out.get(down, ZERO) + left(x) * rho * half
    return out


def residual_check(rep: AtomicRepresentation, pair: PearsonPair, p: Poly) -> GaussianRational:
    """``sum c_n p(xi + n + 1/2)`` over all strings, which equals ``-<u, Phi D p + Psi S p>``."""
    if pair.form is not Form.CENTERED:
        raise ValueError("residual_check expects a centered pair")
    if pair.lattice.slope not in (ONE, -ONE):
        raise ValueError("atomic strings live on the unit lattice")
    if len(rep.strings) == 2:
        _check_disjoint(*rep.strings)
    acc = ZERO
    for s in rep.strings:
        for point, c in _string_coefficients(s, pair.phi, pair.psi).items():
            if c:
                acc = acc + c * p(point)
    return acc


def gauge(rep: AtomicRepresentation, a) -> AtomicRepresentation:
    """Multiply ``rho_n`` by ``(-a)^n``."""
    a = gauss(a)
    strings = []
    for s in rep.strings:
        w, f = [], ONE
        for r in s.weights:
            w.append(r * f)
            f = f * (-a)
        strings.append(AtomString(s.base, tuple(w), s.finite, s.direction))
    return AtomicRepresentation(tuple(strings), rep.normalization)


def reflect(rep: AtomicRepresentation) -> AtomicRepresentation:
    """Pushforward under ``x -> -x``: atoms at ``xi + n`` move to ``-xi - n``."""
    strings = tuple(AtomString(-s.base, s.weights, s.finite, -s.direction) for s in rep.strings)
    return AtomicRepresentation(strings, rep.normalization)


@dataclass(frozen=True)
class TruncatedMoments:
    values: tuple
    tail_bounds: tuple

    def to_json(self) -> dict:
        return {
            "mu": [[v.real, v.imag] for v in self.values],
            "tail_bound": list(self.tail_bounds),
        }


def moments_of(rep: AtomicRepresentation, N: int):
    """Exact moments ``mu_0 .. mu_N`` of a finite representation (unnormalized).

    For truncated strings a double-precision sequence is returned with a tail
    bound from the geometric ratio of the last weights.
    """
    if rep.finite:
        from .moments import MomentSequence

        mu = []
        for n in range(N + 1):
            acc = ZERO
            for s in rep.strings:
                for k, w in enumerate(s.weights):
                    acc = acc + w * s.node(k) ** n
            mu.append(acc)
        return MomentSequence(tuple(mu), False)
    values = [0j] * (N + 1)
    bounds = [0.0] * (N + 1)
    for s in rep.strings:
        w = s.weights
        m = len(w) - 1
        if m < 2:
            raise ValueError("moments undefined at truncation")
        # ratio of consecutive weights must shrink for the tail to be summable
        q = abs(complex(w[m])) / abs(complex(w[m - 1])) if w[m - 1] else math.inf
        if not q < 1:
            raise ValueError("moments undefined at truncation")
        for n in range(N + 1):
            vals = [complex(wk) * complex(s.node(k)) ** n for k, wk in enumerate(w)]
            values[n] += math.fsum(v.real for v in vals) + 1j * math.fsum(v.imag for v in vals)
            # tail sum_{k>m} |w_k| |x_k|^n with |w_k| <= |w_m| q^{k-m} and polynomial growth of |x_k|^n
            base = abs(complex(s.base))
            ratio = q * ((base + m + 2) / (base + m + 1)) ** n
            if ratio >= 1:
                raise ValueError("moments undefined at truncation")
            lead = abs(complex(w[m])) * q * (base + m + 1) ** n
            bounds[n] += lead / (1 - ratio)
    return TruncatedMoments(tuple(values), tuple(bounds))


def _charlier_rate(s: AtomString):
    """``lam`` when the weights follow ``rho_n = rho_0 lam^n / n!``, else ``None``."""
    w = s.weights
    if len(w) < 3:
        return None
    lam = w[1] / w[0]
    for n in range(1, len(w) - 1):
        if w[n + 1] * (n + 1) != w[n] * lam:
            return None
    return lam


def solve_pair(pair: PearsonPair, N_max: int = DEFAULT_NMAX) -> tuple:
    """Atomic representation of a centered unit-lattice pair.

    Returns ``(representation, anchor report)``. With two admissible base
    points the second string's weight is fixed by requiring
    ``<u, P_k> = 0`` for the recurrence polynomials at the first ``k`` where
    that condition involves it.
    """
    if pair.form is not Form.CENTERED:
        raise ValueError("atomic solutions need a centered pair")
    if pair.lattice.slope != ONE:
        raise ValueError("atomic strings live on the unit lattice")
    report = anchor_points(pair.phi, pair.psi)
    if not report.exact:
        return None, report
    strings = []
    for xi in report.points:
        strings.append(string_weights(pair.phi, pair.psi, xi, N_max))
    if not strings:
        raise ValueError("no admissible base point")
    if len(strings) == 1:
        rep = AtomicRepresentation((strings[0],))
    else:
        first, second = strings
        _check_disjoint(first, second)
        sigma = _second_weight(pair, first, second)
        rep = AtomicRepresentation((first, second.scaled(sigma)))
    if len(rep.strings) == 1 and not rep.strings[0].finite:
        lam = _charlier_rate(rep.strings[0])
        if lam is not None:
            rep = AtomicRepresentation(rep.strings, f"exp(-({lam}))")
    return rep, report


def _second_weight(pair: PearsonPair, first: AtomString, second: AtomString) -> GaussianRational:
    from .moments import ops_from_recurrence
    from .recurrence import recurrence_coeffs

    if not (first.finite and second.finite):
        return ONE
    total = len(first.weights) + len(second.weights)
    rc = recurrence_coeffs(pair, total, ONE)
    depth = min(len(rc.a_seq), len(rc.b_seq) + 1)
    polys = ops_from_recurrence(rc, depth)
    one = AtomicRepresentation((first,))
    two = AtomicRepresentation((second,))
    for p in polys[1:]:
        b = two.pair_with(p)
        if b:
            return -one.pair_with(p) / b
    return ONE
