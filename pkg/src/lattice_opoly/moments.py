"""Moment sequences of 1-classical functionals and their verification oracles.

Moments are polynomials in ``t`` (the squared slope) normalized by
``mu_0 = 1``. :func:`moments_from_pearson` uses the explicit triangular
recursion; :func:`pairing_moments` rebuilds the same sequence from the
lattice operators directly and shares no code with it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core_algebra import (
    ONE,
    T,
    ZERO,
    GaussianRational,
    ParamPoly,
    Poly,
    as_param,
    binomial,
    gauss,
    poly_to_json,
)
from .lattice import dx_symbolic, sx_symbolic
from .pearson import Form, PearsonPair

__all__ = [
    "MomentSequence",
    "coefficient_table",
    "moments_from_pearson",
    "pairing_moments",
    "pearson_residual",
    "limit_moments",
    "continuous_pearson_residual",
    "dual_actions",
    "hankel_det",
    "hankel_b",
    "ops_from_recurrence",
    "gram_check",
    "pair_with",
]


class InsufficientMoments(ValueError):
    def __init__(self, needed: int, have: int):
        super().__init__(f"insufficient moments: need {needed}, have {have}")
        self.needed = needed
        self.have = have


@dataclass(frozen=True)
class MomentSequence:
    mu: tuple
    symbolic: bool = True
    failure_index: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(as_param(m) for m in self.mu))

    def __len__(self):
        return len(self.mu)

    def __getitem__(self, n):
        return self.mu[n]

    def at(self, t0) -> "MomentSequence":
        """Exact substitution of the squared slope."""
        t0 = gauss(t0)
        return MomentSequence(tuple(m.at(t0) for m in self.mu), False, self.failure_index)

    def values(self) -> list:
        """Scalar moments; only valid for t-free sequences."""
        out = []
        for m in self.mu:
            if (m.degree or 0) > 0:
                raise ValueError("moment sequence still depends on t")
            out.append(m.coeff(0))
        return out

    def t_degrees(self) -> list:
        return [m.degree for m in self.mu]

    def to_json(self) -> dict:
        out = {"mu": [poly_to_json(m) for m in self.mu], "variable": "t" if self.symbolic else None}
        if self.failure_index is not None:
            out["failure"] = {"index": self.failure_index, "reason": "DnZero"}
        return out


def coefficient_table(pair: PearsonPair, N: int) -> list:
    """``A[n][j]`` for ``0 <= j < n < N`` as ParamPolys in ``t``."""
    a, b, c, d, e = pair.coefficients
    table = []
    quarter = gauss("1/4")
    for n in range(N):
        row = []
        for j in range(n):
            acc = ParamPoly(())
            k = n + 1 - j
            if k % 2 == 0:
                acc = acc + ParamPoly.monomial(k // 2, (a * binomial(n, n + 2 - j) + d * binomial(n, n + 1 - j)) * quarter ** (k // 2))
            k = n - j
            if k % 2 == 0:
                acc = acc + ParamPoly.monomial(k // 2, (b * binomial(n, n + 1 - j) + e * binomial(n, n - j)) * quarter ** (k // 2))
            k = n - 1 - j
            if k >= 0 and k % 2 == 0:
                acc = acc + ParamPoly.monomial(k // 2, c * binomial(n, n - j) * quarter ** (k // 2))
            row.append(acc)
        table.append(row)
    return table


def moments_from_pearson(pair: PearsonPair, N: int, t=None) -> MomentSequence:
    """``mu_0 .. mu_N`` from the triangular recursion, stopping at the first ``d_n = 0``.

    With ``t`` given the recursion runs on scalars at that squared slope.
    """
    if pair.form is not Form.CENTERED:
        raise ValueError("moments_from_pearson expects a centered pair")
    a, b, c, d, e = pair.coefficients
    table = coefficient_table(pair, N)
    symbolic = t is None
    if not symbolic:
        t = gauss(t)
        table = [[entry.at(t) for entry in row] for row in table]
    mu = [ParamPoly([ONE]) if symbolic else ONE]
    for n in range(N):
        dn = a * n + d
        if not dn:
            return MomentSequence(tuple(mu), symbolic, n)
        acc = mu[n] * (b * n + e)
        for j in range(n):
            acc = acc + table[n][j] * mu[j]
        nxt = acc * (-dn.inverse())
        if symbolic and (nxt.degree or 0) > (n + 1) // 2:
            raise AssertionError("moment degree bound violated")
        mu.append(nxt)
    return MomentSequence(tuple(mu), symbolic)


# ---------------------------------------------------------------------------
# independent oracle
# ---------------------------------------------------------------------------


def pair_with(ms, p: Poly):
    """``<u, p>`` for a polynomial whose coefficients may be ParamPolys."""
    mu = ms.mu if isinstance(ms, MomentSequence) else ms
    if p.degree is not None and p.degree >= len(mu):
        raise InsufficientMoments(p.degree + 1, len(mu))
    acc = ParamPoly(())
    for k, c in enumerate(p.coeffs):
        acc = acc + mu[k] * c
    return acc


def _pairing_test_poly(pair: PearsonPair, n: int) -> Poly:
    """Polynomial ``q`` with ``<u, q> = 0`` obtained from the test function ``x^n``."""
    xn = Poly.monomial(n)
    if pair.form is Form.CENTERED:
        return pair.phi * dx_symbolic(xn) + pair.psi * sx_symbolic(xn)
    if pair.lattice.slope != ONE:
        raise ValueError("unit-step form requires slope 1")
    if pair.form is Form.FORWARD:
        return pair.phi * (xn.translate(1) - xn) - pair.psi * xn
    return pair.phi * (xn - xn.translate(-1)) - pair.psi * xn


def pairing_moments(pair: PearsonPair, N: int) -> MomentSequence:
    """Solve ``<u, q_n> = 0`` for ``n < N`` with ``mu_0 = 1``.

    Each equation ``q_n`` has degree ``n + 1`` in ``x``; the system is solved
    row by row for its top unknown. Unit-step forms give t-free moments.
    """
    mu: list = [ParamPoly([ONE])]
    for n in range(N):
        q = _pairing_test_poly(pair, n)
        top = q.coeff(n + 1)
        top = as_param(top)
        if (top.degree or 0) > 0:
            raise AssertionError("leading pairing coefficient depends on t")
        lead = top.coeff(0)
        if not lead:
            return MomentSequence(tuple(mu), pair.form is Form.CENTERED, n)
        rest = Poly(q.coeffs[: n + 1])
        mu.append(pair_with(mu, rest) * (-lead.inverse()))
    return MomentSequence(tuple(mu), pair.form is Form.CENTERED)


def pearson_residual(pair: PearsonPair, ms: MomentSequence, p: Poly):
    """``<u, phi D p + psi S p>`` with ``t`` symbolic."""
    q = pair.phi * dx_symbolic(p) + pair.psi * sx_symbolic(p)
    return pair_with(ms, q)


def limit_moments(ms: MomentSequence) -> MomentSequence:
    return ms.at(ZERO)


def continuous_pearson_residual(phi: Poly, psi: Poly, ms0: MomentSequence, p: Poly):
    """``<u0, phi p' + psi p>`` for a t-free sequence."""
    val = pair_with(ms0, phi * p.derivative() + psi * p)
    return val.coeff(0) if (val.degree or 0) == 0 else val


# ---------------------------------------------------------------------------
# dual operator actions on moments
# ---------------------------------------------------------------------------


def _moment_images(ms: MomentSequence, fn, shrink: int) -> MomentSequence:
    n_out = len(ms) - shrink
    if n_out <= 0:
        raise InsufficientMoments(shrink + 1, len(ms))
    return MomentSequence(tuple(pair_with(ms, fn(Poly.monomial(n))) for n in range(n_out)), ms.symbolic)


def dual_actions(ms: MomentSequence, action: str, arg=None) -> MomentSequence:
    """Moments of a transformed functional; the output is not renormalized.

    ``multiply`` pairs against ``p * x^n`` (``arg`` a Poly), ``translate`` against
    ``x^n`` shifted by ``+arg``, ``scale`` against ``(arg x)^n``; ``dx_transpose``
    and ``sx_transpose`` against ``-D x^n`` and ``S x^n`` with ``t`` kept symbolic.
    """
    if action == "multiply":
        p = arg if isinstance(arg, Poly) else Poly(arg)
        return _moment_images(ms, lambda q: p * q, p.degree or 0)
    if action == "translate":
        beta = gauss(arg)
        return _moment_images(ms, lambda q: q.translate(-beta), 0)
    if action == "scale":
        alpha = gauss(arg)
        return _moment_images(ms, lambda q: q.scale_arg(alpha), 0)
    if action == "dx_transpose":
        return _moment_images(ms, lambda q: -dx_symbolic(q), 0)
    if action == "sx_transpose":
        return _moment_images(ms, sx_symbolic, 0)
    raise ValueError(f"unknown action {action!r}")


# ---------------------------------------------------------------------------
# Hankel determinants and orthogonality
# ---------------------------------------------------------------------------


def _scalar_moments(ms) -> list:
    if isinstance(ms, MomentSequence):
        return ms.values()
    return [gauss(m) if not isinstance(m, GaussianRational) else m for m in ms]


def hankel_det(ms, n: int) -> GaussianRational:
    """Determinant of ``(mu_{i+j})_{0 <= i, j <= n}`` by exact elimination."""
    mu = _scalar_moments(ms)
    if 2 * n >= len(mu):
        raise InsufficientMoments(2 * n + 1, len(mu))
    size = n + 1
    m = [[mu[i + j] for j in range(size)] for i in range(size)]
    det = ONE
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col]), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        pv = m[col][col]
        det = det * pv
        inv = pv.inverse()
        for r in range(col + 1, size):
            f = m[r][col] * inv
            if f:
                row, prow = m[r], m[col]
                for k in range(col, size):
                    row[k] = row[k] - f * prow[k]
    return det


def hankel_b(ms, N: int) -> tuple:
    """``(dets, b)`` with ``b_n = D_n D_{n-2} / D_{n-1}^2`` for ``n <= N`` while defined."""
    dets = [hankel_det(ms, k) for k in range(N + 1)]
    b = []
    for n in range(1, N + 1):
        prev2 = dets[n - 2] if n >= 2 else ONE
        if not dets[n - 1]:
            break
        b.append(dets[n] * prev2 / (dets[n - 1] * dets[n - 1]))
    return dets, b


def ops_from_recurrence(rc, N: int) -> list:
    """Monic ``P_0 .. P_N`` from the three-term recurrence."""
    if N > len(rc.a_seq) or N > len(rc.b_seq) + 1:
        raise ValueError("not enough recurrence coefficients")
    x = Poly([0, 1])
    polys = [Poly([1])]
    if N == 0:
        return polys
    polys.append(x - rc.a_seq[0])
    for n in range(1, N):
        polys.append((x - rc.a_seq[n]) * polys[n] - polys[n - 1] * rc.b_seq[n - 1])
    return polys


def gram_check(ms, polys: list) -> list:
    """Matrix of ``<u, P_m P_n>``."""
    mu = ms.mu if isinstance(ms, MomentSequence) else [as_param(gauss(m) if not isinstance(m, Poly) else m) for m in ms]
    need = 2 * max((p.degree or 0) for p in polys) + 1
    if need > len(mu):
        raise InsufficientMoments(need, len(mu))
    out = []
    for p in polys:
        row = []
        for q in polys:
            v = pair_with(mu, p * q)
            row.append(v.coeff(0) if (v.degree or 0) == 0 else v)
        out.append(row)
    return out
