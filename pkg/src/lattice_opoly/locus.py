"""Slopes at which a 1-classical functional stops being regular."""

from __future__ import annotations

import cmath
import csv
import math
from dataclasses import dataclass

from .core_algebra import GaussianRational, gauss
from .pearson import PearsonPair
from .recurrence import StructureConstants, _Undefined

__all__ = [
    "LocusPoint",
    "LocusResult",
    "nonregularity_locus",
    "closed_form_t",
    "closed_form_c",
    "emit_locus_csv",
    "write_locus_csv",
    "rate_estimate",
]


@dataclass(frozen=True)
class LocusPoint:
    c_value: complex
    level: int
    branch: str
    t_exact: GaussianRational | None

    def row(self) -> list:
        return [
            repr(self.c_value.real + 0.0),
            repr(self.c_value.imag + 0.0),
            self.level,
            self.branch,
            "" if self.t_exact is None else str(self.t_exact),
        ]


@dataclass(frozen=True)
class LocusResult:
    points: tuple
    skipped: tuple

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def level_t(sc: StructureConstants, n: int) -> GaussianRational:
    """Squared slope solving ``phi(x_n) + n d_n t / 4 = 0``."""
    dn = sc.dn(n)
    if not dn or n == 0:
        raise _Undefined(n)
    return -4 * sc.phi(sc.node(n)) / (n * dn)


def nonregularity_locus(pair, n_range) -> LocusResult:
    """Points ``+-sqrt(t_n)`` for each level ``n`` in ``n_range``.

    At level ``n`` the shifted polynomial ``phi^{[n]}`` vanishes at its node,
    which kills ``b_{n+1}``. Levels with ``n d_n = 0`` or an undefined node do
    not depend on the slope and are listed in ``skipped``.
    """
    if not isinstance(pair, PearsonPair):
        pair = pair.pair()
    sc = StructureConstants.of(pair, None)
    points, skipped = [], []
    for n in n_range:
        try:
            t = level_t(sc, n)
        except _Undefined:
            skipped.append(n)
            continue
        root = cmath.sqrt(complex(t))
        points.append(LocusPoint(root, n, "+", t))
        points.append(LocusPoint(-root, n, "-", t))
    return LocusResult(tuple(points), tuple(skipped))


def closed_form_t(family: str, n: int, alpha=0, beta=0) -> GaussianRational:
    """Squared slopes for the four fixture pairs of :func:`families.locus_pair`."""
    a, b = gauss(alpha), gauss(beta)
    if family == "hermite":
        return gauss(2) / n
    if family == "laguerre":
        return 4 * (a + n + 1) / n
    if family == "bessel":
        s = 2 * n + a + 2
        return gauss(-16) / (n * (a + n + 2) * s * s)
    if family == "jacobi":
        r = (b - a) / (2 * n + a + b + 2)
        return -4 / (n * (a + b + n + 2)) * (r * r - 1)
    raise ValueError(f"unknown family {family!r}")


def closed_form_c(family: str, n: int, alpha=0.0, beta=0.0) -> complex:
    """Positive-branch slope straight from the float closed forms."""
    if family == "hermite":
        return complex(math.sqrt(2 / n))
    if family == "laguerre":
        return 2 * cmath.sqrt((n + alpha + 1) / n)
    if family == "bessel":
        return 4j / (cmath.sqrt(n * (n + alpha + 2)) * (2 * n + alpha + 2))
    if family == "jacobi":
        r = (beta - alpha) / (2 * n + alpha + beta + 2)
        return 2 / cmath.sqrt(n * (n + alpha + beta + 2)) * cmath.sqrt(1 - r * r)
    raise ValueError(f"unknown family {family!r}")


def write_locus_csv(points, fh) -> None:
    rows = sorted(points, key=lambda p: (p.level, 0 if p.branch == "+" else 1))
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["re", "im", "n", "branch", "t_exact"])
    for p in rows:
        w.writerow(p.row())


def emit_locus_csv(points, path) -> None:
    """CSV with header ``re,im,n,branch,t_exact`` ordered by level then branch."""
    with open(path, "w", newline="") as fh:
        write_locus_csv(points, fh)


def rate_estimate(pair: PearsonPair, n: int, power: float) -> float:
    """Limit of ``|c_n| n^power`` by one Richardson step from levels ``n`` and ``2n``.

    Assumes the leading correction is ``O(1/n)``, which holds for rational ``t_n``.
    """
    sc = StructureConstants.of(pair, None)

    def f(k):
        return abs(cmath.sqrt(complex(level_t(sc, k)))) * k**power

    return 2 * f(2 * n) - f(n)
