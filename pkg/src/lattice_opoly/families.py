"""Named Pearson pairs used as fixtures by the CLI and the test suite."""

from __future__ import annotations

from fractions import Fraction

from .classification import CanonicalClass, canonical_pair
from .core_algebra import Poly, gauss
from .pearson import Form, PearsonPair, to_centered

__all__ = [
    "para_krawtchouk",
    "gms_forward",
    "gms_centered",
    "locus_pair",
    "charlier_pair",
    "canonical",
    "FAMILY_NAMES",
]

FAMILY_NAMES = ("hermite", "laguerre", "bessel", "jacobi")


def para_krawtchouk(N, gamma) -> PearsonPair:
    """Centered pair of the para-Krawtchouk equation on the lattice of slope 2."""
    N, gamma = gauss(N), gauss(gamma)
    m = N - 1
    half = gauss(Fraction(1, 2))
    phi = Poly([m * (m + gamma) * half, -(m + gamma), 1])
    psi = Poly([m * (m + gamma) * half, -m])
    return PearsonPair.centered(phi, psi, slope=2)


def gms_forward(name: str, e, N=None) -> PearsonPair:
    """Forward-difference pairs of the four classical discrete families."""
    e = gauss(e)
    if name == "charlier":
        phi, psi = Poly([1]), Poly([e, -1])
    elif name == "meixner":
        phi, psi = Poly([0, 1]), Poly([e, -1])
    elif name == "krawtchouk":
        phi, psi = Poly([0, 1]), Poly([e, 2])
    elif name == "hahn":
        if N is None:
            raise ValueError("hahn needs N")
        phi, psi = Poly([1, 1, 1]), Poly([e, -2 * gauss(N)])
    else:
        raise ValueError(f"unknown family {name!r}")
    return PearsonPair(phi, psi, Form.FORWARD)


def gms_centered(name: str, e, N=None) -> PearsonPair:
    return to_centered(gms_forward(name, e, N))


def locus_pair(family: str, alpha=0, beta=0, slope=1) -> PearsonPair:
    """The four pairs whose non-regularity loci have closed forms."""
    a, b = gauss(alpha), gauss(beta)
    if family == "hermite":
        phi, psi = Poly([1]), Poly([0, -2])
    elif family == "laguerre":
        phi, psi = Poly([0, 1]), Poly([a + 1, -1])
    elif family == "bessel":
        phi, psi = Poly([0, 0, 1]), Poly([2, a + 2])
    elif family == "jacobi":
        phi, psi = Poly([1, 0, -1]), Poly([b - a, -(a + b + 2)])
    else:
        raise ValueError(f"unknown family {family!r}")
    return PearsonPair.centered(phi, psi, slope=slope)


def charlier_pair(eps) -> PearsonPair:
    """``Phi = 1 - 2 eps x``, ``Psi = 4 eps x + 2`` on the unit lattice."""
    eps = gauss(eps)
    return PearsonPair.centered(Poly([1, -2 * eps]), Poly([2, 4 * eps]))


def canonical(kind: str, alpha, beta=0, gamma=0) -> PearsonPair:
    return canonical_pair(CanonicalClass(kind, gauss(alpha), gauss(beta), gauss(gamma)))
