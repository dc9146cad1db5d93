"""Independent oracles shared by the tests."""

from __future__ import annotations

import sympy

from lattice_opoly.core_algebra import ONE, Poly, gauss


def to_sympy(z):
    z = gauss(z)
    return sympy.Rational(z.re.numerator, z.re.denominator) + sympy.I * sympy.Rational(
        z.im.numerator, z.im.denominator
    )


def sympy_hankel(mu, k):
    m = sympy.Matrix(k + 1, k + 1, lambda i, j: to_sympy(mu[int(i + j)]))
    return sympy.nsimplify(sympy.expand(m.det(method="bareiss")))


def stieltjes(mu, N):
    """Monic recurrence ``(a_0..a_{N-1}, b_1..b_{N-1})`` by exact Gram-Schmidt on moments."""

    def pair(p):
        acc = gauss(0)
        for k, c in enumerate(p.coeffs):
            acc = acc + c * mu[k]
        return acc

    x = Poly([0, 1])
    polys = [Poly([ONE])]
    a, b = [], []
    norms = [pair(polys[0])]
    for n in range(N):
        p = polys[n]
        an = pair(x * p * p) / norms[n]
        a.append(an)
        nxt = (x - an) * p
        if n:
            bn = norms[n] / norms[n - 1]
            b.append(bn)
            nxt = nxt - polys[n - 1] * bn
        polys.append(nxt)
        norms.append(pair(nxt * nxt))
        if not norms[-1]:
            break
    return a, b
