"""Exact scalars and dense univariate polynomials.

Two scalar layers are used throughout the package:

* ``Fraction`` (stdlib) for rationals, always in lowest terms;
* :class:`GaussianRational`, a complex number with ``Fraction`` parts.

:class:`Poly` is a dense univariate polynomial over any exact ring whose
elements support ``+``, ``-``, ``*`` and truthiness as a zero test. In
practice the coefficient ring is either :class:`GaussianRational` or
:class:`ParamPoly` (a polynomial in the formal variable ``t`` standing for
the squared lattice slope), which lets lattice operators keep the slope
symbolic.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "GaussianRational",
    "Poly",
    "ParamPoly",
    "gauss",
    "parse_gauss",
    "format_rational",
    "binomial",
    "poly_eval",
    "poly_translate",
    "poly_scale_arg",
    "poly_mul",
    "poly_to_json",
    "poly_from_json",
    "X",
    "T",
    "ZERO",
    "ONE",
    "I",
    "as_param",
    "specialize",
    "format_gauss",
]


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _raw(cls, re, im):
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    # -- coercion -------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(Fraction(other), _ZERO_F)
        if isinstance(other, _RationalABC):
            return GaussianRational._raw(Fraction(other.numerator, other.denominator), _ZERO_F)
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return GaussianRational._raw(self.re + o.re, _ZERO_F)
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return GaussianRational._raw(self.re - o.re, _ZERO_F)
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussianRational._raw(a * c, _ZERO_F)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("division by zero")
            return GaussianRational._raw(1 / a, _ZERO_F)
        n = a * a + b * b
        return GaussianRational._raw(a / n, -b / n)

    def conjugate(self):
        return GaussianRational._raw(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    # -- predicates -----------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def sign(self) -> int:
        """Sign of a real value; raises for non-real input."""
        if self.im:
            raise ValueError("sign of a non-real number")
        return (self.re > 0) - (self.re < 0)

    # -- conversions ----------------------------------------------------
    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def sqrt_exact(self):
        """Return an exact square root, or ``None`` if none exists in Q(i).

        The root with nonnegative real part is returned (positive imaginary
        part on the imaginary axis).
        """
        a, b = self.re, self.im
        if not b:
            if a >= 0:
                r = _sqrt_fraction(a)
                return None if r is None else GaussianRational._raw(r, _ZERO_F)
            r = _sqrt_fraction(-a)
            return None if r is None else GaussianRational._raw(_ZERO_F, r)
        m = _sqrt_fraction(a * a + b * b)
        if m is None:
            return None
        x = _sqrt_fraction((m + a) / 2)
        y = _sqrt_fraction((m - a) / 2)
        if x is None or y is None:
            return None
        if b < 0:
            y = -y
        return GaussianRational._raw(x, y)

    def __repr__(self):
        return f"GaussianRational({format_gauss(self)!r})"

    def __str__(self):
        return format_gauss(self)


_ZERO_F = Fraction(0)
ZERO = GaussianRational._raw(_ZERO_F, _ZERO_F)
ONE = GaussianRational._raw(Fraction(1), _ZERO_F)
I = GaussianRational._raw(_ZERO_F, Fraction(1))


def _sqrt_fraction(q: Fraction):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


def gauss(value=0, im=0) -> GaussianRational:
    """Coerce ``value`` (int, Fraction, str or GaussianRational) to a GaussianRational."""
    if isinstance(value, GaussianRational):
        return value if not im else value + GaussianRational(0, im)
    if isinstance(value, str):
        g = parse_gauss(value)
        return g if not im else g + GaussianRational(0, im)
    if isinstance(value, complex):
        raise TypeError("floating complex values are not exact; pass strings or Fractions")
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass strings or Fractions")
    return GaussianRational(value, im)


# ---------------------------------------------------------------------------
# text forms
# ---------------------------------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^(?:(?P<re>{_RAT})(?:(?P<isign>[+-])(?P<im1>\d+(?:/\d+)?)?i)?|(?P<im2>[+-]?(?:\d+(?:/\d+)?)?)i)$"
)


def _parse_rational(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"malformed rational literal {text!r}: zero denominator")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def parse_gauss(text: str) -> GaussianRational:
    """Parse ``"p/q"``, ``"p/q+r/si"``, ``"r/si"``, ``"i"`` and similar forms."""
    s = text.strip().replace(" ", "")
    m = _GAUSS_RE.match(s)
    if not m:
        raise ValueError(f"malformed rational literal {text!r}")
    if m.group("re") is not None:
        re_part = _parse_rational(m.group("re"))
        im_part = _ZERO_F
        if m.group("isign"):
            mag = _parse_rational(m.group("im1")) if m.group("im1") else Fraction(1)
            im_part = mag if m.group("isign") == "+" else -mag
        return GaussianRational._raw(re_part, im_part)
    body = m.group("im2")
    if body in ("", "+"):
        im_part = Fraction(1)
    elif body == "-":
        im_part = Fraction(-1)
    else:
        im_part = _parse_rational(body)
    return GaussianRational._raw(_ZERO_F, im_part)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_gauss(z) -> str:
    """Canonical text form; the imaginary unit always carries its coefficient."""
    z = gauss(z)
    if not z.im:
        return format_rational(z.re)
    im_txt = format_rational(abs(z.im)) + "i"
    if not z.re:
        return ("-" if z.im < 0 else "") + im_txt
    return format_rational(z.re) + ("-" if z.im < 0 else "+") + im_txt


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k > n or k < 0."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

# Nesting order for polynomials used as coefficients of other polynomials:
# a polynomial in x may carry coefficients in t, never the reverse.
_RANK = {"t": 0, "x": 1}


def _coerce_coeff(c):
    if isinstance(c, (GaussianRational, Poly)):
        return c
    if isinstance(c, str):
        return parse_gauss(c)
    return gauss(c)


class Poly:
    """Dense univariate polynomial; ``coeffs[k]`` is the coefficient of ``var**k``.

    Trailing zero coefficients are trimmed, so the zero polynomial has an
    empty coefficient tuple and ``degree`` ``None``.
    """

    __slots__ = ("coeffs", "var")
    default_var = "x"

    def __init__(self, coeffs=(), var=None):
        cs = [_coerce_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var or self.default_var

    def _new(self, coeffs):
        out = object.__new__(type(self))
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        out.coeffs = tuple(cs)
        out.var = self.var
        return out

    @classmethod
    def monomial(cls, k: int, coeff=1, var=None):
        c = _coerce_coeff(coeff)
        return cls([ZERO] * k + [c], var)

    @classmethod
    def constant(cls, c, var=None):
        return cls([c], var)

    # -- structure ------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _is_scalar(self, other) -> bool:
        if isinstance(other, Poly):
            return other.var != self.var and _RANK.get(other.var, -1) < _RANK.get(self.var, -1)
        return isinstance(other, (GaussianRational, int, Fraction))

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Poly) and other.var == self.var:
            a, b = self.coeffs, other.coeffs
            if len(a) < len(b):
                a, b = b, a
            out = list(a)
            for k, c in enumerate(b):
                out[k] = out[k] + c
            return self._new(out)
        if self._is_scalar(other):
            if not other:
                return self
            c0 = self.coeffs[0] + other if self.coeffs else _coerce_coeff(other)
            return self._new((c0,) + self.coeffs[1:])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return self._new([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, Poly) and other.var == self.var or self._is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if self._is_scalar(other):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Poly) and other.var == self.var:
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return self._new(())
            out = [ZERO] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if not ai:
                    continue
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
            return self._new(out)
        if self._is_scalar(other):
            if not other:
                return self._new(())
            return self._new([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar only."""
        if self._is_scalar(other) and not isinstance(other, Poly):
            inv = gauss(other).inverse()
            return self._new([c * inv for c in self.coeffs])
        if isinstance(other, Poly) and other.var != self.var:
            if other.degree == 0:
                return self / other.coeffs[0]
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self._new((ONE,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            if other.var != self.var and (self.degree or 0) + (other.degree or 0) > 0:
                return False
            return self.coeffs == other.coeffs or (
                len(self.coeffs) <= 1 and len(other.coeffs) <= 1 and self.coeff(0) == other.coeff(0)
            )
        if self._is_scalar(other):
            return len(self.coeffs) <= 1 and self.coeff(0) == other
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeff(0))
        return hash((self.var, self.coeffs))

    # -- calculus and substitution --------------------------------------
    def __call__(self, z):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self, order: int = 1):
        cs = list(self.coeffs)
        for _ in range(order):
            cs = [c * k for k, c in enumerate(cs)][1:]
        return self._new(cs)

    def translate(self, beta):
        """Return ``x -> p(x - beta)`` by Horner's scheme on ``(x - beta)``."""
        beta = _coerce_coeff(beta)
        shift = self._new((-beta, ONE))
        acc = self._new(())
        for c in reversed(self.coeffs):
            acc = acc * shift + c
        return acc

    def scale_arg(self, alpha):
        """Return ``x -> p(alpha*x)``."""
        alpha = _coerce_coeff(alpha)
        out = []
        power = ONE
        for c in self.coeffs:
            out.append(c * power)
            power = power * alpha
        return self._new(out)

    def map_coeffs(self, fn):
        return self._new([fn(c) for c in self.coeffs])

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.leading == ONE

    # -- display --------------------------------------------------------
    def __repr__(self):
        return f"{type(self).__name__}({[str(c) for c in self.coeffs]!r}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            ctxt = f"({c})"
            mon = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            parts.append(ctxt + ("*" + mon if mon else ""))
        return " + ".join(parts)


class ParamPoly(Poly):
    """Polynomial in the formal variable ``t`` (the squared lattice slope)."""

    __slots__ = ()
    default_var = "t"

    def __init__(self, coeffs=(), var=None):
        super().__init__(coeffs, "t")

    def at(self, t0) -> GaussianRational:
        """Exact substitution ``t = t0``."""
        return self(gauss(t0))

    def shift_mul(self, k: int, scalar):
        """Return ``scalar * t**k * self`` without a full convolution."""
        if not scalar or not self.coeffs:
            return self._new(())
        return self._new([ZERO] * k + [c * scalar for c in self.coeffs])


X = Poly([0, 1])
T = ParamPoly([0, 1])


def as_param(c) -> ParamPoly:
    """View a scalar or ParamPoly as a ParamPoly."""
    if isinstance(c, ParamPoly):
        return c
    return ParamPoly([c])


def specialize(p: Poly, t0) -> Poly:
    """Substitute ``t = t0`` in every ParamPoly coefficient of ``p``."""
    t0 = gauss(t0)
    return p.map_coeffs(lambda c: c(t0) if isinstance(c, ParamPoly) else c)


# ---------------------------------------------------------------------------
# functional aliases matching the operation names used elsewhere
# ---------------------------------------------------------------------------

def poly_eval(p: Poly, z):
    return p(gauss(z) if not isinstance(z, (GaussianRational, Poly)) else z)


def poly_translate(p: Poly, beta) -> Poly:
    return p.translate(beta)


def poly_scale_arg(p: Poly, alpha) -> Poly:
    return p.scale_arg(alpha)


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_to_json(p: Poly) -> list:
    """Coefficient strings, lowest degree first."""
    out = []
    for c in p.coeffs:
        if isinstance(c, Poly):
            out.append(poly_to_json(c))
        else:
            out.append(format_gauss(c))
    return out


def poly_from_json(data, var="x") -> Poly:
    cls = ParamPoly if var == "t" else Poly
    return cls([parse_gauss(str(c)) for c in data], var)


def to_complex(z) -> complex:
    return complex(z)


def principal_sqrt(z) -> complex:
    """Principal square root in double precision (branch cut on the negative real axis)."""
    return cmath.sqrt(complex(z))
