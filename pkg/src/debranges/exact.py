"""Exact arithmetic kernel: rationals, dense univariate polynomials over Q,
reduced rational functions, and combinatorial primitives.

Every scalar in this package is an arbitrary-precision ``fractions.Fraction``;
floats never enter the core.  Polynomials are immutable dense coefficient
tuples tagged with a variable name, so that quantities living in different
variables (``y``, ``x``, a summation variable) cannot be mixed by accident.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the extended integer-n convention.

    For n >= 0 this is the ordinary C(n, k), zero outside 0 <= k <= n.
    For n < 0 and k >= 0 it is the upper-negation value
    C(n, k) = (-1)^k C(k-n-1, k); k < 0 always gives zero.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return (-1) ** k * math.comb(k - n - 1, k)


def pochhammer(a: Scalar, j: int) -> Fraction:
    """Shifted factorial (a)_j = a (a+1) ... (a+j-1), with (a)_0 = 1."""
    if j < 0:
        raise ValueError("pochhammer needs a nonnegative index")
    result = Fraction(1)
    a = Fraction(a)
    for i in range(j):
        result *= a + i
    return result


def format_rational(q: Scalar) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _coerce(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact scalar, got {type(value).__name__}")


class Poly:
    """Dense univariate polynomial over Q with a variable tag.

    coeffs[i] is the coefficient of var**i; the highest stored coefficient is
    nonzero, and the zero polynomial stores no coefficients at all.  Instances
    are immutable and hashable, so they are safe to share between threads and
    to use as cache keys.
    """

    __slots__ = ("coeffs", "var")

    coeffs: tuple[Fraction, ...]
    var: str

    def __init__(self, coeffs: Iterable[Scalar], var: str):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, var: str) -> "Poly":
        return cls((), var)

    @classmethod
    def const(cls, value: Scalar, var: str) -> "Poly":
        return cls((value,), var)

    @classmethod
    def variable(cls, var: str) -> "Poly":
        return cls((0, 1), var)

    @classmethod
    def monomial(cls, coeff: Scalar, power: int, var: str) -> "Poly":
        return cls((0,) * power + (coeff,), var)

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, power: int) -> Fraction:
        """Coefficient of var**power (zero beyond the degree)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def const_value(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self.is_const():
            raise ValueError(f"{self!r} is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def _check_var(self, other: "Poly") -> None:
        if self.var != other.var:
            raise ValueError(f"mixed variables {self.var!r} and {other.var!r}")

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        if not isinstance(other, Poly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Poly.const(other, self.var)
        self._check_var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly((-c for c in self.coeffs), self.var)

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        if not isinstance(other, Poly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Poly.const(other, self.var)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Poly":
        return (-self) + other

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if not isinstance(other, Poly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            c = _coerce(other)
            if c == 0:
                return Poly.zero(self.var)
            return Poly((c * a for a in self.coeffs), self.var)
        self._check_var(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.const(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other, self.var).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.var, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- calculus and substitution --------------------------------------

    def derivative(self) -> "Poly":
        return Poly((i * c for i, c in enumerate(self.coeffs) if i), self.var)

    def __call__(self, value: Scalar) -> Fraction:
        """Evaluate at an exact scalar (Horner)."""
        value = _coerce(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift(self, c: Scalar = 1) -> "Poly":
        """Substitute var -> var + c."""
        c = _coerce(c)
        acc = Poly.zero(self.var)
        x_plus_c = Poly((c, 1), self.var)
        for coeff in reversed(self.coeffs):
            acc = acc * x_plus_c + coeff
        return acc

    def subs_linear(self, a: Scalar, b: Scalar, var: str) -> "Poly":
        """Substitute var -> a*new_var + b, returning a polynomial in new_var."""
        inner = Poly((b, a), var)
        acc = Poly.zero(var)
        for coeff in reversed(self.coeffs):
            acc = acc * inner + coeff
        return acc

    def divide_by_var(self) -> "Poly":
        """Exact division by the variable; the constant term must vanish."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ValueError(f"{self!r} is not divisible by {self.var}")
        return Poly(self.coeffs[1:], self.var)

    # -- euclidean structure --------------------------------------------

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Polynomial long division: self = q*other + r with deg r < deg other."""
        self._check_var(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(self.var), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return Poly(quot, self.var), Poly(rem, self.var)

    def exact_div(self, other: "Poly") -> "Poly":
        """Division known to be exact; raises on a nonzero remainder."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError(f"{other!r} does not divide {self!r} exactly")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor (Euclid over Q)."""
        self._check_var(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def resultant(self, other: "Poly") -> Fraction:
        """Resultant of self and other with respect to the shared variable."""
        self._check_var(other)
        f, g = self, other
        if f.is_zero() or g.is_zero():
            return Fraction(0)
        sign = 1
        acc = Fraction(1)
        while g.degree > 0:
            r = f.divmod(g)[1]
            if r.is_zero():
                return Fraction(0)
            acc *= g.leading ** (f.degree - r.degree)
            if f.degree % 2 == 1 and g.degree % 2 == 1:
                sign = -sign
            f, g = g, r
        # g is now a nonzero constant
        return sign * acc * g.const_value() ** f.degree

    # -- display ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = format_rational(mag)
            elif mag == 1:
                body = self.var if power == 1 else f"{self.var}^{power}"
            elif power == 1:
                body = f"{format_rational(mag)}*{self.var}"
            else:
                body = f"{format_rational(mag)}*{self.var}^{power}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self}, var={self.var!r})"


class RationalFunction:
    """Reduced quotient of two polynomials in the same variable.

    Kept canonical: gcd(num, den) = 1 and den is monic, so equality is plain
    structural comparison.
    """

    __slots__ = ("num", "den")

    num: Poly
    den: Poly

    def __init__(self, num: Poly, den: "Poly | None" = None):
        if den is None:
            den = Poly.const(1, num.var)
        num._check_var(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = Poly.const(1, num.var)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.leading
            if lead != 1:
                num = num * (1 / lead)
                den = den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def const(cls, value: Scalar, var: str) -> "RationalFunction":
        return cls(Poly.const(value, var))

    @property
    def var(self) -> str:
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other: "RationalFunction | Scalar") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            other = RationalFunction.const(other, self.var)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: "RationalFunction | Scalar") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            other = RationalFunction.const(other, self.var)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other: "RationalFunction | Scalar") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            other = RationalFunction.const(other, self.var)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RationalFunction | Scalar") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            other = RationalFunction.const(other, self.var)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: Scalar) -> "RationalFunction":
        return RationalFunction.const(other, self.var) / self

    def shift(self, c: Scalar = 1) -> "RationalFunction":
        """Substitute var -> var + c in numerator and denominator."""
        return RationalFunction(self.num.shift(c), self.den.shift(c))

    def __call__(self, value: Scalar) -> Fraction:
        d = self.den(value)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self!r} at {value}")
        return self.num(value) / d

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Poly)):
            return self.den.degree == 0 and self.num == other * self.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"
