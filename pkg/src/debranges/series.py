"""Truncated formal power series in z with polynomial coefficients.

The central object is the bounded chain w(z, t) determined implicitly by
K(z) = e^t K(w), where K is the Koebe function z/(1-z)^2.  Writing
y = e^(-t), every z-coefficient of w is a polynomial in y, so the whole
chain lives in Q[y][[z]] and can be computed exactly.  The solver here uses
Newton reversion of the implicit equation, which is deliberately independent
of the coefficient recurrences in :mod:`debranges.lowner` so the two routes
can cross-check each other.

Truncation semantics: a series of order N is known exactly through z^N, and
binary operations return the minimum order of their operands; nothing is
ever extrapolated.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .exact import Poly, Rational, Scalar

PolyOrScalar = Union[Poly, int, Fraction]


def time_derivative(p: Poly) -> Poly:
    """d/dt applied to a polynomial in y = e^(-t), i.e. -y * dp/dy.

    This single convention realizes every t-derivative in the package.
    """
    return -(Poly.variable(p.var) * p.derivative())


class ZSeries:
    """Power series in z truncated at z^order, with Poly coefficients.

    coeffs[n] is the coefficient of z^n; all coefficients share one inner
    variable (``y`` unless stated otherwise).  Instances are immutable.
    """

    __slots__ = ("coeffs", "var")

    coeffs: tuple[Poly, ...]
    var: str

    def __init__(self, coeffs: Sequence[PolyOrScalar], var: str = "y"):
        if not coeffs:
            raise ValueError("a series needs at least the z^0 coefficient")
        converted = []
        for c in coeffs:
            if isinstance(c, Poly):
                if c.var != var:
                    raise ValueError(f"coefficient in {c.var!r}, series in {var!r}")
                converted.append(c)
            else:
                converted.append(Poly.const(c, var))
        object.__setattr__(self, "coeffs", tuple(converted))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ZSeries is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, order: int, var: str = "y") -> "ZSeries":
        return cls((Poly.zero(var),) * (order + 1), var)

    @classmethod
    def one(cls, order: int, var: str = "y") -> "ZSeries":
        return cls((Poly.const(1, var),) + (Poly.zero(var),) * order, var)

    # -- structure --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Poly:
        """Coefficient of z^n; n beyond the truncation order is an error."""
        if not 0 <= n <= self.order:
            raise IndexError(f"z^{n} is outside the known order {self.order}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def truncate(self, order: int) -> "ZSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return ZSeries(self.coeffs[: order + 1], self.var)

    def _padded(self, order: int) -> "ZSeries":
        # Iteration-scheme helper only: the padded tail is *not* the true
        # series and must be corrected by the caller before exposure.
        if order <= self.order:
            return self.truncate(order)
        pad = (Poly.zero(self.var),) * (order - self.order)
        return ZSeries(self.coeffs + pad, self.var)

    def _check(self, other: "ZSeries") -> None:
        if self.var != other.var:
            raise ValueError(f"mixed inner variables {self.var!r}, {other.var!r}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "ZSeries") -> "ZSeries":
        self._check(other)
        n = min(self.order, other.order)
        return ZSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], self.var
        )

    def __neg__(self) -> "ZSeries":
        return ZSeries([-c for c in self.coeffs], self.var)

    def __sub__(self, other: "ZSeries") -> "ZSeries":
        return self + (-other)

    def __mul__(self, other: "ZSeries | PolyOrScalar") -> "ZSeries":
        if not isinstance(other, ZSeries):
            return ZSeries([c * other for c in self.coeffs], self.var)
        self._check(other)
        n = min(self.order, other.order)
        out = [Poly.zero(self.var) for _ in range(n + 1)]
        for i in range(min(self.order, n) + 1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            for j in range(min(other.order, n - i) + 1):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return ZSeries(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ZSeries":
        if n < 0:
            raise ValueError("negative series power; use inverse()")
        result = ZSeries.one(self.order, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "ZSeries":
        """Multiplicative inverse; the z^0 coefficient must be a unit
        (a nonzero constant polynomial)."""
        c0 = self.coeffs[0]
        if not c0.is_const() or c0.is_zero():
            raise ValueError(f"z^0 coefficient {c0!r} is not a unit")
        inv0 = 1 / c0.const_value()
        out = [Poly.const(inv0, self.var)]
        for n in range(1, self.order + 1):
            acc = Poly.zero(self.var)
            for k in range(1, n + 1):
                ak = self.coeffs[k]
                if not ak.is_zero():
                    acc = acc + ak * out[n - k]
            out.append(acc * (-inv0))
        return ZSeries(out, self.var)

    def __truediv__(self, other: "ZSeries") -> "ZSeries":
        self._check(other)
        n = min(self.order, other.order)
        return self.truncate(n) * other.truncate(n).inverse()

    # -- calculus ---------------------------------------------------------

    def dz(self) -> "ZSeries":
        """Derivative with respect to z; the order drops by one."""
        if self.order < 1:
            raise ValueError("cannot differentiate an order-0 series")
        return ZSeries(
            [(i + 1) * self.coeffs[i + 1] for i in range(self.order)], self.var
        )

    def tdot(self) -> "ZSeries":
        """Time derivative: -y d/dy applied to every coefficient."""
        return ZSeries([time_derivative(c) for c in self.coeffs], self.var)

    def shift_up(self, k: int = 1) -> "ZSeries":
        """Multiply by z^k; the known order grows by k."""
        if k < 0:
            raise ValueError("shift_up needs k >= 0")
        return ZSeries((Poly.zero(self.var),) * k + self.coeffs, self.var)

    def eval_inner(self, value: Scalar) -> tuple[Fraction, ...]:
        """Evaluate every coefficient at an exact value of the inner variable."""
        return tuple(c(value) for c in self.coeffs)

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.var, self.coeffs))

    def __str__(self) -> str:
        parts = [f"({c})*z^{n}" for n, c in enumerate(self.coeffs) if not c.is_zero()]
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(z^{self.order + 1})"

    def __repr__(self) -> str:
        return f"ZSeries({self})"


def koebe(order: int) -> ZSeries:
    """The Koebe function z/(1-z)^2 = sum n z^n, truncated at z^order."""
    if order < 1:
        raise ValueError("order must be at least 1")
    return ZSeries([Poly.const(n, "y") for n in range(order + 1)])


@lru_cache(maxsize=None)
def koebe_chain(order: int) -> ZSeries:
    """The bounded chain w with K(w) = y K(z), by Newton reversion.

    The z^1 coefficient is y; at y = 1 the chain collapses to w = z.  The
    returned series satisfies the implicit equation exactly through z^order.
    Newton steps run on a truncation-doubling schedule starting from w = y z.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    y = Poly.variable("y")
    target = ZSeries([Poly.monomial(n, 1, "y") for n in range(order + 1)])  # y*K(z)
    w = ZSeries([Poly.zero("y"), y])
    max_steps = math.ceil(math.log2(order)) + 2 if order > 1 else 3
    for _ in range(max_steps + 1):
        w = w._padded(min(2 * w.order + 1, order))
        one = ZSeries.one(w.order)
        one_minus_w = one - w
        inv_sq = one_minus_w.inverse() ** 2
        residual = w * inv_sq - target.truncate(w.order)
        if w.order == order and residual.is_zero():
            return w
        correction = residual * one_minus_w**3 * (one + w).inverse()
        w = w - correction
    raise ArithmeticError("Newton reversion failed to converge")  # pragma: no cover


def log_over_z(f: ZSeries) -> ZSeries:
    """log(f(z)/z) as a series, for f = z + a_2 z^2 + ...

    Requires the z^0 coefficient to vanish and the z^1 coefficient to be
    exactly 1, so that the logarithm has no constant term and stays inside
    Q[y][[z]].  The result is one order shorter than the input, since the
    z^n log coefficient depends on f through z^(n+1).
    """
    if f.order < 1:
        raise ValueError("need at least order 1")
    if not f.coeffs[0].is_zero():
        raise ValueError("z^0 coefficient must vanish")
    if f.coeffs[1] != Poly.const(1, f.var):
        raise ValueError("z^1 coefficient must be exactly 1")
    g = ZSeries(f.coeffs[1:], f.var)  # f / z, order f.order - 1
    if g.order == 0:
        return ZSeries.zero(0, f.var)
    h = g.dz() * g.inverse()  # (f/z)' / (f/z), order f.order - 2
    phi = [Poly.zero(f.var)]
    for n in range(1, g.order + 1):
        phi.append(h.coeffs[n - 1] * Fraction(1, n))
    return ZSeries(phi, f.var)


def chain_pde_residual(w: ZSeries) -> ZSeries:
    """Residual of the linear PDE (z-1) z w' = (z+1) dw/dt.

    Zero (through the input's order) exactly when w is the Koebe chain; the
    time derivative is realized coefficientwise as -y d/dy.
    """
    wp = w.dz()
    wd = w.tdot()
    return wp.shift_up(2) - wp.shift_up(1) - wd.shift_up(1) - wd
