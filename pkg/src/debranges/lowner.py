"""Coefficient theory of the Koebe chain.

The chain w(z, t) has Taylor coefficients that are polynomials
B_n(y) = sum_j a(n, j) y^j in y = e^(-t).  This module builds the triangular
table a(n, j) two independent ways (a first-order recurrence with a diagonal
seed, and a closed form in binomials and factorials), exposes B_n as a
polynomial, and provides the residuals of the defining differential
relations, all in exact arithmetic:

* row rule:      (n - j) a(n, j) = (n - 1 + j) a(n-1, j)   for j < n
* diagonal:      a(j, j) = -2 (2j - 1) / (j + 1) * a(j-1, j-1),  a(1, 1) = 1
* closed form:   a(n, j) = 2 (-1)^(j+1) C(n+j-1, n-j) (2j-1)! / ((j-1)!(j+1)!)
* second-order ODE:  y^2 (1-y) B'' + y (1-y) B' + (n^2 y - 1) B = 0
* coupled system:    y (B_n' + B_{n-1}') = n B_n - (n-1) B_{n-1}
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .exact import Poly, binomial


@dataclass
class CoeffTable:
    """Triangular table (n, j) -> a(n, j) for 1 <= j <= n <= n_max."""

    n_max: int
    entries: dict[tuple[int, int], Fraction]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        n, j = key
        if not 1 <= j <= n <= self.n_max:
            raise KeyError(f"(n, j) = ({n}, {j}) outside the table triangle")
        return self.entries[(n, j)]


_cache_lock = threading.Lock()
_cached = CoeffTable(0, {})


def coeff_table(n_max: int) -> CoeffTable:
    """Chain coefficient triangle built from the recurrence, cached and
    extended incrementally as larger n_max values are requested."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    global _cached
    with _cache_lock:
        if n_max <= _cached.n_max:
            return CoeffTable(n_max, _cached.entries)
        entries = dict(_cached.entries)
        start = _cached.n_max + 1
        if start == 1:
            entries[(1, 1)] = Fraction(1)
            start = 2
        for n in range(start, n_max + 1):
            # diagonal seed, then the row rule walked down from the diagonal
            entries[(n, n)] = Fraction(-2 * (2 * n - 1), n + 1) * entries[(n - 1, n - 1)]
            for j in range(1, n):
                entries[(n, j)] = (
                    Fraction(n - 1 + j, n - j) * entries[(n - 1, j)]
                )
        _cached = CoeffTable(n_max, entries)
        return CoeffTable(n_max, entries)


def coeff_closed(n: int, j: int) -> Fraction:
    """Closed form of the chain coefficient a(n, j)."""
    if not 1 <= j <= n:
        raise ValueError(f"need 1 <= j <= n, got (n, j) = ({n}, {j})")
    sign = -1 if j % 2 == 0 else 1
    value = (
        2
        * sign
        * binomial(n + j - 1, n - j)
        * math.factorial(2 * j - 1)
        // (math.factorial(j - 1) * math.factorial(j + 1))
    )
    return Fraction(value)


def chain_poly(n: int) -> Poly:
    """B_n(y): the z^n coefficient of the chain as a polynomial in y.

    B_1 = y, and B_n(1) = 0 for n >= 2 since the chain at t = 0 is z itself.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    table = coeff_table(n)
    return Poly([0] + [table[(n, j)] for j in range(1, n + 1)], "y")


def ode_residual(n: int) -> Poly:
    """y^2 (1-y) B_n'' + y (1-y) B_n' + (n^2 y - 1) B_n; zero for every n."""
    b = chain_poly(n)
    y = Poly.variable("y")
    one_minus_y = Poly([1, -1], "y")
    bp = b.derivative()
    bpp = bp.derivative()
    return y * y * one_minus_y * bpp + y * one_minus_y * bp + (n * n * y - 1) * b


def system_residual(n: int) -> Poly:
    """y (B_n' + B_{n-1}') - n B_n + (n-1) B_{n-1}; zero for every n >= 2."""
    if n < 2:
        raise ValueError("the coupled system starts at n = 2")
    b_n = chain_poly(n)
    b_prev = chain_poly(n - 1)
    y = Poly.variable("y")
    return y * (b_n.derivative() + b_prev.derivative()) - n * b_n + (n - 1) * b_prev
