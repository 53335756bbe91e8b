"""Gegenbauer and Jacobi polynomials over exact rationals.

Ingredients for the positivity side of the story: the Gegenbauer polynomials
C_n^(-1/2) defined as the z-coefficients of sqrt(1 - 2xz + z^2), Jacobi
polynomials P_n^(alpha, 0) from the classical three-term recurrence, the
Askey-Gasper partial sums, and exact sign scans.  The x and y pictures are
linked by x = 1 - 2y, i.e. y = e^(-t) and x = 1 - 2e^(-t).

The lambda = -1/2 Gegenbauer normalization is the generating-function one;
the square root series is expanded binomially, which collapses to monomials
because 1 - 2xz + z^2 = 1 + z(z - 2x).  The hypergeometric-style expansion
of C_n^(-1/2) at x = 1 is treated as a verified identity for n >= 2 (it is
genuinely false at n = 1, where it yields 1 - x instead of -x; see
gegenbauer_expansion_check).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import Poly, Scalar, binomial, pochhammer
from . import lowner


def to_y(p: Poly) -> Poly:
    """Substitute x = 1 - 2y, mapping an x-polynomial to a y-polynomial."""
    if p.var != "x":
        raise ValueError(f"expected an x-polynomial, got variable {p.var!r}")
    return p.subs_linear(-2, 1, "y")


def to_x(p: Poly) -> Poly:
    """Substitute y = (1 - x)/2, mapping a y-polynomial to an x-polynomial."""
    if p.var != "y":
        raise ValueError(f"expected a y-polynomial, got variable {p.var!r}")
    return p.subs_linear(Fraction(-1, 2), Fraction(1, 2), "x")


def _choose_half(m: int) -> Fraction:
    # binomial coefficient (1/2 choose m)
    acc = Fraction(1)
    for i in range(m):
        acc *= Fraction(1, 2) - i
    return acc / math.factorial(m)


@lru_cache(maxsize=None)
def gegenbauer_minus_half(n: int) -> Poly:
    """C_n^(-1/2)(x): the z^n coefficient of sqrt(1 - 2xz + z^2).

    Expanding sqrt(1 + u) binomially with u = z(z - 2x) gives

        C_n(x) = sum_m (1/2 choose m) C(m, n-m) (-2x)^(2m-n),

    the sum running over ceil(n/2) <= m <= n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = [Fraction(0)] * (n + 1)
    for m in range((n + 1) // 2, n + 1):
        power = 2 * m - n
        coeffs[power] += _choose_half(m) * binomial(m, n - m) * Fraction(-2) ** power
    return Poly(coeffs, "x")


def gegenbauer_expansion_check(n: int) -> bool:
    """Does the expansion at x = 1,

        C_n^(-1/2)(x) = 2 sum_{j=0..n-1} (1-n)_j (n)_j / (j! (2)_j) * ((1-x)/2)^(j+1),

    reproduce the generating-function polynomial?  True for every n >= 2;
    false at n = 1 by a constant-term discrepancy that is recorded rather
    than patched (the formula gives 1 - x, the generating function -x).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    u = Poly([Fraction(1, 2), Fraction(-1, 2)], "x")  # (1 - x) / 2
    u_pow = u
    total = Poly.zero("x")
    for j in range(n):
        coeff = (
            pochhammer(1 - n, j)
            * pochhammer(n, j)
            / (math.factorial(j) * pochhammer(2, j))
        )
        total = total + 2 * coeff * u_pow
        u_pow = u_pow * u
    return total == gegenbauer_minus_half(n)


def chain_gegenbauer_check(n: int) -> bool:
    """Does (C_{n+1}^(-1/2)(x) - C_n^(-1/2)(x)) / (x - 1), taken at
    x = 1 - 2y, equal the chain coefficient polynomial B_n(y)?

    True for every n >= 2 (the division is exact); at n = 1 the identity
    fails by the same constant discrepancy as the x = 1 expansion."""
    if n < 1:
        raise ValueError("n must be at least 1")
    diff = gegenbauer_minus_half(n + 1) - gegenbauer_minus_half(n)
    quotient, remainder = diff.divmod(Poly([-1, 1], "x"))
    if not remainder.is_zero():
        return False
    return to_y(quotient) == lowner.chain_poly(n)


def _jacobi_sequence(alpha: Fraction, x):
    """Yield P_0^(alpha,0), P_1^(alpha,0), ... at x, which may be an exact
    scalar or a polynomial; the three-term recurrence is the same either way."""
    one = x * 0 + 1
    yield one
    prev = one
    curr = x * Fraction(alpha + 2, 2) + Fraction(alpha, 2)
    yield curr
    n = 2
    while True:
        lead = Fraction(2 * n) * (n + alpha) * (2 * n + alpha - 2)
        if lead == 0:
            raise ValueError(
                f"three-term recurrence degenerates at n={n}, alpha={alpha}"
            )
        mid = (x * ((2 * n + alpha) * (2 * n + alpha - 2)) + alpha * alpha) * (
            2 * n + alpha - 1
        )
        back = Fraction(2) * (n + alpha - 1) * (n - 1) * (2 * n + alpha)
        prev, curr = curr, (mid * curr - back * prev) * (1 / lead)
        yield curr
        n += 1


def jacobi_value(n: int, alpha: Scalar, x: Scalar) -> Fraction:
    """P_n^(alpha, 0)(x) by the three-term recurrence, exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    seq = _jacobi_sequence(Fraction(alpha), Fraction(x))
    for _ in range(n):
        next(seq)
    return next(seq)


@lru_cache(maxsize=None)
def jacobi_poly(n: int, alpha: Scalar) -> Poly:
    """P_n^(alpha, 0) as an exact polynomial in x."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    seq = _jacobi_sequence(Fraction(alpha), Poly.variable("x"))
    for _ in range(n):
        next(seq)
    return next(seq)


def askey_gasper_sum(n: int, k: int, x: Scalar) -> Fraction:
    """Partial sum sum_{j=0..n} P_j^(2k, 0)(x); nonnegative on [-1, 1]."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    x = Fraction(x)
    if not -1 <= x <= 1:
        raise ValueError(f"x = {x} outside [-1, 1]")
    seq = _jacobi_sequence(Fraction(2 * k), x)
    return sum(next(seq) for _ in range(n + 1))


def gegenbauer_partial_sum(n: int, x: Scalar) -> Fraction:
    """sum_{j=0..n} C_j^(-1/2)(x): the z^n Taylor coefficient of
    sqrt(1 - 2xz + z^2) / (1 - z)."""
    x = Fraction(x)
    return sum((gegenbauer_minus_half(j)(x) for j in range(n + 1)), Fraction(0))


def gegenbauer_partial_sum_scan(
    n_max: int, x_grid: Sequence[Scalar]
) -> list[tuple[int, Fraction, Fraction]]:
    """Scan the partial sums for negativity over an x grid in [-1, 1];
    returns (n, x, value) triples with value < 0 (expected: none)."""
    violations = []
    for x in x_grid:
        x = Fraction(x)
        if not -1 <= x <= 1:
            raise ValueError(f"x = {x} outside [-1, 1]")
        running = Fraction(0)
        for n in range(n_max + 1):
            running += gegenbauer_minus_half(n)(x)
            if running < 0:
                violations.append((n, x, running))
    return violations
