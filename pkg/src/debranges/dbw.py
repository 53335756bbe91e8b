"""De Branges and Weinstein function systems of the Koebe chain.

Two families of polynomials in y = e^(-t) are built here and played against
each other:

* Weinstein functions L(n, k): the z^(n+1) coefficients of
  W_k = e^t w^(k+1) / (1 - w^2), with the closed form
  L(n, k) = sum_{j=k..n} (-1)^(k+j) C(2j, j-k) C(n+j+1, n-j) y^j.

* De Branges functions T(n, k): the weight system defined by the coupled
  equations T(n, k+1) - T(n, k) = Tdot(n, k)/k + Tdot(n, k+1)/(k+1) with
  T(n, n+1) = 0 and T(n, k)(t=0) = n + 1 - k.

The bridge identity Tdot(n, k) = -k L(n, k) lets T be constructed by
integrating the Weinstein closed form with no constant term (the t -> inf
terminal condition); the t = 0 initial values then come out as theorems and
are verified, not imposed.  A generating-function route K(z) w^k, its
expansion in powers of y, the Jacobi/Gegenbauer product factorization, the
Milin functional, and exact positivity scans complete the picture.

Convention: W_k(z, 0) = z^(k+1)/(1 - z^2), so L(n, k) at y = 1 is 1 when
n - k is even and 0 when it is odd, matching the slope initial values
Tdot(n, k)(0) = -k (n - k even) / 0 (n - k odd).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import Poly, Scalar, binomial, format_rational
from .series import ZSeries, koebe, koebe_chain, time_derivative
from . import orthopoly


def weinstein_coeff(n: int, k: int, j: int) -> Fraction:
    """y^j coefficient of the Weinstein function L(n, k), in closed form."""
    if not 1 <= k <= j <= n:
        raise ValueError(f"need 1 <= k <= j <= n, got ({n}, {k}, {j})")
    sign = -1 if (k + j) % 2 else 1
    return Fraction(sign * binomial(2 * j, j - k) * binomial(n + j + 1, n - j))


@lru_cache(maxsize=None)
def weinstein_poly(n: int, k: int) -> Poly:
    """L(n, k) as a polynomial in y; lowest power y^k, degree n."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got (n, k) = ({n}, {k})")
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(k, n + 1):
        coeffs[j] = weinstein_coeff(n, k, j)
    return Poly(coeffs, "y")


@lru_cache(maxsize=None)
def _chain_power(order: int, m: int) -> ZSeries:
    if m == 1:
        return koebe_chain(order)
    return _chain_power(order, m - 1) * koebe_chain(order)


def weinstein_series(k: int, order: int) -> ZSeries:
    """W_k = e^t w^(k+1) / (1 - w^2) as a series; the z^(n+1) coefficient
    is the Weinstein function L(n, k).

    The e^t factor is realized by dividing every coefficient exactly by y,
    which is possible because each coefficient of w^(k+1)/(1 - w^2) vanishes
    at y = 0 (the chain itself does).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if order < k + 1:
        raise ValueError(f"order must be at least k + 1 = {k + 1}")
    w = koebe_chain(order)
    body = _chain_power(order, k + 1) * _one_minus_w_squared_inverse(order)
    return ZSeries([c.divide_by_var() for c in body.coeffs], w.var)


@lru_cache(maxsize=None)
def _one_minus_w_squared_inverse(order: int) -> ZSeries:
    w = koebe_chain(order)
    return (ZSeries.one(order) - w * w).inverse()


@lru_cache(maxsize=None)
def debranges_poly(n: int, k: int) -> Poly:
    """T(n, k) as a polynomial in y, built by integrating -k L(n, k).

    The time derivative -y d/dy maps y^j to -j y^j, so integration divides
    the y^j coefficient of k L(n, k) by j; the missing constant of
    integration is fixed to zero by the t -> inf terminal condition.
    k = n + 1 is allowed and gives the zero polynomial.
    """
    if not 1 <= k <= n + 1:
        raise ValueError(f"need 1 <= k <= n + 1, got (n, k) = ({n}, {k})")
    if k == n + 1:
        return Poly.zero("y")
    lam = weinstein_poly(n, k)
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(k, n + 1):
        coeffs[j] = Fraction(k, j) * lam.coeff(j)
    return Poly(coeffs, "y")


def debranges_system_residual(n: int, k: int) -> Poly:
    """T(n, k+1) - T(n, k) - Tdot(n, k)/k - Tdot(n, k+1)/(k+1); zero for
    1 <= k <= n."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got (n, k) = ({n}, {k})")
    tau_k = debranges_poly(n, k)
    tau_next = debranges_poly(n, k + 1)
    return (
        tau_next
        - tau_k
        - time_derivative(tau_k) * Fraction(1, k)
        - time_derivative(tau_next) * Fraction(1, k + 1)
    )


def debranges_slope_at_zero(n: int, k: int) -> Fraction:
    """Tdot(n, k) at t = 0: -k when n - k is even, 0 when n - k is odd."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got (n, k) = ({n}, {k})")
    return time_derivative(debranges_poly(n, k))(1)


def debranges_generating_series(k: int, order: int) -> ZSeries:
    """K(z) w(z, t)^k: the generating function whose z^(n+1) coefficient is
    T(n, k).  At y = 1 it collapses to z^(k+1)/(1-z)^2."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if order < k + 1:
        raise ValueError(f"order must be at least k + 1 = {k + 1}")
    return koebe(order) * _chain_power(order, k)


def explicit_generating_check(k: int, order: int, j_max: int) -> bool:
    """Check the expansion of K(z) w^k in powers of y:

        K(z) w^k = sum_j (-1)^(j+k) (2k/(j+k)) C(2j-1, j-k) K(z)^(j+1) y^j

    by comparing, for every j <= j_max, the y^j slice of the generating
    series against the stated multiple of K(z)^(j+1).
    """
    if j_max > order:
        raise ValueError("j_max cannot exceed the series order")
    gen = debranges_generating_series(k, order)
    for j in range(j_max + 1):
        # y^j slice of the generating series, as plain rationals per z power
        slice_j = [c.coeff(j) for c in gen.coeffs]
        sign = -1 if (j + k) % 2 else 1
        factor = Fraction(sign * 2 * k, j + k) * binomial(2 * j - 1, j - k)
        expected_series = _chain_power_of_koebe(order, j + 1)
        expected = [factor * c.const_value() for c in expected_series.coeffs]
        if slice_j != expected:
            return False
    return True


@lru_cache(maxsize=None)
def _chain_power_of_koebe(order: int, m: int) -> ZSeries:
    if m == 1:
        return koebe(order)
    return _chain_power_of_koebe(order, m - 1) * koebe(order)


def jacobi_decomposition_check(k: int, order: int) -> bool:
    """Check the positivity-bearing factorization

        K(z) w^k = z^(k+1) y^k * (sum_n S_P(n) z^n) * (sum_n S_C(n) z^n)

    where S_P(n) = sum_{j<=n} P_j^(2k,0)(x), S_C(n) = sum_{j<=n} C_j^(-1/2)(x)
    are the Jacobi and Gegenbauer partial sums, taken at x = 1 - 2y.
    """
    if order < k + 1:
        raise ValueError(f"order must be at least k + 1 = {k + 1}")
    inner = order - (k + 1)
    jac_sum = Poly.zero("y")
    geg_sum = Poly.zero("y")
    jac_coeffs = []
    geg_coeffs = []
    for n in range(inner + 1):
        jac_sum = jac_sum + orthopoly.to_y(orthopoly.jacobi_poly(n, 2 * k))
        geg_sum = geg_sum + orthopoly.to_y(orthopoly.gegenbauer_minus_half(n))
        jac_coeffs.append(jac_sum)
        geg_coeffs.append(geg_sum)
    product = ZSeries(jac_coeffs) * ZSeries(geg_coeffs)
    rhs = (product * Poly.monomial(1, k, "y")).shift_up(k + 1)
    return rhs == debranges_generating_series(k, order)


def milin_functional(d: Sequence[Scalar], n: int) -> Fraction:
    """The Milin functional sum_{k=1..n} (n+1-k) (k d_k^2 - 4/k) on a list of
    logarithmic coefficients (d[0] is d_1).  Zero for the Koebe values 2/k."""
    if len(d) < n:
        raise ValueError(f"need at least {n} logarithmic coefficients")
    total = Fraction(0)
    for k in range(1, n + 1):
        dk = Fraction(d[k - 1])
        total += (n + 1 - k) * (k * dk * dk - Fraction(4, k))
    return total


@dataclass(frozen=True)
class PositivityViolation:
    """A sign failure witnessed at an exact grid point."""

    quantity: str  # "weinstein", "debranges" or "debranges_slope"
    n: int
    k: int
    y: Fraction
    value: Fraction

    def __str__(self) -> str:
        return (
            f"{self.quantity}(n={self.n}, k={self.k}) at y={format_rational(self.y)}"
            f" -> {format_rational(self.value)}"
        )


def positivity_scan(
    n_max: int, y_grid: Sequence[Scalar]
) -> list[PositivityViolation]:
    """Scan L(n, k) >= 0, T(n, k) >= 0 and Tdot(n, k) <= 0 on exact grid
    points in (0, 1); returns all violations (expected: none)."""
    grid = [Fraction(v) for v in y_grid]
    for v in grid:
        if not 0 < v < 1:
            raise ValueError(f"grid value {v} outside (0, 1)")
    violations: list[PositivityViolation] = []
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            lam = weinstein_poly(n, k)
            tau = debranges_poly(n, k)
            tau_dot = time_derivative(tau)
            for v in grid:
                lam_v = lam(v)
                if lam_v < 0:
                    violations.append(PositivityViolation("weinstein", n, k, v, lam_v))
                tau_v = tau(v)
                if tau_v < 0:
                    violations.append(PositivityViolation("debranges", n, k, v, tau_v))
                slope = tau_dot(v)
                if slope > 0:
                    violations.append(
                        PositivityViolation("debranges_slope", n, k, v, slope)
                    )
    return violations
