"""The de Branges and Weinstein function systems, side by side.

The Weinstein functions L(n, k) are series coefficients of
e^t w^(k+1)/(1 - w^2); the de Branges functions T(n, k) solve a coupled
ODE system with initial values n + 1 - k.  The bridge is the slope identity
dT(n,k)/dt = -k L(n,k), which this script checks exactly, along with the
positivity that carries the Milin/Bieberbach story.
"""

from fractions import Fraction

from debranges import (
    debranges_poly,
    debranges_slope_at_zero,
    milin_functional,
    positivity_scan,
    time_derivative,
    weinstein_poly,
    weinstein_series,
)

N = 6

print("=== Weinstein functions from the series and in closed form ===")
zs = weinstein_series(1, N + 1)
for n in range(1, N + 1):
    closed = weinstein_poly(n, 1)
    match = "==" if zs.coefficient(n + 1) == closed else "!="
    print(f"  L({n},1): series {match} closed form   {closed}")

print()
print("=== de Branges functions and the slope identity ===")
for n in range(1, N + 1):
    for k in range(1, n + 1):
        tau = debranges_poly(n, k)
        assert time_derivative(tau) == -k * weinstein_poly(n, k)
    print(f"  n={n}: dT/dt = -k L holds for all k; T(n,k)(t=0) = "
          f"{[int(debranges_poly(n, k)(1)) for k in range(1, n + 2)]}")

print()
print("=== slope initial values alternate with the parity of n - k ===")
for n in range(1, N + 1):
    slopes = [int(debranges_slope_at_zero(n, k)) for k in range(1, n + 1)]
    print(f"  n={n}: {slopes}")

print()
print("=== exact positivity scan on y = 1/10 .. 9/10 ===")
violations = positivity_scan(12, [Fraction(i, 10) for i in range(1, 10)])
print(f"  n <= 12: {len(violations)} violations")

print()
print("=== Milin functional on logarithmic coefficients ===")
koebe_d = [Fraction(2, k) for k in range(1, 13)]
print(f"  d_k = 2/k (Koebe):    {[str(milin_functional(koebe_d, n)) for n in (3, 6, 12)]}")
half_d = [Fraction(1, k) for k in range(1, 13)]
print(f"  d_k = 1/k (z/(1-z)):  {[str(milin_functional(half_d, n)) for n in (2, 3, 4)]}")
