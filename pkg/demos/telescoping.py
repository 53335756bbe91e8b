"""Gosper telescoping for the weighted binomial sums.

The closed form of the Weinstein coefficients rests on the identity

    sum_{l=j..n} (n+1-l) C(l+j-1, l-j)
        = (j+n)(n+1+j) / (2j(2j+1)) * C(n+j-1, n-j),

whose antidifference is found by Gosper's algorithm.  This script parses the
summand, extracts its shift quotient, runs the algorithm, verifies the
certificate both symbolically and numerically, and telescopes the sum.
"""

from fractions import Fraction

from debranges import (
    binomial,
    gosper,
    parse_term,
    telescoped_sum,
    term_ratio,
    verify_certificate,
    weighted_binomial_sum,
)

n, j = 7, 3
src = f"({n}+1-l) * binom(l+{j}-1, l-{j})"
print(f"summand: {src}")

term = parse_term(src, "l")
ratio = term_ratio(term)
print(f"shift quotient b(l+1)/b(l) = {ratio}")

certificate = gosper(ratio)
print(f"certificate multiplier R(l) = {certificate.multiplier}")
print(f"symbolic check R(l) - R(l-1)/r(l-1) = 1: {certificate.verify_symbolic()}")
print(f"numeric telescoping on [{j}, {n}]: "
      f"{verify_certificate(term, certificate, j, n)}")

total = telescoped_sum(term, certificate, j, n)
closed = Fraction((j + n) * (n + 1 + j), 2 * j * (2 * j + 1)) * binomial(n + j - 1, n - j)
print(f"telescoped sum  = {total}")
print(f"direct sum      = {weighted_binomial_sum(n, j)}")
print(f"closed form     = {closed}")

print()
print("a term with no hypergeometric antidifference:")
fact_ratio = term_ratio(parse_term("fact(l)", "l"))
print(f"  gosper(fact(l)) -> {gosper(fact_ratio)}")

print()
print("the same decision, for every cell of the triangle j <= n <= 10:")
count = 0
for nn in range(1, 11):
    for jj in range(1, nn + 1):
        t = parse_term(f"({nn}+1-l) * binom(l+{jj}-1, l-{jj})", "l")
        cert = gosper(term_ratio(t))
        assert cert is not None and verify_certificate(t, cert, jj, nn)
        count += 1
print(f"  {count} certificates found and verified")
