"""Hypergeometric terms, Gosper's algorithm, and terminating pFq sums.

A hypergeometric term b_l is entered through a tiny expression grammar
(integers, rationals via division, the summation variable, ``+ - * / ^``,
``fact(...)``, ``binom(...)``, parentheses) and normalized into a product of
factors whose shift quotient b_{l+1}/b_l is a rational function of l.
Gosper's algorithm then decides whether b_l has a hypergeometric
antidifference s_l with s_l - s_{l-1} = b_l, and returns a certificate
multiplier R with s_l = R(l) b_l that can be checked both symbolically
(R(l) - R(l-1)/r(l-1) = 1) and numerically on a range.

The terminating pFq evaluator computes sum_j (prod upper Pochhammers) /
(prod lower Pochhammers j!) arg^j exactly, for series cut off by a
nonpositive-integer upper parameter; the argument may be a rational or a
polynomial, which is how the closed hypergeometric forms of the chain and
Weinstein polynomials are produced.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exact import Poly, RationalFunction, Scalar, binomial


class TermSyntaxError(ValueError):
    """Grammar violation, with a 1-based column and the expected tokens."""

    def __init__(self, message: str, position: int, expected: Sequence[str] = ()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"column {position}: {message}"
        if self.expected:
            detail += f" (expected {', '.join(self.expected)})"
        super().__init__(detail)


class TermSemanticError(ValueError):
    """Structurally valid input that is not a hypergeometric term."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"column {position}: {message}")


# ---------------------------------------------------------------------------
# factor normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearFactor:
    """(a*l + b) ** exponent."""

    a: Fraction
    b: Fraction
    exponent: int


@dataclass(frozen=True)
class FactorialFactor:
    """fact(a*l + b) ** exponent; a is an integer so the shift telescopes."""

    a: int
    b: Fraction
    exponent: int


@dataclass(frozen=True)
class BinomialFactor:
    """binom(a1*l + b1, a2*l + b2) ** exponent, integer leading coefficients."""

    a1: int
    b1: Fraction
    a2: int
    b2: Fraction
    exponent: int


@dataclass(frozen=True)
class GeometricFactor:
    """base ** (a*l + b) with integer a, b and a nonzero rational base."""

    base: Fraction
    a: int
    b: int


Factor = Union[LinearFactor, FactorialFactor, BinomialFactor, GeometricFactor]


@dataclass(frozen=True)
class HypTerm:
    """A term const * prod(factors) in the summation variable."""

    var: str
    const: Fraction
    factors: tuple[Factor, ...]

    def is_zero(self) -> bool:
        return self.const == 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\d+|[A-Za-z_][A-Za-z0-9_]*|[-+*/^(),]")


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "ident", "end", or the operator character itself
    text: str
    pos: int  # 1-based column


def _tokenize(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        m = _TOKEN_RE.match(src, i)
        if m is None or m.start() != i:
            raise TermSyntaxError(f"unexpected character {ch!r}", i + 1)
        text = m.group()
        if text[0].isdigit():
            kind = "num"
        elif text[0].isalpha() or text[0] == "_":
            kind = "ident"
        else:
            kind = text
        tokens.append(_Token(kind, text, i + 1))
        i = m.end()
    tokens.append(_Token("end", "", len(src) + 1))
    return tokens


class _Linear:
    """a*var + b; constants have a == 0.  Closed under +, -, scalar *."""

    __slots__ = ("a", "b")

    def __init__(self, a: Fraction, b: Fraction):
        self.a = a
        self.b = b

    def is_const(self) -> bool:
        return self.a == 0


class _Product:
    """const * prod(factors): the multiplicative normal form."""

    __slots__ = ("const", "factors")

    def __init__(self, const: Fraction, factors: tuple[Factor, ...]):
        self.const = const
        self.factors = factors


_Value = Union[_Linear, _Product]


def _as_product(v: _Value) -> _Product:
    if isinstance(v, _Product):
        return v
    if v.is_const():
        return _Product(v.b, ())
    return _Product(Fraction(1), (LinearFactor(v.a, v.b, 1),))


def _require_int(value: Fraction, what: str, pos: int) -> int:
    if value.denominator != 1:
        raise TermSemanticError(f"{what} must be an integer, got {value}", pos)
    return int(value)


def _const_binomial(upper: Fraction, lower: Fraction, pos: int) -> Fraction:
    k = _require_int(lower, "constant binomial lower argument", pos)
    if k < 0:
        return Fraction(0)
    if upper.denominator == 1:
        return Fraction(binomial(int(upper), k))
    acc = Fraction(1)
    for i in range(k):
        acc *= upper - i
    return acc / math.factorial(k)


class _Parser:
    """Recursive descent over the term grammar, evaluating into normal form."""

    def __init__(self, src: str, var: str):
        self.tokens = _tokenize(src)
        self.index = 0
        self.var = var

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise TermSyntaxError(
                f"found {tok.text!r}" if tok.kind != "end" else "unexpected end of input",
                tok.pos,
                expected=[kind],
            )
        return self.advance()

    def parse(self) -> _Value:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise TermSyntaxError(
                f"trailing input {tok.text!r}", tok.pos, expected=["end of input"]
            )
        return value

    def expr(self) -> _Value:
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            value = self._add(value, rhs, op)
        return value

    def term(self) -> _Value:
        value = self.unary()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.unary()
            value = self._mul(value, rhs, op)
        return value

    def unary(self) -> _Value:
        if self.peek().kind == "-":
            tok = self.advance()
            value = self.unary()
            return self._negate(value)
        if self.peek().kind == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> _Value:
        base = self.atom()
        if self.peek().kind == "^":
            op = self.advance()
            exponent = self.unary()
            return self._pow(base, exponent, op)
        return base

    def atom(self) -> _Value:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return _Linear(Fraction(0), Fraction(int(tok.text)))
        if tok.kind == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        if tok.kind == "ident":
            self.advance()
            if tok.text == "fact":
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return self._factorial(arg, tok.pos)
            if tok.text == "binom":
                self.expect("(")
                first = self.expr()
                self.expect(",")
                second = self.expr()
                self.expect(")")
                return self._binomial(first, second, tok.pos)
            if tok.text == self.var:
                return _Linear(Fraction(1), Fraction(0))
            raise TermSemanticError(f"unknown identifier {tok.text!r}", tok.pos)
        raise TermSyntaxError(
            f"found {tok.text!r}" if tok.kind != "end" else "unexpected end of input",
            tok.pos,
            expected=["number", "identifier", "'('"],
        )

    # -- semantic combination ------------------------------------------

    def _add(self, lhs: _Value, rhs: _Value, op: _Token) -> _Value:
        if not isinstance(lhs, _Linear) or not isinstance(rhs, _Linear):
            raise TermSemanticError(
                "sums are only allowed between linear expressions", op.pos
            )
        if op.kind == "+":
            return _Linear(lhs.a + rhs.a, lhs.b + rhs.b)
        return _Linear(lhs.a - rhs.a, lhs.b - rhs.b)

    def _negate(self, value: _Value) -> _Value:
        if isinstance(value, _Linear):
            return _Linear(-value.a, -value.b)
        return _Product(-value.const, value.factors)

    def _mul(self, lhs: _Value, rhs: _Value, op: _Token) -> _Value:
        # scaling by a constant keeps linear expressions linear, so that
        # forms like 3*l + 1 or (n - l)/2 stay addable
        if op.kind == "/":
            if isinstance(rhs, _Linear) and rhs.is_const():
                if rhs.b == 0:
                    raise TermSemanticError("division by zero", op.pos)
                return self._scale(lhs, 1 / rhs.b)
            rhs = self._invert(rhs, op.pos)
        else:
            if isinstance(lhs, _Linear) and lhs.is_const():
                return self._scale(rhs, lhs.b)
            if isinstance(rhs, _Linear) and rhs.is_const():
                return self._scale(lhs, rhs.b)
        left = _as_product(lhs)
        right = _as_product(rhs)
        return _Product(left.const * right.const, left.factors + right.factors)

    def _scale(self, value: _Value, c: Fraction) -> _Value:
        if isinstance(value, _Linear):
            return _Linear(value.a * c, value.b * c)
        return _Product(value.const * c, value.factors)

    def _invert(self, value: _Value, pos: int) -> _Value:
        prod = _as_product(value)
        if prod.const == 0:
            raise TermSemanticError("division by zero", pos)
        return _Product(
            1 / prod.const,
            tuple(self._raise_factor(f, -1, pos) for f in prod.factors),
        )

    def _raise_factor(self, factor: Factor, e: int, pos: int) -> Factor:
        if isinstance(factor, LinearFactor):
            return LinearFactor(factor.a, factor.b, factor.exponent * e)
        if isinstance(factor, FactorialFactor):
            return FactorialFactor(factor.a, factor.b, factor.exponent * e)
        if isinstance(factor, BinomialFactor):
            return BinomialFactor(
                factor.a1, factor.b1, factor.a2, factor.b2, factor.exponent * e
            )
        if e == -1:
            return GeometricFactor(1 / factor.base, factor.a, factor.b)
        return GeometricFactor(factor.base**e, factor.a, factor.b)

    def _pow(self, base: _Value, exponent: _Value, op: _Token) -> _Value:
        if isinstance(exponent, _Product):
            raise TermSemanticError("exponent must be linear or constant", op.pos)
        if exponent.is_const():
            e = _require_int(exponent.b, "exponent", op.pos)
            if isinstance(base, _Linear) and base.is_const():
                if base.b == 0 and e < 0:
                    raise TermSemanticError("zero to a negative power", op.pos)
                return _Linear(Fraction(0), base.b**e)
            if e == 0:
                return _Linear(Fraction(0), Fraction(1))
            prod = _as_product(base)
            if prod.const == 0:
                if e < 0:
                    raise TermSemanticError("zero to a negative power", op.pos)
                return _Linear(Fraction(0), Fraction(0))
            return _Product(
                prod.const**e,
                tuple(self._raise_factor(f, e, op.pos) for f in prod.factors),
            )
        # variable exponent: base must be a nonzero rational constant
        if not (isinstance(base, _Linear) and base.is_const()):
            raise TermSemanticError(
                "a power with the variable in the exponent needs a constant base",
                op.pos,
            )
        if base.b == 0:
            raise TermSemanticError("zero base with variable exponent", op.pos)
        a = _require_int(exponent.a, "exponent coefficient", op.pos)
        b = _require_int(exponent.b, "exponent offset", op.pos)
        return _Product(Fraction(1), (GeometricFactor(base.b, a, b),))

    def _factorial(self, arg: _Value, pos: int) -> _Value:
        if not isinstance(arg, _Linear):
            raise TermSemanticError("factorial argument must be linear", pos)
        if arg.is_const():
            n = _require_int(arg.b, "constant factorial argument", pos)
            if n < 0:
                raise TermSemanticError("factorial of a negative integer", pos)
            return _Linear(Fraction(0), Fraction(math.factorial(n)))
        a = _require_int(arg.a, "factorial argument coefficient", pos)
        return _Product(Fraction(1), (FactorialFactor(a, arg.b, 1),))

    def _binomial(self, first: _Value, second: _Value, pos: int) -> _Value:
        if not isinstance(first, _Linear) or not isinstance(second, _Linear):
            raise TermSemanticError("binomial arguments must be linear", pos)
        if first.is_const() and second.is_const():
            return _Linear(Fraction(0), _const_binomial(first.b, second.b, pos))
        a1 = _require_int(first.a, "binomial argument coefficient", pos)
        a2 = _require_int(second.a, "binomial argument coefficient", pos)
        return _Product(
            Fraction(1), (BinomialFactor(a1, first.b, a2, second.b, 1),)
        )


def parse_term(src: str, var: str) -> HypTerm:
    """Parse a hypergeometric-term expression in the given variable.

    Raises TermSyntaxError (with a 1-based column and expected-token set) on
    grammar violations, and TermSemanticError when the expression is not a
    product of hypergeometric factors (for instance a nonlinear factorial
    argument).
    """
    value = _Parser(src, var).parse()
    prod = _as_product(value)
    return HypTerm(var, prod.const, prod.factors)


# ---------------------------------------------------------------------------
# evaluation and shift quotient
# ---------------------------------------------------------------------------


def term_value(term: HypTerm, l: int) -> Fraction:
    """Evaluate the term at an integer point, with the combinatorial
    convention binom(u, v) = 0 outside 0 <= v <= u."""
    result = term.const
    for f in term.factors:
        if isinstance(f, LinearFactor):
            base = f.a * l + f.b
            if base == 0 and f.exponent < 0:
                raise ZeroDivisionError(f"pole of {f} at l = {l}")
            result *= base**f.exponent
        elif isinstance(f, FactorialFactor):
            arg = f.a * l + f.b
            if arg.denominator != 1 or arg < 0:
                raise ValueError(f"factorial argument {arg} at l = {l}")
            result *= Fraction(math.factorial(int(arg))) ** f.exponent
        elif isinstance(f, BinomialFactor):
            u = f.a1 * l + f.b1
            v = f.a2 * l + f.b2
            if u.denominator != 1 or v.denominator != 1:
                raise ValueError(f"non-integer binomial arguments at l = {l}")
            val = binomial(int(u), int(v))
            if val == 0 and f.exponent < 0:
                raise ZeroDivisionError(f"pole of {f} at l = {l}")
            result *= Fraction(val) ** f.exponent
        else:
            result *= f.base ** (f.a * l + f.b)
    return result


def _factorial_shift(a: int, b: Fraction, var: str) -> RationalFunction:
    """fact(a(l+1) + b) / fact(a l + b) as a rational function of l."""
    one = Poly.const(1, var)
    num, den = one, one
    if a > 0:
        for i in range(1, a + 1):
            num = num * Poly([b + i, a], var)
    elif a < 0:
        for i in range(-a):
            den = den * Poly([b - i, a], var)
    return RationalFunction(num, den)


def term_ratio(term: HypTerm) -> RationalFunction:
    """The shift quotient b_{l+1} / b_l as a reduced rational function."""
    if term.is_zero():
        raise ValueError("the zero term has no shift quotient")
    var = term.var
    ratio = RationalFunction.const(1, var)
    for f in term.factors:
        if isinstance(f, LinearFactor):
            step = RationalFunction(
                Poly([f.a + f.b, f.a], var), Poly([f.b, f.a], var)
            )
            ratio = ratio * _rf_int_pow(step, f.exponent)
        elif isinstance(f, FactorialFactor):
            ratio = ratio * _rf_int_pow(_factorial_shift(f.a, f.b, var), f.exponent)
        elif isinstance(f, BinomialFactor):
            step = (
                _factorial_shift(f.a1, f.b1, var)
                / _factorial_shift(f.a2, f.b2, var)
                / _factorial_shift(f.a1 - f.a2, f.b1 - f.b2, var)
            )
            ratio = ratio * _rf_int_pow(step, f.exponent)
        else:
            ratio = ratio * RationalFunction.const(f.base**f.a, var)
    return ratio


def _rf_int_pow(rf: RationalFunction, e: int) -> RationalFunction:
    if e < 0:
        rf = 1 / rf
        e = -e
    result = RationalFunction.const(1, rf.var)
    for _ in range(e):
        result = result * rf
    return result


# ---------------------------------------------------------------------------
# Gosper's algorithm
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GosperCertificate:
    """Antidifference certificate: s_l = multiplier(l) * b_l satisfies
    s_l - s_{l-1} = b_l whenever b has the stated shift quotient."""

    ratio: RationalFunction
    multiplier: RationalFunction

    def verify_symbolic(self) -> bool:
        """Check R(l) - R(l-1) / r(l-1) = 1 as rational functions."""
        down = self.multiplier.shift(-1) / self.ratio.shift(-1)
        return (self.multiplier - down).is_one()


def _integer_roots(p: Poly) -> list[int]:
    """Nonnegative integer roots via divisor enumeration of the constant term."""
    if p.is_zero():
        raise ValueError("cannot enumerate roots of the zero polynomial")
    scale = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * scale) for c in p.coeffs]
    low = 0
    while ints[low] == 0:
        low += 1
    roots = [0] if low > 0 else []
    constant = abs(ints[low])
    divisors = set()
    d = 1
    while d * d <= constant:
        if constant % d == 0:
            divisors.add(d)
            divisors.add(constant // d)
        d += 1
    for h in sorted(divisors):
        if p(h) == 0:
            roots.append(h)
    return roots


def _dispersion(a: Poly, b: Poly) -> list[int]:
    """Nonnegative integers h with gcd(a(l), b(l + h)) nontrivial, computed
    as integer roots of the resultant Res_l(a(l), b(l+h)), which is
    reconstructed in h by exact interpolation."""
    if a.degree < 1 or b.degree < 1:
        return []
    deg = a.degree * b.degree
    points = [(Fraction(h), a.resultant(b.shift(h))) for h in range(deg + 1)]
    # Newton's divided differences give the resultant as a polynomial in h
    coeffs = [v for _, v in points]
    for level in range(1, deg + 1):
        for i in range(deg, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (
                points[i][0] - points[i - level][0]
            )
    poly = Poly.zero("h")
    for i in range(deg, -1, -1):
        poly = poly * Poly([-points[i][0], 1], "h") + coeffs[i]
    return [h for h in _integer_roots(poly) if not a.gcd(b.shift(h)).is_const()]


def _degree_bound(a: Poly, b_shifted: Poly, c: Poly) -> Optional[int]:
    """Classical degree bound for the unknown polynomial in
    a(l) x(l+1) - b(l-1) x(l) = c(l); None when no nonnegative bound exists."""
    n, m, k = a.degree, b_shifted.degree, c.degree
    candidates: set[Fraction] = set()
    if n != m or a.leading != b_shifted.leading:
        candidates.add(Fraction(k - max(n, m)))
    elif n == 0:
        candidates.add(Fraction(k - n + 1))
        candidates.add(Fraction(0))
    else:
        candidates.add(Fraction(k - n + 1))
        candidates.add((b_shifted.coeff(n - 1) - a.coeff(n - 1)) / a.leading)
    bounds = [int(d) for d in candidates if d.denominator == 1 and d >= 0]
    return max(bounds) if bounds else None


def _solve_linear_system(columns: list[Poly], rhs: Poly) -> Optional[list[Fraction]]:
    """Particular exact solution of sum_j x_j columns[j] = rhs (coefficients
    equated), free variables set to zero; None when inconsistent."""
    height = max([c.degree for c in columns] + [rhs.degree]) + 1
    height = max(height, 1)
    matrix = [
        [col.coeff(r) for col in columns] + [rhs.coeff(r)] for r in range(height)
    ]
    width = len(columns)
    pivots: list[int] = []
    row = 0
    for col in range(width):
        pivot_row = next(
            (r for r in range(row, height) if matrix[r][col] != 0), None
        )
        if pivot_row is None:
            continue
        matrix[row], matrix[pivot_row] = matrix[pivot_row], matrix[row]
        inv = 1 / matrix[row][col]
        matrix[row] = [v * inv for v in matrix[row]]
        for r in range(height):
            if r != row and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [v - factor * w for v, w in zip(matrix[r], matrix[row])]
        pivots.append(col)
        row += 1
        if row == height:
            break
    for r in range(row, height):
        if matrix[r][width] != 0 and all(v == 0 for v in matrix[r][:width]):
            return None
    solution = [Fraction(0)] * width
    for i, col in enumerate(pivots):
        solution[col] = matrix[i][width]
    return solution


def gosper(ratio: RationalFunction) -> Optional[GosperCertificate]:
    """Decide hypergeometric antidifference existence for a term with the
    given shift quotient; returns the certificate, or None when the term is
    not Gosper-summable.

    The quotient is factored as r(l) = (a(l)/b(l)) (c(l+1)/c(l)) with
    gcd(a(l), b(l+h)) = 1 for every integer h >= 0, the polynomial equation
    a(l) x(l+1) - b(l-1) x(l) = c(l) is solved with the classical degree
    bound, and the multiplier is R(l) = a(l) x(l+1) / c(l).
    """
    if ratio.is_zero():
        raise ValueError("shift quotient must be nonzero")
    var = ratio.var
    a, b = ratio.num, ratio.den
    c = Poly.const(1, var)
    for h in _dispersion(a, b):
        g = a.gcd(b.shift(h))
        if g.is_const():
            continue
        a = a.exact_div(g)
        b = b.exact_div(g.shift(-h))
        for i in range(1, h + 1):
            c = c * g.shift(-i)
    b_shifted = b.shift(-1)
    bound = _degree_bound(a, b_shifted, c)
    if bound is None:
        return None
    columns = []
    l_power = Poly.const(1, var)  # l^j, built up incrementally
    for j in range(bound + 1):
        columns.append(a * l_power.shift(1) - b_shifted * l_power)
        l_power = l_power * Poly.variable(var)
    solution = _solve_linear_system(columns, c)
    if solution is None:
        return None
    x = Poly(solution, var)
    if x.is_zero():
        return None
    return GosperCertificate(ratio, RationalFunction(a * x.shift(1), c))


def telescoped_sum(
    term: HypTerm, certificate: GosperCertificate, lo: int, hi: int
) -> Fraction:
    """sum_{l=lo..hi} b_l evaluated as s_hi - s_{lo-1} from the certificate."""
    if hi < lo:
        raise ValueError("empty summation range")
    s_hi = certificate.multiplier(hi) * term_value(term, hi)
    s_below = certificate.multiplier(lo - 1) * term_value(term, lo - 1)
    return s_hi - s_below


def verify_certificate(
    term: HypTerm, certificate: GosperCertificate, lo: int, hi: int
) -> bool:
    """True iff the certificate telescopes the term numerically on
    [lo, hi] (s_l - s_{l-1} = b_l with exact rationals) and the symbolic
    identity R(l) - R(l-1)/r(l-1) = 1 holds."""
    if not certificate.verify_symbolic():
        return False
    values = {l: term_value(term, l) for l in range(lo - 1, hi + 1)}
    s = {l: certificate.multiplier(l) * values[l] for l in range(lo - 1, hi + 1)}
    return all(s[l] - s[l - 1] == values[l] for l in range(lo, hi + 1))


def weighted_binomial_sum(n: int, j: int) -> Fraction:
    """Direct evaluation of sum_{l=j..n} (n+1-l) C(l+j-1, l-j); the closed
    form (j+n)(n+1+j) / (2j(2j+1)) C(n+j-1, n-j) is verified in the tests."""
    if not 1 <= j <= n:
        raise ValueError(f"need 1 <= j <= n, got (n, j) = ({n}, {j})")
    return Fraction(
        sum((n + 1 - l) * binomial(l + j - 1, l - j) for l in range(j, n + 1))
    )


# ---------------------------------------------------------------------------
# terminating hypergeometric series
# ---------------------------------------------------------------------------


def pfq_terminating(
    upper: Sequence[Scalar], lower: Sequence[Scalar], arg: Union[Poly, Scalar]
):
    """Exact finite evaluation of pFq(upper; lower; arg).

    Some upper parameter must be a nonpositive integer -m, which cuts the
    series at j = m; a lower parameter that is a nonpositive integer > -m
    would hit a pole first and is rejected.  The argument may be a rational
    or a polynomial, and the result has the same type.
    """
    ups = [Fraction(u) for u in upper]
    lows = [Fraction(b) for b in lower]
    stops = [-u for u in ups if u.denominator == 1 and u <= 0]
    if not stops:
        raise ValueError("series does not terminate: no nonpositive integer "
                         "upper parameter")
    m = int(min(stops))
    for b in lows:
        if b.denominator == 1 and 0 >= b > -m:
            raise ValueError(f"lower parameter {b} hits a pole before termination")
    one = arg * 0 + 1 if isinstance(arg, Poly) else Fraction(1)
    if not isinstance(arg, Poly):
        arg = Fraction(arg)
    total = one
    term = one
    for j in range(m):
        scale = Fraction(1, j + 1)
        for u in ups:
            scale *= u + j
        for b in lows:
            scale /= b + j
        term = term * arg * scale
        total = total + term
    return total
