"""Command line front end: coefficient tables, exact evaluation, identity
verification sweeps, and the Gosper engine.

Output is deterministic byte-for-byte: rationals are rendered as ``p/q``
(or ``p`` when the denominator is 1) in both CSV and JSON, row order is
lexicographic in the indices, and line endings are LF.  Exit codes: 0 for
success or a passing verification, 1 for a failing verification, 2 for
usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import dbw, hypsum, lowner, orthopoly, series
from .exact import Poly, binomial, format_rational


@dataclass
class Check:
    """One verified identity instance."""

    id: str
    indices: list[int]
    ok: bool
    witness: str | None = None

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "indices": self.indices,
            "pass": self.ok,
            "witness": self.witness,
        }


@dataclass
class Report:
    """Outcome of a verification suite; passes iff every check passes."""

    suite: str
    n_max: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, id: str, indices: list[int], ok: bool, witness: str | None = None):
        self.checks.append(Check(id, indices, ok, None if ok else witness))

    def to_json(self) -> str:
        payload = {
            "suite": self.suite,
            "n_max": self.n_max,
            "checks": [c.as_dict() for c in self.checks],
            "pass": self.passed,
        }
        return json.dumps(payload, indent=2)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["id", "indices", "pass", "witness"])
        for c in self.checks:
            indices = ";".join(str(i) for i in c.indices)
            writer.writerow([c.id, indices, str(c.ok).lower(), c.witness or ""])
        return buffer.getvalue()


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


def _suite_lowner(n_max: int) -> Report:
    report = Report("lowner", n_max)
    table = lowner.coeff_table(n_max)
    for n in range(1, n_max + 1):
        ok = all(
            lowner.coeff_closed(n, j) == table[(n, j)] for j in range(1, n + 1)
        )
        report.add("closed-vs-recurrence", [n], ok)
    newton_max = min(n_max, 30)
    chain = series.koebe_chain(newton_max)
    for n in range(1, newton_max + 1):
        got = chain.coefficient(n)
        want = lowner.chain_poly(n)
        report.add(
            "newton-vs-closed", [n], got == want,
            None if got == want else f"z^{n}: {got} != {want}",
        )
    for n in range(1, n_max + 1):
        residual = lowner.ode_residual(n)
        report.add(
            "ode-residual", [n], residual.is_zero(),
            None if residual.is_zero() else str(residual),
        )
    for n in range(2, n_max + 1):
        residual = lowner.system_residual(n)
        report.add(
            "system-residual", [n], residual.is_zero(),
            None if residual.is_zero() else str(residual),
        )
    for n in range(2, n_max + 1):
        value = lowner.chain_poly(n)(1)
        report.add(
            "vanishes-at-t0", [n], value == 0,
            None if value == 0 else format_rational(value),
        )
    return report


def _suite_theorem2(n_max: int) -> Report:
    report = Report("theorem2", n_max)
    for n in range(1, n_max + 1):
        slope_ok = True
        init_ok = True
        parity_ok = True
        witness = None
        for k in range(1, n + 1):
            tau = dbw.debranges_poly(n, k)
            lam = dbw.weinstein_poly(n, k)
            if series.time_derivative(tau) != -k * lam:
                slope_ok = False
                witness = f"(n,k)=({n},{k})"
            if tau(1) != n + 1 - k:
                init_ok = False
            expected = Fraction(-k) if (n - k) % 2 == 0 else Fraction(0)
            if dbw.debranges_slope_at_zero(n, k) != expected:
                parity_ok = False
        report.add("slope-identity", [n], slope_ok, witness)
        report.add("initial-value", [n], init_ok)
        report.add("slope-parity", [n], parity_ok)
    series_max = min(n_max, 25)
    for k in range(1, series_max + 1):
        w_series = dbw.weinstein_series(k, series_max + 1)
        ok = all(
            w_series.coefficient(n + 1) == dbw.weinstein_poly(n, k)
            for n in range(k, series_max + 1)
        )
        report.add("weinstein-series-vs-closed", [k], ok)
    return report


def _suite_theorem3(n_max: int) -> Report:
    report = Report("theorem3", n_max)
    gen_max = min(n_max, 25)
    for k in range(1, gen_max + 1):
        gen = dbw.debranges_generating_series(k, gen_max + 1)
        ok = all(
            gen.coefficient(n + 1) == dbw.debranges_poly(n, k)
            for n in range(k, gen_max + 1)
        )
        report.add("generating-coefficients", [k], ok)
    for k in range(1, min(4, n_max) + 1):
        ok = dbw.explicit_generating_check(k, 12, 8)
        report.add("y-expansion", [k], ok)
    return report


def _suite_gegenbauer(n_max: int) -> Report:
    report = Report("gegenbauer", n_max)
    for n in range(2, min(n_max, 40) + 1):
        report.add("chain-difference", [n], orthopoly.chain_gegenbauer_check(n))
    for n in range(2, min(n_max, 25) + 1):
        report.add("expansion-at-one", [n], orthopoly.gegenbauer_expansion_check(n))
    # the expansion genuinely fails at n = 1; the suite records that fact
    report.add(
        "expansion-at-one-fails-at-n1", [1],
        not orthopoly.gegenbauer_expansion_check(1),
    )
    return report


def _suite_hypergeometric(n_max: int) -> Report:
    report = Report("hypergeometric", n_max)
    y = Poly.variable("y")
    for n in range(1, min(n_max, 30) + 1):
        value = n * y * hypsum.pfq_terminating([1 - n, n + 1], [3], y)
        report.add("chain-2f1", [n], value == lowner.chain_poly(n))
    lam_max = min(n_max, 25)
    for n in range(1, lam_max + 1):
        ok = True
        for k in range(1, n + 1):
            scale = dbw.binomial(n + k + 1, n - k)
            prefactor = Poly.monomial(scale, k, "y")
            value = prefactor * hypsum.pfq_terminating(
                [Fraction(2 * k + 1, 2), n + k + 2, k - n],
                [Fraction(2 * k + 3, 2), 2 * k + 1],
                y,
            )
            if value != dbw.weinstein_poly(n, k):
                ok = False
        report.add("weinstein-3f2", [n], ok)
    x = Poly.variable("x")
    half_one_minus_x = Poly([Fraction(1, 2), Fraction(-1, 2)], "x")
    for n in range(2, min(n_max, 25) + 1):
        value = (1 - x) * hypsum.pfq_terminating([1 - n, n], [2], half_one_minus_x)
        report.add(
            "gegenbauer-2f1", [n], value == orthopoly.gegenbauer_minus_half(n)
        )
    return report


def _suite_gosper(n_max: int) -> Report:
    report = Report("gosper", n_max)
    for n in range(1, min(n_max, 10) + 1):
        for j in range(1, n + 1):
            src = f"({n}+1-l) * binom(l+{j}-1, l-{j})"
            term = hypsum.parse_term(src, "l")
            cert = hypsum.gosper(hypsum.term_ratio(term))
            if cert is None:
                report.add("telescoping-certificate", [n, j], False, "not summable")
                continue
            ok = hypsum.verify_certificate(term, cert, j, n)
            total = hypsum.telescoped_sum(term, cert, j, n)
            closed = Fraction(
                (j + n) * (n + 1 + j), 2 * j * (2 * j + 1)
            ) * binomial(n + j - 1, n - j)
            ok = ok and total == closed and total == hypsum.weighted_binomial_sum(n, j)
            report.add(
                "telescoping-certificate", [n, j], ok,
                None if ok else f"sum {total} vs closed {closed}",
            )
    arith = hypsum.parse_term("l", "l")
    cert = hypsum.gosper(hypsum.term_ratio(arith))
    report.add(
        "arithmetic-series", [], cert is not None
        and hypsum.verify_certificate(arith, cert, 1, 20),
    )
    fact = hypsum.parse_term("fact(l)", "l")
    report.add("factorial-not-summable", [], hypsum.gosper(hypsum.term_ratio(fact)) is None)
    inv_fact = hypsum.parse_term("1/fact(l)", "l")
    report.add(
        "inverse-factorial-not-summable", [],
        hypsum.gosper(hypsum.term_ratio(inv_fact)) is None,
    )
    return report


def _suite_positivity(n_max: int) -> Report:
    report = Report("positivity", n_max)
    grid = [Fraction(i, 10) for i in range(1, 10)]
    violations = dbw.positivity_scan(n_max, grid)
    report.add(
        "positivity-scan", [n_max], not violations,
        None if not violations else "; ".join(str(v) for v in violations[:5]),
    )
    return report


def _suite_askey_gasper(n_max: int) -> Report:
    report = Report("askey-gasper", n_max)
    grid = [Fraction(i, 10) for i in range(-10, 11)]
    sum_max = min(n_max, 20)
    for k in range(0, 9):
        ok = True
        witness = None
        for n in range(sum_max + 1):
            for x in grid:
                value = orthopoly.askey_gasper_sum(n, k, x)
                if value < 0:
                    ok = False
                    witness = f"n={n}, x={format_rational(x)}: {format_rational(value)}"
        report.add("jacobi-partial-sums", [k], ok, witness)
    scan = orthopoly.gegenbauer_partial_sum_scan(sum_max, grid)
    report.add(
        "sqrt-coefficient-positivity", [sum_max], not scan,
        None if not scan else str(scan[0]),
    )
    for k in range(1, min(3, n_max) + 1):
        report.add(
            "jacobi-decomposition", [k], dbw.jacobi_decomposition_check(k, 12)
        )
    return report


_SUITES = {
    "lowner": _suite_lowner,
    "theorem2": _suite_theorem2,
    "theorem3": _suite_theorem3,
    "gegenbauer": _suite_gegenbauer,
    "hypergeometric": _suite_hypergeometric,
    "gosper": _suite_gosper,
    "positivity": _suite_positivity,
    "askey-gasper": _suite_askey_gasper,
}


def run_suite(name: str, n_max: int) -> Report:
    """Run one verification suite (or 'all') and return its report."""
    if name == "all":
        combined = Report("all", n_max)
        for suite_name in _SUITES:
            sub = _SUITES[suite_name](n_max)
            for check in sub.checks:
                combined.checks.append(
                    Check(f"{suite_name}/{check.id}", check.indices, check.ok, check.witness)
                )
        return combined
    return _SUITES[name](n_max)


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def _table_rows(kind: str, n_max: int) -> tuple[list[str], list[tuple]]:
    if kind == "lowner":
        table = lowner.coeff_table(n_max)
        rows = [
            (n, j, table[(n, j)])
            for n in range(1, n_max + 1)
            for j in range(1, n + 1)
        ]
        return ["n", "j", "value"], rows
    if kind == "lambda":
        rows = [
            (n, k, j, dbw.weinstein_coeff(n, k, j))
            for n in range(1, n_max + 1)
            for k in range(1, n + 1)
            for j in range(k, n + 1)
        ]
        return ["n", "k", "j", "value"], rows
    if kind == "tau":
        rows = []
        for n in range(1, n_max + 1):
            for k in range(1, n + 1):
                tau = dbw.debranges_poly(n, k)
                for j in range(k, n + 1):
                    rows.append((n, k, j, tau.coeff(j)))
        return ["n", "k", "j", "value"], rows
    raise ValueError(f"unknown table kind {kind!r}")


def _render_value(value: Fraction, as_float: bool) -> str:
    if as_float:
        return format(float(value), ".17g")
    return format_rational(value)


def cmd_table(args) -> int:
    header, rows = _table_rows(args.kind, args.n)
    if args.format == "csv":
        lines = [",".join(header)]
        for row in rows:
            *indices, value = row
            lines.append(
                ",".join([str(i) for i in indices] + [_render_value(value, args.float)])
            )
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        entries = []
        for row in rows:
            *indices, value = row
            entry = dict(zip(header[:-1], indices))
            entry["value"] = (
                float(value) if args.float else format_rational(value)
            )
            entries.append(entry)
        payload = {"kind": args.kind, "n_max": args.n, "entries": entries}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return 0


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _eval_poly_float(p: Poly, y: float) -> float:
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * y + float(c)
    return acc


def _eval_target(args, parser: argparse.ArgumentParser) -> Poly | None:
    kind = args.kind
    if kind in ("A", "tau", "lambda"):
        if args.n is None:
            parser.error(f"eval {kind} requires --n")
        if kind == "A":
            return lowner.chain_poly(args.n)
        if args.k is None:
            parser.error(f"eval {kind} requires --k")
        if kind == "tau":
            return dbw.debranges_poly(args.n, args.k)
        return dbw.weinstein_poly(args.n, args.k)
    return None


def cmd_eval(args, parser: argparse.ArgumentParser) -> int:
    if args.kind in ("A", "tau", "lambda"):
        poly = _eval_target(args, parser)
        if args.y is not None:
            sys.stdout.write(format_rational(poly(args.y)) + "\n")
        else:
            y = math.exp(-args.t)
            sys.stdout.write(format(_eval_poly_float(poly, y), ".17g") + "\n")
        return 0
    # series kinds: W and B
    if args.k is None or args.order is None:
        parser.error(f"eval {args.kind} requires --k and --order")
    if args.kind == "W":
        zs = dbw.weinstein_series(args.k, args.order)
    else:
        zs = dbw.debranges_generating_series(args.k, args.order)
    lines = []
    if args.y is not None:
        for m, value in enumerate(zs.eval_inner(args.y)):
            lines.append(f"{m},{format_rational(value)}")
    else:
        y = math.exp(-args.t)
        for m, coeff in enumerate(zs.coeffs):
            lines.append(f"{m},{format(_eval_poly_float(coeff, y), '.17g')}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# gosper
# ---------------------------------------------------------------------------


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("range must look like 3..7")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError("range bounds must be integers") from exc
    if hi_i < lo_i:
        raise argparse.ArgumentTypeError("range upper bound below lower bound")
    return lo_i, hi_i


def cmd_gosper(args) -> int:
    try:
        term = hypsum.parse_term(args.term, args.var)
        ratio = hypsum.term_ratio(term)
    except (hypsum.TermSyntaxError, hypsum.TermSemanticError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    certificate = hypsum.gosper(ratio)
    if certificate is None:
        sys.stdout.write("NOT GOSPER-SUMMABLE\n")
        if args.range is not None:
            lo, hi = args.range
            total = sum(
                (hypsum.term_value(term, l) for l in range(lo, hi + 1)), Fraction(0)
            )
            sys.stdout.write(f"sum[{lo}..{hi}] = {format_rational(total)}\n")
        return 0
    r = certificate.multiplier
    sys.stdout.write(f"R({args.var}) = ({r.num}) / ({r.den})\n")
    if args.range is not None:
        lo, hi = args.range
        total = hypsum.telescoped_sum(term, certificate, lo, hi)
        sys.stdout.write(f"sum[{lo}..{hi}] = {format_rational(total)}\n")
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="debranges",
        description="Exact tables, evaluations and identity verification for "
        "the Koebe chain and the de Branges / Weinstein function systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="emit a coefficient table")
    p_table.add_argument("kind", choices=["lowner", "lambda", "tau"])
    p_table.add_argument("--n", type=int, default=30, metavar="N",
                         help="largest n (default 30)")
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")
    p_table.add_argument("--float", action="store_true",
                         help="render values as binary64 instead of p/q")

    p_eval = sub.add_parser("eval", help="evaluate a function exactly or in binary64")
    p_eval.add_argument("kind", choices=["A", "tau", "lambda", "W", "B"])
    p_eval.add_argument("--n", type=int)
    p_eval.add_argument("--k", type=int)
    p_eval.add_argument("--order", type=int, help="series truncation for W/B")
    group = p_eval.add_mutually_exclusive_group(required=True)
    group.add_argument("--y", type=_parse_rational,
                       help="exact evaluation point y = e^(-t), as p/q")
    group.add_argument("--t", type=float, help="binary64 evaluation at time t")

    p_verify = sub.add_parser("verify", help="run an identity verification suite")
    p_verify.add_argument(
        "suite",
        choices=["all"] + sorted(_SUITES),
    )
    p_verify.add_argument("--n", type=int, default=30, metavar="N",
                          help="sweep bound (default 30; larger is slower)")
    p_verify.add_argument("--format", choices=["csv", "json"], default="json")

    p_gosper = sub.add_parser("gosper", help="find a telescoping certificate")
    p_gosper.add_argument("term", help="hypergeometric term expression")
    p_gosper.add_argument("--var", required=True, help="summation variable")
    p_gosper.add_argument("--range", type=_parse_range, metavar="LO..HI",
                          help="also telescope the sum over this range")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        if args.n < 1:
            parser.error("--n must be at least 1")
        return cmd_table(args)
    if args.command == "eval":
        try:
            return cmd_eval(args, parser)
        except (ValueError, IndexError) as exc:
            parser.error(str(exc))
    if args.command == "verify":
        if args.n < 1:
            parser.error("--n must be at least 1")
        report = run_suite(args.suite, args.n)
        if args.format == "json":
            sys.stdout.write(report.to_json() + "\n")
        else:
            sys.stdout.write(report.to_csv())
        return 0 if report.passed else 1
    if args.command == "gosper":
        return cmd_gosper(args)
    raise AssertionError("unreachable")  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
