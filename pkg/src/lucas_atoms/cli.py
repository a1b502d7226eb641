"""Command-line interface: ``lucas-atoms <verb> ...``.

Exit status: 0 success, 1 usage error, 2 mathematical rejection (not a
polynomial, no analogue, no product formula), 3 internal inconsistency or a
verification suite with failures.
"""
from __future__ import annotations

import argparse
import json
import sys

from .analogues import lucanomial, m_divisible_lucanomial
from .atoms import ConsistencyError, NotPolynomial, QuotientSpec, cyclotomic, lucas_atom, quotient_poly, totient
from .coxeter import NoProductFormula, fuss_catalan, narayana, parse_group, rational_catalan
from .gamma import gamma_expand, gamma_inverse, gamma_map
from .identities import Identity
from .lucas import lucas
from .poly import IntPoly2, ParseError, parse, to_canonical_string, to_serialized
from .report import VerifyReport
from .suites import SUITES, run_suite, suite_tasks
from .theorems import NoAnalogue, TwoSquareWitness, reduce_pn, reduce_prime_power, two_square_gauss, two_square_lucas

EXIT_OK, EXIT_USAGE, EXIT_REJECTED, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _point(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers like 2,-1, got {text!r}")
    if not 1 <= len(values) <= 2:
        raise argparse.ArgumentTypeError("expected one or two comma-separated integers")
    return values


def _poly_payload(p: IntPoly2, **meta) -> dict:
    out = dict(meta)
    out["poly"] = to_serialized(p)
    out["text"] = to_canonical_string(p)
    return out


def _gamma_of(p: IntPoly2) -> list[int] | None:
    if p.is_zero():
        return None
    return list(gamma_expand(p).gammas)


class _Output:
    def __init__(self, args):
        self.json = args.format == "json"
        self.point = getattr(args, "eval", None)

    def poly(self, p: IntPoly2, **meta) -> None:
        if self.point is not None:
            value = p.evaluate(*self.point)
            if self.json:
                print(json.dumps({**meta, "at": list(self.point), "value": value}))
            else:
                print(value)
            return
        if self.json:
            print(json.dumps(_poly_payload(p, **meta)))
        else:
            print(to_canonical_string(p))


def _indexed(n: int) -> dict:
    if n < 1:
        raise UsageError("n must be a positive integer")
    return {"n": n, "phi": totient(n)}


def cmd_lucas(args, out):
    out.poly(lucas(args.n), **_indexed(args.n))


def cmd_atom(args, out):
    meta = _indexed(args.n)
    if args.n >= 2:
        meta["gamma"] = _gamma_of(cyclotomic(args.n))
    out.poly(lucas_atom(args.n), **meta)


def cmd_cyclotomic(args, out):
    meta = _indexed(args.n)
    meta["gamma"] = _gamma_of(cyclotomic(args.n)) if args.n >= 2 else None
    out.poly(cyclotomic(args.n), **meta)


def cmd_gamma(args, out):
    p = parse(args.expr)
    if args.inverse:
        out.poly(gamma_inverse(p))
        return
    if not p.is_univariate():
        raise UsageError("gamma expects a univariate palindromic polynomial")
    gv = gamma_expand(p) if not p.is_zero() else None
    meta = {"d": gv.d, "gamma": list(gv.gammas)} if gv else {"gamma": None}
    out.poly(gamma_map(p), **meta)


def cmd_quotient(args, out):
    spec = QuotientSpec(tuple(args.num), tuple(args.den))
    out.poly(quotient_poly(spec), num=list(spec.numerator), den=list(spec.denominator))


def cmd_lucanomial(args, out):
    if args.m == 1:
        p = lucanomial(args.n, args.k)
    else:
        p = m_divisible_lucanomial(args.n, args.k, args.m)
    out.poly(p, n=args.n, k=args.k, m=args.m)


def cmd_catalan(args, out):
    g = parse_group(args.group)
    out.poly(fuss_catalan(g, args.k), group=str(g), k=args.k, degrees=list(g.degrees))


def cmd_rational_catalan(args, out):
    out.poly(rational_catalan(args.a, args.b), a=args.a, b=args.b)


def cmd_narayana(args, out):
    g = parse_group(args.group)
    meta = {"group": str(g), "k": args.k, "i": 1 if args.i is None else args.i}
    out.poly(narayana(g, args.k, args.i), **meta)


def cmd_reduce(args, out):
    if args.m is None or args.m == 1:
        p, index = reduce_pn(args.p, args.n), args.p * args.n
    else:
        p, index = reduce_prime_power(args.p, args.m, args.n), args.p**args.m * args.n
    if p != lucas_atom(index):
        raise ConsistencyError(f"reduction disagrees with P_{index}")
    out.poly(p, **_indexed(index))


def _witness_json(w: TwoSquareWitness) -> dict:
    return {
        "n": w.n,
        "kind": w.kind,
        "atom_index": w.atom_index,
        "first": to_serialized(w.first),
        "first_text": to_canonical_string(w.first),
        "second": to_serialized(w.second),
        "second_text": to_canonical_string(w.second),
        "identity_holds": w.identity_holds(),
        "violations": list(w.violations),
    }


def _witness_text(w: TwoSquareWitness) -> list[str]:
    if w.kind == "LUCAS":
        lines = [f"P_{w.atom_index} = G^2 + {w.n}*t*H^2", f"G = {w.first}", f"H = {w.second}"]
    else:
        lines = [f"4*P_{w.atom_index} = E^2 - {w.n}*t^2*F^2", f"E = {w.first}", f"F = {w.second}"]
    lines.append("identity: " + ("holds" if w.identity_holds() else "FAILS"))
    lines += [f"sdeg mismatch: {v}" for v in w.violations]
    return lines


def cmd_two_square(args, out):
    solve = two_square_lucas if args.form == "lucas" else two_square_gauss
    w = solve(args.n)
    if out.json:
        print(json.dumps(_witness_json(w)))
    else:
        print("\n".join(_witness_text(w)))


def cmd_eval(args, out):
    p = parse(args.expr)
    point = (args.x,) if args.y is None else (args.x, args.y)
    value = p.evaluate(*point)
    if out.json:
        print(json.dumps({"text": to_canonical_string(p), "at": list(point), "value": value}))
    else:
        print(value)


_BOUND_FLAGS = ("max_n", "max_m", "max_p", "max_k", "max_rank", "max_b", "count", "seed", "max_index",
                "corollary_max", "corollary_sign", "suite")


def cmd_verify(args, out):
    bounds = {k: getattr(args, k) for k in _BOUND_FLAGS if getattr(args, k) is not None}
    if args.n:
        if args.name != "two-square":
            raise UsageError("--n only applies to the two-square suite")
        bounds["ns"] = tuple(args.n)
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    report = run_suite(args.name, jobs=args.jobs, **bounds)
    witnesses = []
    if args.name == "two-square":
        for _, (n,) in suite_tasks("two-square", **bounds):
            for solve in (two_square_lucas, two_square_gauss):
                if solve is two_square_gauss and n % 2 == 0:
                    continue
                try:
                    witnesses.append(solve(n))
                except ValueError:
                    pass
    if out.json:
        payload = report.to_json(timing=args.timing)
        if witnesses:
            payload["witnesses"] = [_witness_json(w) for w in witnesses]
        print(json.dumps(payload))
    else:
        for w in witnesses:
            print("\n".join(_witness_text(w)))
        print(report.summary())
        for failure in report.failures:
            print(f"FAIL {json.dumps(failure['params'])}: expected {failure['expected']}, got {failure['actual']}")
    if args.timing and not out.json:
        print(f"elapsed {report.elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--eval", type=_point, metavar="X,Y", help="print the value at an integer point")

    parser = _Parser(prog="lucas-atoms", description="Lucas polynomials, Lucas atoms, and their analogues.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    verb("lucas", cmd_lucas, "the Lucas polynomial {n}").add_argument("n", type=int)
    verb("atom", cmd_atom, "the Lucas atom P_n").add_argument("n", type=int)
    verb("cyclotomic", cmd_cyclotomic, "the cyclotomic polynomial Phi_n(q)").add_argument("n", type=int)

    p = verb("gamma", cmd_gamma, "Gamma of a palindromic polynomial in q")
    p.add_argument("expr")
    p.add_argument("--inverse", action="store_true", help="substitute s = 1+q, t = -q instead")

    p = verb("quotient", cmd_quotient, "prod {num} / prod {den} through the atom gate")
    p.add_argument("--num", type=int, nargs="*", default=[])
    p.add_argument("--den", type=int, nargs="*", default=[])

    p = verb("lucanomial", cmd_lucanomial, "the Lucanomial {n choose k}, optionally m-divisible")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--m", type=int, default=1)

    p = verb("catalan", cmd_catalan, "Fuss-Catalan analogue of a Coxeter group")
    p.add_argument("--group", required=True)
    p.add_argument("--k", type=int, default=1)

    p = verb("rational-catalan", cmd_rational_catalan, "rational Catalan analogue Cat{a,b}")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = verb("narayana", cmd_narayana, "Fuss-Narayana analogue of a Coxeter group")
    p.add_argument("--group", required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--i", type=int)

    p = verb("reduce", cmd_reduce, "P_pn or P_(p^m n) from a smaller atom")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)

    p = verb("two-square", cmd_two_square, "two-square witness for an atom")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--form", choices=("lucas", "gauss"), default="lucas")

    p = verb("eval", cmd_eval, "evaluate a polynomial at an integer point")
    p.add_argument("expr")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int, nargs="?")

    p = verb("verify", cmd_verify, "run a verification suite")
    p.add_argument("name", choices=SUITES, metavar="SUITE")
    for flag in ("max-n", "max-m", "max-p", "max-k", "max-rank", "max-b", "count", "seed", "max-index",
                 "corollary-max"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--corollary-sign", type=int, choices=(1, -1))
    p.add_argument("--suite", choices=[i.value for i in Identity], help="identity suite to run")
    p.add_argument("--n", type=int, action="append", help="two-square target (repeatable)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true")
    return parser


def _reject(out: _Output, kind: str, reason: str, **extra) -> int:
    if out.json:
        print(json.dumps({"error": kind, "reason": reason, **extra}))
    else:
        print(f"{kind}: {reason}")
    return EXIT_REJECTED


def verify(suite: str, jobs: int = 1, **bounds) -> VerifyReport:
    """Library form of ``lucas-atoms verify``."""
    return run_suite(suite, jobs=jobs, **bounds)


def run(argv=None) -> int:
    """Parse ``argv``, execute the verb, print its output, and return the exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Output(args)
    try:
        code = args.func(args, out)
    except NotPolynomial as exc:
        return _reject(out, "not-polynomial", exc.reason, witness={str(d): e for d, e in exc.witness.items()})
    except NoAnalogue as exc:
        return _reject(out, "no-analogue", str(exc))
    except NoProductFormula as exc:
        return _reject(out, "no-product-formula", str(exc))
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, ParseError, ValueError) as exc:
        print(f"lucas-atoms: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if code is None else code


main = run
