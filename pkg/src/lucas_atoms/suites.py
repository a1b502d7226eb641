"""Batch verification suites behind ``lucas-atoms verify``.

Each suite expands its bounds into a list of (function, args) tasks.  A task
returns a list of :class:`IdentityCheck`; results are recorded in task order,
so the report is the same whether or not a worker pool is used.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor

from .atoms import (
    ConsistencyError,
    QuotientSpec,
    cyclotomic,
    divisors,
    is_polynomial,
    lucas_atom,
    primes_upto,
    product_poly,
    totient,
)
from .analogues import lucanomial_spec
from .coxeter import (
    CoxeterGroup,
    fuss_catalan,
    fuss_catalan_number,
    fuss_narayana,
    fuss_narayana_number,
    table_groups,
)
from .gamma import gamma_inverse
from .identities import Identity, identity_instances
from .lucas import lucas
from .poly import IntPoly2, NotDivisible, exact_divide
from .report import IdentityCheck, VerifyReport
from .theorems.evaluations import (
    mod2_checks,
    mod3_checks,
    nu_p_phi,
    nu_p_predicted,
    predicted_top_coeff,
)
from .theorems.reductions import p2p_closed_form, phi_atom_corollary, reduce_pn, reduce_prime_power
from .theorems.two_square import NoAnalogue, two_square_gauss, two_square_lucas

__all__ = ["SUITES", "TWO_SQUARE_TARGETS", "suite_tasks", "run_suite"]

TWO_SQUARE_TARGETS = (5, 13, 17, 21, 29, 33, 4, 6, 10, 14, 7)

_S = IntPoly2.monomial(1, 0)
_T = IntPoly2.monomial(0, 1)


def _atom_product(n):
    acc = product_poly(())
    for d in divisors(n):
        acc = acc * lucas_atom(d)
    return [IdentityCheck("ATOM_PRODUCT", {"n": n}, acc, lucas(n))]


def _gamma_roundtrip(n):
    return [IdentityCheck("GAMMA_ROUNDTRIP", {"n": n}, gamma_inverse(lucas_atom(n)), cyclotomic(n))]


def divides_exactly(spec: QuotientSpec) -> bool:
    """Oracle: does prod {n_i} divide prod {k_j} exactly, by long division."""
    try:
        exact_divide(product_poly(spec.numerator), product_poly(spec.denominator))
        return True
    except NotDivisible:
        return False


def _gate_oracle(num, den):
    spec = QuotientSpec(num, den)
    params = {"num": list(spec.numerator), "den": list(spec.denominator)}
    return [IdentityCheck("GATE_ORACLE", params, is_polynomial(spec)[0], divides_exactly(spec))]


def random_specs(count: int, max_index: int = 40, seed: int = 0) -> list[QuotientSpec]:
    """Random quotients, roughly half built to be polynomial.

    Three shapes rotate: fully random indices, denominators made of divisors
    of distinct numerator entries (always polynomial) with an occasional
    perturbation, and small lucanomials.
    """
    rng = random.Random(seed)
    out = []
    for i in range(count):
        shape = i % 3
        if shape == 0:
            num = [rng.randint(1, max_index) for _ in range(rng.randint(1, 4))]
            den = [rng.randint(1, max_index) for _ in range(rng.randint(1, 3))]
        elif shape == 1:
            num = [rng.randint(2, max_index) for _ in range(rng.randint(1, 4))]
            picked = rng.sample(num, rng.randint(1, len(num)))
            den = [rng.choice(divisors(x)) for x in picked]
            if rng.random() < 0.3:
                den[rng.randrange(len(den))] += 1
        else:
            n = rng.randint(2, min(max_index, 14))
            k = rng.randint(1, n - 1)
            spec = lucanomial_spec(n, k)
            num, den = list(spec.numerator), list(spec.denominator)
            if rng.random() < 0.5:
                den.append(rng.randint(2, max_index))
        out.append(QuotientSpec(tuple(num), tuple(den)))
    return out


def _coxeter(name, rank, m, k):
    g = CoxeterGroup(name, rank, m)
    checks = []
    for label, build, number in (
        ("FUSS_CATALAN", fuss_catalan, fuss_catalan_number),
        ("FUSS_NARAYANA", fuss_narayana, fuss_narayana_number),
    ):
        params = {"group": str(g), "k": k}
        try:
            poly = build(g, k)
        except ConsistencyError as exc:
            checks.append(IdentityCheck(label, params, str(exc), "passes the atom gate"))
            continue
        checks.append(IdentityCheck(label + "_NONNEGATIVE", params, poly.min_coeff() >= 0, True))
        checks.append(IdentityCheck(label + "_AT_2_-1", params, poly.evaluate(2, -1), number(g, k)))
    return checks


def _identity(fn, args):
    return [fn(*args)]


def _reduce_pn(p, n):
    return [IdentityCheck("REDUCE_PN", {"p": p, "n": n}, reduce_pn(p, n), lucas_atom(p * n))]


def _reduce_prime_power(p, m, n):
    params = {"p": p, "m": m, "n": n}
    return [IdentityCheck("REDUCE_PRIME_POWER", params, reduce_prime_power(p, m, n), lucas_atom(p**m * n))]


def _phi_corollary(p, n, m, sign):
    return [phi_atom_corollary(p, n, m, sign)]


def _p2p(p):
    closed = p2p_closed_form(p)
    return [
        IdentityCheck("P2P_CLOSED_FORM", {"p": p}, closed, lucas_atom(2 * p)),
        IdentityCheck("P2P_VS_LUCAS", {"p": p}, _S * closed, lucas(p + 1) + _T * lucas(p - 1)),
    ]


def _two_square(n):
    """Witness checks for one n; a rejection counts as correct only for n = 3 (mod 4)."""
    checks = []
    forms = [("LUCAS", two_square_lucas)]
    if n % 2:
        forms.append(("GAUSS", two_square_gauss))
    for kind, solve in forms:
        params = {"n": n, "kind": kind}
        expect_rejection = n % 4 == 3
        try:
            w = solve(n)
        except NoAnalogue:
            checks.append(IdentityCheck("TWO_SQUARE_REJECTED", params, expect_rejection, True))
            continue
        except ValueError as exc:
            checks.append(IdentityCheck("TWO_SQUARE", params, f"no witness: {exc}", "witness"))
            continue
        if expect_rejection:
            checks.append(IdentityCheck("TWO_SQUARE_REJECTED", params, False, True))
            continue
        checks.append(IdentityCheck("TWO_SQUARE_IDENTITY", params, w.identity_holds(), True))
        checks.append(IdentityCheck("TWO_SQUARE_SDEG", params, list(w.violations), []))
    return checks


def _mod_evaluations(n):
    checks = []
    if n >= 2:
        checks.extend(mod2_checks(n))
    if n >= 3:
        checks.extend(mod3_checks(n))
        atom = lucas_atom(n)
        phi = totient(n)
        checks.append(IdentityCheck("LEADING_C0", {"n": n}, atom.coeff(phi, 0), 1))
        checks.append(IdentityCheck("LEADING_CTOP", {"n": n}, atom.coeff(0, phi // 2), predicted_top_coeff(n)))
    return checks


def _valuations(n, max_b, primes):
    return [
        IdentityCheck(f"NU{p}", {"n": n, "b": b}, nu_p_phi(p, n, b), nu_p_predicted(p, n, b))
        for p in primes
        for b in range(-max_b, max_b + 1)
    ]


def _phi4_at_7():
    value = cyclotomic(4).evaluate(7)
    return [
        IdentityCheck("PHI4_AT_7", {}, value, 50),
        IdentityCheck("NU2_PHI4_AT_7", {}, nu_p_phi(2, 4, 7), 1),
        IdentityCheck("NU5_PHI4_AT_7", {}, nu_p_phi(5, 4, 7), 2),
    ]


def suite_tasks(name: str, **bounds) -> list[tuple]:
    """Expand a suite and its bounds into (function, args) tasks."""
    if name == "atoms-product":
        return [(_atom_product, (n,)) for n in range(1, bounds.get("max_n", 200) + 1)]
    if name == "gamma-roundtrip":
        return [(_gamma_roundtrip, (n,)) for n in range(2, bounds.get("max_n", 200) + 1)]
    if name == "gate-oracle":
        specs = random_specs(bounds.get("count", 500), bounds.get("max_index", 40), bounds.get("seed", 0))
        return [(_gate_oracle, (s.numerator, s.denominator)) for s in specs]
    if name == "identities":
        which = bounds.get("suite")
        names = [Identity(which)] if which else list(Identity)
        return [
            (_identity, (fn, args))
            for ident in names
            for fn, args in identity_instances(
                ident, bounds.get("max_m", 60), bounds.get("max_n", 60), bounds.get("max_p", 13)
            )
        ]
    if name == "coxeter":
        return [
            (_coxeter, (g.family, g.rank, g.m, k))
            for g in table_groups(bounds.get("max_rank", 8), bounds.get("max_m", 12))
            for k in range(1, bounds.get("max_k", 5) + 1)
        ]
    if name == "reductions":
        limit, corollary = bounds.get("max_n", 500), bounds.get("corollary_max", 300)
        sign = bounds.get("corollary_sign")
        tasks = []
        for p in primes_upto(limit // 2):
            tasks += [(_reduce_pn, (p, n)) for n in range(2, limit // p + 1) if n % p]
            m = 2
            while p**m <= limit:
                tasks += [(_reduce_prime_power, (p, m, n)) for n in range(1, limit // p**m + 1) if n % p]
                m += 1
            tasks += [(_phi_corollary, (p, n, None, sign)) for n in range(2, corollary // p + 1) if n % p]
            m = 2
            while p**m <= corollary:
                tasks += [(_phi_corollary, (p, n, m, sign)) for n in range(1, corollary // p**m + 1) if n % p]
                m += 1
        tasks += [(_p2p, (p,)) for p in primes_upto(bounds.get("max_p", 31)) if p > 2]
        return tasks
    if name == "two-square":
        ns = bounds.get("ns") or TWO_SQUARE_TARGETS
        return [(_two_square, (n,)) for n in ns]
    if name == "mod-evaluations":
        return [(_mod_evaluations, (n,)) for n in range(2, bounds.get("max_n", 500) + 1)]
    if name == "valuations":
        primes = tuple(bounds.get("primes", (2, 3)))
        tasks = [(_valuations, (n, bounds.get("max_b", 20), primes)) for n in range(3, bounds.get("max_n", 200) + 1)]
        return tasks + [(_phi4_at_7, ())]
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")


SUITES = (
    "atoms-product",
    "gamma-roundtrip",
    "gate-oracle",
    "identities",
    "coxeter",
    "reductions",
    "two-square",
    "mod-evaluations",
    "valuations",
)


def _call(task):
    fn, args = task
    return fn(*args)


def run_suite(name: str, jobs: int = 1, **bounds) -> VerifyReport:
    tasks = suite_tasks(name, **bounds)
    report = VerifyReport(name)
    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_call, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_call(t) for t in tasks]
    for checks in results:
        for check in checks:
            report.record(check)
    report.elapsed = time.perf_counter() - start
    return report
