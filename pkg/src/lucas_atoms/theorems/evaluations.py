"""Leading coefficients of atoms, their residues mod 2 and 3, and valuations of Phi_n(b)."""
from __future__ import annotations

import time

from ..atoms import ConsistencyError, cyclotomic, factorize, is_prime, lucas_atom, totient
from ..report import IdentityCheck, VerifyReport

__all__ = [
    "MOD2_POINTS",
    "MOD3_POINTS",
    "leading_coeffs",
    "predicted_top_coeff",
    "mod2_predicate",
    "mod3_predicate",
    "nu_p_phi",
    "nu_p_predicted",
    "mod2_checks",
    "mod3_checks",
    "mod2_sweep",
    "mod3_sweep",
    "valuation_sweep",
]

MOD2_POINTS = ((0, 0), (1, 0), (0, 1), (1, 1))
MOD3_POINTS = ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, 1), (1, -1), (-1, -1))


def _prime_power_base(n: int) -> int | None:
    """p if n = p^m with m >= 1, else None."""
    if n < 2:
        return None
    f = factorize(n)
    return next(iter(f)) if len(f) == 1 else None


def _is_power(n: int, p: int, at_least: int = 0) -> bool:
    """n = p^m for some m >= at_least."""
    m = 0
    while n % p == 0:
        n //= p
        m += 1
    return n == 1 and m >= at_least


def predicted_top_coeff(n: int) -> int:
    """p when n = 2 p^m (m >= 1), otherwise 1."""
    if n % 2 == 0:
        p = _prime_power_base(n // 2)
        if p is not None:
            return p
    return 1


def leading_coeffs(n: int) -> tuple[int, int]:
    """(coefficient of s^phi(n), coefficient of t^(phi(n)/2)) in P_n."""
    if n < 3:
        raise ValueError("leading_coeffs needs n >= 3")
    atom = lucas_atom(n)
    phi = totient(n)
    c0, top = atom.coeff(phi, 0), atom.coeff(0, phi // 2)
    if c0 != 1 or top != predicted_top_coeff(n):
        raise ConsistencyError(f"P_{n}: leading coefficients ({c0}, {top}) disagree with the prediction")
    return c0, top


def mod2_predicate(n: int, point: tuple[int, int]) -> bool:
    """Whether 2 divides P_n at one of the four points of (Z/2)^2."""
    if n < 2:
        raise ValueError("mod2_predicate needs n >= 2")
    if tuple(point) not in MOD2_POINTS:
        raise ValueError(f"point must be one of {MOD2_POINTS}")
    return lucas_atom(n).evaluate(*point) % 2 == 0


def mod3_predicate(n: int, point: tuple[int, int]) -> bool:
    if n < 3:
        raise ValueError("mod3_predicate needs n >= 3")
    if tuple(point) not in MOD3_POINTS:
        raise ValueError(f"point must be one of {MOD3_POINTS}")
    a, b = point
    # only even powers of s occur for n >= 3
    return lucas_atom(n).evaluate(abs(a), b) % 3 == 0


def nu_p_phi(p: int, n: int, b: int) -> int:
    """Exact p-adic valuation of Phi_n(b) by repeated division."""
    if n < 3:
        raise ValueError("nu_p_phi needs n >= 3")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    value = cyclotomic(n).evaluate(b)
    if value == 0:
        raise ZeroDivisionError(f"Phi_{n}({b}) = 0 has infinite valuation")
    v = 0
    while value % p == 0:
        value //= p
        v += 1
    return v


def nu_p_predicted(p: int, n: int, b: int) -> int:
    """The 0/1 valuation predicted for p = 2 and p = 3 as stated."""
    if p == 2:
        return int(_is_power(n, 2, 2) and b % 2 == 1)
    if p == 3:
        return int(_is_power(n, 3, 1) and b % 3 == 1)
    raise ValueError("only p = 2 and p = 3 have a prediction")


def mod2_checks(n: int):
    atom = lucas_atom(n)
    yield IdentityCheck("MOD2_ZERO_ZERO", {"n": n}, atom.evaluate(0, 0), 0)
    yield IdentityCheck("MOD2_ONE_ZERO", {"n": n}, atom.evaluate(1, 0), 1)
    yield IdentityCheck("MOD2_ZERO_ONE", {"n": n}, mod2_predicate(n, (0, 1)), _is_power(n, 2, 1))
    yield IdentityCheck(
        "MOD2_ONE_ONE", {"n": n}, mod2_predicate(n, (1, 1)), n % 3 == 0 and _is_power(n // 3, 2)
    )


def mod3_checks(n: int):
    atom = lucas_atom(n)
    yield IdentityCheck("MOD3_ZERO_ZERO", {"n": n}, atom.evaluate(0, 0), 0)
    for a in (1, -1):
        yield IdentityCheck("MOD3_PM_ONE_ZERO", {"n": n, "s": a}, atom.evaluate(a, 0), 1)
    for b in (1, -1):
        yield IdentityCheck(
            "MOD3_ZERO_PM_ONE", {"n": n, "t": b}, mod3_predicate(n, (0, b)),
            n % 2 == 0 and _is_power(n // 2, 3, 1),
        )
    for a in (1, -1):
        yield IdentityCheck(
            "MOD3_PM_ONE_ONE", {"n": n, "s": a}, mod3_predicate(n, (a, 1)),
            n % 4 == 0 and _is_power(n // 4, 3),
        )
        yield IdentityCheck(
            "MOD3_PM_ONE_MINUS_ONE", {"n": n, "s": a}, mod3_predicate(n, (a, -1)),
            n % 3 == 0 and _is_power(n // 3, 3),
        )


def mod2_sweep(max_n: int = 500) -> VerifyReport:
    report = VerifyReport("mod2")
    start = time.perf_counter()
    for n in range(2, max_n + 1):
        for check in mod2_checks(n):
            report.record(check)
    report.elapsed = time.perf_counter() - start
    return report


def mod3_sweep(max_n: int = 500) -> VerifyReport:
    report = VerifyReport("mod3")
    start = time.perf_counter()
    for n in range(3, max_n + 1):
        for check in mod3_checks(n):
            report.record(check)
    report.elapsed = time.perf_counter() - start
    return report


def valuation_sweep(p: int, max_n: int = 200, max_b: int = 20) -> VerifyReport:
    """Compare nu_p(Phi_n(b)) with the 0/1 prediction for 3 <= n <= max_n, |b| <= max_b."""
    report = VerifyReport(f"nu{p}")
    start = time.perf_counter()
    for n in range(3, max_n + 1):
        for b in range(-max_b, max_b + 1):
            report.record(
                IdentityCheck(f"NU{p}", {"n": n, "b": b}, nu_p_phi(p, n, b), nu_p_predicted(p, n, b))
            )
    report.elapsed = time.perf_counter() - start
    return report
