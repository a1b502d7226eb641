"""Exact checks of the Lucas-polynomial identities used by the reduction formulas."""
from __future__ import annotations

import enum
import time

from .atoms import lucas_atom, primes_upto
from .lucas import epsilon, lucas
from .poly import IntPoly2, substitute
from .report import IdentityCheck, VerifyReport
from .theorems.reductions import prime_substitution

__all__ = [
    "Identity",
    "check_m_plus_n",
    "check_tile_sq",
    "check_mnrr",
    "check_pn_decomp",
    "check_p2p",
    "identity_instances",
    "verify_identity",
]

_T = IntPoly2.monomial(0, 1)


class Identity(str, enum.Enum):
    M_PLUS_N = "M_PLUS_N"
    TILE_SQ = "TILE_SQ"
    MNRR = "MNRR"
    PN_DECOMP = "PN_DECOMP"
    P2P = "P2P"


def check_m_plus_n(m: int, n: int) -> IdentityCheck:
    """{m+n} = {m+1}{n} + t{m}{n-1}, m >= 0, n >= 1.

    At n = 0 the right side needs {-1} = 1/t, which the convention
    {n} = 0 for n <= 0 does not supply, so ranges start at n = 1.
    """
    rhs = lucas(m + 1) * lucas(n) + _T * lucas(m) * lucas(n - 1)
    return IdentityCheck("M_PLUS_N", {"m": m, "n": n}, lucas(m + n), rhs)


def check_tile_sq(m: int) -> IdentityCheck:
    """{m}^2 = {m-1}{m+1} + eps(m) t^(m-1), m >= 1."""
    if m < 1:
        raise ValueError("TILE_SQ needs m >= 1")
    rhs = lucas(m - 1) * lucas(m + 1) + IntPoly2.monomial(0, m - 1, epsilon(m))
    return IdentityCheck("TILE_SQ", {"m": m}, lucas(m) ** 2, rhs)


def check_mnrr(m: int, n: int) -> IdentityCheck:
    """{n} = ({m+1} + t{m-1}){n-m} + eps(m) t^m {n-2m}, n >= 2m."""
    if m < 1 or n < 2 * m:
        raise ValueError("MNRR needs m >= 1 and n >= 2m")
    rhs = (lucas(m + 1) + _T * lucas(m - 1)) * lucas(n - m) + IntPoly2.monomial(0, m, epsilon(m)) * lucas(n - 2 * m)
    return IdentityCheck("MNRR", {"m": m, "n": n}, lucas(n), rhs)


def check_pn_decomp(p: int, n: int) -> IdentityCheck:
    """{pn} = {p} * {n} evaluated at (s^2 + 2t, -t^2) or (s P_2p, t^p)."""
    if n < 0:
        raise ValueError("PN_DECOMP needs n >= 0")
    x, y = prime_substitution(p)
    rhs = lucas(p) * substitute(lucas(n), x, y)
    return IdentityCheck("PN_DECOMP", {"p": p, "n": n}, lucas(p * n), rhs)


def check_p2p(p: int) -> IdentityCheck:
    """{p+1} + t{p-1} equals s^2 + 2t for p = 2 and s P_2p for odd primes p."""
    lhs = lucas(p + 1) + _T * lucas(p - 1)
    if p == 2:
        rhs = IntPoly2({(2, 0): 1, (0, 1): 2})
    else:
        rhs = IntPoly2.monomial(1, 0) * lucas_atom(2 * p)
    return IdentityCheck("P2P", {"p": p}, lhs, rhs)


def identity_instances(name, max_m: int = 60, max_n: int = 60, max_p: int = 13):
    """(check function, args) pairs covering the requested range."""
    name = Identity(name)
    if max_m < 0 or max_n < 0 or max_p < 0:
        raise ValueError("ranges must be nonnegative")
    if name is Identity.M_PLUS_N:
        return [(check_m_plus_n, (m, n)) for m in range(max_m + 1) for n in range(1, max_n + 1)]
    if name is Identity.TILE_SQ:
        return [(check_tile_sq, (m,)) for m in range(1, max_m + 1)]
    if name is Identity.MNRR:
        return [(check_mnrr, (m, n)) for m in range(1, max_m + 1) for n in range(2 * m, max_n + 1)]
    if name is Identity.PN_DECOMP:
        return [(check_pn_decomp, (p, n)) for p in primes_upto(max_p) for n in range(max_n + 1)]
    return [(check_p2p, (p,)) for p in primes_upto(max_p)]


def verify_identity(name, max_m: int = 60, max_n: int = 60, max_p: int = 13) -> VerifyReport:
    report = VerifyReport(Identity(name).value)
    start = time.perf_counter()
    for fn, args in identity_instances(name, max_m, max_n, max_p):
        report.record(fn(*args))
    report.elapsed = time.perf_counter() - start
    return report
