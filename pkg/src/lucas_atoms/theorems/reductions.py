"""Reduction formulas expressing P_{pn} and P_{p^m n} through smaller atoms."""
from __future__ import annotations

from math import comb

from ..atoms import ConsistencyError, cyclotomic, is_prime, lucas_atom
from ..lucas import epsilon
from ..poly import Q, ST, IntPoly2, NotDivisible, exact_divide, substitute
from ..report import IdentityCheck

__all__ = [
    "prime_substitution",
    "reduce_pn",
    "reduce_prime_power",
    "p2p_closed_form",
    "phi_atom_corollary",
]


def prime_substitution(p: int) -> tuple[IntPoly2, IntPoly2]:
    """(s^2 + 2t, -t^2) for p = 2 and (s P_{2p}, t^p) for odd p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return IntPoly2({(2, 0): 1, (0, 1): 2}, ST), IntPoly2({(0, 2): -1}, ST)
    return IntPoly2.monomial(1, 0) * lucas_atom(2 * p), IntPoly2.monomial(0, p)


def _check_coprime(p: int, n: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n % p == 0:
        raise ValueError(f"p = {p} divides n = {n}")


def reduce_pn(p: int, n: int) -> IntPoly2:
    """P_{pn} = P_n(X, Y) / P_n(s, t) with (X, Y) from :func:`prime_substitution`."""
    _check_coprime(p, n)
    if n < 2:
        raise ValueError("reduce_pn needs n >= 2")
    x, y = prime_substitution(p)
    atom = lucas_atom(n)
    try:
        return exact_divide(substitute(atom, x, y), atom)
    except NotDivisible as exc:
        raise ConsistencyError(f"P_{n}(X, Y) is not divisible by P_{n} for p = {p}") from exc


def reduce_prime_power(p: int, m: int, n: int) -> IntPoly2:
    """P_{p^m n} = P_{p^(m-1) n}(X, Y) for m >= 2."""
    _check_coprime(p, n)
    if m < 2 or n < 1:
        raise ValueError("reduce_prime_power needs m >= 2 and n >= 1")
    x, y = prime_substitution(p)
    return substitute(lucas_atom(p ** (m - 1) * n), x, y)


def p2p_closed_form(p: int) -> IntPoly2:
    """P_{2p} = sum_k [C(p-k, k) + C(p-k-1, k-1)] s^(p-2k-1) t^k for an odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError("p2p_closed_form needs an odd prime")
    terms = {}
    for k in range((p - 1) // 2 + 1):
        c = comb(p - k, k) + (comb(p - k - 1, k - 1) if k >= 1 else 0)
        terms[(p - 2 * k - 1, k)] = c
    return IntPoly2(terms, ST)


def phi_atom_corollary(p: int, n: int, m: int | None = None, sign: int | None = None) -> IdentityCheck:
    """Check Phi_{pn} Phi_n = P_n(q^p + 1, eps(p) q^p), or with ``m``,
    Phi_{p^m n} = P_{p^(m-1) n}(q^p + 1, eps(p) q^p).

    ``sign`` replaces eps(p) in the second argument.  Specialising s = 1 + q,
    t = -q turns the substitution (s P_2p, t^p) into (q^p + 1, -q^p), so
    ``sign=-1`` is the variant that holds for odd p as well.
    """
    if sign not in (None, 1, -1):
        raise ValueError("sign must be +1 or -1")
    _check_coprime(p, n)
    x = IntPoly2({(p, 0): 1, (0, 0): 1}, Q)
    y = IntPoly2({(p, 0): epsilon(p) if sign is None else sign}, Q)
    if m is None:
        if n < 2:
            raise ValueError("the first form needs n >= 2")
        lhs = cyclotomic(p * n) * cyclotomic(n)
        rhs = substitute(lucas_atom(n), x, y)
        return IdentityCheck("PHI_PN", _params(p, n, None, sign), lhs, rhs)
    if m < 2:
        raise ValueError("the prime-power form needs m >= 2")
    lhs = cyclotomic(p**m * n)
    rhs = substitute(lucas_atom(p ** (m - 1) * n), x, y)
    return IdentityCheck("PHI_PMN", _params(p, n, m, sign), lhs, rhs)


def _params(p, n, m, sign) -> dict:
    out = {"p": p, "n": n}
    if m is not None:
        out["m"] = m
    if sign is not None:
        out["sign"] = sign
    return out
