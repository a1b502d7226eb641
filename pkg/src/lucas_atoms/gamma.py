"""Palindromic polynomials, their gamma vectors, and the map to Z[s, t].

A palindromic ``p(q)`` of total degree ``d`` expands uniquely as
``sum_j g_j q^j (1+q)^(d-2j)``; ``gamma_map`` sends it to
``sum_j g_j s^(d-2j) (-t)^j``, and ``gamma_inverse`` substitutes
``s = 1+q, t = -q`` to come back.
"""
from __future__ import annotations

from dataclasses import dataclass

from .poly import Q, ST, IntPoly2, degree_stats, substitute

__all__ = ["GammaVector", "is_palindromic", "gamma_expand", "gamma_map", "gamma_inverse"]


@dataclass(frozen=True)
class GammaVector:
    d: int
    gammas: tuple[int, ...]

    def reconstruct(self) -> IntPoly2:
        one_plus_q = IntPoly2.from_coeffs([1, 1])
        total = IntPoly2.constant(0, Q)
        for j, g in enumerate(self.gammas):
            if g:
                total = total + IntPoly2.monomial(j, 0, g, vars=Q) * one_plus_q ** (self.d - 2 * j)
        return total


def _require_univariate(p: IntPoly2) -> None:
    if not p.is_univariate():
        raise ValueError("expected a univariate polynomial")


def is_palindromic(p: IntPoly2) -> bool:
    _require_univariate(p)
    if p.is_zero():
        return True
    a = p.coeffs()
    d = degree_stats(p).tdeg
    a += [0] * (d + 1 - len(a))
    return all(a[i] == a[d - i] for i in range(d + 1))


def gamma_expand(p: IntPoly2) -> GammaVector:
    """Gamma vector of a nonzero palindromic polynomial.

    Peels off ``g_j q^j (1+q)^(d-2j)`` for increasing ``j``, reading ``g_j``
    as the current coefficient of ``q^j``.  Only the lower half of the
    coefficient list is ever read, so only that half is updated.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no gamma expansion")
    if not is_palindromic(p):
        raise ValueError("polynomial is not palindromic")
    d = degree_stats(p).tdeg
    half = d // 2
    a = p.coeffs()[: half + 1]
    a += [0] * (half + 1 - len(a))
    gammas = []
    for j in range(half + 1):
        g = a[j]
        gammas.append(g)
        if not g:
            continue
        n = d - 2 * j
        binom = 1
        for i in range(0, half - j + 1):
            a[j + i] -= g * binom
            binom = binom * (n - i) // (i + 1)
    return GammaVector(d, tuple(gammas))


def gamma_map(p: IntPoly2) -> IntPoly2:
    if p.is_zero():
        _require_univariate(p)
        return IntPoly2.constant(0, ST)
    gv = gamma_expand(p)
    return IntPoly2(
        {(gv.d - 2 * j, j): g * (-1) ** j for j, g in enumerate(gv.gammas) if g},
        ST,
    )


def gamma_inverse(f: IntPoly2) -> IntPoly2:
    """``f(1+q, -q)`` as a polynomial in ``q``."""
    return substitute(f, IntPoly2.from_coeffs([1, 1]), IntPoly2.from_coeffs([0, -1]))
