"""Lucatorials, Lucanomials and m-divisible Lucanomials.

Quotients go through the atom gate in :mod:`lucas_atoms.atoms`; no rational
intermediate is ever formed.
"""
from __future__ import annotations

from .atoms import QuotientSpec, quotient_poly
from .lucas import lucas
from .poly import IntPoly2

__all__ = [
    "lucatorial",
    "lucatorial_indices",
    "lucanomial_spec",
    "lucanomial",
    "m_divisible_lucanomial_spec",
    "m_divisible_lucanomial",
]


def lucatorial_indices(n: int, m: int = 1) -> tuple[int, ...]:
    """Indices of {n:m}! = {m}{2m}...{nm}."""
    return tuple(m * i for i in range(1, n + 1))


def lucatorial(n: int) -> IntPoly2:
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = IntPoly2.constant(1)
    for i in range(1, n + 1):
        result = result * lucas(i)
    return result


def m_divisible_lucanomial_spec(n: int, k: int, m: int) -> QuotientSpec:
    if m < 1 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n and m >= 1, got n={n}, k={k}, m={m}")
    return QuotientSpec(
        lucatorial_indices(n, m),
        lucatorial_indices(k, m) + lucatorial_indices(n - k, m),
    )


def lucanomial_spec(n: int, k: int) -> QuotientSpec:
    return m_divisible_lucanomial_spec(n, k, 1)


def lucanomial(n: int, k: int) -> IntPoly2:
    return quotient_poly(lucanomial_spec(n, k))


def m_divisible_lucanomial(n: int, k: int, m: int) -> IntPoly2:
    return quotient_poly(m_divisible_lucanomial_spec(n, k, m))
