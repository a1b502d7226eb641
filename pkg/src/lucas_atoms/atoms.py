"""Cyclotomic polynomials, Lucas atoms, and the polynomiality gate.

{n} factors as the product of the atoms P_d over the divisors d of n.  A
quotient of products of Lucas polynomials is a polynomial exactly when, for
every d >= 2, the numerator carries at least as many copies of P_d as the
denominator; that comparison only needs divisor counts.
"""
from __future__ import annotations

import os
import threading
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .gamma import gamma_map
from .lucas import lucas
from .poly import Q, ST, IntPoly2, NotDivisible, exact_divide

__all__ = [
    "ConsistencyError",
    "NotPolynomial",
    "QuotientSpec",
    "AtomExponents",
    "factorize",
    "is_prime",
    "primes_upto",
    "is_squarefree",
    "divisors",
    "totient",
    "clear_caches",
    "cyclotomic",
    "lucas_atom",
    "atom_by_division",
    "atom_exponents",
    "is_polynomial",
    "quotient_poly",
    "product_poly",
]

AtomExponents = dict  # d -> exponent of P_d


class ConsistencyError(RuntimeError):
    """Two independent computations disagreed; this is a bug, not bad input."""


class NotPolynomial(ArithmeticError):
    def __init__(self, reason: str, witness: AtomExponents):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness


def factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorize(n).values())


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def totient(n: int) -> int:
    if n < 1:
        raise ValueError("totient needs n >= 1")
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def _cache_max() -> int:
    return int(os.environ.get("LUCAS_ATOM_CACHE_MAX", "1000"))


_cyclo: dict[int, IntPoly2] = {}
_atoms: dict[int, IntPoly2] = {1: IntPoly2.constant(1, ST)}
_lock = threading.RLock()


def clear_caches() -> None:
    """Drop every memoized cyclotomic polynomial and atom."""
    with _lock:
        _cyclo.clear()
        _atoms.clear()
        _atoms[1] = IntPoly2.constant(1, ST)


def cyclotomic(n: int) -> IntPoly2:
    """Phi_n(q) = (q^n - 1) / prod_{d | n, d < n} Phi_d(q)."""
    if n < 1:
        raise ValueError("cyclotomic needs n >= 1")
    hit = _cyclo.get(n)
    if hit is not None:
        return hit
    with _lock:
        hit = _cyclo.get(n)
        if hit is not None:
            return hit
        den = IntPoly2.constant(1, Q)
        for d in divisors(n)[:-1]:
            den = den * cyclotomic(d)
        phi = exact_divide(IntPoly2({(n, 0): 1, (0, 0): -1}, Q), den)
        if n <= _cache_max():
            _cyclo[n] = phi
        return phi


def atom_by_division(n: int) -> IntPoly2:
    """P_n as {n} divided by the atoms of the proper divisors of n."""
    acc = lucas(n)
    for d in divisors(n)[1:-1]:
        acc = exact_divide(acc, lucas_atom(d))
    return acc


def lucas_atom(n: int) -> IntPoly2:
    """P_n = Gamma(Phi_n) for n >= 2, P_1 = 1.

    The first computation of each atom is checked against the division route
    and for nonnegative coefficients; a mismatch raises ConsistencyError.
    """
    if n < 1:
        raise ValueError("lucas_atom needs n >= 1")
    hit = _atoms.get(n)
    if hit is not None:
        return hit
    with _lock:
        hit = _atoms.get(n)
        if hit is not None:
            return hit
        atom = gamma_map(cyclotomic(n))
        try:
            other = atom_by_division(n)
        except NotDivisible as exc:
            raise ConsistencyError(f"P_{n}: division route failed ({exc})") from exc
        if atom != other:
            raise ConsistencyError(f"P_{n}: gamma route {atom} != division route {other}")
        if atom.min_coeff() < 0:
            raise ConsistencyError(f"P_{n} has a negative coefficient")
        if n <= _cache_max():
            _atoms[n] = atom
        return atom


@dataclass(frozen=True)
class QuotientSpec:
    """prod {n_i} / prod {k_j} as two multisets of positive indices."""

    numerator: tuple[int, ...] = field(default=())
    denominator: tuple[int, ...] = field(default=())

    def __post_init__(self):
        num = tuple(sorted(int(x) for x in self.numerator))
        den = tuple(sorted(int(x) for x in self.denominator))
        if any(x < 1 for x in num + den):
            raise ValueError("Lucas indices must be >= 1")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def of(cls, numerator=(), denominator=()) -> "QuotientSpec":
        return cls(tuple(numerator), tuple(denominator))

    def __mul__(self, other: "QuotientSpec") -> "QuotientSpec":
        return QuotientSpec(self.numerator + other.numerator, self.denominator + other.denominator)

    def inverse(self) -> "QuotientSpec":
        return QuotientSpec(self.denominator, self.numerator)

    def value_at(self, x: int, y: int) -> Fraction:
        """Exact rational value of the quotient at an integer point."""
        num = Fraction(1)
        for n in self.numerator:
            num *= lucas(n).evaluate(x, y)
        for k in self.denominator:
            num /= lucas(k).evaluate(x, y)
        return num


def _count(indices) -> Counter:
    counts: Counter = Counter()
    for n in indices:
        for d in divisors(n)[1:]:
            counts[d] += 1
    return counts


def atom_exponents(spec: QuotientSpec) -> tuple[AtomExponents, AtomExponents]:
    """(a, b): a_d = #{n_i : d | n_i}, b_d = #{k_j : d | k_j}, for d >= 2."""
    return dict(sorted(_count(spec.numerator).items())), dict(sorted(_count(spec.denominator).items()))


def is_polynomial(spec: QuotientSpec) -> tuple[bool, AtomExponents]:
    a, b = atom_exponents(spec)
    diff = {d: a.get(d, 0) - b.get(d, 0) for d in sorted(set(a) | set(b))}
    diff = {d: e for d, e in diff.items() if e}
    return all(e >= 0 for e in diff.values()), diff


def quotient_poly(spec: QuotientSpec) -> IntPoly2:
    """prod_d P_d^(a_d - b_d); raises NotPolynomial if some exponent is negative."""
    ok, diff = is_polynomial(spec)
    if not ok:
        a, b = atom_exponents(spec)
        d = min(d for d, e in diff.items() if e < 0)
        raise NotPolynomial(f"a_{d} = {a.get(d, 0)} < b_{d} = {b.get(d, 0)}", diff)
    result = IntPoly2.constant(1, ST)
    for d, e in diff.items():
        result = result * lucas_atom(d) ** e
    return result


def product_poly(indices) -> IntPoly2:
    result = IntPoly2.constant(1, ST)
    for n in indices:
        result = result * lucas(n)
    return result
