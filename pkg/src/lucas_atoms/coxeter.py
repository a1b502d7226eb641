"""Finite irreducible Coxeter groups and Lucas analogues of their
Fuss-Catalan and Fuss-Narayana numbers.

Every analogue is assembled as a :class:`QuotientSpec` and certified by the
atom gate.  The ``*_number`` functions compute the same quantities with plain
integer arithmetic and serve as the specialisation at (s, t) = (2, -1).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .analogues import lucanomial_spec, lucatorial_indices
from .atoms import ConsistencyError, NotPolynomial, QuotientSpec, quotient_poly
from .poly import IntPoly2

__all__ = [
    "CoxeterGroup",
    "NoProductFormula",
    "parse_group",
    "table_groups",
    "degrees",
    "rational_catalan_spec",
    "rational_catalan",
    "fuss_catalan_spec",
    "fuss_catalan",
    "fuss_catalan_number",
    "fuss_narayana_spec",
    "fuss_narayana",
    "fuss_narayana_number",
    "narayana_classical_specs",
    "narayana_classical",
    "narayana_classical_number",
    "narayana",
]

_EXCEPTIONAL = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "H3": (2, 6, 10),
    "H4": (2, 12, 20, 30),
}


class NoProductFormula(ValueError):
    """Nar^(k)(W, i) with i >= 2 has no known product formula for this family."""


@dataclass(frozen=True)
class CoxeterGroup:
    family: str
    rank: int
    m: int | None = None

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam in _EXCEPTIONAL:
            if n != len(_EXCEPTIONAL[fam]):
                raise ValueError(f"{fam} has rank {len(_EXCEPTIONAL[fam])}")
        elif fam == "A":
            if n < 1:
                raise ValueError("A_n needs n >= 1")
        elif fam == "B":
            if n < 2:
                raise ValueError("B_n needs n >= 2")
        elif fam == "D":
            if n < 4:
                raise ValueError("D_n needs n >= 4")
        elif fam == "I2":
            if n != 2 or self.m is None or self.m < 3:
                raise ValueError("I2(m) has rank 2 and needs m >= 3")
        else:
            raise ValueError(f"unknown Coxeter family {fam!r}")
        if fam != "I2" and self.m is not None:
            raise ValueError("only I2 takes a dihedral parameter")

    @property
    def degrees(self) -> tuple[int, ...]:
        fam, n = self.family, self.rank
        if fam in _EXCEPTIONAL:
            return _EXCEPTIONAL[fam]
        if fam == "A":
            return tuple(range(2, n + 2))
        if fam == "B":
            return tuple(range(2, 2 * n + 1, 2))
        if fam == "D":
            # a multiset: n repeats an even degree when n is even
            return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
        return tuple(sorted((2, self.m)))

    @property
    def coxeter_number(self) -> int:
        return self.degrees[-1]

    def __str__(self):
        if self.family == "I2":
            return f"I2:{self.m}"
        if self.family in _EXCEPTIONAL:
            return self.family
        return f"{self.family}{self.rank}"


def parse_group(name: str) -> CoxeterGroup:
    """Parse ``A5``, ``B4``, ``D6``, ``E6``..``E8``, ``F4``, ``H3``, ``H4``, ``I2:7``."""
    name = name.strip()
    if name in _EXCEPTIONAL:
        return CoxeterGroup(name, len(_EXCEPTIONAL[name]))
    m = re.fullmatch(r"I2[:(]?(\d+)\)?", name)
    if m:
        return CoxeterGroup("I2", 2, int(m.group(1)))
    m = re.fullmatch(r"([ABD])_?(\d+)", name)
    if m:
        return CoxeterGroup(m.group(1), int(m.group(2)))
    raise ValueError(f"cannot parse Coxeter group {name!r}")


def degrees(g: CoxeterGroup) -> tuple[int, ...]:
    return g.degrees


def table_groups(max_rank: int = 8, max_m: int = 12) -> list[CoxeterGroup]:
    groups = [CoxeterGroup("A", n) for n in range(1, max_rank + 1)]
    groups += [CoxeterGroup("B", n) for n in range(2, max_rank + 1)]
    groups += [CoxeterGroup("D", n) for n in range(4, max_rank + 1)]
    groups += [CoxeterGroup(f, len(d)) for f, d in _EXCEPTIONAL.items()]
    groups += [CoxeterGroup("I2", 2, m) for m in range(3, max_m + 1)]
    return groups


def _certified(spec: QuotientSpec, what: str) -> IntPoly2:
    try:
        return quotient_poly(spec)
    except NotPolynomial as exc:
        raise ConsistencyError(f"{what} failed the atom gate: {exc.reason}") from exc


def rational_catalan_spec(a: int, b: int) -> QuotientSpec:
    if a < 1 or b < 1:
        raise ValueError("rational Catalan needs a, b >= 1")
    if gcd(a, b) != 1:
        raise ValueError(f"gcd({a}, {b}) != 1")
    return QuotientSpec(
        lucatorial_indices(a + b),
        (a + b,) + lucatorial_indices(a) + lucatorial_indices(b),
    )


def rational_catalan(a: int, b: int) -> IntPoly2:
    return _certified(rational_catalan_spec(a, b), f"Cat{{{a},{b}}}")


def fuss_catalan_spec(g: CoxeterGroup, k: int) -> QuotientSpec:
    if k < 1:
        raise ValueError("k must be positive")
    h = g.coxeter_number
    return QuotientSpec(tuple(d + k * h for d in g.degrees), g.degrees)


def fuss_catalan(g: CoxeterGroup, k: int) -> IntPoly2:
    return _certified(fuss_catalan_spec(g, k), f"Cat^({k}) {g}")


def fuss_catalan_number(g: CoxeterGroup, k: int) -> int:
    h = g.coxeter_number
    value = Fraction(1)
    for d in g.degrees:
        value *= Fraction(d + k * h, d)
    assert value.denominator == 1
    return int(value)


def fuss_narayana_spec(g: CoxeterGroup, k: int) -> QuotientSpec:
    """{rank} * prod_{j < n} {k d_n - d_j + 2} / {d_j}."""
    if k < 1:
        raise ValueError("k must be positive")
    degs = g.degrees
    h = degs[-1]
    num = (g.rank,) + tuple(k * h - d + 2 for d in degs[:-1])
    return QuotientSpec(num, degs[:-1])


def fuss_narayana(g: CoxeterGroup, k: int) -> IntPoly2:
    return _certified(fuss_narayana_spec(g, k), f"Nar^({k}) {g}")


def fuss_narayana_number(g: CoxeterGroup, k: int) -> int:
    degs = g.degrees
    h = degs[-1]
    value = Fraction(g.rank)
    for d in degs[:-1]:
        value *= Fraction(k * h - d + 2, d)
    assert value.denominator == 1
    return int(value)


def _binom_spec(n: int, k: int) -> QuotientSpec | None:
    """Lucanomial spec, or None where the binomial vanishes (k < 0 or k > n)."""
    if k < 0 or k > n or n < 0:
        return None
    return lucanomial_spec(n, k)


def narayana_classical_specs(family: str, n: int, i: int, k: int) -> list[QuotientSpec]:
    """Summands of Nar^(k)(W, i) for W = A_{n-1}, B_n or D_n, each a QuotientSpec.

    Vanishing binomials drop their summand, so the list may be empty.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if family == "A":
        if n < 2 or not 0 <= i <= n - 1:
            raise ValueError("type A needs n >= 2 and 0 <= i <= n - 1")
        first, second = _binom_spec(n, i), _binom_spec(k * n, n - i - 1)
        if first is None or second is None:
            return []
        return [QuotientSpec((), (n,)) * first * second]
    if family == "B":
        if n < 2 or not 0 <= i <= n:
            raise ValueError("type B needs n >= 2 and 0 <= i <= n")
        pairs = [(_binom_spec(n, i), _binom_spec(k * n, n - i))]
    elif family == "D":
        if n < 4 or not 0 <= i <= n:
            raise ValueError("type D needs n >= 4 and 0 <= i <= n")
        pairs = [
            (_binom_spec(n, i), _binom_spec(k * (n - 1), n - i)),
            (_binom_spec(n - 2, i), _binom_spec(k * (n - 1) + 1, n - i)),
        ]
    else:
        raise NoProductFormula(
            f"no product formula is known for Nar^(k)(W, i) with W of type {family}; "
            "only i = 1 (fuss_narayana) is available"
        )
    return [a * b for a, b in pairs if a is not None and b is not None]


def narayana_classical(family: str, n: int, i: int, k: int) -> IntPoly2:
    total = IntPoly2.constant(0)
    for spec in narayana_classical_specs(family, n, i, k):
        total = total + _certified(spec, f"Nar^({k})({family}, n={n}, i={i})")
    return total


def narayana_classical_number(family: str, n: int, i: int, k: int) -> int:
    if family == "A":
        value = Fraction(comb(n, i) * comb(k * n, n - i - 1), n)
        assert value.denominator == 1
        return int(value)
    if family == "B":
        return comb(n, i) * comb(k * n, n - i)
    if family == "D":
        return comb(n, i) * comb(k * (n - 1), n - i) + comb(n - 2, i) * comb(k * (n - 1) + 1, n - i)
    raise ValueError(f"no closed formula for type {family}")


def narayana(g: CoxeterGroup, k: int, i: int | None = None) -> IntPoly2:
    """Nar^(k)(W, i) for a group; i = None or 1 uses the uniform product formula."""
    if i is None or i == 1:
        return fuss_narayana(g, k)
    if g.family == "A":
        return narayana_classical("A", g.rank + 1, i, k)
    return narayana_classical(g.family, g.rank, i, k)
