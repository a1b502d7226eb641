"""Exact sparse polynomials in at most two variables over the integers.

A polynomial is stored as a dict from packed exponent keys to nonzero
Python ints.  The key for ``x^i * y^j`` is ``(i << 32) | j``; integer order
on keys is then lexicographic order on ``(i, j)`` and adding keys multiplies
monomials, which keeps the inner loops of multiplication and division cheap.

Univariate polynomials use the same class with ``vars == ("q", "_")`` and the
second exponent always 0.
"""
from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "IntPoly2",
    "DegreeStats",
    "NotDivisible",
    "ParseError",
    "ST",
    "Q",
    "add",
    "multiply",
    "exact_divide",
    "substitute",
    "evaluate",
    "degree_stats",
    "parse",
    "to_canonical_string",
    "to_serialized",
    "from_serialized",
    "s",
    "t",
    "q",
]

ST = ("s", "t")
Q = ("q", "_")

_SHIFT = 32
_LOW = (1 << _SHIFT) - 1


def _pack(i: int, j: int) -> int:
    if i < 0 or j < 0:
        raise ValueError(f"negative exponent ({i}, {j})")
    if j > _LOW or i > _LOW:
        raise OverflowError("exponent too large")
    return (i << _SHIFT) | j


def _unpack(key: int) -> tuple[int, int]:
    return key >> _SHIFT, key & _LOW


class NotDivisible(ArithmeticError):
    """Raised when an exact division over the integers does not exist."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class DegreeStats:
    deg: int
    mdeg: int
    tdeg: int
    sdeg: int


class IntPoly2:
    """Immutable polynomial with integer coefficients in one or two variables."""

    __slots__ = ("_t", "vars", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None, vars=ST):
        packed = {}
        for (i, j), c in (terms or {}).items():
            c = int(c)
            if c:
                k = _pack(i, j)
                packed[k] = packed.get(k, 0) + c
                if not packed[k]:
                    del packed[k]
        self._t = packed
        self.vars = tuple(vars)
        self._hash = None

    @classmethod
    def _raw(cls, packed: dict, vars) -> "IntPoly2":
        obj = cls.__new__(cls)
        obj._t = packed
        obj.vars = vars
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int, vars=ST) -> "IntPoly2":
        return cls._raw({0: int(c)} if c else {}, tuple(vars))

    @classmethod
    def monomial(cls, i: int, j: int = 0, c: int = 1, vars=ST) -> "IntPoly2":
        return cls._raw({_pack(i, j): int(c)} if c else {}, tuple(vars))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], vars=Q) -> "IntPoly2":
        """Univariate polynomial from the dense list ``[a_0, a_1, ...]``."""
        return cls._raw({_pack(i, 0): int(c) for i, c in enumerate(coeffs) if c}, tuple(vars))

    # --- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return {_unpack(k): c for k, c in self._t.items()}

    def items(self):
        """``((i, j), c)`` pairs in canonical print order."""
        return [((i, j), c) for (i, j), c in sorted(self.terms.items(), key=lambda e: (-e[0][0], e[0][1]))]

    def coeff(self, i: int, j: int = 0) -> int:
        return self._t.get(_pack(i, j), 0)

    def is_zero(self) -> bool:
        return not self._t

    def is_univariate(self) -> bool:
        return all(not (k & _LOW) for k in self._t)

    def coeffs(self) -> list[int]:
        """Dense coefficient list of a univariate polynomial, lowest power first."""
        if not self.is_univariate():
            raise ValueError("polynomial is not univariate")
        if not self._t:
            return []
        out = [0] * ((max(self._t) >> _SHIFT) + 1)
        for k, c in self._t.items():
            out[k >> _SHIFT] = c
        return out

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    # --- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "IntPoly2":
        if isinstance(other, IntPoly2):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return IntPoly2.constant(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        res = dict(self._t)
        for k, c in other._t.items():
            v = res.get(k, 0) + c
            if v:
                res[k] = v
            else:
                res.pop(k, None)
        return IntPoly2._raw(res, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly2._raw({k: -c for k, c in self._t.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return IntPoly2._raw({}, self.vars)
            return IntPoly2._raw({k: c * other for k, c in self._t.items()}, self.vars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        res: dict[int, int] = {}
        get = res.get
        bi = list(b.items())
        for k1, c1 in a.items():
            for k2, c2 in bi:
                k = k1 + k2
                res[k] = get(k, 0) + c1 * c2
        return IntPoly2._raw({k: c for k, c in res.items() if c}, self.vars)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = IntPoly2.constant(1, self.vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        if not isinstance(other, IntPoly2):
            return NotImplemented
        return self.vars == other.vars and self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._t.items())))
        return self._hash

    def __repr__(self):
        return f"IntPoly2({to_canonical_string(self)!r}, vars={self.vars})"

    def __str__(self):
        return to_canonical_string(self)

    # --- convenience wrappers ----------------------------------------------

    def evaluate(self, x: int, y: int = 0) -> int:
        return evaluate(self, x, y)

    def substitute(self, for_first: "IntPoly2", for_second: "IntPoly2") -> "IntPoly2":
        return substitute(self, for_first, for_second)

    def stats(self) -> DegreeStats:
        return degree_stats(self)

    def max_coeff(self) -> int:
        return max((abs(c) for c in self._t.values()), default=0)

    def min_coeff(self) -> int:
        return min(self._t.values(), default=0)


def s() -> IntPoly2:
    return IntPoly2.monomial(1, 0)


def t() -> IntPoly2:
    return IntPoly2.monomial(0, 1)


def q() -> IntPoly2:
    return IntPoly2.monomial(1, 0, vars=Q)


def add(a: IntPoly2, b: IntPoly2) -> IntPoly2:
    if a.vars != b.vars:
        raise ValueError(f"variable mismatch: {a.vars} vs {b.vars}")
    return a + b


def multiply(a: IntPoly2, b: IntPoly2) -> IntPoly2:
    if a.vars != b.vars:
        raise ValueError(f"variable mismatch: {a.vars} vs {b.vars}")
    return a * b


def exact_divide(num: IntPoly2, den: IntPoly2) -> IntPoly2:
    """Return ``num / den`` when the quotient exists in Z[x, y].

    Leading terms (lex order, first variable dominant) are eliminated one at
    a time.  Raises :class:`NotDivisible` as soon as a leading coefficient or
    monomial fails to divide.
    """
    if num.vars != den.vars:
        raise ValueError(f"variable mismatch: {num.vars} vs {den.vars}")
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    vars = num.vars
    if num.is_zero():
        return IntPoly2._raw({}, vars)

    dterms = sorted(den._t.items(), reverse=True)
    lead_key, lead_c = dterms[0]
    lead_i, lead_j = _unpack(lead_key)
    rest = dterms[1:]

    if max(num._t) >> _SHIFT < lead_i:
        raise NotDivisible("degree of divisor exceeds degree of dividend")

    rem = dict(num._t)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot: dict[int, int] = {}
    while heap:
        k = -heapq.heappop(heap)
        c = rem.pop(k, 0)
        if not c:
            continue
        i, j = _unpack(k)
        if i < lead_i or j < lead_j:
            raise NotDivisible(f"leading monomial ({i}, {j}) not divisible by ({lead_i}, {lead_j})")
        qc, r = divmod(c, lead_c)
        if r:
            raise NotDivisible(f"leading coefficient {c} not divisible by {lead_c}")
        dk = k - lead_key
        quot[dk] = qc
        for key, dc in rest:
            nk = dk + key
            old = rem.get(nk)
            v = (old or 0) - qc * dc
            if v:
                if old is None:
                    heapq.heappush(heap, -nk)
                rem[nk] = v
            elif old is not None:
                del rem[nk]
    return IntPoly2._raw(quot, vars)


def _power_cache(base: IntPoly2):
    cache = [IntPoly2.constant(1, base.vars)]

    def power(e: int) -> IntPoly2:
        while len(cache) <= e:
            cache.append(cache[-1] * base)
        return cache[e]

    return power


def substitute(p: IntPoly2, for_first: IntPoly2, for_second: IntPoly2) -> IntPoly2:
    """Simultaneously replace the two variables of ``p``.

    Horner accumulation over the first variable; powers of the second
    replacement are cached.  The result lives in the replacements' variables.
    """
    if for_first.vars != for_second.vars:
        raise ValueError("replacement polynomials must share one variable context")
    vars = for_first.vars
    if p.is_zero():
        return IntPoly2._raw({}, vars)

    by_i: dict[int, list[tuple[int, int]]] = {}
    for k, c in p._t.items():
        i, j = _unpack(k)
        by_i.setdefault(i, []).append((j, c))

    ypow = _power_cache(for_second)
    xpow = _power_cache(for_first)
    zero = IntPoly2._raw({}, vars)

    def row(i: int) -> IntPoly2:
        acc = zero
        for j, c in by_i.get(i, ()):
            acc = acc + ypow(j) * c
        return acc

    exps = sorted(by_i, reverse=True)
    result = row(exps[0])
    for prev, cur in zip(exps, exps[1:]):
        result = result * xpow(prev - cur) + row(cur)
    if exps[-1]:
        result = result * xpow(exps[-1])
    return result


def evaluate(p: IntPoly2, x: int, y: int = 0) -> int:
    xs: dict[int, int] = {}
    ys: dict[int, int] = {}
    total = 0
    for k, c in p._t.items():
        i, j = _unpack(k)
        if i not in xs:
            xs[i] = x**i
        if j not in ys:
            ys[j] = y**j
        total += c * xs[i] * ys[j]
    return total


def degree_stats(p: IntPoly2) -> DegreeStats:
    """Degrees in the first variable: ``deg``, ``mdeg``, ``tdeg = deg + mdeg``; ``sdeg`` equals ``deg``."""
    if p.is_zero():
        raise ValueError("degree statistics are undefined for the zero polynomial")
    firsts = [k >> _SHIFT for k in p._t]
    deg, mdeg = max(firsts), min(firsts)
    return DegreeStats(deg=deg, mdeg=mdeg, tdeg=deg + mdeg, sdeg=deg)


# --- text and serialized forms --------------------------------------------


def _monomial_text(i: int, j: int, vars) -> list[str]:
    parts = []
    for name, e in ((vars[0], i), (vars[1], j)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return parts


def to_canonical_string(p: IntPoly2) -> str:
    """Terms by descending first-variable power, ties by ascending second."""
    if p.is_zero():
        return "0"
    out = []
    for (i, j), c in p.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        factors = _monomial_text(i, j, p.vars)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def to_serialized(p: IntPoly2) -> list[list]:
    return [[i, j, str(c)] for (i, j), c in p.items()]


def from_serialized(data, vars=ST) -> IntPoly2:
    terms: dict[tuple[int, int], int] = {}
    for i, j, c in data:
        terms[(int(i), int(j))] = terms.get((int(i), int(j)), 0) + int(c)
    return IntPoly2(terms, vars)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_])|(.))")


class _Parser:
    def __init__(self, text: str, vars):
        self.text = text
        self.vars = vars
        self.tokens = []
        for m in _TOKEN.finditer(text):
            if m.group(1):
                self.tokens.append(("num", int(m.group(1)), m.start(1)))
            elif m.group(2):
                self.tokens.append(("var", m.group(2), m.start(2)))
            elif m.group(3):
                ch = m.group(3)
                if ch not in "+-*^()":
                    raise ParseError(f"unexpected character {ch!r}", m.start(3))
                self.tokens.append((ch, ch, m.start(3)))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ("end", None, len(self.text))

    def take(self, kind=None):
        tok = self.peek()
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self) -> IntPoly2:
        if not self.tokens:
            raise ParseError("empty expression", 0)
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return result

    def expr(self) -> IntPoly2:
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> IntPoly2:
        acc = self.unary()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                acc = acc * self.unary()
            elif kind in ("num", "var", "("):
                acc = acc * self.power()
            else:
                return acc

    def unary(self) -> IntPoly2:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> IntPoly2:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            exp = self.take("num")[1]
            base = base**exp
        return base

    def atom(self) -> IntPoly2:
        kind, value, where = self.take()
        if kind == "num":
            return IntPoly2.constant(value, self.vars)
        if kind == "var":
            if value == self.vars[0]:
                return IntPoly2.monomial(1, 0, vars=self.vars)
            if value == self.vars[1] and value != "_":
                return IntPoly2.monomial(0, 1, vars=self.vars)
            raise ParseError(f"unknown variable {value!r} for context {self.vars}", where)
        if kind == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected token {value!r}", where)


def parse(text: str, vars=None) -> IntPoly2:
    """Parse the polynomial grammar: integers, ``s``/``t`` or ``q``, ``+ - * ^`` and parentheses.

    ``*`` may be omitted between factors.  Without ``vars`` the context is
    ``("q", "_")`` when the text mentions ``q`` and ``("s", "t")`` otherwise.
    """
    if vars is None:
        vars = Q if "q" in text else ST
    return _Parser(text, tuple(vars)).parse()
