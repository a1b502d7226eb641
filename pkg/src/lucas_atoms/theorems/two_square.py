"""Two-square representations of Lucas atoms.

For square-free n = 1 (mod 4) the classical identities

    Phi_n(q)  = C(q)^2 - n q D(q)^2        4 Phi_n(q) = A(q)^2 - n q^2 B(q)^2

come from splitting the primitive n-th roots of unity by the quadratic
character whose fixed field is Q(sqrt n).  We carry out that split exactly in
Z[y]/Phi_M(y), read off C, D (or A, B) from the rational and sqrt(n) parts,
and push them through Gamma:

    P_n = G^2 + n t H^2,  G = Gamma(C), H = Gamma(D)
    4 P_n = E^2 - n t^2 F^2,  E = Gamma(A), F = Gamma(B)

For even square-free n the same split over Q(zeta_8n) gives P_2n.
Every witness is checked by expansion before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..atoms import ConsistencyError, cyclotomic, is_squarefree, lucas_atom, totient
from ..gamma import gamma_map, is_palindromic
from ..poly import Q, IntPoly2, degree_stats

__all__ = [
    "NoAnalogue",
    "TwoSquareWitness",
    "jacobi",
    "two_square_lucas",
    "two_square_gauss",
]


class NoAnalogue(ValueError):
    """The requested two-square form does not exist for this n."""


@dataclass(frozen=True)
class TwoSquareWitness:
    n: int
    kind: str  # "LUCAS" or "GAUSS"
    first: IntPoly2
    second: IntPoly2
    atom_index: int
    violations: tuple[str, ...] = field(default=())

    @property
    def target(self) -> IntPoly2:
        return lucas_atom(self.atom_index)

    def identity_holds(self) -> bool:
        n, t = self.n, IntPoly2.monomial(0, 1)
        if self.kind == "LUCAS":
            return self.target == self.first**2 + t * self.second**2 * n
        return self.target * 4 == self.first**2 - t**2 * self.second**2 * n

    @property
    def valid(self) -> bool:
        return not self.violations


def _sdeg(p: IntPoly2) -> int:
    return degree_stats(p).sdeg if not p.is_zero() else 0


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi needs an odd positive modulus")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


class _Cyclotomic:
    """Arithmetic in Z[y]/Phi_M(y) on dense coefficient lists."""

    def __init__(self, M: int):
        self.M = M
        self.mod = cyclotomic(M).coeffs()
        self.deg = len(self.mod) - 1

    def reduce(self, a: list[int]) -> list[int]:
        a = list(a)
        deg, mod = self.deg, self.mod
        for i in range(len(a) - 1, deg - 1, -1):
            c = a[i]
            if c:
                for j in range(deg + 1):
                    a[i - deg + j] -= c * mod[j]
        a = a[:deg] + [0] * (deg - len(a))
        return a

    def y(self, k: int) -> list[int]:
        a = [0] * (k % self.M + 1)
        a[k % self.M] = 1
        return self.reduce(a)

    def mul(self, a: list[int], b: list[int]) -> list[int]:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, z in enumerate(b):
                    out[i + j] += x * z
        return self.reduce(out)

    def sigma(self, a: list[int], k: int) -> list[int]:
        out = [0] * self.M
        for i, c in enumerate(a):
            out[i * k % self.M] += c
        return self.reduce(out)

    def constant(self, a: list[int]) -> int:
        if any(a[1:]):
            raise ConsistencyError("expected a rational element of the cyclotomic field")
        return a[0]


def _product_of_linears(K: _Cyclotomic, exponents, sign: int = 1) -> list[list[int]]:
    """prod (x - sign * y^k) as a list of field elements, lowest x-power first."""
    poly = [[1] + [0] * (K.deg - 1)]
    for k in exponents:
        root = [sign * c for c in K.y(k)]
        new = [[0] * K.deg for _ in range(len(poly) + 1)]
        for i, c in enumerate(poly):
            for j in range(K.deg):
                new[i + 1][j] += c[j]
            prod = K.mul(c, root)
            for j in range(K.deg):
                new[i][j] -= prod[j]
        poly = new
    return poly


def _mul_x(K: _Cyclotomic, a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    out = [[0] * K.deg for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, z in enumerate(b):
            prod = K.mul(x, z)
            row = out[i + j]
            for r in range(K.deg):
                row[r] += prod[r]
    return out


def _split(K: _Cyclotomic, poly, root_n: list[int], flip: int, n: int) -> tuple[list[int], list[int]]:
    """Write each coefficient as (u + v sqrt n) / 2; return (u_i), (v_i)."""
    us, vs = [], []
    for c in poly:
        conj = K.sigma(c, flip)
        u = K.constant([x + y for x, y in zip(c, conj)])
        vn = K.constant(K.mul([x - y for x, y in zip(c, conj)], root_n))
        if vn % n:
            raise ConsistencyError("sqrt(n) part is not integral")
        us.append(u)
        vs.append(vn // n)
    return us, vs


def _odd_setting(n: int):
    K = _Cyclotomic(n)
    units = [k for k in range(1, n) if jacobi(k, n) != 0]
    residues = [k for k in units if jacobi(k, n) == 1]
    others = [k for k in units if jacobi(k, n) == -1]
    root = [0] * K.deg
    for k in units:
        e = K.y(k)
        sgn = jacobi(k, n)
        root = [r + sgn * x for r, x in zip(root, e)]
    return K, residues, others, root, others[0]


def _check_square(K: _Cyclotomic, root: list[int], n: int) -> None:
    if K.constant(K.mul(root, root)) != n:
        raise ConsistencyError(f"constructed sqrt({n}) does not square to {n}")


def _even_halves(us: list[int], vs: list[int]) -> tuple[list[int], list[int]]:
    """From u(x) = 2 C(x^2), v(x) = 2 x D(x^2) recover coefficient lists of C and D."""
    if any(us[1::2]) or any(vs[0::2]):
        raise ConsistencyError("split factor does not separate into even and odd parts")
    c2, d2 = us[0::2], vs[1::2]
    if any(x % 2 for x in c2 + d2):
        raise ConsistencyError("two-square components are not integral")
    return [x // 2 for x in c2], [x // 2 for x in d2]


def _normalised(p: IntPoly2) -> IntPoly2:
    """Flip the sign so the highest power of s has a positive coefficient."""
    if p.is_zero():
        return p
    lead = max(p.terms.items(), key=lambda kv: (kv[0][0], -kv[0][1]))[1]
    return p if lead > 0 else -p


def _lift(coeffs: list[int]) -> IntPoly2:
    p = IntPoly2.from_coeffs(coeffs, Q)
    if not is_palindromic(p):
        raise ConsistencyError("two-square component is not palindromic")
    return _normalised(gamma_map(p))


def _reject_three_mod_four(n: int) -> None:
    h = totient(n) // 2
    atom = lucas_atom(n)
    c = atom.coeff(0, h)
    detail = ""
    if h % 2 == 1 and c % n:
        detail = (
            f"; P_{n} has the s-free term {c}*t^{h}, which G^2 cannot produce (every monomial of G "
            f"has odd s-degree) and n*t*H^2 only produces with coefficients divisible by {n}"
        )
    raise NoAnalogue(f"no analogue exists for n = {n} = 3 (mod 4){detail}")


def _check_odd(n: int) -> None:
    if n % 2 == 0:
        raise ValueError(f"n = {n} is even")
    if n < 5:
        raise ValueError("n must be at least 5")
    if not is_squarefree(n):
        raise ValueError(f"n = {n} is not square-free")
    if n % 4 == 3:
        _reject_three_mod_four(n)


def _witness(n, kind, first, second, index, top_first, sdeg_first, sdeg_second):
    w = TwoSquareWitness(n, kind, first, second, index)
    problems = []
    if not w.identity_holds():
        raise ConsistencyError(f"{kind} witness for n = {n} does not satisfy its identity")
    top = first.coeff(_sdeg(first), 0) if not first.is_zero() else 0
    if top != top_first:
        problems.append(f"top s-coefficient of the first component is {top}, expected {top_first}")
    if _sdeg(first) != sdeg_first:
        problems.append(f"sdeg of the first component is {_sdeg(first)}, stated bound phi({n})/2 = {sdeg_first}")
    if _sdeg(second) != sdeg_second:
        problems.append(f"sdeg of the second component is {_sdeg(second)}, stated value {sdeg_second}")
    return TwoSquareWitness(n, kind, first, second, index, tuple(problems))


def two_square_lucas(n: int) -> TwoSquareWitness:
    """G, H with P_n = G^2 + n t H^2 (n = 1 mod 4), or P_2n = G^2 + n t H^2 (n even).

    Both components are square-free-n constructions; sdeg values are compared
    with phi(n)/2 and phi(n)/2 - 1 and any mismatch is listed in ``violations``.
    """
    h = totient(n) // 2
    if n % 2 == 0:
        if n < 4:
            raise ValueError("even n must be at least 4")
        if not is_squarefree(n):
            raise ValueError(f"n = {n} is not square-free")
        C, D = _even_components(n)
        index = 2 * n
    else:
        _check_odd(n)
        K, residues, others, root, flip = _odd_setting(n)
        _check_square(K, root, n)
        Y = _product_of_linears(K, residues)
        Zneg = _product_of_linears(K, others, sign=-1)  # Z(-x) up to the sign (-1)^h, h even
        us, vs = _split(K, _mul_x(K, Y, Zneg), root, flip, n)
        C, D = _even_halves(us, vs)
        index = n
    G, H = _lift(C), _lift(D)
    return _witness(n, "LUCAS", G, H, index, 1, h, h - 1)


def _even_components(n: int) -> tuple[list[int], list[int]]:
    m = n // 2
    M = 8 * m
    K = _Cyclotomic(M)

    def character(k: int) -> int:
        chi8 = 1 if k % 8 in (1, 7) else -1
        chi4 = 1 if (m % 4 == 1 or k % 4 == 1) else -1
        return chi8 * (jacobi(k, m) if m > 1 else 1) * chi4

    units = [k for k in range(1, M) if k % 2 and (m == 1 or jacobi(k, m) != 0)]
    sqrt2 = [a + b for a, b in zip(K.y(m), K.y(7 * m))]
    gauss = [0] * K.deg
    for k in range(1, m + 1):
        if m == 1:
            gauss = K.y(0)
            break
        sgn = jacobi(k, m)
        if sgn:
            gauss = [g + sgn * x for g, x in zip(gauss, K.y(8 * k))]
    if m % 4 == 3:
        gauss = K.mul(gauss, K.y(2 * m))
    root = K.mul(sqrt2, gauss)
    _check_square(K, root, n)
    kept = [k for k in units if character(k) == 1]
    flip = next(k for k in units if character(k) == -1)
    R = _product_of_linears(K, kept)
    us, vs = _split(K, R, root, flip, n)
    # R = C(x^2) + sqrt(n) x D(x^2) exactly, so u = 2C, v = 2xD
    return _even_halves(us, vs)


def two_square_gauss(n: int) -> TwoSquareWitness:
    """E, F with 4 P_n = E^2 - n t^2 F^2 for square-free n = 1 (mod 4)."""
    _check_odd(n)
    h = totient(n) // 2
    K, residues, _, root, flip = _odd_setting(n)
    _check_square(K, root, n)
    us, vs = _split(K, _product_of_linears(K, residues), root, flip, n)
    if vs[0]:
        raise ConsistencyError("sqrt(n) part has a constant term")
    A, B = us, vs[1:]
    while B and not B[-1]:
        B.pop()
    E, F = _lift(A), _lift(B)
    return _witness(n, "GAUSS", E, F, n, 2, h, h - 2)
