"""Lucas polynomials {n} in s, t and their tiling model."""
from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from math import comb

from .poly import ST, IntPoly2

__all__ = [
    "MEMO_CAP",
    "TILING_CAP",
    "lucas",
    "clear_memo",
    "lucas_closed_form",
    "epsilon",
    "Tile",
    "Tiling",
    "tilings",
    "tilings_weight",
]

MEMO_CAP = 2000
TILING_CAP = 25

_S = IntPoly2.monomial(1, 0)
_T = IntPoly2.monomial(0, 1)
_memo: list[IntPoly2] = [IntPoly2.constant(0), IntPoly2.constant(1)]
_memo_lock = threading.Lock()


def lucas(n: int) -> IntPoly2:
    """{n} with {0} = 0, {1} = 1, {n} = s{n-1} + t{n-2}; {n} = 0 for n <= 0."""
    if n <= 0:
        return _memo[0]
    if n < len(_memo):
        return _memo[n]
    with _memo_lock:
        while len(_memo) <= min(n, MEMO_CAP):
            _memo.append(_S * _memo[-1] + _T * _memo[-2])
        if n < len(_memo):
            return _memo[n]
        a, b = _memo[-2], _memo[-1]
    for _ in range(len(_memo), n + 1):
        a, b = b, _S * b + _T * a
    return b


def clear_memo() -> None:
    with _memo_lock:
        del _memo[2:]


def lucas_closed_form(n: int) -> IntPoly2:
    """sum_k C(n-k-1, k) s^(n-2k-1) t^k, built without the recurrence."""
    if n < 1:
        raise ValueError("closed form needs n >= 1")
    return IntPoly2({(n - 2 * k - 1, k): comb(n - k - 1, k) for k in range((n - 1) // 2 + 1)}, ST)


def epsilon(m: int) -> int:
    return -1 if m % 2 == 0 else 1


class Tile(enum.IntEnum):
    MONOMINO = 1
    DOMINO = 2


@dataclass(frozen=True)
class Tiling:
    tiles: tuple[Tile, ...]

    @property
    def covers(self) -> int:
        return sum(int(x) for x in self.tiles)

    def weight(self) -> IntPoly2:
        mono = sum(1 for x in self.tiles if x is Tile.MONOMINO)
        return IntPoly2.monomial(mono, len(self.tiles) - mono)

    def __str__(self):
        return "".join("M" if x is Tile.MONOMINO else "D" for x in self.tiles) or "()"


def tilings(n: int) -> list[Tiling]:
    """All tilings of a row of n boxes, in lexicographic tile order (M before D)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > TILING_CAP:
        raise ValueError(f"tiling enumeration is capped at n = {TILING_CAP}")
    out: list[Tiling] = []

    def walk(left: int, acc: list[Tile]) -> None:
        if left == 0:
            out.append(Tiling(tuple(acc)))
            return
        for tile in (Tile.MONOMINO, Tile.DOMINO):
            if tile <= left:
                acc.append(tile)
                walk(left - tile, acc)
                acc.pop()

    walk(n, [])
    return out


def tilings_weight(n: int) -> IntPoly2:
    total = IntPoly2.constant(0)
    for til in tilings(n):
        total = total + til.weight()
    return total
