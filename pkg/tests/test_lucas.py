import pytest
from hypothesis import given
from hypothesis import strategies as st

from lucas_atoms.lucas import MEMO_CAP, TILING_CAP, Tile, epsilon, lucas, lucas_closed_form, tilings, tilings_weight
from lucas_atoms.poly import IntPoly2, parse, substitute

TABLE = {
    1: "1",
    2: "s",
    3: "s^2 + t",
    4: "s^3 + 2*s*t",
    5: "s^4 + 3*s^2*t + t^2",
    6: "s^5 + 4*s^3*t + 3*s*t^2",
}


@pytest.mark.parametrize("n, text", sorted(TABLE.items()))
def test_table_values(n, text):
    assert lucas(n) == parse(text)


def test_nonpositive_indices_are_zero():
    assert lucas(0).is_zero() and lucas(-3).is_zero()


def _fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@pytest.mark.parametrize("n", range(1, 40))
def test_specialisations(n):
    assert lucas(n).evaluate(2, -1) == n
    assert lucas(n).evaluate(1, 1) == _fib(n)
    q_int = substitute(lucas(n), parse("1 + q"), parse("-q"))
    assert q_int == IntPoly2.from_coeffs([1] * n)


@pytest.mark.parametrize("n", range(1, 60))
def test_closed_form_matches_recurrence(n):
    assert lucas_closed_form(n) == lucas(n)


@given(st.integers(2, 300))
def test_quasi_homogeneous(n):
    assert all(i + 2 * j == n - 1 for (i, j) in lucas(n).terms)


def test_beyond_memo_cap():
    n = MEMO_CAP + 5
    big = lucas(n)
    assert big == parse("s") * lucas(n - 1) + parse("t") * lucas(n - 2)


def test_tilings_order_and_weight():
    assert [str(x) for x in tilings(4)] == ["MMMM", "MMD", "MDM", "DMM", "DD"]
    assert tilings(0)[0].covers == 0
    assert tilings(3)[1].tiles == (Tile.MONOMINO, Tile.DOMINO)
    assert tilings_weight(5) == lucas(6)
    with pytest.raises(ValueError):
        tilings(TILING_CAP + 1)


def test_epsilon():
    assert [epsilon(m) for m in range(1, 5)] == [1, -1, 1, -1]
