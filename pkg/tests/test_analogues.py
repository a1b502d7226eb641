from math import comb, prod

import pytest

from lucas_atoms.analogues import lucanomial, lucatorial, m_divisible_lucanomial
from lucas_atoms.poly import parse


def _fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def test_lucatorial_examples():
    assert lucatorial(0) == 1
    assert lucatorial(3) == parse("s^3 + s*t")
    assert lucatorial(4).evaluate(2, -1) == 24


def test_lucanomial_examples():
    assert lucanomial(4, 2) == parse("s^4 + 3*s^2*t + 2*t^2")
    assert lucanomial(7, 0) == 1
    assert lucanomial(5, 2).evaluate(2, -1) == 10


@pytest.mark.parametrize("n", range(0, 16))
def test_lucanomial_oracles(n):
    for k in range(n + 1):
        p = lucanomial(n, k)
        assert p.evaluate(2, -1) == comb(n, k)
        fibs = prod(_fib(i) for i in range(1, n + 1))
        den = prod(_fib(i) for i in range(1, k + 1)) * prod(_fib(i) for i in range(1, n - k + 1))
        assert p.evaluate(1, 1) == fibs // den
        assert p.min_coeff() >= 0


def test_m_divisible_examples():
    assert m_divisible_lucanomial(2, 1, 2) == parse("s^2 + 2*t")
    assert m_divisible_lucanomial(3, 1, 2).evaluate(2, -1) == 3


def test_bad_arguments():
    with pytest.raises(ValueError):
        lucanomial(3, 4)
    with pytest.raises(ValueError):
        m_divisible_lucanomial(3, 1, 0)
    with pytest.raises(ValueError):
        lucatorial(-1)
