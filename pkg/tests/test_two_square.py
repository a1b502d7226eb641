import pytest

from lucas_atoms.atoms import ConsistencyError, lucas_atom, totient
from lucas_atoms.poly import parse
from lucas_atoms.theorems import NoAnalogue, two_square_gauss, two_square_lucas
from lucas_atoms.theorems.two_square import jacobi

ODD = [5, 13, 17, 21, 29, 33, 37, 41, 53, 57, 61, 65]
EVEN = [6, 10, 14, 22, 26, 30, 34]


def test_lucas_example_n5():
    w = two_square_lucas(5)
    assert (w.first, w.second) == (parse("s^2 - t"), parse("s"))
    assert w.valid and w.identity_holds()


def test_gauss_example_n5():
    w = two_square_gauss(5)
    assert (w.first, w.second) == (parse("2*s^2 + 3*t"), parse("1"))
    assert w.valid


@pytest.mark.parametrize("n", ODD)
def test_odd_witnesses(n):
    h = totient(n) // 2
    for w, second in ((two_square_lucas(n), h - 1), (two_square_gauss(n), h - 2)):
        assert w.atom_index == n
        assert w.identity_holds()
        assert w.violations == ()
        assert w.first.stats().sdeg == h
        assert (w.second.stats().sdeg if not w.second.is_zero() else 0) == second
    assert two_square_lucas(n).first.coeff(h, 0) == 1
    assert two_square_gauss(n).first.coeff(h, 0) == 2


def test_n13_shape():
    w = two_square_lucas(13)
    assert (w.first.stats().sdeg, w.second.stats().sdeg) == (6, 5)


@pytest.mark.parametrize("n", EVEN)
def test_even_witnesses_target_p_2n(n):
    w = two_square_lucas(n)
    assert w.atom_index == 2 * n
    assert w.identity_holds()
    # the components have sdeg phi(2n)/2 and phi(2n)/2 - 1, twice the phi(n)/2 bound
    assert w.first.stats().sdeg == totient(2 * n) // 2
    assert w.second.stats().sdeg == totient(2 * n) // 2 - 1
    assert len(w.violations) == 2


def test_no_even_witness_for_n4():
    # P_8(0, t) = 2 t^2, while G(0, t)^2 + 4 t H(0, t)^2 has s-free coefficient g^2 + 4 h^2 != 2
    assert lucas_atom(8).coeff(0, 2) == 2
    assert not any(g * g + 4 * h * h == 2 for g in range(-2, 3) for h in range(-2, 3))
    with pytest.raises(ValueError, match="not square-free"):
        two_square_lucas(4)


def test_three_mod_four_is_rejected():
    with pytest.raises(NoAnalogue, match="no analogue exists") as err:
        two_square_lucas(7)
    assert "1*t^3" in str(err.value)
    with pytest.raises(NoAnalogue):
        two_square_gauss(11)
    with pytest.raises(NoAnalogue):
        two_square_lucas(15)


@pytest.mark.parametrize("n", [1, 3, 9, 25, 12, 8])
def test_invalid_n(n):
    with pytest.raises(ValueError):
        two_square_lucas(n)


def test_gauss_rejects_even():
    with pytest.raises(ValueError):
        two_square_gauss(6)


def test_jacobi_symbol():
    import sympy

    for n in range(1, 60, 2):
        for a in range(-10, 60):
            assert jacobi(a, n) == sympy.jacobi_symbol(a, n)
    with pytest.raises(ValueError):
        jacobi(3, 4)


def test_consistency_error_type_is_internal():
    assert issubclass(ConsistencyError, RuntimeError)
    assert not issubclass(NoAnalogue, RuntimeError)
