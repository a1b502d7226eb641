import pytest

from lucas_atoms.identities import (
    Identity,
    check_m_plus_n,
    check_mnrr,
    check_p2p,
    check_tile_sq,
    identity_instances,
    verify_identity,
)
from lucas_atoms.lucas import lucas
from lucas_atoms.poly import parse


def test_examples():
    assert check_tile_sq(3).holds
    assert check_tile_sq(3).lhs == parse("(s^2 + t)^2")
    assert check_m_plus_n(0, 5).holds
    p2p = check_p2p(3)
    assert p2p.holds and p2p.rhs == parse("s^3 + 3*s*t")
    assert check_p2p(2).holds


@pytest.mark.parametrize("name", list(Identity))
def test_suites_have_no_failures(name):
    report = verify_identity(name, max_m=30, max_n=30, max_p=13)
    assert report.count > 0
    assert report.passed, report.failures[:3]


def test_m_plus_n_needs_n_at_least_one():
    # with {-1} = 0 the n = 0 instance reads {m} = 0, false for every m >= 1
    for m in range(1, 10):
        check = check_m_plus_n(m, 0)
        assert not check.holds
        assert check.rhs == 0 and check.lhs == lucas(m)
    assert all(args[1] >= 1 for _, args in identity_instances(Identity.M_PLUS_N, 5, 5))


def test_preconditions():
    with pytest.raises(ValueError):
        check_tile_sq(0)
    with pytest.raises(ValueError):
        check_mnrr(3, 5)
    with pytest.raises(ValueError):
        identity_instances("NOPE")
