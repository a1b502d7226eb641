import pytest

from lucas_atoms.atoms import ConsistencyError, lucas_atom
from lucas_atoms.theorems import (
    leading_coeffs,
    mod2_predicate,
    mod2_sweep,
    mod3_predicate,
    mod3_sweep,
    nu_p_phi,
    nu_p_predicted,
    valuation_sweep,
)
from lucas_atoms.theorems.evaluations import predicted_top_coeff


def test_leading_coeff_examples():
    assert leading_coeffs(6) == (1, 3)
    assert leading_coeffs(4) == (1, 2)
    assert leading_coeffs(5) == (1, 1)
    with pytest.raises(ValueError):
        leading_coeffs(2)


def test_leading_coeffs_sweep():
    for n in range(3, 300):
        leading_coeffs(n)
    assert predicted_top_coeff(2 * 27) == 3 and predicted_top_coeff(2 * 15) == 1


def test_mod_predicate_examples():
    assert mod2_predicate(3, (1, 1))
    assert not mod2_predicate(5, (1, 1))
    assert mod2_predicate(8, (0, 1))
    assert mod3_predicate(6, (0, 1))
    assert mod3_predicate(4, (1, 1))
    assert not mod3_predicate(5, (1, -1))
    assert lucas_atom(5).evaluate(1, -1) == -1
    with pytest.raises(ValueError):
        mod2_predicate(3, (2, 1))
    with pytest.raises(ValueError):
        mod3_predicate(2, (0, 1))


def test_mod_sweeps():
    assert mod2_sweep(300).passed
    assert mod3_sweep(300).passed


def test_valuation_examples():
    assert nu_p_phi(2, 4, 7) == 1
    assert nu_p_phi(5, 4, 7) == 2
    assert nu_p_phi(2, 4, 2) == 0
    assert nu_p_phi(3, 3, 4) == 1
    with pytest.raises(ValueError):
        nu_p_phi(4, 5, 2)
    with pytest.raises(ValueError):
        nu_p_predicted(5, 5, 2)


def test_nu2_sweep():
    assert valuation_sweep(2, 120, 12).passed


def test_nu3_prediction_misses_n_twice_a_power_of_three():
    # Phi_{2n}(b) = Phi_n(-b) for odd n, so n = 2*3^m with b = 2 (mod 3) also has nu_3 = 1
    assert nu_p_phi(3, 6, 2) == 1 and nu_p_predicted(3, 6, 2) == 0
    report = valuation_sweep(3, 200, 20)
    bad = {(f["params"]["n"], f["params"]["b"]) for f in report.failures}
    expected = {(n, b) for n in (6, 18, 54, 162) for b in range(-20, 21) if b % 3 == 2}
    assert bad == expected
    assert all(f["actual"] == "1" for f in report.failures)


def test_mismatch_is_internal(monkeypatch):
    import lucas_atoms.theorems.evaluations as ev

    monkeypatch.setattr(ev, "predicted_top_coeff", lambda n: 99)
    with pytest.raises(ConsistencyError):
        ev.leading_coeffs(7)
