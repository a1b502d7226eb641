"""Reduction formulas, two-square witnesses, and modular evaluations of atoms."""
from .evaluations import (
    leading_coeffs,
    mod2_predicate,
    mod2_sweep,
    mod3_predicate,
    mod3_sweep,
    nu_p_phi,
    nu_p_predicted,
    valuation_sweep,
)
from .reductions import p2p_closed_form, phi_atom_corollary, prime_substitution, reduce_pn, reduce_prime_power
from .two_square import NoAnalogue, TwoSquareWitness, two_square_gauss, two_square_lucas

__all__ = [
    "NoAnalogue",
    "TwoSquareWitness",
    "leading_coeffs",
    "mod2_predicate",
    "mod2_sweep",
    "mod3_predicate",
    "mod3_sweep",
    "nu_p_phi",
    "nu_p_predicted",
    "p2p_closed_form",
    "phi_atom_corollary",
    "prime_substitution",
    "reduce_pn",
    "reduce_prime_power",
    "two_square_gauss",
    "two_square_lucas",
    "valuation_sweep",
]
