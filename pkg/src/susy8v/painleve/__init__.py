"""Backlund orbit of the Picard solution, its tau functions and cusp behaviour."""
from .backlund import (
    GENERATORS,
    PVIState,
    apply_word,
    backlund_apply,
    evi_residual,
    hamilton_residuals,
    lattice_params,
    lattice_state,
    modified_hamiltonian,
    picard_seed,
    pvi_residual,
    q_lattice,
)
from .extended import ExtendedState, TauMonomial, extended_apply, extended_seed, tau_lattice
from .tau import TauExponent, factor_match_tqf, klr_inverse, klr_map, scc_exponents, tau_normalizer

__all__ = [
    "GENERATORS",
    "ExtendedState",
    "PVIState",
    "TauExponent",
    "TauMonomial",
    "apply_word",
    "backlund_apply",
    "evi_residual",
    "extended_apply",
    "extended_seed",
    "factor_match_tqf",
    "hamilton_residuals",
    "klr_inverse",
    "klr_map",
    "lattice_params",
    "lattice_state",
    "modified_hamiltonian",
    "picard_seed",
    "pvi_residual",
    "q_lattice",
    "scc_exponents",
    "tau_lattice",
    "tau_normalizer",
]
