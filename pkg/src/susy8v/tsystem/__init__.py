"""The T-system: split determinants, T_n^(k), symmetries, cusps and families."""
from .cusps import cusp_exponent, cusp_order, delta, symplectic_character, trig_limit_check
from .determinant import bigT, splitT
from .families import FAMILIES, family_eval, pdet_ad, spp_probe
from .symmetry import SYMMETRIES, apply_symmetry
from .tnk import KIndex, TValue, Tnk, XRational, tk
from .weights import XI, G, Q, R, weight_polys, xi_vector
from .yseq import Yseq

__all__ = [
    "FAMILIES",
    "SYMMETRIES",
    "XI",
    "G",
    "KIndex",
    "Q",
    "R",
    "TValue",
    "Tnk",
    "XRational",
    "Yseq",
    "apply_symmetry",
    "bigT",
    "cusp_exponent",
    "cusp_order",
    "delta",
    "family_eval",
    "pdet_ad",
    "splitT",
    "spp_probe",
    "symplectic_character",
    "tk",
    "trig_limit_check",
    "weight_polys",
    "xi_vector",
]
