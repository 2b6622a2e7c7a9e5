"""High-precision theta/eta numerics and sampling checks of the non-rational identities."""
from .evaluate import compile_value, eval_ratzeta, weierstrass_p
from .schrodinger import Wavefunction, schrodinger_check
from .span import alternant, eik, span_check, tut
from .tau import seed_values, tep_check, trt_qd_check
from .theta import (
    DEFAULT_DIGITS,
    ModularPoint,
    eta,
    modular_suite,
    phis,
    t_of,
    theta,
    tz_residual,
    x_of,
    zeta_of,
)

__all__ = [
    "DEFAULT_DIGITS",
    "ModularPoint",
    "Wavefunction",
    "alternant",
    "compile_value",
    "eik",
    "eta",
    "eval_ratzeta",
    "modular_suite",
    "phis",
    "schrodinger_check",
    "seed_values",
    "span_check",
    "t_of",
    "tep_check",
    "theta",
    "trt_qd_check",
    "tut",
    "tz_residual",
    "weierstrass_p",
    "x_of",
    "zeta_of",
]
