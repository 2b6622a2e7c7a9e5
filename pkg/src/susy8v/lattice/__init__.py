"""The lattice t^(k) for m = 0 and the recursions it satisfies."""
from .recurrence import coeff_A, coeff_B, corners, rec_coeff, residual, rhs
from .store import (
    LatticeStore,
    RecStep,
    box_cells,
    build,
    from_json,
    load,
    make_box,
    persist,
    rec_solve,
    seeds,
    to_json,
)
from .toda import fn_ode_check, fn_ode_residual, toda_step

__all__ = [
    "LatticeStore",
    "RecStep",
    "box_cells",
    "build",
    "coeff_A",
    "coeff_B",
    "corners",
    "fn_ode_check",
    "fn_ode_residual",
    "from_json",
    "load",
    "make_box",
    "persist",
    "rec_coeff",
    "rec_solve",
    "residual",
    "rhs",
    "seeds",
    "to_json",
    "toda_step",
]
