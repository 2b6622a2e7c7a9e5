"""Size bounds shared by the exact modules."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    symbolic_n: int = 3  # bigT / splitT in 2n symbolic variables
    confluent_n: int = 6  # underlying determinant size for specialised values
    free_vars: int = 5  # m for interpolated T_n^(k)


BOUNDS = Bounds()
