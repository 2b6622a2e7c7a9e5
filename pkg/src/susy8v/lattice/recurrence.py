"""The two bilinear identities linking t^(k) along the k_0 direction."""
from __future__ import annotations

from ..exact import RatZeta, Z


def coeff_A(k) -> RatZeta:
    k0, k1, k2, k3 = k
    z = Z
    return (
        (2 * z**4 - 23 * z**3 - 36 * z**2 - 5 * z + 8) * k0**2
        - z * (2 * z + 1) * (3 * z**2 + 10 * z + 5) * k1 * (2 * k0 + k1)
        - z * (6 * z**3 + 19 * z**2 + 4 * z - 11) * k2**2
        - z * (2 * z + 1) * (3 * z**2 + 2 * z + 1) * k3**2
        - 2 * z * (z - 1) * (2 * z + 1) * (z + 3) * (k0 + k1) * k2
        - 2 * (z - 1) * (2 * z + 1) * (3 * z**2 + 9 * z + 4) * (k0 + k1) * k3
        - 2 * (2 * z + 1) * (z**3 + 6 * z**2 + 3 * z - 4) * k2 * k3
        - 4 * (2 * z + 1) * (z**2 + 5 * z + 3) * (k0 + k1)
        + 4 * (2 * z + 1) * (2 * z**3 + 5 * z**2 - z - 3) * k2
        + 4 * (2 * z + 1) * (z**2 + z + 1) * k3
        - 4 * (z + 1) ** 2 * (2 * z**2 - z + 2)
    )


def coeff_B(k) -> RatZeta:
    k0, k1, k2, k3 = k
    z = Z
    return (
        (10 * z**4 + 13 * z**3 - 28 * z**2 - 41 * z - 8) * k0**2
        - z * (2 * z + 1) * (3 * z**2 + 10 * z + 5) * k1 * (k1 - 2 * k0)
        - z * (6 * z**3 + 19 * z**2 + 4 * z - 11) * k2**2
        - z * (2 * z + 1) * (3 * z**2 + 2 * z + 1) * k3**2
        + 2 * z * (z - 1) * (2 * z + 1) * (z + 3) * (k0 - k1) * k2
        - 2 * (2 * z + 1) * (z**3 + 6 * z**2 + 3 * z - 4) * k2 * k3
        + 2 * (z - 1) * (2 * z + 1) * (3 * z**2 + 9 * z + 4) * (k0 - k1) * k3
        + 2 * (z - 1) * (2 * z + 1) * (z + 3) * (3 * z + 2) * (k1 - k0)
        + 2 * (2 * z + 1) * (5 * z**3 + 12 * z**2 - 5 * z - 6) * k2
        + 2 * (2 * z + 1) * (3 * z**3 + 8 * z**2 - 3 * z - 2) * k3
        - 2 * (8 * z**4 + 18 * z**3 - 7 * z**2 - 18 * z - 4)
    )


def rec_coeff(which: str, k) -> RatZeta:
    if which == "A":
        return coeff_A(k)
    if which == "B":
        return coeff_B(k)
    raise ValueError(f"unknown coefficient block {which!r}")


def shift(k, *moves):
    out = list(k)
    for j, d in moves:
        out[j] += d
    return tuple(out)


def corners(direction: str, k):
    """(lhs pair, the two right-hand t's) for the identity at base k.

    Returns ((a, b), (c, d)) with t^a t^b on the left and t^c = t^(k),
    t^d the partner on the right.
    """
    e1 = 1 if direction == "kma" else -1
    a = shift(k, (0, -2))
    b = shift(k, (0, 1), (1, e1))
    d = shift(k, (0, -1), (1, e1))
    return (a, b), (tuple(k), d)


def rhs(direction: str, k, tk, dtk, td, dtd) -> RatZeta:
    """Right-hand side given t^(k), its derivative, the partner and its derivative."""
    k0 = k[0]
    lo, hi = 2 * k0 - 1, 2 * k0 + 1
    z = Z
    wron = tk * dtd / lo - dtk * td / hi
    if direction == "kma":
        return z**2 * (z + 1) * (z - 1) * (2 * z + 1) ** 2 * wron + z * (2 * z + 1) / (2 * lo * hi * (z + 2)) * coeff_A(k) * tk * td
    if direction == "kmb":
        return (z + 1) * (z - 1) * (2 * z + 1) ** 2 * (z + 2) ** 2 / z**2 * wron + (2 * z + 1) * (z + 2) / (2 * lo * hi * z**3) * coeff_B(k) * tk * td
    raise ValueError(f"unknown identity {direction!r}")


def residual(direction: str, k, t) -> RatZeta:
    """LHS - RHS of the identity at base k for a lookup function t(k)."""
    (a, b), (c, d) = corners(direction, k)
    tc, td = t(c), t(d)
    return t(a) * t(b) - rhs(direction, k, tc, tc.derivative(), td, td.derivative())
