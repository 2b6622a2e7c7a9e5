"""Sampling checks that three generators of the top exterior power agree up to a constant."""
from __future__ import annotations

import random

import mpmath

from ..errors import NearSingularSample
from ..tsystem.tnk import Tnk
from .evaluate import compile_value, vandermonde
from .theta import DEFAULT_DIGITS, omega, theta, theta_pm, workprec, x_of


def _e(c, z):
    return mpmath.exp(2j * mpmath.pi * c * z)


def basis_indices(n: int) -> list[int]:
    return [j for j in range(1, 3 * n) if j % 3]


def basis_function(j: int, n: int, z, p, digits: int = DEFAULT_DIGITS):
    """The j-th explicit basis element of the 2n-dimensional space."""
    q = p ** (12 * n)
    a = theta(-(p ** (2 * j)) * _e(6 * n, z), q, digits)
    b = theta(-(p ** (2 * j)) * _e(-6 * n, z), q, digits)
    return _e(j - 3 * n, z) * a - _e(3 * n - j, z) * b


def alternant(n: int, zs, p, digits: int = DEFAULT_DIGITS):
    cols = basis_indices(n)
    return mpmath.det(mpmath.matrix([[basis_function(j, n, z, p, digits) for j in cols] for z in zs]))


def _prefactor(z, p, digits):
    return _e(-1, z) * theta(_e(2, z), p * p, digits)


def eik(n: int, zs, p, digits: int = DEFAULT_DIGITS):
    """The Izergin-Korepin-type generator."""
    p2, p6 = p * p, p**6
    left, right = zs[:n], zs[n:]
    acc = mpmath.mpf(1)
    for z in zs:
        acc *= _prefactor(z, p, digits)
    rows = []
    for zi in left:
        row = []
        for zj in right:
            big = _e(-3, zj) * theta_pm(_e(3, zj), _e(3, zi), p6, digits)
            small = _e(-1, zj) * theta_pm(_e(1, zj), _e(1, zi), p2, digits)
            acc *= big
            row.append(small / big)
        rows.append(row)
    return acc * mpmath.det(mpmath.matrix(rows))


def tut(n: int, zs, tau, poly=None, digits: int = DEFAULT_DIGITS, zeta=None):
    """The uniformised generator built from the polynomial T in 2n variables."""
    from .theta import zeta_of

    p = mpmath.exp(1j * mpmath.pi * tau)
    zeta = zeta_of(tau, digits) if zeta is None else zeta
    poly = poly or compile_value(Tnk(((0, 0, 0, 0), n)).value)
    xs = [x_of(z, tau, digits) for z in zs]
    acc = mpmath.mpf(1)
    for z in zs:
        acc *= _prefactor(z, p, digits) * theta_pm(p * omega(), _e(1, z), p * p, digits) ** (3 * n - 2)
    return acc * vandermonde(xs) * poly(xs, zeta)


def sample_points(count: int, size: int, tau, seed: int = 0):
    """Generic z-vectors inside the fundamental parallelogram."""
    rng = random.Random(seed)
    tau = mpmath.mpmathify(tau)
    out = []
    for _ in range(count):
        out.append([mpmath.mpf(rng.uniform(0.05, 0.95)) + mpmath.mpf(rng.uniform(0.05, 0.45)) * tau for _ in range(size)])
    return out


def _spread(values) -> mpmath.mpf:
    ref = values[0]
    return max(abs(v - ref) / abs(ref) for v in values)


def span_check(n: int, tau, samples=None, digits: int = DEFAULT_DIGITS, seed: int = 0) -> dict:
    """Max relative spread of alt/tut, eik/tut and alt/eik across sample z-vectors."""
    with workprec(digits):
        tau = mpmath.mpmathify(tau)
        p = mpmath.exp(1j * mpmath.pi * tau)
        samples = samples or sample_points(5, 2 * n, tau, seed)
        poly = compile_value(Tnk(((0, 0, 0, 0), n)).value)
        ratios = {"alt/tut": [], "eik/tut": [], "alt/eik": []}
        for zs in samples:
            try:
                a, e, t = alternant(n, zs, p, digits), eik(n, zs, p, digits), tut(n, zs, tau, poly, digits)
            except ZeroDivisionError:
                raise NearSingularSample(f"sample {zs} hits a pole") from None
            if min(abs(a), abs(e), abs(t)) < mpmath.mpf(10) ** (-digits // 2):
                raise NearSingularSample(f"sample {zs} is too close to a zero")
            ratios["alt/tut"].append(a / t)
            ratios["eik/tut"].append(e / t)
            ratios["alt/eik"].append(a / e)
        spreads = {key: _spread(vals) for key, vals in ratios.items()}
        return {"spreads": spreads, "deviation": max(spreads.values())}
