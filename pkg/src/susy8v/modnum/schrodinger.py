"""The elliptic Schroedinger operator applied to Phi^{-1} Psi, sampled numerically."""
from __future__ import annotations

import mpmath

from ..errors import NearSingularSample, PrecisionExhausted
from ..tsystem.tnk import KIndex, Tnk
from .evaluate import compile_value, vandermonde, weierstrass_p
from .span import sample_points
from .theta import DEFAULT_DIGITS, omega, theta, theta_pm, workprec, x_of, xi_values, zeta_of


def _e(c, z):
    return mpmath.exp(2j * mpmath.pi * c * z)


class Wavefunction:
    """Psi (built from T_n^(k)) and the gauge factor Phi for one index."""

    def __init__(self, n: int, k, digits: int = DEFAULT_DIGITS):
        self.index = KIndex(tuple(k), n)
        self.n, self.k, self.m = n, self.index.k, self.index.m
        self.digits = digits
        self.poly = compile_value(Tnk(self.index).value)

    def psi(self, zs, tau):
        d = self.digits
        p = mpmath.exp(1j * mpmath.pi * tau)
        p2 = p * p
        zeta = zeta_of(tau, d)
        xis = xi_values(zeta)
        xs = [x_of(z, tau, d) for z in zs]
        acc = mpmath.mpf(1)
        for z, x in zip(zs, xs):
            acc *= _e(-1, z) * theta(_e(2, z), p2, d) * theta_pm(omega() * p, _e(1, z), p2, d) ** (3 * self.n - 2)
            for xi, kl in zip(xis, self.k):
                acc *= (x - xi) ** kl
        return acc * vandermonde(xs) * self.poly(xs, zeta)

    def phi(self, zs, tau):
        d = self.digits
        p6 = mpmath.exp(6j * mpmath.pi * tau)
        p3 = mpmath.exp(3j * mpmath.pi * tau)
        k0, k1, k2, k3 = self.k
        acc = mpmath.mpf(1)
        for z in zs:
            e = _e(3, z)
            acc *= (_e(-mpmath.mpf(3) / 2, z) * theta(e, p6, d)) ** k0
            acc *= theta(p3 * e, p6, d) ** k1 * theta(-p3 * e, p6, d) ** k2
            acc *= (_e(-mpmath.mpf(3) / 2, z) * theta(-e, p6, d)) ** k3
        return acc

    def gauged(self, xs, t):
        """Phi^{-1} Psi in the coordinates x_j = 3 z_j, tau = 2 pi i t / 3."""
        zs = [x / 3 for x in xs]
        tau = 2j * mpmath.pi * t / 3
        return self.psi(zs, tau) / self.phi(zs, tau)

    def potential(self, x, tau):
        tp = 3 * tau
        shifts = (0, tp / 2, tp / 2 + mpmath.mpf(1) / 2, mpmath.mpf(1) / 2)
        return sum(mpmath.mpf(kl * (kl + 1)) / 2 * weierstrass_p(x - g, tp) for kl, g in zip(self.k, shifts) if kl * (kl + 1))

    def eigenvalue(self, zs, tau):
        """(H F) / F for F = Phi^{-1} Psi at one sample."""
        xs = [3 * mpmath.mpmathify(z) for z in zs]
        t = 3 * mpmath.mpmathify(tau) / (2j * mpmath.pi)
        f0 = self.gauged(xs, t)
        if abs(f0) < mpmath.mpf(10) ** (-self.digits // 2):
            raise NearSingularSample(f"Psi nearly vanishes at {zs}")
        total = -self.m * mpmath.diff(lambda s: self.gauged(xs, s), t) / f0
        for j in range(self.m):
            def along(y, j=j):
                ys = list(xs)
                ys[j] = y
                return self.gauged(ys, t)
            total += mpmath.diff(along, xs[j], 2) / (2 * f0) - self.potential(xs[j], tau)
        return total


def schrodinger_check(n: int, k, tau, samples=None, digits: int = DEFAULT_DIGITS, seed: int = 0, count: int = 5) -> dict:
    """Spread of the eigenvalue C across sample points (C must not depend on z)."""
    with workprec(digits):
        tau = mpmath.mpmathify(tau)
        wave = Wavefunction(n, k, digits)
        samples = samples or sample_points(count, wave.m, tau, seed)
        values = [wave.eigenvalue(zs, tau) for zs in samples]
        ref = values[0]
        scale = max(abs(v) for v in values) + 1
        deviation = max(abs(v - ref) for v in values) / scale
        if not mpmath.isfinite(deviation):
            raise PrecisionExhausted("eigenvalue evaluation overflowed")
        return {"values": values, "deviation": deviation}
