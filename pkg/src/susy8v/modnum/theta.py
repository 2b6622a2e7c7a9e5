"""Theta products, eta quotients and the uniformising functions at high precision."""
from __future__ import annotations

from dataclasses import dataclass

import mpmath

from ..errors import DomainError

DEFAULT_DIGITS = 60
MIN_DIGITS = 40
GUARD = 10


def _check_digits(digits: int) -> int:
    if digits < MIN_DIGITS:
        raise DomainError(f"digits={digits} is below the minimum {MIN_DIGITS}")
    return int(digits)


def workprec(digits: int):
    """Scoped working precision for an evaluator; never lowers an enclosing precision."""
    return mpmath.workdps(max(_check_digits(digits) + GUARD, mpmath.mp.dps))


def truncation(p, digits: int) -> int:
    """Number of product factors N with |p|^N below 10^(-digits-10) (or the ambient precision)."""
    a = abs(mpmath.mpmathify(p))
    if a >= 1:
        raise DomainError(f"|p| = {mpmath.nstr(a, 8)} is not below 1")
    if a == 0:
        return 1
    target = max(digits + GUARD, mpmath.mp.dps)
    return int(mpmath.ceil(target * mpmath.log(10) / -mpmath.log(a))) + 1


def theta(x, p, digits: int = DEFAULT_DIGITS):
    """prod_{j>=0} (1 - p^j x)(1 - p^{j+1}/x)."""
    x, p = mpmath.mpmathify(x), mpmath.mpmathify(p)
    if x == 0:
        raise DomainError("theta is undefined at x = 0")
    if abs(p) >= 1:
        raise DomainError(f"theta needs |p| < 1, got {mpmath.nstr(abs(p), 8)}")
    if p == 0:
        return 1 - x
    with mpmath.workdps(max(digits + GUARD, mpmath.mp.dps)):
        acc = mpmath.mpf(1)
        pj = mpmath.mpf(1)
        for _ in range(truncation(p, digits)):
            acc *= (1 - pj * x) * (1 - pj * p / x)
            pj *= p
    return +acc


def theta_prod(args, p, digits: int = DEFAULT_DIGITS):
    """theta(a_1, a_2, ...; p) as a product."""
    acc = mpmath.mpf(1)
    for a in args:
        acc *= theta(a, p, digits)
    return acc


def theta_pm(c, e, p, digits: int = DEFAULT_DIGITS):
    """theta(c e^{+-1}; p) = theta(c e; p) theta(c / e; p)."""
    e = mpmath.mpmathify(e)
    return theta(c * e, p, digits) * theta(c / e, p, digits)


@dataclass(frozen=True)
class ModularPoint:
    tau: mpmath.mpc
    digits: int = DEFAULT_DIGITS

    def __post_init__(self):
        _check_digits(self.digits)
        with workprec(self.digits):
            tau = mpmath.mpc(self.tau)
        if tau.imag <= 0:
            raise DomainError(f"tau = {tau} is not in the upper half-plane")
        object.__setattr__(self, "tau", tau)

    @property
    def p(self):
        with workprec(self.digits):
            return mpmath.exp(mpmath.pi * 1j * self.tau)

    def at(self, tau) -> ModularPoint:
        return ModularPoint(tau, self.digits)


def omega():
    return mpmath.exp(2j * mpmath.pi / 3)


def eta(tau, digits: int = DEFAULT_DIGITS):
    """Dedekind eta e^{pi i tau/12} prod (1 - e^{2 pi i k tau})."""
    with workprec(digits):
        tau = mpmath.mpmathify(tau)
        if mpmath.im(tau) <= 0:
            raise DomainError("eta needs Im tau > 0")
        q = mpmath.exp(2j * mpmath.pi * tau)
        acc = mpmath.mpf(1)
        qk = q
        for _ in range(truncation(q, digits)):
            acc *= 1 - qk
            qk *= q
        return mpmath.exp(1j * mpmath.pi * tau / 12) * acc


def phis(tau, digits: int = DEFAULT_DIGITS):
    """(phi_1, ..., phi_5) as eta quotients."""
    with workprec(digits):
        tau = mpmath.mpmathify(tau)
        e = {c: eta(c * tau, digits) for c in (mpmath.mpf(1) / 2, 1, mpmath.mpf(3) / 2, 2, 3, 6)}
        e1 = e[1]
        return (
            e[mpmath.mpf(1) / 2] ** 2 / e1**2,
            e[2] ** 2 / e1**2,
            e[mpmath.mpf(3) / 2] / e[mpmath.mpf(1) / 2],
            e[6] / e[2],
            e[3] / e1,
        )


def zeta_of(tau, digits: int = DEFAULT_DIGITS):
    """The Hauptmodul zeta(tau)."""
    with workprec(digits):
        p = mpmath.exp(mpmath.pi * 1j * mpmath.mpmathify(tau))
        w = omega()
        p2 = p * p
        num = w**2 * theta(-1, p2, digits) * theta(-p * w, p2, digits)
        den = theta(-p, p2, digits) * theta(-w, p2, digits)
        return num / den


def t_of(tau, digits: int = DEFAULT_DIGITS):
    """p^3 theta(-1; p^6)^4 / theta(-p^3; p^6)^4, the lambda function at 3 tau."""
    with workprec(digits):
        p = mpmath.exp(mpmath.pi * 1j * mpmath.mpmathify(tau))
        p6 = p**6
        return p**3 * (theta(-1, p6, digits) / theta(-(p**3), p6, digits)) ** 4


def x_of(z, tau, digits: int = DEFAULT_DIGITS):
    """The even elliptic function x(z) with periods 1 and tau."""
    with workprec(digits):
        p = mpmath.exp(mpmath.pi * 1j * mpmath.mpmathify(tau))
        w = omega()
        p2 = p * p
        e = mpmath.exp(2j * mpmath.pi * mpmath.mpmathify(z))
        num = theta(-p * w, p2, digits) ** 2 * theta_pm(w, e, p2, digits)
        den = theta(-w, p2, digits) ** 2 * theta_pm(p * w, e, p2, digits)
        return num / den


def half_periods(tau):
    tau = mpmath.mpmathify(tau)
    return (mpmath.mpf(0), tau / 2, tau / 2 + mpmath.mpf(1) / 2, mpmath.mpf(1) / 2)


def xi_values(zeta):
    return (2 * zeta + 1, zeta / (zeta + 2), zeta * (2 * zeta + 1) / (zeta + 2), mpmath.mpf(1))


def t_of_zeta(zeta):
    return zeta * (zeta + 2) ** 3 / (2 * zeta + 1) ** 3


def modular_suite(point: ModularPoint, z=None) -> dict:
    """eta, phi_1..phi_5, zeta, t and optionally x(z) at one modular point."""
    d = point.digits
    with workprec(d):
        out = {"eta": eta(point.tau, d), "phi": phis(point.tau, d), "zeta": zeta_of(point.tau, d), "t": t_of(point.tau, d)}
        if z is not None:
            out["x"] = x_of(z, point.tau, d)
    return out


def tz_residual(point: ModularPoint):
    """|t(p) - zeta(zeta+2)^3/(2zeta+1)^3| relative to |t|."""
    with workprec(point.digits):
        zeta = zeta_of(point.tau, point.digits)
        t = t_of(point.tau, point.digits)
        return abs(t - t_of_zeta(zeta)) / abs(t)
