"""Lattice symmetries of T_n^(k): the three S_4 generators and the two m = 0 complements."""
from __future__ import annotations

from ..errors import InvalidIndex, MZeroRequired
from ..exact import MPolyX, RatZeta, Z, mpoly_exact_div
from .tnk import KIndex, TValue, Tnk, XRational
from .weights import XI
from .yseq import Yseq

SYMMETRIES = ("swap01_invert", "swap02_mobius", "swap01_swap23_reflect", "complement_zscc", "complement_esp")


def substitute(poly: MPolyX, zmap: RatZeta | None, mobius, degs) -> MPolyX:
    """Homogenised image of poly under x_j -> (a x_j + b)/(c x_j + d), z -> zmap.

    Returns poly(mobius(x); zmap) * prod_j (c x_j + d)^degs[j], a polynomial.
    ``mobius`` is (a, b, c, d) with entries in Q(z), the same for every variable.
    """
    names = poly.names
    a, b, c, d = (RatZeta.coerce(v) for v in mobius)
    nv = len(names)
    top = max(degs) if degs else 0
    lin_num = []
    lin_den = []
    for j in range(nv):
        x = MPolyX.var(names, j)
        num_pows = [MPolyX.const(names, 1)]
        den_pows = [MPolyX.const(names, 1)]
        for _ in range(top):
            num_pows.append(num_pows[-1] * (a * x + b))
            den_pows.append(den_pows[-1] * (c * x + d))
        lin_num.append(num_pows)
        lin_den.append(den_pows)
    acc = MPolyX.const(names, 0)
    for exp, coeff in poly.terms().items():
        if zmap is not None:
            coeff = coeff.compose(zmap)
        term = MPolyX.const(names, coeff)
        for j, e in enumerate(exp):
            term = term * lin_num[j][e] * lin_den[j][degs[j] - e]
        acc = acc + term
    return acc


def reduce_fraction(num: MPolyX, den: MPolyX) -> XRational:
    g = num.num.gcd(den.num)
    if not g.is_constant():
        gm = MPolyX(num.names, g)
        num = mpoly_exact_div(num, gm)
        den = mpoly_exact_div(den, gm)
    return XRational.from_fraction(num, den)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _xi_power(k, e: int) -> RatZeta:
    acc = RatZeta(1)
    for j in range(4):
        acc = acc * XI[j] ** (k[j] * e)
    return acc


def _image(value, zmap, mobius, pref: RatZeta, xpow: int, m: int):
    """pref * prod x_j^xpow * value(mobius(x); zmap) as an exact T-value."""
    if m == 0:
        return pref * value.compose(zmap) if zmap is not None else pref * value
    num, den = value.num, value.denominator()
    degs = [max(num.degree(j), den.degree(j), 0) for j in range(m)]
    snum = substitute(num, zmap, mobius, degs)
    sden = substitute(den, zmap, mobius, degs)
    names = num.names
    mono = MPolyX.const(names, 1)
    for j in range(m):
        mono = mono * MPolyX.var(names, j) ** abs(xpow)
    if xpow >= 0:
        snum = snum * mono
    else:
        sden = sden * mono
    return reduce_fraction(snum * pref, sden)


def image_index(which: str, index: KIndex) -> KIndex:
    """Index whose T-value the symmetry ``which`` maps onto ``index``."""
    k0, k1, k2, k3 = index.k
    n = index.n
    if which == "swap01_invert":
        return KIndex((k1, k0, k2, k3), n)
    if which == "swap02_mobius":
        return KIndex((k2, k1, k0, k3), n)
    if which == "swap01_swap23_reflect":
        return KIndex((k1, k0, k3, k2), n)
    if which in ("complement_zscc", "complement_esp"):
        if index.m != 0:
            raise MZeroRequired(f"{which} needs m = 0, got m = {index.m}")
        if which == "complement_zscc":
            return KIndex((-k0 - 1, -k1 - 1, -k2 - 1, -k3 - 1), -n - 2)
        return KIndex((n - k0, n - k1, n - k2, n - k3), n)
    raise InvalidIndex(f"unknown symmetry {which!r}")


def from_image(which: str, index: KIndex, image):
    """T-value at ``index`` given the T-value ``image`` at image_index(which, index)."""
    k, n, m = index.k, index.n, index.m
    k0, k1, k2, k3 = k
    if which == "swap01_invert":
        pref = Z ** (2 * n * (n - 1)) * _xi_power(k, n - 1)
        # x -> 1/x, z -> 1/z
        return _image(image, Z.inverse(), (0, 1, 1, 0), pref, n - 1, m)
    if which == "swap02_mobius":
        pref = ((Z - 1) / (Z + 2)) ** (n * (n - 1))
        return _image(image, -Z - 1, (Z + 2, -(1 + 2 * Z), 0, 1 - Z), pref, 0, m)
    if which == "swap01_swap23_reflect":
        pref = ((Z + 2) / (Z * (2 * Z + 1))) ** (n * (n - 1)) * _xi_power(k, n - 1)
        return _image(image, None, (0, Z * (2 * Z + 1), Z + 2, 0), pref, n - 1, m)
    if which == "complement_zscc":
        return zscc_factor(k) * image
    if which == "complement_esp":
        return esp_factor(k) * image
    raise InvalidIndex(f"unknown symmetry {which!r}")


def apply_symmetry(which: str, index) -> TValue:
    """T_n^(k) recomputed from the symmetry image of its index."""
    if not isinstance(index, KIndex):
        k, n = index
        index = KIndex(tuple(k), n)
    image = Tnk(image_index(which, index)).value
    return TValue(index, from_image(which, index, image), "symmetry")


def zscc_factor(k) -> RatZeta:
    """t^(k) / t^(-k-1)."""
    k0, k1, k2, k3 = k
    n = sum(k) // 2
    num = RatZeta(_sign(n + 1)) * (Z + 2) ** (2 * (k1 + k2 + n + 2))
    den = (
        RatZeta(12) ** (n + 1)
        * Z ** (2 * (k1 + k2 + 2 * n + 3))
        * (Z - 1) ** (2 * (k2 + k3 + 1))
        * (Z + 1) ** (2 * (k0 + k1 + 2 * n + 3))
        * (2 * Z + 1) ** (2 * (k0 + k2 + 1))
    )
    return num / den


def esp_factor(k) -> RatZeta:
    """t^(k) / t^(n-k)."""
    k0, k1, k2, k3 = k
    n = sum(k) // 2
    sign = _sign((k0 + k1 + n) * (k1 + k3 + n))
    ys = Yseq(n - k0) * Yseq(n - k1) * Yseq(n - k2) * Yseq(n - k3) / (Yseq(k0) * Yseq(k1) * Yseq(k2) * Yseq(k3))
    a, b, c = k1 + k2 - n, k0 + k1 - n, k1 + k3 - n
    inner = Z**a * (Z + 1) ** b / ((Z - 1) ** b * (Z + 2) ** a * (2 * Z + 1) ** c)
    return RatZeta(sign * ys) * inner ** (n - 1)
