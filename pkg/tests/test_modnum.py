import mpmath
import pytest
from hypothesis import given, strategies as st

from susy8v.errors import DomainError, NearSingularSample
from susy8v.exact import Z
from susy8v.modnum import (
    ModularPoint,
    Wavefunction,
    eta,
    eval_ratzeta,
    modular_suite,
    phis,
    schrodinger_check,
    seed_values,
    span_check,
    t_of,
    tep_check,
    theta,
    trt_qd_check,
    tz_residual,
    weierstrass_p,
    x_of,
    zeta_of,
)
from susy8v.modnum.evaluate import weierstrass_p_lattice
from susy8v.modnum.tau import GAMMA_SAMPLE, MODULAR_T1, MODULAR_T3, coset_representative, in_gamma, mobius
from susy8v.modnum.theta import half_periods, t_of_zeta

TAU = mpmath.mpc(0, "1.1")
TAU2 = mpmath.mpc("0.3", "0.9")


def small(x, exponent):
    return x < mpmath.mpf(10) ** -exponent


# theta products


def test_theta_at_zero_nome():
    assert theta(mpmath.mpf("0.3"), 0) == 1 - mpmath.mpf("0.3")


def test_theta_zeros():
    p = mpmath.mpf("0.4")
    assert theta(1, p) == 0
    assert small(abs(theta(p, p)), 40)


def test_theta_domain():
    with pytest.raises(DomainError):
        theta(0, mpmath.mpf("0.5"))
    with pytest.raises(DomainError):
        theta(1, 1)


@given(
    st.floats(0.5, 2.0),
    st.floats(-3.1, 3.1),
    st.floats(0.05, 0.6),
)
def test_theta_quasi_periodicity(r, arg, p):
    with mpmath.workdps(50):
        x = mpmath.mpf(r) * mpmath.expj(arg)
        p = mpmath.mpf(p)
        lhs = theta(p * x, p, 40)
        rhs = -theta(x, p, 40) / x
        assert abs(lhs - rhs) <= mpmath.mpf(10) ** -35 * max(1, abs(rhs))


@given(st.floats(0.5, 2.0), st.floats(-3.1, 3.1), st.floats(0.05, 0.6))
def test_theta_inversion(r, arg, p):
    # theta(1/x) = -theta(x)/x
    with mpmath.workdps(50):
        x = mpmath.mpf(r) * mpmath.expj(arg)
        p = mpmath.mpf(p)
        assert abs(theta(1 / x, p, 40) + theta(x, p, 40) / x) <= mpmath.mpf(10) ** -35 * max(1, abs(theta(x, p, 40)))


def test_theta_against_jacobi():
    # with x = e^{2iv}, p = q^2: theta1(v, q) = 2 q^{1/4} sin(v) (p; p)_inf theta(x; p) / (1 - x)
    with mpmath.workdps(50):
        q, v = mpmath.mpf("0.3"), mpmath.mpf("0.7")
        p, x = q * q, mpmath.expj(2 * v)
        ours = 2 * q ** (mpmath.mpf(1) / 4) * mpmath.sin(v) * mpmath.qp(p, p) * theta(x, p, 40) / (1 - x)
        assert abs(ours - mpmath.jtheta(1, v, q)) < mpmath.mpf(10) ** -38


# eta quotients and the uniformising functions


def test_eta_against_q_pochhammer():
    with mpmath.workdps(70):
        q = mpmath.exp(2j * mpmath.pi * TAU)
        expected = mpmath.exp(1j * mpmath.pi * TAU / 12) * mpmath.qp(q)
        assert abs(eta(TAU) - expected) < mpmath.mpf(10) ** -55


def test_t_is_lambda_at_three_tau():
    with mpmath.workdps(70):
        q = mpmath.exp(3j * mpmath.pi * TAU2)
        expected = (mpmath.jtheta(2, 0, q) / mpmath.jtheta(3, 0, q)) ** 4
        assert abs(t_of(TAU2) - expected) < mpmath.mpf(10) ** -55


@pytest.mark.parametrize("tau", [TAU, TAU2])
def test_tz(tau):
    assert small(tz_residual(ModularPoint(tau)), 45)


def test_tz_improves_with_digits():
    r40 = tz_residual(ModularPoint(TAU, 40))
    r80 = tz_residual(ModularPoint(TAU, 80))
    assert r80 < r40 * mpmath.mpf(10) ** -20


def test_half_period_values():
    with mpmath.workdps(70):
        zeta = zeta_of(TAU)
        g0, g1, g2, g3 = half_periods(TAU)
        assert abs(x_of(g3, TAU) - 1) < mpmath.mpf(10) ** -50
        assert abs(x_of(mpmath.mpf("1e-30"), TAU) - (2 * zeta + 1)) < mpmath.mpf(10) ** -25
        assert abs(x_of(g1, TAU) - zeta / (zeta + 2)) < mpmath.mpf(10) ** -50
        assert abs(x_of(g2, TAU) - zeta * (2 * zeta + 1) / (zeta + 2)) < mpmath.mpf(10) ** -50


def test_modular_point_rejects_lower_half_plane():
    with pytest.raises(DomainError):
        ModularPoint(mpmath.mpc(0, -1))
    with pytest.raises(DomainError):
        ModularPoint(TAU, digits=10)


def test_modular_suite_contents():
    out = modular_suite(ModularPoint(TAU), z=mpmath.mpf("0.1"))
    assert set(out) == {"eta", "phi", "zeta", "t", "x"}
    assert all(abs(f) > 0 for f in out["phi"])


def test_tau0_seed_is_finite():
    assert mpmath.isfinite(abs(seed_values(mpmath.mpc(0, "1.5"))["tau0"]))


def test_zeta_is_gamma_invariant():
    with mpmath.workdps(70):
        assert abs(zeta_of(mobius(GAMMA_SAMPLE, TAU)) - zeta_of(TAU)) < mpmath.mpf(10) ** -50


@pytest.mark.parametrize("mat", [MODULAR_T1, MODULAR_T3])
def test_coset_representative(mat):
    rep = coset_representative(mat)
    a, b, c, d = rep[0][0], rep[0][1], rep[1][0], rep[1][1]
    inv = ((d, -b), (-c, a))
    prod = tuple(tuple(sum(mat[i][k] * inv[k][j] for k in range(2)) for j in range(2)) for i in range(2))
    assert in_gamma(prod)
    assert max(abs(v) for row in rep for v in row) <= 6


# Weierstrass function


def test_wp_against_lattice_sum():
    u = mpmath.mpc("0.23", "0.17")
    assert abs(weierstrass_p(u, TAU) - weierstrass_p_lattice(u, TAU, 40)) < mpmath.mpf(10) ** -2


def test_wp_real_at_half_period():
    for w in (mpmath.mpf(1) / 2, TAU / 2, (1 + TAU) / 2):
        assert abs(mpmath.im(weierstrass_p(w, TAU))) < mpmath.mpf(10) ** -12


def test_wp_is_even_and_periodic():
    u = mpmath.mpc("0.31", "0.12")
    value = weierstrass_p(u, TAU)
    assert abs(weierstrass_p(-u, TAU) - value) < mpmath.mpf(10) ** -10
    assert abs(weierstrass_p(u + 1, TAU) - value) < mpmath.mpf(10) ** -10
    assert abs(weierstrass_p(u + TAU, TAU) - value) < mpmath.mpf(10) ** -10


# sampled identities


@pytest.mark.parametrize("tau", [TAU, TAU2])
def test_span_n1(tau):
    result = span_check(1, tau)
    assert small(result["deviation"], 30)


def test_span_n2():
    assert small(span_check(2, TAU)["deviation"], 30)


def test_span_converges_with_digits():
    d40 = span_check(1, TAU, digits=40)["deviation"]
    d80 = span_check(1, TAU, digits=80)["deviation"]
    assert d80 < d40


def test_span_is_seeded():
    assert span_check(1, TAU, seed=3)["spreads"] == span_check(1, TAU, seed=3)["spreads"]


def test_near_singular_sample_rejected():
    with pytest.raises(NearSingularSample):
        span_check(1, TAU, samples=[[mpmath.mpf("0.1"), mpmath.mpf("0.1")]])


@pytest.mark.parametrize("n,k", [(1, (0, 1, 1, -1)), (1, (0, 0, 0, 0))])
def test_schrodinger(n, k):
    assert small(schrodinger_check(n, k, TAU)["deviation"], 15)


def test_wavefunction_shape():
    w = Wavefunction(1, (0, 0, 0, 0))
    assert w.m == 2


def test_tep():
    result = tep_check(mpmath.mpc(0, "1.2"), digits=40)
    assert small(result["residuals"]["delta tau0"], 20)
    assert small(result["residual"], 20)


@pytest.mark.parametrize("l", [(0, 0, 0, 0), (-1, -2, 3, -1), (1, 0, 0, 0)])
def test_trt_qd(l):
    result = trt_qd_check(l, TAU)
    assert small(result["trt"], 20) and small(result["qd"], 20)


def test_eval_ratzeta():
    assert eval_ratzeta(Z * (Z + 2) ** 3 / (2 * Z + 1) ** 3, mpmath.mpf(2)) == t_of_zeta(mpmath.mpf(2))
