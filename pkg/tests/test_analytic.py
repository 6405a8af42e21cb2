import json
import math

import numpy as np
import pytest
from scipy.integrate import quad

from kinkspec import (
    DomainError,
    antisym_modes,
    certify,
    check_U2,
    check_U3,
    check_U4,
    derive_params,
    discretize,
    eigenfunction_eval,
    eigs_below_edge,
    fgr_limit,
    fgr_value_analytic,
    gamma_k,
    lambda1,
    solve_gamma_star,
    solve_u3_bound,
    sym_modes,
)
from kinkspec.analytic import all_modes, lambda1_via_xi, mode_counts, parity_residual, xi_of_gamma
from kinkspec.potential import radius

LAMBDA1_075 = 3.278214586487314
GAMMA_STAR = 0.7055033547055573


def test_gamma_k_solves_radius_equation():
    for k in range(1, 21):
        g = gamma_k(k)
        assert radius(g) == pytest.approx(k * math.pi / 2, rel=1e-13)
    assert np.all(np.diff([gamma_k(k) for k in range(1, 21)]) > 0)


def test_gamma_k_large_k_asymptotics():
    # R ~ (pi/2)/sqrt(1-gamma) - 1 near gamma = 1
    for k in (50, 200, 1000):
        assert gamma_k(k) == pytest.approx(1 - 1 / (k + 2 / math.pi) ** 2, abs=2 / k**4)


def test_gamma_k_domain():
    with pytest.raises(DomainError):
        gamma_k(0)


def test_lambda1_against_richardson_oracle(W0):
    # FD error is O(h^2); two grids give an O(h^4) estimate
    v1 = eigs_below_edge(discretize(W0, 30.0, 0.005))[1]
    v2 = eigs_below_edge(discretize(W0, 30.0, 0.0025))[1]
    assert (4 * v2 - v1) / 3 == pytest.approx(LAMBDA1_075, abs=2e-6)
    assert lambda1(derive_params(0.75)) == pytest.approx(LAMBDA1_075, rel=1e-13)


@pytest.mark.parametrize("gamma", [0.65, 0.7, 0.8, 0.9, 0.92])
def test_lambda1_two_formulas(gamma):
    p = derive_params(gamma)
    assert lambda1(p) == pytest.approx(lambda1_via_xi(p), rel=1e-11)


def test_lambda1_domain():
    with pytest.raises(DomainError):
        lambda1(derive_params(0.6))
    with pytest.raises(DomainError):
        lambda1(derive_params(0.95))


def test_xi_of_gamma():
    assert xi_of_gamma(0.75) == pytest.approx(1.9475230774263055, rel=1e-13)


@pytest.mark.parametrize("gamma", [0.3, 0.75, 0.9, 0.97])
def test_modes_satisfy_circle_system(gamma):
    p = derive_params(gamma)
    modes = all_modes(p)
    assert modes[0].lam == pytest.approx(0.0, abs=1e-11)
    assert modes[0].parity == "symmetric"
    for m in modes:
        assert m.xi**2 + m.eta**2 == pytest.approx(p.R**2, rel=1e-12)
        assert parity_residual(m) < 1e-9
        assert -p.b < m.lam < p.d


@pytest.mark.parametrize("gamma", [0.75, 0.9])
def test_eigenfunctions_normalized_and_solve_ode(gamma):
    p = derive_params(gamma)
    for m in all_modes(p):
        f = lambda x: eigenfunction_eval(m, p, x) ** 2
        norm = 2 * (quad(f, 0, p.q, epsabs=1e-13)[0] + quad(f, p.q, np.inf, epsabs=1e-13)[0])
        assert norm == pytest.approx(1.0, abs=1e-10)
        # continuity at the jump and -phi'' + W0 phi = lam phi by differences
        assert eigenfunction_eval(m, p, p.q * (1 - 1e-12)) == pytest.approx(
            eigenfunction_eval(m, p, p.q * (1 + 1e-12)), abs=1e-9)
        h = 1e-4
        for x in (0.3 * p.q, 1.7 * p.q):
            w = -p.b if x < p.q else p.d
            phi = lambda t: eigenfunction_eval(m, p, t)
            lap = (phi(x + h) - 2 * phi(x) + phi(x - h)) / h**2
            assert -lap + w * phi(x) == pytest.approx(m.lam * phi(x), abs=1e-5)


def test_edge_modes_excluded_at_resonance():
    p = derive_params(gamma_k(2))
    odd, even = antisym_modes(p, include_edge=True), sym_modes(p, include_edge=True)
    assert any(m.is_edge for m in odd + even)
    assert mode_counts(gamma_k(2)) == (1, 1)


def test_mode_counts_at_three_quarters():
    assert mode_counts(0.75) == (1, 1)
    assert mode_counts(0.5) == (0, 1)


def test_u2():
    assert check_U2(derive_params(0.75)).holds
    r = check_U2(derive_params(gamma_k(1)))
    assert not r.holds and r.nearest_k == 1
    # five-digit input is 7e-6 away from the root
    assert check_U2(derive_params(0.64643)).holds
    assert not check_U2(derive_params(0.64643), tol=1e-5).holds


def test_u3_bound_is_where_ratio_reaches_one():
    alpha = solve_u3_bound()
    assert alpha == pytest.approx(0.9214854262673452, rel=1e-13)
    assert alpha > gamma_k(2)
    assert 4 * lambda1(derive_params(alpha)) / derive_params(alpha).d == pytest.approx(1.0, abs=1e-10)


def test_check_u3():
    r = check_U3(derive_params(0.75))
    assert r.holds and r.ratio > 1 and r.test_value < r.bound
    with pytest.raises(DomainError):
        check_U3(derive_params(0.9))


def test_gamma_star_root_and_diagnostics():
    gs = solve_gamma_star()
    assert gs.gamma == pytest.approx(GAMMA_STAR, rel=1e-12)
    assert gs.xi_gamma2 == pytest.approx(2.31373413207868, rel=1e-12)
    assert gs.theta1_at_xi_gamma2 == pytest.approx(1.961619920260988, rel=1e-12)
    assert gs.theta2_at_xi_gamma2 == pytest.approx(1.184276787355629, rel=1e-12)
    assert fgr_value_analytic(derive_params(gs.gamma)) == pytest.approx(0.0, abs=1e-12)
    # theta system and the direct FGR value agree
    assert math.sin(gs.theta) ** 2 == pytest.approx(gs.gamma)
    assert xi_of_gamma(gs.gamma) == pytest.approx(gs.xi, rel=1e-12)


def test_fgr_value_sign_pattern():
    assert fgr_value_analytic(derive_params(0.68)) > 0
    assert fgr_value_analytic(derive_params(0.75)) < 0
    assert fgr_value_analytic(derive_params(0.85)) < 0
    with pytest.raises(DomainError):
        fgr_value_analytic(derive_params(0.9))


def test_fgr_limit_matches_extrapolated_numeric(convergence):
    f = convergence.fgr_values
    extrapolated = f[-1] + (f[-1] - f[-2]) / 3
    assert fgr_limit(derive_params(0.75)) == pytest.approx(-0.700149430889575, rel=1e-12)
    assert extrapolated == pytest.approx(convergence.fgr_limit, abs=1e-3)


def test_u4():
    assert check_U4(derive_params(0.75)).holds
    assert not check_U4(derive_params(GAMMA_STAR)).holds


def test_certify_report():
    rep = certify(0.75)
    assert rep.all_hold
    assert [m.parity for m in rep.modes] == ["symmetric", "antisymmetric"]
    doc = json.loads(rep.to_json())
    assert doc["schema"] == "kinkspec.spectral_report" and doc["version"] == 1
    assert doc["u3"]["lambda1"] == pytest.approx(LAMBDA1_075)


@pytest.mark.parametrize("gamma", [0.5, 0.9, GAMMA_STAR])
def test_certify_failures_are_reported(gamma):
    rep = certify(gamma)
    assert not rep.all_hold
    assert rep.u1["holds"]
