"""Acceptance criteria, each checked at its stated tolerance.

A summary line per criterion is printed at the end of the session.
"""
from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.optimize import brentq, minimize_scalar

from kinkspec import (
    build_mollified,
    derive_params,
    discretize,
    eigs_below_edge,
    exact_kink,
    exact_model,
    fgr_integral_numeric,
    fgr_value_analytic,
    gamma_k,
    kink_mollified,
    lambda1,
    linearize,
    resonance_indicator,
    solve_gamma_star,
    solve_u3_bound,
)
from kinkspec.analytic import mode_counts
from kinkspec.numeric import eigvector
from kinkspec.potential import energy_residual, eval_potential, radius
from kinkspec.reports import load_preset, simulate
from kinkspec.wave import Perturbation, evolve, init_state

REF_GAMMA_K = [0.64643, 0.8579, 0.92472, 0.95359, 0.96856]
REF_GAMMA_STAR = 0.7925
ORACLE_GAMMAS = [0.70, 0.75, 0.80, 0.85]

ac = pytest.mark.criterion


# 1 -------------------------------------------------------------------------

@ac("AC1", "resonance table gamma_1..gamma_5")
def test_ac1_gamma_table():
    got = [gamma_k(k) for k in range(1, 6)]
    assert np.allclose(got, REF_GAMMA_K, atol=1e-4, rtol=0)


# 2 -------------------------------------------------------------------------

@ac("AC2", "U3 bound alpha")
def test_ac2_u3_bound():
    alpha = solve_u3_bound()
    assert abs(alpha - 0.921485) <= 1e-4
    assert alpha > gamma_k(2)


# 3 -------------------------------------------------------------------------

@ac("AC3", "FGR critical point gamma_* and diagnostics")
def test_ac3_gamma_star_value():
    assert abs(solve_gamma_star().gamma - REF_GAMMA_STAR) <= 1e-3


@ac("AC3", "FGR critical point gamma_* and diagnostics")
def test_ac3_gamma_star_diagnostics():
    gs = solve_gamma_star()
    assert abs(gs.xi_gamma2 - 2.3137) <= 1e-3
    assert abs(gs.theta1_at_xi_gamma2 - 1.9616) <= 1e-3
    assert abs(gs.theta2_at_xi_gamma2 - 1.1843) <= 1e-3


# 4 -------------------------------------------------------------------------

def _oracle_error(gamma, h):
    p = derive_params(gamma)
    vals = eigs_below_edge(discretize(linearize(exact_kink(p)), 30.0, h))
    return vals, max(abs(vals[0]), abs(vals[1] - lambda1(p)))


@ac("AC4", "FD oracle matches {0, lambda1}; halving h gains >= 3x")
@pytest.mark.parametrize("gamma", ORACLE_GAMMAS)
def test_ac4_oracle_equivalence(gamma):
    vals, err = _oracle_error(gamma, 0.005)
    assert len(vals) == 2
    assert err <= 5e-3
    vals2, err2 = _oracle_error(gamma, 0.0025)
    assert len(vals2) == 2
    assert err / err2 >= 3.0


# 5 -------------------------------------------------------------------------

def _tabulated_rows(gamma):
    """Odd and even eigenvalue counts as tabulated for gamma < gamma_6."""
    g = REF_GAMMA_K
    odd = 0 if gamma <= g[0] else 1 if gamma <= g[2] else 2 if gamma <= g[4] else 3
    even = 1 if gamma <= g[1] else 2 if gamma <= g[3] else 3
    return odd, even


@ac("AC5", "mode-count staircase and oracle spot checks")
def test_ac5_staircase():
    grid = np.linspace(0.6, 0.975, 400)  # below gamma_6
    counts = [mode_counts(g) for g in grid]
    transitions = []
    for i in range(len(grid) - 1):
        if counts[i] != counts[i + 1]:
            transitions.append(0.5 * (grid[i] + grid[i + 1]))
    assert len(transitions) == 5
    assert np.allclose(transitions, REF_GAMMA_K, atol=1e-3, rtol=0)
    for g, c in zip(grid, counts):
        if min(abs(g - r) for r in REF_GAMMA_K) > 1e-4:
            assert c == _tabulated_rows(g)


@ac("AC5", "mode-count staircase and oracle spot checks")
@pytest.mark.parametrize("regime", range(5))
def test_ac5_oracle_spot_check(regime):
    # radius midway between consecutive transitions keeps the top mode off the edge
    gamma = brentq(lambda g: radius(g) - (regime + 0.5) * math.pi / 2, 1e-6, 0.999)
    assert gamma < REF_GAMMA_K[4]
    odd, even = mode_counts(gamma)
    vals = eigs_below_edge(discretize(linearize(exact_kink(derive_params(gamma))), 30.0, 0.005))
    assert len(vals) == odd + even


# 6 -------------------------------------------------------------------------

def _indicator(gamma):
    return resonance_indicator(linearize(exact_kink(derive_params(gamma))))


@ac("AC6", "resonance indicator vanishes at gamma_1, gamma_2 only")
@pytest.mark.parametrize("k", [1, 2])
def test_ac6_indicator_at_resonance(k):
    g0 = REF_GAMMA_K[k - 1]
    res = minimize_scalar(lambda g: abs(_indicator(g)), bounds=(g0 - 1e-4, g0 + 1e-4),
                          method="bounded", options={"xatol": 1e-12})
    assert res.fun <= 1e-3


@ac("AC6", "resonance indicator vanishes at gamma_1, gamma_2 only")
def test_ac6_indicator_away_from_resonance():
    assert abs(_indicator(0.75)) > 10 * 1e-3


# 7 -------------------------------------------------------------------------

def _fgr_zeros():
    g1, g2 = gamma_k(1), gamma_k(2)
    grid = np.linspace(g1, g2, 2002)[1:-1]
    vals = np.array([fgr_value_analytic(derive_params(g)) for g in grid])
    idx = np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0]
    f = lambda g: fgr_value_analytic(derive_params(g))
    return [brentq(f, grid[i], grid[i + 1], xtol=1e-14) for i in idx]


@ac("AC7", "FGR sign change")
def test_ac7_single_zero():
    assert len(_fgr_zeros()) == 1


@ac("AC7", "FGR sign change")
def test_ac7_zero_location():
    (zero,) = _fgr_zeros()
    assert abs(zero - REF_GAMMA_STAR) <= 1e-3


@ac("AC7", "FGR sign change")
@pytest.mark.parametrize("gamma", [0.70, 0.85])
def test_ac7_numeric_sign(gamma):
    model = build_mollified(gamma, 0.02)
    val = fgr_integral_numeric(model, kink_mollified(model))
    assert val != 0.0
    assert np.sign(val) == np.sign(fgr_value_analytic(derive_params(gamma)))


@ac("AC7", "FGR sign change")
def test_ac7_cauchy_sequence(convergence):
    diffs = np.abs(np.diff(convergence.fgr_values))
    assert np.all(np.diff(diffs) < 0)


# 8 -------------------------------------------------------------------------

@ac("AC8", "convergence study at gamma=0.75")
def test_ac8_convergence(convergence, params):
    assert np.all(np.diff(convergence.lambda1_errors) < 0)
    assert np.all(np.diff(convergence.w_norms) < 0)
    assert all(4.0 * lam > params.d for lam in convergence.lambda1_values)


# 9 -------------------------------------------------------------------------

@ac("AC9", "structural identities")
@pytest.mark.parametrize("gamma", [0.3, 0.75, 0.9])
def test_ac9_c1_matching(gamma):
    p = derive_params(gamma)
    g, q = p.gamma, p.q
    # inner and outer branch formulas of U0 and s0, evaluated at the break
    assert abs((0.5 - 0.5 * p.b * g * g) - 0.5 * p.d * (g - 1) ** 2) <= 1e-12
    assert abs(-p.b * g - p.d * (g - 1)) <= 1e-12
    m, k = math.sqrt(p.d), math.sqrt(p.b)
    assert abs(p.C * math.sin(k * q) - (1 + p.A * math.exp(-m * q))) <= 1e-12
    assert abs(p.C * k * math.cos(k * q) - (-m * p.A * math.exp(-m * q))) <= 1e-12
    assert abs(p.C * math.sin(k * q) - g) <= 1e-12


@ac("AC9", "structural identities")
def test_ac9_kink_ode_residual(params):
    s = exact_kink(params)
    x = np.linspace(-12, 12, 4001)
    x = x[np.abs(np.abs(x) - params.q) > 1e-6]
    res = s(x, 2) - eval_potential(exact_model(params), s(x), 1)
    assert np.max(np.abs(res)) <= 1e-10


@ac("AC9", "structural identities")
def test_ac9_energy_identity(mollified):
    _, kink, _ = mollified
    x = np.linspace(-8, 8, 6001)
    assert np.max(np.abs(energy_residual(kink, x))) <= 1e-8


@ac("AC9", "structural identities")
def test_ac9_zero_mode_correlation(params, W0):
    op = discretize(W0, 30.0, 0.005)
    lam, vec = eigvector(op, 0)
    ref = exact_kink(params)(op.x, 1)
    corr = abs(np.dot(vec, ref)) / (np.linalg.norm(vec) * np.linalg.norm(ref))
    assert corr > 0.999


# 10 ------------------------------------------------------------------------

@ac("AC10", "simulation suite")
def test_ac10_static_kink():
    model = exact_model(0.75)
    state = init_state(model, "kink", L=20.0, dx=0.02)
    final = evolve(state, 0.01, 5000)
    assert abs(final.t - 50.0) < 1e-9
    kink = exact_kink(model)
    assert np.max(np.abs(final.psi - kink(final.x))) <= 5e-3


@ac("AC10", "simulation suite")
def test_ac10_reversibility():
    model = exact_model(0.75)
    state = init_state(model, Perturbation(0.05), L=20.0, dx=0.02)
    fwd = evolve(state, 0.01, 100)
    back = evolve(type(fwd)(fwd.x, fwd.psi, -fwd.pi, fwd.t, model), 0.01, 100)
    assert np.max(np.abs(back.psi - state.psi)) <= 1e-10
    assert np.max(np.abs(back.pi + state.pi)) <= 1e-10


@pytest.fixture(scope="module")
def perturbed_run():
    return simulate(load_preset("perturbed"))


@ac("AC10", "simulation suite")
def test_ac10_energy_drift(perturbed_run):
    _, series = perturbed_run
    assert series.t[-1] == pytest.approx(100.0)
    drift = np.max(np.abs(series.energy - series.energy[0])) / abs(series.energy[0])
    assert drift <= 1e-5


@ac("AC10", "simulation suite")
def test_ac10_perturbation_bounded(perturbed_run):
    _, series = perturbed_run
    assert np.max(series.window_sup) <= 1.1 * series.window_sup[0]


@ac("AC10", "simulation suite")
def test_ac10_boosted_slope():
    _, series = simulate(load_preset("boosted"))
    slope = np.polyfit(series.t, series.center, 1)[0]
    assert abs(slope - 0.2) <= 2e-3
