"""Kinks of piecewise-parabolic double-well potentials and their linearized spectra."""
from .errors import DiagnosticError, DomainError, InstabilityError, KinkspecError, NumericalError
from .potential import (
    BUMP,
    GammaParams,
    KinkProfile,
    LinearizedPotential,
    Mollifier,
    PotentialModel,
    build_mollified,
    derive_params,
    eval_potential,
    exact_kink,
    exact_model,
    kink_exact,
    kink_mollified,
    linearize,
    make_mollifier,
    quartic_model,
)
from .analytic import (
    EigenMode,
    SpectralReport,
    antisym_modes,
    certify,
    check_U2,
    check_U3,
    check_U4,
    eigenfunction_eval,
    fgr_limit,
    fgr_value_analytic,
    gamma_k,
    lambda1,
    solve_gamma_star,
    solve_u3_bound,
    sym_modes,
)
from .numeric import (
    ConvergenceReport,
    DiscreteOperator,
    continuum_odd_solution,
    convergence_study,
    discretize,
    eigs_below_edge,
    fgr_integral_numeric,
    resonance_indicator,
)
from .wave import BoostSpec, FieldState, Perturbation, init_state, step, track_center

__version__ = "0.1.0"
