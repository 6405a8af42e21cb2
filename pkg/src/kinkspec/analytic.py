"""Exact spectrum of H0 = -d^2/dx^2 + W0 for the piecewise-parabolic potential.

With xi = beta*q and eta = alpha*q (beta**2 = b + lambda, alpha**2 = d -
lambda) the matching conditions at x = q reduce to the intersections of the
circle xi**2 + eta**2 = R**2 with

    -eta = xi*cot(xi)     (odd eigenfunctions)
     eta = xi*tan(xi)     (even eigenfunctions).

Intersections with eta = 0 (R an integer multiple of pi/2) are threshold
resonances rather than eigenvalues.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, NumericalError
from .potential import GammaParams, derive_params, radius

XTOL = 1e-15
EDGE_ETA = 1e-9
REPORT_VERSION = 1

U1_CAVEAT = (
    "K = inf (exact quadratic wells); U0 is only C^1 at psi = +-gamma. "
    "The required K>3 versus the stated 'any integer K >= 3' is moot here."
)


@dataclass(frozen=True)
class EigenMode:
    """One discrete eigenvalue of H0 together with its matching data."""

    lam: float
    parity: str  # "antisymmetric" | "symmetric"
    xi: float
    eta: float
    alpha: float
    beta: float
    coef_a: float
    coef_b: float

    @property
    def is_edge(self) -> bool:
        return self.eta < EDGE_ETA


def _mode(p: GammaParams, xi: float, parity: str) -> EigenMode:
    eta = math.sqrt(max(p.R * p.R - xi * xi, 0.0))
    beta = xi / p.q
    alpha = eta / p.q
    lam = beta * beta - p.b
    inner = math.sin(xi) if parity == "antisymmetric" else math.cos(xi)
    coef_b = _unit_norm_b(p.q, xi, beta, alpha, parity)
    coef_a = coef_b * inner * math.exp(eta)
    return EigenMode(lam, parity, xi, eta, alpha, beta, coef_a, coef_b)


def _unit_norm_b(q, xi, beta, alpha, parity):
    if alpha <= 0:
        return 1.0
    if parity == "antisymmetric":
        norm2 = q / 2 - math.sin(2 * xi) / (4 * beta) + math.sin(xi) ** 2 / (2 * alpha)
    else:
        norm2 = q / 2 + math.sin(2 * xi) / (4 * beta) + math.cos(xi) ** 2 / (2 * alpha)
    return 1.0 / math.sqrt(2.0 * norm2)


def _branch_roots(p: GammaParams, parity: str, include_edge: bool) -> list[EigenMode]:
    R = p.R
    modes = []
    k = 1
    while True:
        if parity == "antisymmetric":
            left, right = (k - 0.5) * math.pi, k * math.pi
            f = lambda x: x * math.cos(x) + math.sqrt(max(R * R - x * x, 0.0)) * math.sin(x)
        else:
            left, right = (k - 1) * math.pi, (k - 0.5) * math.pi
            f = lambda x: x * math.sin(x) - math.sqrt(max(R * R - x * x, 0.0)) * math.cos(x)
        if left > R:
            break
        hi = min(right, R)
        if left == hi:
            xi = left
        else:
            fl, fh = f(left), f(hi)
            if fl == 0.0:
                xi = left
            elif fh == 0.0:
                xi = hi
            elif fl * fh > 0:
                raise NumericalError(f"lost bracket on {parity} branch {k}: [{left}, {hi}]")
            else:
                xi = brentq(f, left, hi, xtol=XTOL, rtol=4 * np.finfo(float).eps, maxiter=200)
        mode = _mode(p, xi, parity)
        if include_edge or not mode.is_edge:
            modes.append(mode)
        k += 1
    return modes


def antisym_modes(params: GammaParams, include_edge: bool = False) -> list[EigenMode]:
    """Odd eigenmodes, one per branch xi in ((k-1/2)pi, k*pi) below R."""
    return _branch_roots(params, "antisymmetric", include_edge)


def sym_modes(params: GammaParams, include_edge: bool = False) -> list[EigenMode]:
    """Even eigenmodes; the first one is always the groundstate lambda = 0."""
    return _branch_roots(params, "symmetric", include_edge)


def all_modes(params: GammaParams) -> list[EigenMode]:
    return sorted(antisym_modes(params) + sym_modes(params), key=lambda m: m.lam)


def parity_residual(mode: EigenMode) -> float:
    if mode.parity == "antisymmetric":
        return abs(-mode.eta - mode.xi / math.tan(mode.xi))
    return abs(mode.eta - mode.xi * math.tan(mode.xi))


def gamma_k(k: int) -> float:
    """Parameter at which R(gamma) = k*pi/2, i.e. the k-th threshold resonance."""
    if int(k) != k or k < 1:
        raise DomainError("k must be a positive integer")
    target = k * math.pi / 2
    f = lambda g: math.asin(math.sqrt(g)) / math.sqrt(1.0 - g) - target
    hi = 1.0 - 1e-16
    while f(hi) < 0:  # never for k <= ~1e7
        raise NumericalError(f"gamma_k bracket failed for k={k}")
    return brentq(f, 1e-300, hi, xtol=1e-17, rtol=4 * np.finfo(float).eps, maxiter=500)


def _xi_antisym_first(R: float) -> float:
    # xi/sin(xi) = R on (pi/2, pi); equivalent to the first odd branch
    f = lambda x: x - R * math.sin(x)
    return brentq(f, math.pi / 2, math.pi, xtol=XTOL, rtol=4 * np.finfo(float).eps, maxiter=200)


def lambda1(params: GammaParams) -> float:
    """First odd eigenvalue, (1/gamma)(sin^2 xi/(1-gamma) - 1), for gamma in (gamma_1, gamma_3]."""
    g = params.gamma
    if not (gamma_k(1) < g <= gamma_k(3)):
        raise DomainError("lambda1 is defined for gamma in (gamma_1, gamma_3] = (0.64644, 0.92473]")
    xi = _xi_antisym_first(params.R)
    return (math.sin(xi) ** 2 / (1.0 - g) - 1.0) / g


def lambda1_via_xi(params: GammaParams) -> float:
    """Same eigenvalue from xi**2/q**2 - b."""
    xi = _xi_antisym_first(params.R)
    return xi * xi / (params.q * params.q) - params.b


def xi_of_gamma(gamma: float) -> float:
    return _xi_antisym_first(float(radius(gamma)))


# ---------------------------------------------------------------------------
# condition checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class U2Result:
    holds: bool
    nearest_k: int
    nearest_gamma_k: float
    distance: float


@dataclass(frozen=True)
class U3Result:
    holds: bool
    lambda1: float
    ratio: float  # 4*lambda1/d
    test_value: float  # 4*cos^2(xi)
    bound: float  # 3*gamma


@dataclass(frozen=True)
class U4Result:
    holds: bool
    fgr_value: float
    distance_to_gamma_star: float


def check_U2(params: GammaParams, tol: float = 1e-6) -> U2Result:
    """Edge resonances occur only at gamma_k; U2 holds away from them."""
    k0 = max(1, int(math.floor(2.0 * params.R / math.pi)))
    best = None
    for k in (k0 - 1, k0, k0 + 1):
        if k < 1:
            continue
        gk = gamma_k(k)
        dist = abs(params.gamma - gk)
        if best is None or dist < best[2]:
            best = (k, gk, dist)
    k, gk, dist = best
    return U2Result(holds=dist > tol, nearest_k=k, nearest_gamma_k=gk, distance=dist)


def _require_u34_interval(params: GammaParams, what: str):
    g1, g2 = gamma_k(1), gamma_k(2)
    if not (g1 < params.gamma < g2):
        raise DomainError(f"{what} is defined for gamma in (gamma_1, gamma_2) = ({g1:.6f}, {g2:.6f})")


def check_U3(params: GammaParams) -> U3Result:
    """4*lambda1 > d, tested as 4cos^2 xi < 3 gamma and as the direct ratio."""
    _require_u34_interval(params, "U3")
    lam = lambda1(params)
    xi = _xi_antisym_first(params.R)
    test = 4.0 * math.cos(xi) ** 2
    bound = 3.0 * params.gamma
    ratio = 4.0 * lam / params.d
    if (test < bound) != (ratio > 1.0):
        raise NumericalError("the two forms of the U3 test disagree")
    return U3Result(holds=test < bound, lambda1=lam, ratio=ratio, test_value=test, bound=bound)


def solve_u3_bound() -> float:
    """Largest gamma for which 4*lambda1 > d persists past gamma_1."""

    def f(a):
        return math.asin(math.sqrt(a)) / math.sqrt(1.0 - a) - 2.0 * (
            math.pi - math.acos(math.sqrt(3.0 * a) / 2.0)
        ) / math.sqrt(4.0 - 3.0 * a)

    lo, hi = gamma_k(1), 0.999
    if f(lo) * f(hi) > 0:
        raise NumericalError("no sign change for the U3 bound in (gamma_1, 0.999)")
    alpha = brentq(f, lo, hi, xtol=XTOL, rtol=4 * np.finfo(float).eps, maxiter=200)
    if not alpha > gamma_k(2):
        raise NumericalError("U3 bound does not exceed gamma_2")
    return alpha


def fgr_value_analytic(params: GammaParams) -> float:
    """sin(sqrt(b + 4*lambda1)*q): zero exactly where the Fermi Golden Rule fails."""
    _require_u34_interval(params, "the FGR value")
    lam = lambda1(params)
    return math.sin(math.sqrt(params.b + 4.0 * lam) * params.q)


def fgr_limit(params: GammaParams) -> float:
    """2(b+d) phi_{4 lambda1}(q) phi_{lambda1}(q)^2 / s0'(q).

    phi_{lambda1} has unit L2 norm and phi_{4 lambda1} = sin(beta x)/beta
    inside the well (phi(0) = 0, phi'(0) = 1).
    """
    _require_u34_interval(params, "the FGR limit")
    lam = lambda1(params)
    mode = antisym_modes(params)[0]
    beta4 = math.sqrt(params.b + 4.0 * lam)
    phi4 = math.sin(beta4 * params.q) / beta4
    phi1 = mode.coef_b * math.sin(mode.xi)
    s0p = params.C * math.sqrt(params.b) * math.cos(math.sqrt(params.b) * params.q)
    return 2.0 * (params.b + params.d) * phi4 * phi1 * phi1 / s0p


@dataclass(frozen=True)
class GammaStar:
    gamma: float
    xi: float
    theta: float
    xi_gamma2: float
    theta1_at_xi_gamma2: float
    theta2_at_xi_gamma2: float


def _theta1(xi):
    return math.sqrt(4.0 * xi * xi - math.pi**2) / math.sqrt(3.0)


def _theta2(xi):
    target = math.sin(xi) / xi
    return brentq(lambda t: math.cos(t) / t - target, 1e-12, math.pi / 2, xtol=XTOL, maxiter=200)


def solve_gamma_star() -> GammaStar:
    """Unique point of (gamma_1, gamma_2) where the FGR coupling vanishes.

    Solved in the (xi, theta) plane: 4 xi^2 - 3 theta^2 = pi^2 together with
    sin(xi)/xi = cos(theta)/theta, then gamma = sin^2(theta).
    """
    g2 = gamma_k(2)
    xi2 = _xi_antisym_first(math.pi * (1.0 - 1e-15))
    f = lambda xi: math.sin(xi) / xi - math.cos(_theta1(xi)) / _theta1(xi)
    lo = math.pi / 2 * (1.0 + 1e-12)
    if f(lo) * f(xi2) > 0:
        raise NumericalError("gamma_* bracket failed on (pi/2, xi(gamma_2))")
    xi = brentq(f, lo, xi2, xtol=XTOL, rtol=4 * np.finfo(float).eps, maxiter=200)
    theta = _theta1(xi)
    gamma = math.sin(theta) ** 2
    if not gamma_k(1) < gamma < g2:
        raise NumericalError("gamma_* fell outside (gamma_1, gamma_2)")
    return GammaStar(
        gamma=gamma,
        xi=xi,
        theta=theta,
        xi_gamma2=xi2,
        theta1_at_xi_gamma2=_theta1(xi2),
        theta2_at_xi_gamma2=_theta2(xi2),
    )


def check_U4(params: GammaParams, tol: float = 1e-6) -> U4Result:
    _require_u34_interval(params, "U4")
    gs = solve_gamma_star().gamma
    val = fgr_value_analytic(params)
    dist = abs(params.gamma - gs)
    return U4Result(holds=dist > tol and val != 0.0, fgr_value=val, distance_to_gamma_star=dist)


# ---------------------------------------------------------------------------
# eigenfunctions
# ---------------------------------------------------------------------------

def eigenfunction_eval(mode: EigenMode, params: GammaParams, x):
    """Unit-L2 eigenfunction of ``mode`` at ``x``."""
    x = np.asarray(x, dtype=float)
    a = np.abs(x)
    inside = a <= params.q
    if mode.parity == "antisymmetric":
        val = np.where(inside, mode.coef_b * np.sin(mode.beta * x),
                       np.sign(x) * mode.coef_a * np.exp(-mode.alpha * a))
    else:
        val = np.where(inside, mode.coef_b * np.cos(mode.beta * x),
                       mode.coef_a * np.exp(-mode.alpha * a))
    return float(val) if val.ndim == 0 else val


# ---------------------------------------------------------------------------
# certificate
# ---------------------------------------------------------------------------

@dataclass
class SpectralReport:
    gamma: float
    params: GammaParams
    modes: list[EigenMode]
    u1: dict
    u2: dict
    u3: dict
    u4: dict
    provenance: dict = field(default_factory=lambda: {"kind": "exact"})

    @property
    def all_hold(self) -> bool:
        return all(c["holds"] for c in (self.u1, self.u2, self.u3, self.u4))

    def to_dict(self) -> dict:
        return {
            "schema": "kinkspec.spectral_report",
            "version": REPORT_VERSION,
            "gamma": self.gamma,
            "params": self.params.to_dict(),
            "modes": [asdict(m) for m in self.modes],
            "u1": self.u1,
            "u2": self.u2,
            "u3": self.u3,
            "u4": self.u4,
            "provenance": self.provenance,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def certify(gamma: float, tol_resonance: float = 1e-6) -> SpectralReport:
    """Check U1-U4 for the exact potential; failures are reported, not raised."""
    p = derive_params(gamma)
    modes = all_modes(p)
    u1 = {"holds": True, "K_note": U1_CAVEAT}
    r2 = check_U2(p, tol_resonance)
    u2 = {
        "holds": r2.holds,
        "nearest_k": r2.nearest_k,
        "nearest_gamma_k": r2.nearest_gamma_k,
        "distance": r2.distance,
    }
    try:
        r3 = check_U3(p)
        u3 = {
            "holds": r3.holds and len(modes) == 2,
            "lambda1": r3.lambda1,
            "ratio": r3.ratio,
            "test_value": r3.test_value,
            "note": "",
        }
    except DomainError as exc:
        u3 = {"holds": False, "lambda1": None, "ratio": None, "test_value": None, "note": str(exc)}
    try:
        r4 = check_U4(p, tol_resonance)
        u4 = {
            "holds": r4.holds,
            "fgr_value": r4.fgr_value,
            "distance_to_gamma_star": r4.distance_to_gamma_star,
            "note": "",
        }
    except DomainError as exc:
        u4 = {"holds": False, "fgr_value": None, "distance_to_gamma_star": None, "note": str(exc)}
    return SpectralReport(gamma=p.gamma, params=p, modes=modes, u1=u1, u2=u2, u3=u3, u4=u4)


def mode_counts(gamma: float) -> tuple[int, int]:
    """(number of odd, number of even) eigenvalues of H0."""
    p = derive_params(gamma)
    return len(antisym_modes(p)), len(sym_modes(p))
