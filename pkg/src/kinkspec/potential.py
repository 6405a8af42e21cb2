"""Piecewise-parabolic double-well potentials, their mollifications and kinks.

The exact family is

    U0(psi) = 1/2 - (b/2) psi**2        for |psi| <= gamma
            = (d/2) (psi -+ 1)**2        for +-psi >= gamma

with b = 1/gamma and d = 1/(1 - gamma), the unique choice making U0 of
class C^1.  Its kink is known in closed form.  Smooth members of the family
are obtained by convolving U0 with a scaled bump and removing the constant
shift the convolution introduces on the outer wells.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.interpolate import BPoly, CubicHermiteSpline

from .errors import DomainError, NumericalError

FORMAT_VERSION = 1

_GL_X, _GL_W = np.polynomial.legendre.leggauss(128)
_GL16_X, _GL16_W = np.polynomial.legendre.leggauss(16)
_GL32_X, _GL32_W = np.polynomial.legendre.leggauss(32)


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GammaParams:
    """Constants of the exact potential and its kink for one value of gamma.

    ``C`` and ``A`` are the inner amplitude and the (negative) outer
    coefficient of the kink, ``q`` the abscissa where the kink crosses
    ``gamma`` and ``R = q*sqrt(b + d)`` the radius of the circle on which the
    discrete spectrum is found.
    """

    gamma: float
    b: float
    d: float
    q: float
    C: float
    A: float
    R: float

    @property
    def m(self) -> float:
        """Mass of the outer wells, ``sqrt(d)``."""
        return math.sqrt(self.d)

    @property
    def theta(self) -> float:
        return math.asin(math.sqrt(self.gamma))

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("gamma", "b", "d", "q", "C", "A", "R")}


def derive_params(gamma: float) -> GammaParams:
    """Closed-form constants of the C^1 potential with inner breakpoint ``gamma``."""
    try:
        gamma = float(gamma)
    except (TypeError, ValueError):
        raise DomainError("gamma must lie in (0,1)") from None
    if not (0.0 < gamma < 1.0):
        raise DomainError("gamma must lie in (0,1)")
    theta = math.asin(math.sqrt(gamma))
    b = 1.0 / gamma
    d = 1.0 / (1.0 - gamma)
    q = math.sqrt(gamma) * theta
    C = math.sqrt(gamma)
    A = (gamma - 1.0) * math.exp(math.sqrt(gamma / (1.0 - gamma)) * theta)
    R = theta / math.sqrt(1.0 - gamma)
    return GammaParams(gamma=gamma, b=b, d=d, q=q, C=C, A=A, R=R)


def radius(gamma):
    """Circle radius ``arcsin(sqrt(gamma))/sqrt(1-gamma)``; vectorized."""
    g = np.asarray(gamma, dtype=float)
    return np.arcsin(np.sqrt(g)) / np.sqrt(1.0 - g)


# ---------------------------------------------------------------------------
# mollifiers
# ---------------------------------------------------------------------------

def _bump(u):
    u = np.asarray(u, dtype=float)
    out = np.zeros_like(u)
    inside = np.abs(u) < 1.0
    ui = u[inside]
    out[inside] = np.exp(-1.0 / (1.0 - ui * ui))
    return out


def _dbump(u):
    u = np.asarray(u, dtype=float)
    out = np.zeros_like(u)
    inside = np.abs(u) < 1.0
    ui = u[inside]
    one = 1.0 - ui * ui
    out[inside] = np.exp(-1.0 / one) * (-2.0 * ui / (one * one))
    return out


@dataclass(frozen=True, eq=False)
class Mollifier:
    """Even, nonnegative profile supported in [-1, 1], normalized to unit mass.

    ``profile`` and ``dprofile`` act on the unnormalized shape; calling the
    instance returns normalized values.  ``m2`` is the second moment of the
    normalized profile.
    """

    name: str
    profile: Callable
    dprofile: Callable
    mass: float
    m2: float

    def __call__(self, u):
        return self.profile(u) / self.mass

    def derivative(self, u):
        return self.dprofile(u) / self.mass


def make_mollifier(name: str, profile: Callable, dprofile: Callable) -> Mollifier:
    x, w = np.polynomial.legendre.leggauss(256)
    vals = profile(x)
    if np.any(vals < 0):
        raise DomainError(f"mollifier {name!r} takes negative values")
    if np.any(profile(np.array([-1.5, -1.0, 1.0, 1.5])) != 0):
        raise DomainError(f"mollifier {name!r} is not supported in [-1, 1]")
    if not np.allclose(vals, profile(-x), rtol=1e-13, atol=0):
        raise DomainError(f"mollifier {name!r} is not even")
    mass = float(np.dot(w, vals))
    if not mass > 0:
        raise DomainError(f"mollifier {name!r} has zero mass")
    m2 = float(np.dot(w, x * x * vals)) / mass
    return Mollifier(name=name, profile=profile, dprofile=dprofile, mass=mass, m2=m2)


BUMP = make_mollifier("bump", _bump, _dbump)
MOLLIFIERS = {"bump": BUMP}


# ---------------------------------------------------------------------------
# potential models
# ---------------------------------------------------------------------------

def _exact_derivative(p: GammaParams, psi, order: int):
    psi = np.asarray(psi, dtype=float)
    a = np.abs(psi)
    inner = a <= p.gamma
    if order == 0:
        return np.where(inner, 0.5 - 0.5 * p.b * a * a, 0.5 * p.d * (a - 1.0) ** 2)
    if order == 1:
        return np.sign(psi) * np.where(inner, -p.b * a, p.d * (a - 1.0))
    if order == 2:
        return np.where(inner, -p.b, p.d)
    return np.zeros_like(psi)


@dataclass(frozen=True, eq=False)
class PotentialTable:
    """Samples of U, U', U'', U''', U'''' on a uniform psi-grid."""

    psi: np.ndarray
    values: np.ndarray  # shape (5, len(psi))

    @property
    def step(self) -> float:
        return float(self.psi[1] - self.psi[0])


@dataclass(frozen=True, eq=False)
class PotentialModel:
    """An evaluatable member of the potential family.

    ``kind`` is ``"exact"`` for U0, ``"mollified"`` for U_eps and
    ``"quartic"`` for the classical (psi**2 - 1)**2/4 comparison well.
    """

    kind: str
    params: GammaParams | None
    epsilon: float = 0.0
    mu_eps: float = 0.0
    nu_eps: float = 0.0
    table: PotentialTable | None = None
    mollifier: Mollifier | None = None
    sup_dev_const: float = 0.0
    note: str = ""
    _splines: tuple = field(default=(), repr=False)

    @property
    def d(self) -> float:
        """Curvature at the wells (the continuum edge of the linearization)."""
        return 2.0 if self.kind == "quartic" else self.params.d

    @property
    def blend_zone(self) -> tuple[float, float]:
        g = self.params.gamma
        return (g - self.epsilon, g + self.epsilon)

    def __call__(self, psi, order: int = 0):
        return eval_potential(self, psi, order)

    def to_json(self) -> str:
        if self.kind != "mollified":
            raise DomainError("only mollified models carry a table to serialize")
        grid = np.column_stack([self.table.psi, self.table.values.T])
        doc = {
            "format": "kinkspec.potential",
            "version": FORMAT_VERSION,
            "gamma": self.params.gamma,
            "epsilon": self.epsilon,
            "mu_eps": self.mu_eps,
            "nu_eps": self.nu_eps,
            "mollifier": self.mollifier.name,
            "sup_dev_const": self.sup_dev_const,
            "grid": grid.tolist(),
        }
        return json.dumps(doc)

    @classmethod
    def from_json(cls, text: str) -> "PotentialModel":
        doc = json.loads(text)
        if doc.get("format") != "kinkspec.potential" or doc.get("version") != FORMAT_VERSION:
            raise DomainError("unrecognized potential document")
        grid = np.asarray(doc["grid"], dtype=float)
        table = PotentialTable(psi=grid[:, 0].copy(), values=grid[:, 1:].T.copy())
        return cls(
            kind="mollified",
            params=derive_params(doc["gamma"]),
            epsilon=float(doc["epsilon"]),
            mu_eps=float(doc["mu_eps"]),
            nu_eps=float(doc["nu_eps"]),
            table=table,
            mollifier=MOLLIFIERS[doc["mollifier"]],
            sup_dev_const=float(doc["sup_dev_const"]),
            _splines=_make_splines(table),
        )


def exact_model(gamma_or_params) -> PotentialModel:
    p = gamma_or_params if isinstance(gamma_or_params, GammaParams) else derive_params(gamma_or_params)
    return PotentialModel(kind="exact", params=p)


def quartic_model() -> PotentialModel:
    """Classical quartic well; resonant at the edge, stability open."""
    return PotentialModel(kind="quartic", params=None, note="resonant, stability open")


def _make_splines(table: PotentialTable) -> tuple:
    v = table.values
    return tuple(CubicHermiteSpline(table.psi, v[k], v[k + 1]) for k in range(3))


def eval_potential(model: PotentialModel, psi, order: int = 0, *, with_flag: bool = False):
    """U, U', U'' or U''' of ``model`` at ``psi`` (scalar or array).

    For the exact potential U''' vanishes away from psi = +-gamma and is a
    pair of Dirac masses there; those points return 0 and, with
    ``with_flag=True``, a boolean mask marking them.
    """
    if order not in (0, 1, 2, 3):
        raise DomainError(f"derivative order must be 0..3, got {order!r}")
    scalar = np.ndim(psi) == 0
    psi = np.asarray(psi, dtype=float)
    flag = np.zeros(psi.shape, dtype=bool)

    if model.kind == "quartic":
        val = _quartic(psi, order)
    elif model.kind == "exact":
        val = _exact_derivative(model.params, psi, order)
        if order == 3:
            flag = np.abs(psi) == model.params.gamma
    else:
        val = _mollified(model, psi, order)

    if scalar:
        val = float(val)
        flag = bool(flag)
    return (val, flag) if with_flag else val


def _quartic(psi, order):
    if order == 0:
        return 0.25 * (psi * psi - 1.0) ** 2
    if order == 1:
        return psi * (psi * psi - 1.0)
    if order == 2:
        return 3.0 * psi * psi - 1.0
    return 6.0 * psi


def _mollified(model: PotentialModel, psi, order):
    p = model.params
    eps = model.epsilon
    a = np.abs(psi)
    sgn = np.sign(psi)
    lo, hi = p.gamma - eps, p.gamma + eps

    if order == 3:
        h = model.mollifier
        return (p.b + p.d) / eps * (h((psi - p.gamma) / eps) - h((psi + p.gamma) / eps))

    val = _exact_derivative(p, a, order)
    if order == 0:
        val = np.where(a <= lo, val - model.mu_eps - model.nu_eps, val)
    blend = (a > lo) & (a < hi)
    if np.any(blend):
        val = np.array(val, dtype=float, copy=True)
        val[blend] = model._splines[order](a[blend])
    # parity: U even, U' odd, U'' even
    if order == 1:
        val = sgn * val
    return val


def _convolved(p: GammaParams, eps: float, h: Mollifier, psi: np.ndarray) -> np.ndarray:
    """Rows k=0,1,2 of int h(u) U0^(k)(psi - eps*u) du by split Gauss-Legendre."""
    psi = np.asarray(psi, dtype=float)[:, None]
    c1 = np.clip((psi - p.gamma) / eps, -1.0, 1.0)
    c2 = np.clip((psi + p.gamma) / eps, -1.0, 1.0)
    edges = [np.full_like(c1, -1.0), c1, c2, np.ones_like(c1)]
    out = np.zeros((3, psi.shape[0]))
    for lo, hi in zip(edges[:-1], edges[1:]):
        half = 0.5 * (hi - lo)
        u = half * _GL_X[None, :] + 0.5 * (hi + lo)
        wts = half * _GL_W[None, :] * h(u)
        arg = psi - eps * u
        for k in range(3):
            out[k] += np.sum(wts * _exact_derivative(p, arg, k), axis=1)
    return out


def build_mollified(
    gamma: float,
    epsilon: float,
    mollifier: Mollifier | None = None,
    grid_step: float | None = None,
) -> PotentialModel:
    """Smooth potential U_eps = h_eps * U0 - mu_eps.

    U_eps agrees with U0 for |psi| >= gamma + eps and with U0 - mu_eps -
    nu_eps for |psi| <= gamma - eps.  Between the two it is read from a table
    of exact convolution values with spacing ``grid_step`` (default eps/64).
    """
    p = derive_params(gamma)
    epsilon = float(epsilon)
    limit = 0.5 * min(p.gamma, 1.0 - p.gamma)
    if not (0.0 < epsilon < limit):
        raise DomainError(f"epsilon must lie in (0, {limit:.6g}) for gamma={p.gamma:.6g}")
    h = mollifier or BUMP
    if grid_step is None:
        grid_step = epsilon / 64.0

    half_width = p.gamma + 2.0 * epsilon
    n_int = int(math.ceil(2.0 * half_width / grid_step))
    psi = np.linspace(-half_width, half_width, n_int + 1)
    conv = _convolved(p, epsilon, h, psi)
    mu = 0.5 * p.d * epsilon**2 * h.m2
    nu = 0.5 * p.b * epsilon**2 * h.m2
    values = np.empty((5, psi.size))
    values[0] = conv[0] - mu
    values[1] = conv[1]
    values[2] = conv[2]
    values[3] = (p.b + p.d) / epsilon * (h((psi - p.gamma) / epsilon) - h((psi + p.gamma) / epsilon))
    values[4] = (p.b + p.d) / epsilon**2 * (
        h.derivative((psi - p.gamma) / epsilon) - h.derivative((psi + p.gamma) / epsilon)
    )
    table = PotentialTable(psi=psi, values=values)
    model = PotentialModel(
        kind="mollified",
        params=p,
        epsilon=epsilon,
        mu_eps=mu,
        nu_eps=nu,
        table=table,
        mollifier=h,
        _splines=_make_splines(table),
    )
    sup_dev = _verify_mollified(model, conv)
    object.__setattr__(model, "sup_dev_const", sup_dev / epsilon)
    return model


def _verify_mollified(model: PotentialModel, conv: np.ndarray) -> float:
    """Check the model invariants; return sup |U_eps - U0|."""
    p, eps = model.params, model.epsilon
    psi = model.table.psi
    a = np.abs(psi)
    tol = 1e-12
    exact = [_exact_derivative(p, psi, k) for k in range(3)]

    outer = a >= p.gamma + eps
    inner = a <= p.gamma - eps
    if np.any(np.abs(conv[0][outer] - model.mu_eps - exact[0][outer]) > tol):
        raise NumericalError("convolution disagrees with U0 outside the blend zone")
    if np.any(np.abs(conv[0][inner] + model.nu_eps - exact[0][inner]) > tol):
        raise NumericalError("convolution disagrees with U0 - nu_eps inside the blend zone")
    for k in (1, 2):
        if np.any(np.abs(conv[k][outer | inner] - exact[k][outer | inner]) > tol):
            raise NumericalError(f"derivative {k} of the convolution is off outside the blend zone")

    s = np.linspace(0.0, 1.5, 6001)
    s = np.union1d(s, np.linspace(p.gamma - eps, p.gamma + eps, 2049))
    u = eval_potential(model, s)
    if abs(eval_potential(model, 1.0)) > 1e-15 or abs(eval_potential(model, -1.0)) > 1e-15:
        raise NumericalError("U_eps does not vanish at the wells")
    if np.any(u[np.abs(s - 1.0) > 1e-9] <= 0):
        raise NumericalError("U_eps is not positive away from the wells")
    u3 = eval_potential(model, s, 3)
    if np.any(u3 < 0):
        raise NumericalError("U_eps''' changes sign on psi >= 0")
    return float(np.max(np.abs(u - _exact_derivative(p, s, 0))))


# ---------------------------------------------------------------------------
# kinks
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class KinkProfile:
    """Odd, increasing kink s(x) of a model.

    For 0 <= x <= ``inner_edge`` the kink is ``inner_amp*sin(inner_k*x)``,
    for x >= ``tail_switch`` it is ``1 - tail_const*exp(-sqrt(d)*x)``, and in
    between (mollified case only) a quintic Hermite interpolant of the
    quadrature-inverted profile.
    """

    model: PotentialModel
    inner_edge: float
    tail_switch: float
    inner_amp: float
    inner_k: float
    tail_const: float
    blend: BPoly | None = None
    nodes: tuple | None = None

    def __call__(self, x, nu: int = 0):
        return self.eval(x, nu)

    def eval(self, x, nu: int = 0):
        """s, s' or s'' at ``x``."""
        if self.model.kind == "quartic":
            return _quartic_kink(x, nu)
        scalar = np.ndim(x) == 0
        x = np.asarray(x, dtype=float)
        a = np.abs(x)
        sgn = np.sign(x)
        m = math.sqrt(self.model.d)
        k = self.inner_k
        inner = a <= self.inner_edge
        tail = a >= self.tail_switch
        with np.errstate(over="ignore"):
            e = np.exp(-m * a)
        if nu == 0:
            val = np.where(inner, self.inner_amp * np.sin(k * a), 1.0 - self.tail_const * e)
        elif nu == 1:
            val = np.where(inner, self.inner_amp * k * np.cos(k * a), self.tail_const * m * e)
        elif nu == 2:
            val = np.where(inner, -self.inner_amp * k * k * np.sin(k * a), -self.tail_const * m * m * e)
        else:
            raise DomainError("kink derivative order must be 0, 1 or 2")
        mid = ~(inner | tail)
        if self.blend is not None and np.any(mid):
            val[mid] = self.blend(a[mid], nu)
        if nu != 1:
            val = sgn * val
        return float(val) if scalar else val

    @property
    def blend_zone(self) -> tuple[float, float]:
        return (self.inner_edge, self.tail_switch)


def _quartic_kink(x, nu):
    x = np.asarray(x, dtype=float)
    t = np.tanh(x / math.sqrt(2.0))
    if nu == 0:
        return t
    sech2 = 1.0 - t * t
    if nu == 1:
        return sech2 / math.sqrt(2.0)
    return -t * sech2


def kink_exact(params: GammaParams, x):
    """Closed-form kink of U0."""
    return exact_kink(params)(x)


def exact_kink(model_or_params) -> KinkProfile:
    if isinstance(model_or_params, PotentialModel):
        model = model_or_params
    else:
        model = exact_model(model_or_params)
    if model.kind == "quartic":
        return KinkProfile(model, 0.0, 0.0, 0.0, 0.0, 0.0)
    p = model.params
    return KinkProfile(
        model=model,
        inner_edge=p.q,
        tail_switch=p.q,
        inner_amp=p.C,
        inner_k=math.sqrt(p.b),
        tail_const=-p.A,
    )


def kink_mollified(model: PotentialModel, x_samples=None, n_nodes: int = 1025) -> KinkProfile:
    """Kink of a mollified model by inverting x(s) = int_0^s du / sqrt(2 U_eps(u)).

    Only the blend zone gamma-eps < s < gamma+eps needs quadrature; on either
    side U_eps is an exact quadratic and the profile is closed-form.  The
    energy identity s'**2/2 = U_eps(s) is verified at ``x_samples`` (default:
    a dense grid over the blend zone).
    """
    if model.kind != "mollified":
        raise DomainError("kink_mollified needs a mollified model")
    p, eps = model.params, model.epsilon
    c = math.sqrt(1.0 - 2.0 * (model.mu_eps + model.nu_eps))
    kb = math.sqrt(p.b)
    s_lo, s_hi = p.gamma - eps, p.gamma + eps
    x_lo = math.asin(kb * s_lo / c) / kb

    s_nodes = np.linspace(s_lo, s_hi, n_nodes)
    dx = _blend_increments(model, s_nodes)
    x_nodes = x_lo + np.concatenate([[0.0], np.cumsum(dx)])
    if np.any(np.diff(x_nodes) <= 0):
        raise NumericalError("kink inversion is not monotone")
    u0 = eval_potential(model, s_nodes, 0)
    sp = np.sqrt(2.0 * u0)
    spp = eval_potential(model, s_nodes, 1)
    blend = BPoly.from_derivatives(x_nodes, np.column_stack([s_nodes, sp, spp]))

    x_hi = float(x_nodes[-1])
    tail_const = (1.0 - s_hi) * math.exp(math.sqrt(p.d) * x_hi)
    kink = KinkProfile(
        model=model,
        inner_edge=x_lo,
        tail_switch=x_hi,
        inner_amp=c / kb,
        inner_k=kb,
        tail_const=tail_const,
        blend=blend,
        nodes=(x_nodes, s_nodes),
    )
    if x_samples is None:
        x_samples = np.linspace(x_lo - 0.1, x_hi + 0.1, 4001)
    x_samples = np.asarray(x_samples, dtype=float)
    resid = energy_residual(kink, x_samples)
    if np.max(np.abs(resid)) > 1e-8:
        raise NumericalError(f"kink energy identity violated: max residual {np.max(np.abs(resid)):.3g}")
    return kink


def _blend_increments(model: PotentialModel, s_nodes: np.ndarray) -> np.ndarray:
    a, b = s_nodes[:-1, None], s_nodes[1:, None]
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)

    def gl(xg, wg):
        s = half * xg[None, :] + mid
        f = 1.0 / np.sqrt(2.0 * eval_potential(model, s, 0))
        return np.sum(half * wg[None, :] * f, axis=1)

    lo, hi = gl(_GL16_X, _GL16_W), gl(_GL32_X, _GL32_W)
    bad = np.abs(hi - lo) > 1e-13 * np.maximum(1.0, np.abs(hi))
    if np.any(bad):
        i = int(np.argmax(bad))
        raise NumericalError(
            f"kink quadrature did not converge on s in [{s_nodes[i]:.12g}, {s_nodes[i + 1]:.12g}]"
        )
    return hi


def energy_residual(kink: KinkProfile, x) -> np.ndarray:
    """s'(x)**2/2 - U(s(x)); zero for an exact kink."""
    s = kink(x, 0)
    sp = kink(x, 1)
    return 0.5 * sp * sp - eval_potential(kink.model, s, 0)


# ---------------------------------------------------------------------------
# linearized potential
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LinearizedPotential:
    """W(x) = U''(s(x)) along a kink.

    W equals -b for |x| <= ``inner_edge`` and d for |x| >= ``outer_edge``.
    For the exact kink both edges are q and W jumps there.
    """

    kink: KinkProfile
    jump_locus: float
    support_pad: float
    inner_edge: float
    outer_edge: float

    @property
    def model(self) -> PotentialModel:
        return self.kink.model

    @property
    def b(self) -> float:
        return self.model.params.b

    @property
    def d(self) -> float:
        return self.model.d

    @property
    def edge(self) -> float:
        return self.d

    @property
    def breakpoints(self) -> tuple[float, ...]:
        """Nonnegative abscissae where W or its derivatives are not smooth."""
        if self.inner_edge == self.outer_edge:
            return (self.inner_edge,)
        return (self.inner_edge, self.outer_edge)

    def __call__(self, x):
        scalar = np.ndim(x) == 0
        x = np.asarray(x, dtype=float)
        if self.model.kind == "exact":
            val = np.where(np.abs(x) <= self.jump_locus, -self.b, self.d)
        else:
            val = eval_potential(self.model, self.kink(x), 2)
        return float(val) if scalar else val

    def derivative(self, x):
        """W'(x) = U'''(s(x)) s'(x); zero a.e. for the exact kink."""
        return eval_potential(self.model, self.kink(x), 3) * self.kink(x, 1)

    def exact(self, x):
        """W0 for the same gamma."""
        x = np.asarray(x, dtype=float)
        return np.where(np.abs(x) <= self.jump_locus, -self.b, self.d)

    def w_norm(self) -> float:
        """L2 norm of W - W0 over the real line."""
        if self.model.kind == "exact":
            return 0.0
        q = self.jump_locus
        lo, hi = min(self.inner_edge, q), max(self.outer_edge, q)
        total = 0.0
        for a, b in ((lo, q), (q, hi)):
            if b <= a:
                continue
            edges = np.linspace(a, b, 65)
            for e0, e1 in zip(edges[:-1], edges[1:]):
                xs = 0.5 * (e1 - e0) * _GL32_X + 0.5 * (e1 + e0)
                # stay strictly on one side of the W0 jump
                diff = self(xs) - self.exact(xs)
                total += 0.5 * (e1 - e0) * float(np.dot(_GL32_W, diff * diff))
        return math.sqrt(2.0 * total)


def linearize(kink: KinkProfile) -> LinearizedPotential:
    """Linearized potential along ``kink`` with its measured support pad."""
    model = kink.model
    if model.kind == "quartic":
        raise DomainError("the quartic comparison well has no piecewise structure to linearize")
    q = model.params.q
    x1, x2 = kink.blend_zone
    pad = max(abs(q - x1), abs(x2 - q))
    return LinearizedPotential(kink=kink, jump_locus=q, support_pad=pad, inner_edge=x1, outer_edge=x2)
