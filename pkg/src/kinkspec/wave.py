"""Leapfrog simulation of psi_tt = psi_xx - U'(psi) around a kink."""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DiagnosticError, DomainError, InstabilityError
from .potential import KinkProfile, PotentialModel, eval_potential, exact_kink, kink_mollified


@dataclass(frozen=True, eq=False)
class FieldState:
    """Field and velocity on a uniform grid over [-L, L]; the end samples are pinned."""

    x: np.ndarray
    psi: np.ndarray
    pi: np.ndarray
    t: float
    model: PotentialModel

    @property
    def dx(self) -> float:
        return float(self.x[1] - self.x[0])

    @property
    def L(self) -> float:
        return float(self.x[-1])


@dataclass(frozen=True)
class BoostSpec:
    v: float
    q0: float = 0.0

    def __post_init__(self):
        if not abs(self.v) < 1.0:
            raise DomainError("boost velocity must satisfy |v| < 1")

    @property
    def kappa(self) -> float:
        return 1.0 / math.sqrt(1.0 - self.v * self.v)


@dataclass(frozen=True)
class Perturbation:
    """Localized bump added to the kink: even Gaussian or odd Gaussian derivative.

    ``amplitude`` is the sup of the bump.
    """

    amplitude: float
    width: float = 0.5
    parity: str = "odd"
    center: float = 0.0

    def __call__(self, x):
        y = (np.asarray(x, dtype=float) - self.center) / self.width
        if self.parity == "odd":
            return self.amplitude * math.sqrt(2.0 * math.e) * y * np.exp(-y * y)
        if self.parity == "even":
            return self.amplitude * np.exp(-y * y)
        raise DomainError("perturbation parity must be 'odd' or 'even'")


def default_kink(model: PotentialModel) -> KinkProfile:
    return kink_mollified(model) if model.kind == "mollified" else exact_kink(model)


def init_state(model: PotentialModel, profile="kink", L: float = 20.0, dx: float = 0.02,
               kink: KinkProfile | None = None) -> FieldState:
    """Sample a static, boosted or perturbed kink on [-L, L]."""
    if dx > 1.0 / (20.0 * math.sqrt(model.d)):
        raise DomainError(f"dx={dx} too coarse: the kink width 1/sqrt(d) needs at least 20 nodes")
    n = int(round(2.0 * L / dx)) + 1
    x = np.linspace(-L, L, n)
    kink = kink or default_kink(model)
    if isinstance(profile, BoostSpec):
        xi = profile.kappa * (x - profile.q0)
        psi = kink(xi)
        pi = -profile.v * profile.kappa * kink(xi, 1)
    elif isinstance(profile, Perturbation):
        psi = kink(x) + profile(x)
        pi = np.zeros_like(x)
    elif profile == "kink":
        psi = kink(x)
        pi = np.zeros_like(x)
    else:
        raise DomainError(f"unknown initial profile {profile!r}")
    psi = np.asarray(psi, dtype=float).copy()
    pi = np.asarray(pi, dtype=float).copy()
    psi[0], psi[-1] = -1.0, 1.0
    pi[0] = pi[-1] = 0.0
    return FieldState(x=x, psi=psi, pi=pi, t=0.0, model=model)


def _accel(psi, dx, model):
    out = np.zeros_like(psi)
    inner = psi[1:-1]
    out[1:-1] = (psi[2:] - 2.0 * inner + psi[:-2]) / (dx * dx) - eval_potential(model, inner, 1)
    return out


def _check_dt(state, dt):
    if not 0 < dt <= 0.5 * state.dx * (1.0 + 1e-12):
        raise DomainError(f"dt={dt} violates dt <= 0.5*dx = {0.5 * state.dx}")


def step(state: FieldState, dt: float) -> FieldState:
    """One kick-drift-kick leapfrog step."""
    return evolve(state, dt, 1)


def evolve(state: FieldState, dt: float, n_steps: int, stride: int | None = None):
    """Advance ``n_steps`` steps; with ``stride`` return every stride-th state too."""
    _check_dt(state, dt)
    dx, model = state.dx, state.model
    psi, pi = state.psi.copy(), state.pi.copy()
    acc = _accel(psi, dx, model)
    frames = [state] if stride else None
    t0 = state.t
    for i in range(1, n_steps + 1):
        pi += 0.5 * dt * acc
        psi += dt * pi
        acc = _accel(psi, dx, model)
        pi += 0.5 * dt * acc
        if not np.all(np.isfinite(psi)):
            raise InstabilityError("non-finite field values", t0 + i * dt)
        if stride and i % stride == 0:
            frames.append(replace(state, psi=psi.copy(), pi=pi.copy(), t=t0 + i * dt))
    final = replace(state, psi=psi, pi=pi, t=t0 + n_steps * dt)
    if stride:
        if frames[-1].t != final.t:
            frames.append(final)
        return frames
    return final


def run(state: FieldState, dt: float, t_end: float, stride: int = 1) -> list[FieldState]:
    """States from t=state.t to t_end, keeping every ``stride``-th step."""
    n = int(round((t_end - state.t) / dt))
    return evolve(state, dt, n, stride=stride)


def energy(state: FieldState) -> float:
    dx = state.dx
    psi, pi = state.psi, state.pi
    grad = np.diff(psi) / dx
    return float(
        0.5 * np.sum(pi[1:-1] ** 2) * dx
        + 0.5 * np.sum(grad * grad) * dx
        + np.sum(eval_potential(state.model, psi[1:-1], 0)) * dx
    )


def track_center(state: FieldState) -> float:
    """Linear-interpolated zero crossing of psi; requires exactly one crossing."""
    psi = state.psi
    s = np.sign(psi)
    nz = np.nonzero(s)[0]
    changes = nz[:-1][s[nz[:-1]] != s[nz[1:]]]
    if len(changes) != 1:
        raise DiagnosticError(f"expected one zero crossing of psi, found {len(changes)}")
    i = int(changes[0])
    j = int(nz[np.searchsorted(nz, i) + 1])
    if j > i + 1:  # exact zeros in between
        return float(0.5 * (state.x[i + 1] + state.x[j - 1]))
    x0, x1 = state.x[i], state.x[j]
    p0, p1 = psi[i], psi[j]
    return float(x0 - p0 * (x1 - x0) / (p1 - p0))


def core_width(state: FieldState) -> float:
    """1/psi'(center): a width scale of the kink core."""
    c = track_center(state)
    slope = np.gradient(state.psi, state.x)
    return 1.0 / float(np.interp(c, state.x, slope))


@dataclass
class DiagnosticSeries:
    t: np.ndarray
    center: np.ndarray
    window_sup: np.ndarray
    energy: np.ndarray

    def rows(self) -> list[dict]:
        return [
            {"t": a, "center": b, "window_sup": c, "energy": e}
            for a, b, c, e in zip(self.t, self.center, self.window_sup, self.energy)
        ]


def perturbation_diagnostics(states, window: float, kink: KinkProfile | None = None) -> DiagnosticSeries:
    """sup over |x| <= window of |psi - s(x - c(t))| along a run.

    Observational only: decay is reported, never asserted.
    """
    states = list(states)
    kink = kink or default_kink(states[0].model)
    t, cen, sup, en = [], [], [], []
    for st in states:
        c = track_center(st)
        mask = np.abs(st.x) <= window
        dev = np.abs(st.psi[mask] - kink(st.x[mask] - c))
        t.append(st.t)
        cen.append(c)
        sup.append(float(np.max(dev)))
        en.append(energy(st))
    return DiagnosticSeries(np.array(t), np.array(cen), np.array(sup), np.array(en))
