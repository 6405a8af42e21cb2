"""Finite-difference and ODE oracles for H = -d^2/dx^2 + W(x).

Nothing here uses the closed-form spectrum; the analytic values are only
used as initial guesses for the shooting solver.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp
from scipy.linalg import eigh_tridiagonal
from scipy.optimize import brentq

from .errors import DomainError, NumericalError
from .potential import (
    KinkProfile,
    LinearizedPotential,
    PotentialModel,
    build_mollified,
    eval_potential,
    kink_mollified,
    linearize,
)

_GL16_X, _GL16_W = np.polynomial.legendre.leggauss(16)


# ---------------------------------------------------------------------------
# finite differences
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DiscreteOperator:
    """Symmetric tridiagonal (-D2 + W) on a cell-centred grid, Dirichlet ends."""

    L: float
    h: float
    n: int
    x: np.ndarray
    diag: np.ndarray
    offdiag: np.ndarray
    edge: float
    note: str = ""


def discretize(W, L: float = 30.0, h: float = 0.005, *, edge: float | None = None) -> DiscreteOperator:
    """Three-point Laplacian plus W sampled on a jump-aligned grid.

    When W carries a ``jump_locus`` q the step is shrunk to q/round(q/h) so
    that +-q fall exactly midway between nodes.
    """
    q = getattr(W, "jump_locus", None)
    if edge is None:
        edge = W.edge
    if h > 0.01 or h <= 0:
        raise DomainError("grid step must lie in (0, 0.01]")
    if q is not None and not L > 4 * q:
        raise DomainError(f"domain half-width L={L} must exceed 4q={4 * q:.6g}")
    note = ""
    if q is not None:
        nq = max(1, int(round(q / h)))
        h_new = q / nq
        if h_new != h:
            note = f"step adjusted from {h:.6g} to {h_new:.12g} to place +-q midway between nodes"
        h = h_new
    half = int(round(L / h))
    n = 2 * half
    x = (np.arange(n) - half + 0.5) * h
    w = np.asarray(W(x), dtype=float)
    diag = 2.0 / h**2 + w
    off = np.full(n - 1, -1.0 / h**2)
    return DiscreteOperator(L=half * h, h=h, n=n, x=x, diag=diag, offdiag=off, edge=float(edge), note=note)


def sturm_count(diag, offdiag, sigma: float) -> int:
    """Number of eigenvalues of the tridiagonal matrix strictly below ``sigma``."""
    count = 0
    tiny = np.finfo(float).tiny
    d = diag.tolist()
    e2 = (np.asarray(offdiag) ** 2).tolist()
    piv = d[0] - sigma
    if piv < 0:
        count += 1
    for i in range(1, len(d)):
        if piv == 0.0:
            piv = tiny
        piv = d[i] - sigma - e2[i - 1] / piv
        if piv < 0:
            count += 1
    return count


def eigs_below_edge(op: DiscreteOperator, margin: float | None = None) -> np.ndarray:
    """All eigenvalues below edge - margin (default margin 10h), ascending."""
    if margin is None:
        margin = 10.0 * op.h
    upper = op.edge - margin
    lower = float(np.min(op.diag)) - 2.0 * float(np.max(np.abs(op.offdiag))) - 1.0
    count = sturm_count(op.diag, op.offdiag, upper)
    if count == 0:
        return np.empty(0)
    vals = eigh_tridiagonal(
        op.diag, op.offdiag, eigvals_only=True, select="v",
        select_range=(lower, upper), lapack_driver="stebz", tol=1e-13,
    )
    if len(vals) != count:
        raise NumericalError(f"Sturm count {count} disagrees with {len(vals)} extracted eigenvalues")
    return np.sort(vals)


def eigvector(op: DiscreteOperator, index: int = 0) -> tuple[float, np.ndarray]:
    """Eigenpair number ``index`` (0 = lowest), vector with unit discrete L2 norm."""
    w, v = eigh_tridiagonal(op.diag, op.offdiag, select="i", select_range=(index, index))
    vec = v[:, 0] / math.sqrt(op.h)
    if vec[np.argmax(np.abs(vec))] < 0:
        vec = -vec
    return float(w[0]), vec


# ---------------------------------------------------------------------------
# ODE machinery
# ---------------------------------------------------------------------------

def _segments(W, x_end: float, start: float = 0.0) -> list[tuple[float, float]]:
    pts = [start] + [b for b in W.breakpoints if start < b < x_end] + [x_end]
    return list(zip(pts[:-1], pts[1:]))


def _one_sided(W, a, b):
    # evaluate W strictly inside (a, b) so a jump at an endpoint is seen from the right side
    pad = 1e-12 * max(1.0, abs(a), abs(b))

    def w(x):
        return W(min(max(x, a + pad), b - pad))

    return w


@dataclass(frozen=True, eq=False)
class _PiecewiseSolution:
    edges: np.ndarray
    sols: list

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.empty((2,) + x.shape)
        idx = np.clip(np.searchsorted(self.edges, x, side="right") - 1, 0, len(self.sols) - 1)
        for i, sol in enumerate(self.sols):
            m = idx == i
            if np.any(m):
                out[:, m] = sol(x[m])
        return out


def _integrate(W, lam: float, y0, x_end: float, rtol=1e-12, atol=1e-14) -> tuple[np.ndarray, _PiecewiseSolution]:
    y = np.asarray(y0, dtype=float)
    sols, edges = [], []
    for a, b in _segments(W, x_end):
        w = _one_sided(W, a, b)
        rhs = lambda x, yy, w=w: [yy[1], (w(x) - lam) * yy[0]]
        res = solve_ivp(rhs, (a, b), y, method="DOP853", rtol=rtol, atol=atol, dense_output=True)
        if not res.success:
            raise NumericalError(f"ODE solve failed on [{a:.6g}, {b:.6g}]: {res.message}")
        y = res.y[:, -1]
        sols.append(res.sol)
        edges.append(a)
    return y, _PiecewiseSolution(np.asarray(edges), sols)


def continuum_odd_solution(W, lam: float, x_grid) -> np.ndarray:
    """Odd solution of -phi'' + W phi = lam phi with phi(0)=0, phi'(0)=1."""
    return _continuum(W, lam, x_grid, odd=True)


def continuum_even_solution(W, lam: float, x_grid) -> np.ndarray:
    """Even solution with phi(0)=1, phi'(0)=0."""
    return _continuum(W, lam, x_grid, odd=False)


def _continuum(W, lam, x_grid, odd):
    x = np.asarray(x_grid, dtype=float)
    a = np.abs(x)
    x_end = max(float(np.max(a)) if a.size else 0.0, 1e-12)
    _, sol = _integrate(W, lam, [0.0, 1.0] if odd else [1.0, 0.0], x_end)
    val = sol(a)[0]
    return np.sign(x) * val if odd else val


@dataclass(frozen=True, eq=False)
class BoundState:
    """A bound state found by shooting, with unit L2 normalization."""

    lam: float
    parity: str
    x_match: float
    alpha: float
    scale: float
    _sol: _PiecewiseSolution = field(repr=False)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        a = np.abs(x)
        inside = a <= self.x_match
        val = np.empty_like(a)
        if np.any(inside):
            val[inside] = self._sol(a[inside])[0]
        if np.any(~inside):
            end = self._sol(np.array([self.x_match]))[0, 0]
            val[~inside] = end * np.exp(-self.alpha * (a[~inside] - self.x_match))
        val *= self.scale
        if self.parity == "antisymmetric":
            val = np.sign(x) * val
        return float(val) if val.ndim == 0 else val


def _mismatch(W, lam, odd):
    X = W.outer_edge
    alpha = math.sqrt(max(W.d - lam, 0.0))
    y, _ = _integrate(W, lam, [0.0, 1.0] if odd else [1.0, 0.0], X)
    return y[1] + alpha * y[0]


def shoot_bound_state(W, lam_lo: float, lam_hi: float, parity: str = "antisymmetric") -> BoundState:
    """Bound state with eigenvalue bracketed in [lam_lo, lam_hi] (< d).

    Integrates from x=0 with the parity's initial data up to the point where
    W becomes the constant d, then matches to the decaying exponential.
    """
    odd = parity == "antisymmetric"
    lam_hi = min(lam_hi, W.d - 1e-12)
    f = lambda lam: _mismatch(W, lam, odd)
    flo, fhi = f(lam_lo), f(lam_hi)
    if flo * fhi > 0:
        raise NumericalError(f"no {parity} eigenvalue bracketed in [{lam_lo:.6g}, {lam_hi:.6g}]")
    lam = brentq(f, lam_lo, lam_hi, xtol=1e-13, rtol=1e-14, maxiter=200)
    X = W.outer_edge
    alpha = math.sqrt(W.d - lam)
    y, sol = _integrate(W, lam, [0.0, 1.0] if odd else [1.0, 0.0], X)
    inner = 0.0
    for a, b in zip(np.linspace(0, X, 129)[:-1], np.linspace(0, X, 129)[1:]):
        xs = 0.5 * (b - a) * _GL16_X + 0.5 * (b + a)
        inner += 0.5 * (b - a) * float(np.dot(_GL16_W, sol(xs)[0] ** 2))
    norm2 = 2.0 * (inner + y[0] ** 2 / (2.0 * alpha))
    return BoundState(lam=lam, parity=parity, x_match=X, alpha=alpha,
                      scale=1.0 / math.sqrt(norm2), _sol=sol)


def odd_bound_state(W, lam_guess: float, width: float = 0.25) -> BoundState:
    lo, hi = max(lam_guess - width, 1e-9), min(lam_guess + width, W.d - 1e-12)
    return shoot_bound_state(W, lo, hi, "antisymmetric")


# ---------------------------------------------------------------------------
# resonance indicator
# ---------------------------------------------------------------------------

def resonance_indicator(W, d: float | None = None, L: float = 30.0, h: float = 1e-3) -> float:
    """u'(L)/max(1, |u(L)|) for u'' = (W - d) u, u(-L)=1, u'(-L)=0.

    Vanishes exactly when the threshold d carries a bounded solution on both
    sides (an edge resonance).  Classical RK4 on segments split at the
    breakpoints of W.
    """
    if d is None:
        d = W.d
    bps = sorted({-b for b in W.breakpoints} | set(W.breakpoints))
    pts = [-L] + [b for b in bps if -L < b < L] + [L]
    u, up = 1.0, 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        n = max(1, int(math.ceil((b - a) / h)))
        step = (b - a) / n
        xs = a + step * np.arange(2 * n + 1) / 2.0
        pad = 1e-12 * max(1.0, abs(a), abs(b))
        wv = (np.asarray(W(np.clip(xs, a + pad, b - pad)), dtype=float) - d).tolist()
        for i in range(n):
            w0, w1, w2 = wv[2 * i], wv[2 * i + 1], wv[2 * i + 2]
            k1u, k1v = up, w0 * u
            k2u, k2v = up + 0.5 * step * k1v, w1 * (u + 0.5 * step * k1u)
            k3u, k3v = up + 0.5 * step * k2v, w1 * (u + 0.5 * step * k2u)
            k4u, k4v = up + step * k3v, w2 * (u + step * k3u)
            u += step / 6.0 * (k1u + 2 * k2u + 2 * k3u + k4u)
            up += step / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v)
        if not (math.isfinite(u) and math.isfinite(up)) or abs(u) > 1e150:
            raise NumericalError(f"resonance indicator unstable on [{a:.6g}, {b:.6g}]")
    return up / max(1.0, abs(u))


# ---------------------------------------------------------------------------
# Fermi Golden Rule on mollified potentials
# ---------------------------------------------------------------------------

def fgr_integral_numeric(
    model: PotentialModel,
    kink: KinkProfile,
    lam1: float | None = None,
    *,
    parity: str = "odd",
    n_panels: int = 64,
) -> float:
    """int U_eps'''(s_eps(x)) phi_{4 lam1}(x) phi_{lam1}(x)^2 dx over the blend zones.

    phi_{lam1} is the unit-L2 odd bound state of H_eps (found by shooting
    near ``lam1`` or the analytic value); phi_{4 lam1} is the odd continuum
    solution with phi'(0)=1, or the even one when ``parity="even"``.
    """
    if model.kind != "mollified":
        raise DomainError("fgr_integral_numeric needs a mollified model")
    from .analytic import lambda1 as _lambda1

    W = linearize(kink)
    guess = lam1 if lam1 is not None else _lambda1(model.params)
    state = odd_bound_state(W, guess)
    lam = state.lam
    x1, x2 = W.inner_edge, W.outer_edge
    init = [0.0, 1.0] if parity == "odd" else [1.0, 0.0]
    _, cont = _integrate(W, 4.0 * lam, init, x2)

    def panel_sum(n):
        edges = np.linspace(x1, x2, n + 1)
        xs = (0.5 * np.diff(edges)[:, None] * _GL16_X[None, :] + 0.5 * (edges[1:] + edges[:-1])[:, None]).ravel()
        wts = (0.5 * np.diff(edges)[:, None] * _GL16_W[None, :]).ravel()
        total = 0.0
        for sgn in (1.0, -1.0):
            x = sgn * xs
            phi4 = cont(np.abs(x))[0]
            if parity == "odd":
                phi4 = np.sign(x) * phi4
            f = eval_potential(model, kink(x), 3) * phi4 * state(x) ** 2
            total += float(np.dot(wts, f))
        return total

    coarse, fine = panel_sum(n_panels), panel_sum(2 * n_panels)
    scale = max(abs(fine), 1e-300)
    if parity == "odd" and abs(fine - coarse) > 1e-8 * max(scale, 1e-6):
        raise NumericalError(f"FGR quadrature did not settle on [{x1:.6g}, {x2:.6g}]")
    return fine


# ---------------------------------------------------------------------------
# convergence study
# ---------------------------------------------------------------------------

@dataclass
class ConvergenceReport:
    gamma: float
    epsilons: list
    lambda1_values: list
    deltas: list
    w_norms: list
    fgr_values: list
    lambda1_exact: float
    fgr_limit: float
    eps0: float | None
    lambda1_fd: list = field(default_factory=list)

    @property
    def lambda1_errors(self) -> list:
        return [abs(v - self.lambda1_exact) for v in self.lambda1_values]

    @property
    def observed_rates(self) -> list:
        """log2-type rates between consecutive epsilons for |lambda1(eps)-lambda1|."""
        err = self.lambda1_errors
        out = []
        for i in range(1, len(err)):
            ratio = self.epsilons[i - 1] / self.epsilons[i]
            out.append(math.log(err[i - 1] / err[i]) / math.log(ratio) if err[i] > 0 else float("inf"))
        return out

    def rows(self) -> list[dict]:
        return [
            {"epsilon": e, "lambda1_eps": l, "w_norm": w, "delta": dl, "fgr_numeric": f}
            for e, l, w, dl, f in zip(self.epsilons, self.lambda1_values, self.w_norms, self.deltas, self.fgr_values)
        ]


def convergence_study(gamma: float, epsilons, mollifier=None, *, fd_h: float | None = None) -> ConvergenceReport:
    """Build U_eps, s_eps, W_eps for each eps and compare with the exact spectrum."""
    from .analytic import _require_u34_interval, fgr_limit, lambda1
    from .potential import derive_params

    p = derive_params(gamma)
    _require_u34_interval(p, "the convergence study")
    eps = [float(e) for e in epsilons]
    if any(b >= a for a, b in zip(eps, eps[1:])):
        raise DomainError("epsilons must be strictly decreasing")
    lam_exact = lambda1(p)
    lams, deltas, norms, fgrs, fds = [], [], [], [], []
    for e in eps:
        model = build_mollified(p.gamma, e, mollifier)
        kink = kink_mollified(model)
        W = linearize(kink)
        state = odd_bound_state(W, lam_exact)
        lams.append(state.lam)
        deltas.append(W.support_pad)
        norms.append(W.w_norm())
        fgrs.append(fgr_integral_numeric(model, kink, state.lam))
        if fd_h is not None:
            vals = eigs_below_edge(discretize(W, 30.0, fd_h))
            fds.append(float(vals[1]) if len(vals) > 1 else float("nan"))
    eps0 = None
    for e, lam in sorted(zip(eps, lams)):
        if 4.0 * lam > p.d:
            eps0 = e
        else:
            break
    return ConvergenceReport(
        gamma=p.gamma, epsilons=eps, lambda1_values=lams, deltas=deltas, w_norms=norms,
        fgr_values=fgrs, lambda1_exact=lam_exact, fgr_limit=fgr_limit(p), eps0=eps0, lambda1_fd=fds,
    )
