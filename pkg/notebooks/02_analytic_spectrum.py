"""
Discrete spectrum from the circle system
========================================

Eigenvalues of H0 = -d^2/dx^2 + U0''(s0(x)) come from intersections of the
circle xi^2 + eta^2 = R^2 with -eta = xi cot xi (odd) or eta = xi tan xi
(even).  A new mode appears at the edge every time R crosses k*pi/2.
"""
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from kinkspec import certify, derive_params, gamma_k, lambda1, solve_gamma_star, solve_u3_bound
from kinkspec.analytic import all_modes

FIG = Path(__file__).with_name("figures")
FIG.mkdir(exist_ok=True)

print("gamma_k:", [round(gamma_k(k), 6) for k in range(1, 6)])
print("U3 holds up to gamma =", solve_u3_bound())
print("FGR coupling vanishes at gamma =", solve_gamma_star().gamma)

## Circle picture at gamma = 0.75
p = derive_params(0.75)
xi = np.linspace(1e-3, 3.5, 2000)
with np.errstate(divide="ignore", invalid="ignore"):
    odd = -xi / np.tan(xi)
    even = xi * np.tan(xi)
odd[odd < 0] = np.nan
even[even < 0] = np.nan
t = np.linspace(0, np.pi / 2, 200)
plt.figure(figsize=(5, 5))
plt.plot(p.R * np.cos(t), p.R * np.sin(t), "k")
plt.plot(xi, odd, label="-xi cot xi")
plt.plot(xi, even, label="xi tan xi")
for m in all_modes(p):
    plt.plot(m.xi, m.eta, "o")
plt.ylim(0, 3)
plt.xlim(0, 3.5)
plt.legend()
plt.savefig(FIG / "circle.png", dpi=120)

## Eigenvalues against gamma
gs = np.linspace(0.3, 0.97, 600)
plt.figure()
for g in gs:
    pp = derive_params(g)
    lams = [m.lam / pp.d for m in all_modes(pp)]
    plt.plot([g] * len(lams), lams, "k.", ms=1)
for k in range(1, 6):
    plt.axvline(gamma_k(k), color="r", lw=0.5)
plt.xlabel("gamma")
plt.ylabel("lambda / d")
plt.savefig(FIG / "spectrum.png", dpi=120)

print("lambda1(0.75) =", lambda1(p))
print(certify(0.75).to_json(indent=1)[:400])
