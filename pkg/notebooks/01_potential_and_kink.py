"""
The piecewise parabolic double well and its kink
================================================

U0 is an inverted parabola for |psi| < gamma glued C^1 to two upward
parabolas with minima at psi = +-1.  Its kink is a sine in the core and an
exponential in the tails.
"""
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from kinkspec import build_mollified, derive_params, exact_kink, exact_model, kink_mollified

FIG = Path(__file__).with_name("figures")
FIG.mkdir(exist_ok=True)

## Constants for a few gammas
for g in (0.5, 0.75, 0.9):
    p = derive_params(g)
    print(f"gamma={g}: b={p.b:.4f} d={p.d:.4f} q={p.q:.4f} R={p.R:.4f}")

## The potential, exact and mollified
psi = np.linspace(-1.4, 1.4, 1401)
u0 = exact_model(0.75)
fig, ax = plt.subplots(1, 2, figsize=(10, 4))
ax[0].plot(psi, u0(psi), label="U0")
for eps in (0.08, 0.02):
    m = build_mollified(0.75, eps)
    ax[0].plot(psi, m(psi), "--", label=f"U_eps, eps={eps}")
    ax[1].plot(psi, m(psi, 2), label=f"U_eps'', eps={eps}")
ax[1].plot(psi, u0(psi, 2), "k", lw=0.8, label="U0''")
ax[0].legend()
ax[1].legend()
ax[0].set_xlabel("psi")
ax[1].set_xlabel("psi")
fig.savefig(FIG / "potential.png", dpi=120)

## The kink: C^1 at x = +-q where it crosses gamma
p = derive_params(0.75)
s = exact_kink(p)
x = np.linspace(-5, 5, 1001)
left, right = s(p.q - 1e-12, 1), s(p.q + 1e-12, 1)
print("s'(q-) - s'(q+) =", left - right)

kink_eps = kink_mollified(build_mollified(0.75, 0.02))
print("max |s_eps - s0| =", np.max(np.abs(kink_eps(x) - s(x))))

plt.figure()
plt.plot(x, s(x), label="s0")
plt.plot(x, s(x, 1), label="s0'")
plt.axvline(p.q, color="grey", lw=0.5)
plt.axvline(-p.q, color="grey", lw=0.5)
plt.legend()
plt.savefig(FIG / "kink.png", dpi=120)
