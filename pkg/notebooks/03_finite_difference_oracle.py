"""
A finite-difference check of the spectrum
=========================================

-d^2/dx^2 + W0 on [-L, L] with Dirichlet ends becomes a symmetric
tridiagonal matrix.  Sturm counts give the number of eigenvalues below the
continuum edge, and the jump of W0 is put midway between grid nodes so the
error stays second order.
"""
import numpy as np

from kinkspec import derive_params, discretize, eigs_below_edge, exact_kink, lambda1, linearize
from kinkspec.analytic import all_modes

p = derive_params(0.75)
W0 = linearize(exact_kink(p))
exact = lambda1(p)

rows = []
for h in (0.01, 0.005, 0.0025, 0.00125):
    op = discretize(W0, 30.0, h)
    vals = eigs_below_edge(op)
    rows.append((op.h, op.n, vals[0], vals[1], abs(vals[1] - exact)))
print(" h          n      lambda0        lambda1        error")
for r in rows:
    print(f"{r[0]:.6f} {r[1]:7d} {r[2]: .3e} {r[3]:.10f} {r[4]:.3e}")
errs = np.array([r[4] for r in rows])
print("error ratios:", errs[:-1] / errs[1:])

## More modes deeper in the staircase
for g in (0.9, 0.95):
    pp = derive_params(g)
    fd = eigs_below_edge(discretize(linearize(exact_kink(pp)), 30.0, 0.0025))
    print(g, np.round(fd, 5), np.round([m.lam for m in all_modes(pp)], 5))
