"""
Gibbs measures from fixed points
================================

A degenerate kernel K(t, u) = phi1(t) psi1(u) + phi2(t) psi2(u) turns the
Hammerstein equation into the planar quartic operator.  Each fixed point gives
a fixed function g = x phi1 + y phi2, checked here by quadrature.
"""

import numpy as np

from quartix.gibbs import PotentialSet, QuadratureConfig, compute_coefficients, count_gibbs_measures

###############################################################################
# Constant potentials
# -------------------
# All four functions equal one: the operator is (x + y)^4 in both components,
# the fixed point is x = y = 16^(-1/3), and g is the constant 2x.
pot = PotentialSet([1], [1], [1], [1])
rep = count_gibbs_measures(pot)
cert = rep.gibbs[0]
print("x =", cert.fixed_point.x, " 16^(-1/3) =", 16 ** (-1 / 3))
print("residual_H =", cert.residual_H, " residual_R =", cert.residual_R, " f(0) =", cert.f0)

###############################################################################
# Monomial potentials
# -------------------
# phi2 = u and psi2 = 2u give a_i = 1/(i+1) and b_i = 2/(i+2).  Gauss-Legendre
# with enough nodes integrates these polynomials exactly.
pot = PotentialSet([1], [1, 0], [1], [2, 0])
op = compute_coefficients(pot, QuadratureConfig(rule="gauss-legendre"))
print("a =", np.round(op.a, 15))
print("b =", np.round(op.b, 15))

rep = count_gibbs_measures(pot)
for c in rep.gibbs:
    t, g = c.t, c.g
    print(f"xi={c.fixed_point.xi:.6f}: g(0)={g[0]:.6f} g(1/2)={g[len(t) // 2]:.6f} g(1)={g[-1]:.6f}  certified={c.certified}")

###############################################################################
# Random polynomial potentials
# ----------------------------
# Positive coefficients keep every function positive on [0, 1].  The number of
# certified fixed functions always matches the number of fixed points.
rng = np.random.default_rng(1)
for _ in range(5):
    funcs = [rng.uniform(0.1, 2.0, rng.integers(1, 4)) for _ in range(4)]
    rep = count_gibbs_measures(PotentialSet(*funcs))
    print(f"n_fix={rep.n_fix}  certified={sum(c.certified for c in rep.gibbs)}  "
          f"max residual_H={max(c.residual_H for c in rep.gibbs):.1e}")
