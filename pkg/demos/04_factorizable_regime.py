"""Build the factorizable two-coupling model and inspect its spectrum shape.

A single annihilation-like combination A = a0 + aQ Q- + aR R- generates a
positive semidefinite Hamiltonian A^dag A whose parameters land exactly on a
constrained slice of the two-coupling family. The script maps coefficient
triples to physical parameters, confirms the factorization numerically, and
certifies the characteristic ladder: unique ground state, paired excited
levels, equally spaced pair centers.
"""

import numpy as np

from susyjc import (DegenerateCouplings, HilbertConfig, certify_truncation,
                    constraint_check, diagonalize, far_from_alphas,
                    far_hamiltonian, far_spectrum_shape)

fp = far_from_alphas(0.01, 1.0, 3.0)
print("coefficients (0.01, 1.0, 3.0) map to:")
print(f"  omega   = {fp.omega}")
print(f"  omega0  = {fp.omega0}")
print(f"  lam, mu = {fp.lam}, {fp.mu}")
print(f"  offset  = {fp.omega_c}")
print("constraint residuals:", constraint_check(fp))

# Equal coefficient magnitudes |aQ| = |aR| collapse the detuning constraint
# and the construction refuses them.
try:
    far_from_alphas(0.01, 1.0, 1.0)
except DegenerateCouplings as exc:
    print("\nrejected degenerate triple:", exc)

# The builder assembles the factorized product and cross-checks it against
# the explicitly built two-coupling Hamiltonian before handing it out.
cfg = HilbertConfig(80)
h = far_hamiltonian(cfg, fp)
evs = np.linalg.eigvalsh(h)
print(f"\nsmallest eigenvalue: {evs[0]:.3e}  (A^dag A is never negative)")

# Certify enough levels against cutoff doubling, then classify the shape.
builder = lambda n: far_hamiltonian(HilbertConfig(n), fp, check_tol=1e-11)
sol = certify_truncation(builder, k_levels=11, tol=1e-10)
shape = far_spectrum_shape(sol, tol=1e-8)
print(f"\ncertified {sol.converged_levels} levels at n_max = {sol.n_max_used}")
print(f"unique ground: {shape.has_unique_ground},"
      f"  equidistant: {shape.is_equidistant}")
print("degeneracy pattern:", shape.degeneracies)

evs = sol.eigenvalues[:sol.converged_levels]
pairs = evs[1:9].reshape(4, 2)
centers = pairs.mean(axis=1)
print("\nlevel   pair gap        pair center")
for k, ((lo, hi), c) in enumerate(zip(pairs, centers), start=1):
    print(f"  {k}     {hi - lo:.6f}       {c:.6f}")
print("center spacing:", np.diff(centers))
print("pair gap ~= |aQ|^2 and center spacing == (|aQ|^2 + |aR|^2)/2,")
print("so the pairs are split, not degenerate, whenever |aQ| != |aR|.")
