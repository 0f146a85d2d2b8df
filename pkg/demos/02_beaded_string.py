"""A string with two beads and no external potential.

With q = 0 the basis is phi(x) = x, psi(x) = 1 - x, and the string is
straight between beads.  Two unit beads at 1/3 and 2/3 give the
characteristic matrix [[6, -3], [-3, 6]] with eigenvalues 3 and 9: the
in-phase and the anti-phase mode.

Run:  python demos/02_beaded_string.py
"""
import numpy as np

from diracsl import DiracWeight, Zero, build_basis, classify_spectrum, eigenfunction, miss, tridiagonal_system

q = Zero()
w = DiracWeight([1 / 3, 2 / 3], [1.0, 1.0])
basis = build_basis(q)

print("characteristic matrix X:\n", tridiagonal_system(basis, w).matrix())
report, spec = classify_spectrum(basis, w)
print("eigenvalues:", spec.eigenvalues)

x = np.linspace(0, 1, 7)
for lam in spec.eigenvalues:
    E = eigenfunction(basis, w, lam)
    print(f"\nlam = {lam:.12g}")
    print("  mode shape on x = 0, 1/6, ..., 1:", np.round(E(x), 6).tolist())
    print("  derivative jumps minus lam m y at the beads:", E.jump_residuals())
    print("  shooting check y(1; lam):", miss(q, w, lam))

# The shooting miss function is the quadratic 1 - 4 lam / 9 + lam^2 / 27.
lam = np.array([0.0, 1.0, 5.0, 12.0])
print("\nmiss(lam):      ", miss(q, w, lam))
print("closed form:    ", 1 - 4 * lam / 9 + lam**2 / 27)

# Doubling every mass halves every eigenvalue.
_, heavy = classify_spectrum(basis, w.scaled(2.0))
print("\nmasses doubled:", heavy.eigenvalues)
