"""Six small problems whose spectra are known in closed form.

Each problem is -y'' + q y = lam * sum(m_i delta(x - t_i)) y with
y(0) = y(1) = 0 and a constant potential q.  The hypotheses h0, h and h1
decide how many eigenvalues there are, and whether 0 is one of them.

Run:  python demos/01_golden_spectra.py
"""
import math

import numpy as np

from diracsl import Constant, DiracWeight, build_basis, characteristic_polynomial, classify_spectrum

PI = math.pi

problems = [
    ("two masses, both hypotheses hold", -9 * PI**2 / 4, [1 / 3, 2 / 3], "{-3pi/2, 3pi/2}"),
    ("two masses, h fails", -9 * PI**2 / 4, [1 / 4, 1 / 3], "{3 sqrt(2) pi}"),
    ("one mass on a node of psi", -9 * PI**2 / 4, [2 / 3], "empty"),
    ("phi(1) = 0, one mass", -(PI**2), [1 / 2], "{0}"),
    ("phi(1) = 0, two masses", -(PI**2), [1 / 4, 1 / 2], "{0, 3pi}"),
    ("common eigenfunction", -4 * PI**2, [1 / 2], "all of C"),
]

for title, c, nodes, expected in problems:
    q = Constant(c)
    w = DiracWeight(nodes, [1.0] * len(nodes))
    basis = build_basis(q)
    report, spec = classify_spectrum(basis, w)
    p = characteristic_polynomial(basis, w).reduced(1e-9)
    print(f"\n{title}: q = {c:.6g}, nodes = {np.round(nodes, 4).tolist()}")
    print(f"  basis case {basis.case_tag.value}, omega = {basis.omega:.6g}")
    print(f"  h0={report.h0}  h={report.h}  h1={report.h1}")
    print(f"  p(lam) coefficients (ascending): {np.round(p.coeffs, 12).tolist()}")
    if spec.is_finite:
        print(f"  spectrum ({spec.method}): {[round(v, 10) for v in spec.eigenvalues]}   expected {expected}")
    else:
        print(f"  spectrum: every complex number   expected {expected}")

# When h holds, a symmetric tridiagonal matrix carries the same spectrum.
q, w = Constant(-(PI**2)), DiracWeight([1 / 4, 1 / 2], [1.0, 1.0])
_, a = classify_spectrum(build_basis(q), w, method="charpoly")
_, b = classify_spectrum(build_basis(q), w, method="tridiag")
print("\npolynomial route:  ", a.eigenvalues)
print("tridiagonal route: ", b.eigenvalues)
