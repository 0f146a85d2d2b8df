"""Cross-checking the classifier against plain shooting.

The shooting oracle integrates y(0) = 0, y'(0) = 1 through the beads,
applying the derivative jumps directly, and looks for sign changes of y(1)
as lam varies.  It shares no code with the transfer-matrix assembly, so
agreement between the two is a meaningful check.

Run:  python demos/05_oracle_crosscheck.py
"""
import numpy as np

from diracsl import DiracWeight, PiecewiseConstant, build_basis, classify_spectrum, scan_spectrum
from diracsl.shooting import default_window

rng = np.random.default_rng(1)
worst = 0.0
for trial in range(8):
    n = int(rng.integers(1, 6))
    q = PiecewiseConstant([0, 0.4, 0.7, 1], rng.uniform(-30, 30, 3))
    w = DiracWeight(np.sort(rng.uniform(0.05, 0.95, n)), rng.uniform(0.1, 3.0, n))
    report, spec = classify_spectrum(build_basis(q), w)
    lo, hi = default_window(w)
    roots = scan_spectrum(q, w, lo, hi, 4001)
    eig = np.array(spec.eigenvalues)
    inside = eig[(eig > lo) & (eig < hi)]
    gap = np.max(np.abs(inside - roots)) if inside.size == roots.size and roots.size else 0.0
    worst = max(worst, gap)
    print(f"n={n}  h0={report.h0!s:5} h={report.h!s:5}  classifier={np.round(inside, 6).tolist()}")
    print(f"{'':30}oracle    ={np.round(roots, 6).tolist()}")
print(f"\nlargest disagreement: {worst:.2e}")
