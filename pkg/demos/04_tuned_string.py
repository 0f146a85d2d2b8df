"""Designing a potential so a bead vibrates at a chosen frequency.

A string with a single unit bead at xi has one eigenvalue lam = w0^2.
To hit a target w0 we pick a spectrum-like curve f with f(xi) = w0^2 and
build the potential whose eigenvalue curve is f.

Here f(t) = 1/(t(1-t)) + beta sin^2(pi t).  The bump vanishes at both ends
fast enough to keep f spectrum-like, and beta is solved from f(xi) = w0^2.
Other curves through the same point give other potentials; choosing among
them is not attempted.

Run:  python demos/04_tuned_string.py
"""
import numpy as np

from diracsl import ClosedSpectrumLike, forward_lambda, recover_potential, validate_spectrum_like
from diracsl.potential import l1_norm

xi, w0 = 0.3, 3.0
base = 1 / (xi * (1 - xi))
beta = (w0**2 - base) / np.sin(np.pi * xi) ** 2
print(f"target lam = {w0**2}, free string gives {base:.6f}, beta = {beta:.6f}")

f = ClosedSpectrumLike(
    lambda t: 1 / (t * (1 - t)) + beta * np.sin(np.pi * t) ** 2,
    lambda t: (2 * t - 1) / (t * (1 - t)) ** 2 + beta * np.pi * np.sin(2 * np.pi * t),
    lambda t: 2 * (3 * t * t - 3 * t + 1) / (t * (1 - t)) ** 3 + 2 * beta * np.pi**2 * np.cos(2 * np.pi * t),
)
report = validate_spectrum_like(f)
print("spectrum-like:", report.passed)

q = recover_potential(f, np.linspace(0.002, 0.998, 499))
print(f"designed potential: q(0.1) = {q.evaluate(0.1):.4f}, q(0.5) = {q.evaluate(0.5):.4f}, L1 norm = {l1_norm(q):.4f}")

lam = forward_lambda(q, xi)
print(f"eigenvalue of the designed string at xi = {xi}: {lam:.6f} (frequency {np.sqrt(lam):.6f})")
for t in (0.2, 0.5, 0.8):
    print(f"  t = {t}: forward {forward_lambda(q, t):.6f}  target curve {float(f.value(t)):.6f}")
