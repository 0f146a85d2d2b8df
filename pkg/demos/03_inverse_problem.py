"""Recovering a potential from single-bead eigenvalues.

For one unit bead at t, a potential with phi(1) != 0 and no interior zeros
of phi, psi gives exactly one eigenvalue lam(t) = -omega / (phi(t) psi(t)).
The whole curve t -> lam(t) determines q through

    q = -lam'' / (2 lam) + 3/4 (lam' / lam)^2 + lam^2 / 4.

Run:  python demos/03_inverse_problem.py
"""
import numpy as np

from diracsl import (
    ClosedSpectrumLike,
    Constant,
    SampledSpectrumLike,
    Zero,
    forward_map,
    reconstruct_basis,
    recover_potential,
    spectral_curve,
    validate_spectrum_like,
)
from diracsl.inverse import recover_q_values

ts = np.linspace(0.1, 0.9, 5)
print("zero potential:  lam(t)      =", forward_map(Zero(), ts))
print("                 1/(t(1-t))  =", 1 / (ts * (1 - ts)))

# 1/(t(1-t)) passes every spectrum-like check; a constant fails.
f0 = ClosedSpectrumLike(lambda t: 1 / (t * (1 - t)))
print("\n1/(t(1-t)) spectrum-like:", validate_spectrum_like(f0).passed)
flat = validate_spectrum_like(ClosedSpectrumLike(lambda t: np.ones_like(t)))
print("constant 1 spectrum-like:", flat.passed, flat.failures())

# Reconstructed basis: phi is proportional to t, psi to 1 - t.
rb = reconstruct_basis(f0, 0.5, np.linspace(0.1, 0.9, 5))
print("\nphi / t       =", rb.phi / rb.x)
print("psi / (1 - t) =", rb.psi / (1 - rb.x))
print("Wronskian     =", rb.omega)

# Round trip for q = 5, three ways.
q = Constant(5.0)
grid = np.linspace(0.1, 0.9, 9)
_, Q_exact = recover_q_values(spectral_curve(q), grid)
_, Q_fd = recover_q_values(ClosedSpectrumLike(lambda t: forward_map(q, t)), grid)
print("\nq = 5 from exact derivatives:      ", np.round(Q_exact, 10))
print("q = 5 from finite differences:      ", np.round(Q_fd, 7))
for n in (99, 199, 399):
    tt = np.linspace(0, 1, n + 2)[1:-1]
    x, Q = recover_q_values(SampledSpectrumLike(tt, forward_map(q, tt)))
    mid = (x >= 0.1) & (x <= 0.9)
    print(f"sampled data, {n} points: max error on [0.1, 0.9] = {np.max(np.abs(Q[mid] - 5)):.2e}")

# The recovered potential is an ordinary Sampled potential and can be fed back.
rec = recover_potential(spectral_curve(q), np.linspace(0.01, 0.99, 99))
print("\nforward map of the recovered potential at t = 0.3:", forward_map(rec, [0.3])[0])
print("forward map of q = 5 at t = 0.3:                   ", forward_map(q, [0.3])[0])
