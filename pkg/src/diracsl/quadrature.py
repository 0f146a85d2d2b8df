"""Adaptive Simpson quadrature."""
from __future__ import annotations

from typing import Callable

import numpy as np

__all__ = ["adaptive_simpson", "cumulative_adaptive_simpson"]


def adaptive_simpson(
    f: Callable[[float], float], a: float, b: float, tol: float = 1e-10, max_depth: int = 60
) -> float:
    """Integral of f over [a, b] (a > b gives the negated integral).

    Recursive bisection with Richardson correction; each panel must meet
    ``|S_left + S_right - S_whole| <= 15 * tol_panel`` where the tolerance is
    split in half at each level.
    """
    if a == b:
        return 0.0
    sign = 1.0
    if a > b:
        a, b, sign = b, a, -1.0
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    total = 0.0
    # explicit stack: (a, b, fa, fm, fb, whole, tol, depth)
    stack = [(a, b, fa, fm, fb, whole, tol, 0)]
    while stack:
        a, b, fa, fm, fb, whole, eps, depth = stack.pop()
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        delta = left + right - whole
        if depth >= max_depth or abs(delta) <= 15.0 * eps:
            total += left + right + delta / 15.0
        else:
            stack.append((a, m, fa, flm, fm, left, 0.5 * eps, depth + 1))
            stack.append((m, b, fm, frm, fb, right, 0.5 * eps, depth + 1))
    if not np.isfinite(total):
        raise ArithmeticError("non-finite integral")
    return sign * total


def cumulative_adaptive_simpson(
    f: Callable[[float], float], anchor: float, xs: np.ndarray, tol: float = 1e-10
) -> np.ndarray:
    """Integral of f from ``anchor`` to each point of ``xs``.

    Points are visited outward from the anchor so each panel is integrated
    once.
    """
    xs = np.asarray(xs, dtype=float)
    out = np.empty_like(xs)
    order = np.argsort(xs)
    sx = xs[order]
    res = np.empty_like(sx)
    right = np.nonzero(sx >= anchor)[0]
    left = np.nonzero(sx < anchor)[0][::-1]
    for idxs in (right, left):
        acc, prev = 0.0, anchor
        for i in idxs:
            acc += adaptive_simpson(f, prev, sx[i], tol)
            prev = sx[i]
            res[i] = acc
    out[order] = res
    return out
