"""Shared test helpers: an independent adaptive quadrature and common grids."""

from __future__ import annotations

import math


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-10, max_depth: int = 60) -> float:
    """Adaptive Simpson quadrature with Richardson correction.

    Independent of every estimator under test; used as the integral oracle.
    """

    def node(lo, flo, mid, fmid, hi, fhi, whole, tol, depth):
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm = f(lm)
        frm = f(rm)
        left = (mid - lo) * (flo + 4.0 * flm + fmid) / 6.0
        right = (hi - mid) * (fmid + 4.0 * frm + fhi) / 6.0
        if depth <= 0 or abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return node(lo, flo, lm, flm, mid, fmid, left, 0.5 * tol, depth - 1) + node(
            mid, fmid, rm, frm, hi, fhi, right, 0.5 * tol, depth - 1
        )

    mid = 0.5 * (a + b)
    fa, fm, fb = f(a), f(mid), f(b)
    whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0
    return node(a, fa, mid, fm, b, fb, whole, tol, max_depth)


def reduced_pairs(p_max: int = 12):
    """All reduced fractions q/p with 3 <= p <= p_max, 1 <= q < p."""
    return [(q, p) for p in range(3, p_max + 1) for q in range(1, p) if math.gcd(q, p) == 1]


def grid(lo: float, hi: float, n: int):
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]
