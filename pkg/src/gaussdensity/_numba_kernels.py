"""Numba implementations of the hot counting loops.

Imported lazily by kernels.py so the numpy backend never touches numba.
All functions work on int64; callers enforce the input ranges that keep the
intermediate products (bounded by 6*max^2) inside int64.
"""

import numpy as np
from numba import njit, prange


@njit(cache=True, nogil=True, inline="always")
def _gcd_norm(a1, b1, a2, b2):
    # Euclidean loop with component-wise nearest rounding; the remainder
    # norm at least halves each step.  Returns norm(gcd), 0 for gcd(0, 0).
    while a2 != 0 or b2 != 0:
        n2 = a2 * a2 + b2 * b2
        t1 = a1 * a2 + b1 * b2
        t2 = b1 * a2 - a1 * b2
        q1 = (2 * t1 + n2) // (2 * n2)
        q2 = (2 * t2 + n2) // (2 * n2)
        r1 = a1 - (q1 * a2 - q2 * b2)
        r2 = b1 - (q1 * b2 + q2 * a2)
        a1, b1 = a2, b2
        a2, b2 = r1, r2
    return a1 * a1 + b1 * b1


@njit(cache=True, nogil=True)
def gcd_norm_arrays(a1, b1, a2, b2):
    """Element-wise norm(gcd) over four int64 arrays."""
    out = np.empty(a1.size, dtype=np.int64)
    for i in range(a1.size):
        out[i] = _gcd_norm(a1[i], b1[i], a2[i], b2[i])
    return out


@njit(cache=True, nogil=True, parallel=True)
def coprime_pair_count_box(radius):
    """Hits of gcd(z1, z2) being a unit over all ordered pairs from the box
    [-radius, radius]^2.  Integer reduction; thread count cannot change it."""
    m = 2 * radius + 1
    total = 0
    for i1 in prange(m * m):
        a1 = i1 // m - radius
        b1 = i1 % m - radius
        c = 0
        for a2 in range(-radius, radius + 1):
            for b2 in range(-radius, radius + 1):
                if _gcd_norm(a1, b1, a2, b2) == 1:
                    c += 1
        total += c
    return total


@njit(cache=True, nogil=True, parallel=True)
def coprime_count_arrays(a1, b1, a2, b2):
    """Number of indices where the pair (a1+b1*i, a2+b2*i) is coprime."""
    c = 0
    for i in prange(a1.size):
        if _gcd_norm(a1[i], b1[i], a2[i], b2[i]) == 1:
            c += 1
    return c


@njit(cache=True, nogil=True)
def domain_point_counts(gx, gy, bx, by):
    """(interior, boundary) lattice-point counts for the square cell with
    base vertex (bx, by) and side vectors (gx, gy), (-gy, gx).

    Writing p - base = s*g + t*ig, the scaled coordinates s*norm and t*norm
    are integers, so strict interior (0 < s, t < 1) and closed boundary are
    exact integer comparisons.
    """
    nrm = gx * gx + gy * gy
    xs = np.array([bx, bx + gx, bx + gx - gy, bx - gy], dtype=np.int64)
    ys = np.array([by, by + gy, by + gy + gx, by + gx], dtype=np.int64)
    interior = 0
    boundary = 0
    for x in range(np.min(xs), np.max(xs) + 1):
        for y in range(np.min(ys), np.max(ys) + 1):
            ux = x - bx
            uy = y - by
            s = ux * gx + uy * gy
            t = uy * gx - ux * gy
            if 0 < s < nrm and 0 < t < nrm:
                interior += 1
            elif 0 <= s <= nrm and 0 <= t <= nrm:
                boundary += 1
    return interior, boundary
