"""Hot counting loops with backend dispatch.

Public functions route to the numba kernels or to the pure-numpy fallbacks
below according to backend.active().  Both paths are exact on int64 and
return identical integers; the `*_numpy` versions stay importable on every
backend so tests and benchmarks can compare them directly.
"""

import numpy as np

from . import backend

# (2*radius+1)^4 must fit in int64 for the exhaustive pair count.
MAX_EXHAUSTIVE_RADIUS = 20_000
# Keeps every intermediate product of the int64 gcd loop below 2^63.
MAX_COMPONENT = 2**30

_PAIR_CHUNK = 1 << 22


def _require_radius(radius: int, limit: int) -> None:
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if radius > limit:
        raise ValueError(f"radius {radius} exceeds supported limit {limit}")


def gcd_norm_arrays_numpy(a1, b1, a2, b2):
    """Element-wise norm(gcd(a1 + b1*i, a2 + b2*i)) on int64 arrays.

    Vectorized Euclidean loop: only the not-yet-terminated lanes are
    reprocessed, and each lane's remainder norm at least halves per sweep.
    """
    a1 = np.ascontiguousarray(a1, dtype=np.int64).copy()
    b1 = np.ascontiguousarray(b1, dtype=np.int64).copy()
    a2 = np.ascontiguousarray(a2, dtype=np.int64).copy()
    b2 = np.ascontiguousarray(b2, dtype=np.int64).copy()
    idx = np.flatnonzero((a2 != 0) | (b2 != 0))
    while idx.size:
        x1, y1 = a1[idx], b1[idx]
        x2, y2 = a2[idx], b2[idx]
        n2 = x2 * x2 + y2 * y2
        t1 = x1 * x2 + y1 * y2
        t2 = y1 * x2 - x1 * y2
        q1 = (2 * t1 + n2) // (2 * n2)
        q2 = (2 * t2 + n2) // (2 * n2)
        r1 = x1 - (q1 * x2 - q2 * y2)
        r2 = y1 - (q1 * y2 + q2 * x2)
        a1[idx], b1[idx] = x2, y2
        a2[idx], b2[idx] = r1, r2
        idx = idx[(r1 != 0) | (r2 != 0)]
    return a1 * a1 + b1 * b1


def _coprime_pair_count_box_numpy(radius: int) -> int:
    m = 2 * radius + 1
    box = m * m
    total_pairs = box * box
    hits = 0
    for start in range(0, total_pairs, _PAIR_CHUNK):
        pidx = np.arange(start, min(start + _PAIR_CHUNK, total_pairs), dtype=np.int64)
        i1, i2 = pidx // box, pidx % box
        a1, b1 = i1 // m - radius, i1 % m - radius
        a2, b2 = i2 // m - radius, i2 % m - radius
        hits += int(np.count_nonzero(gcd_norm_arrays_numpy(a1, b1, a2, b2) == 1))
    return hits


def _coprime_count_arrays_numpy(a1, b1, a2, b2) -> int:
    return int(np.count_nonzero(gcd_norm_arrays_numpy(a1, b1, a2, b2) == 1))


def _domain_point_counts_numpy(gx: int, gy: int, bx: int, by: int):
    nrm = gx * gx + gy * gy
    xs = np.array([bx, bx + gx, bx + gx - gy, bx - gy], dtype=np.int64)
    ys = np.array([by, by + gy, by + gy + gx, by + gx], dtype=np.int64)
    x = np.arange(xs.min(), xs.max() + 1, dtype=np.int64)
    y = np.arange(ys.min(), ys.max() + 1, dtype=np.int64)
    ux = (x - bx)[:, None]
    uy = (y - by)[None, :]
    s = ux * gx + uy * gy
    t = uy * gx - ux * gy
    inside = (0 < s) & (s < nrm) & (0 < t) & (t < nrm)
    closed = (0 <= s) & (s <= nrm) & (0 <= t) & (t <= nrm)
    interior = int(np.count_nonzero(inside))
    boundary = int(np.count_nonzero(closed)) - interior
    return interior, boundary


def _nb():
    from . import _numba_kernels

    return _numba_kernels


def coprime_pair_count_box(radius: int) -> int:
    """Coprime hits over all (2*radius+1)^4 ordered Gaussian pairs from the
    box [-radius, radius]^2."""
    _require_radius(radius, MAX_EXHAUSTIVE_RADIUS)
    if backend.using_numba():
        return int(_nb().coprime_pair_count_box(radius))
    return _coprime_pair_count_box_numpy(radius)


def coprime_count_arrays(a1, b1, a2, b2) -> int:
    """Coprime hits over four parallel int64 component arrays."""
    if backend.using_numba():
        return int(_nb().coprime_count_arrays(a1, b1, a2, b2))
    return _coprime_count_arrays_numpy(a1, b1, a2, b2)


def gcd_norm_arrays(a1, b1, a2, b2):
    """Element-wise norm(gcd) for bulk checks."""
    if backend.using_numba():
        return _nb().gcd_norm_arrays(
            np.ascontiguousarray(a1, dtype=np.int64).ravel(),
            np.ascontiguousarray(b1, dtype=np.int64).ravel(),
            np.ascontiguousarray(a2, dtype=np.int64).ravel(),
            np.ascontiguousarray(b2, dtype=np.int64).ravel(),
        )
    return gcd_norm_arrays_numpy(a1, b1, a2, b2)


def domain_point_counts(gx: int, gy: int, bx: int = 0, by: int = 0):
    """(interior, boundary) counts for the square cell spanned by
    (gx, gy) and (-gy, gx) at base vertex (bx, by)."""
    if gx == 0 and gy == 0:
        raise ValueError("degenerate cell: zero side vector")
    if backend.using_numba():
        interior, boundary = _nb().domain_point_counts(gx, gy, bx, by)
        return int(interior), int(boundary)
    return _domain_point_counts_numpy(gx, gy, bx, by)
