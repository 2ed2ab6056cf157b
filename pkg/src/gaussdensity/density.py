"""Box-limit density estimators for coprimality and divisibility events.

"Random" elements are operationalized as the box limit: enumerate (or sample
uniformly from) all elements with both components in [-N, N] and let N grow.
Exhaustive counts are exact integers, bit-identical across runs and worker
counts.  Monte Carlo uses the counter-based Philox generator in fixed-size
blocks keyed by (seed, block index), so a result depends only on
(seed, samples, radius) and never on how the blocks were scheduled.

The degenerate pair (0, 0) counts as a non-coprime trial; one pair out of
(2N+1)^4 cannot move the limit.
"""

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels, zeta
from .gaussian import GaussianInt, classify

MC_BLOCK = 1 << 20
MAX_SEED = 2**64
_MAX_EXHAUSTIVE_TUPLES = 2**33
_GRID_CHUNK = 10_000_000


class Mode(enum.Enum):
    EXHAUSTIVE = "exhaustive"
    MONTE_CARLO = "mc"


@dataclass(frozen=True)
class DensityEstimate:
    """Hit/trial counts for one density experiment.

    `estimate` is hits/trials; `std_error` is the binomial standard error and
    exists only in Monte Carlo mode (exhaustive counts are exact).
    """

    hits: int
    trials: int
    region_radius: int
    mode: Mode
    seed: int | None = None

    def __post_init__(self):
        if not 0 <= self.hits <= self.trials:
            raise ValueError("hits must lie in [0, trials]")

    @property
    def estimate(self) -> float:
        return self.hits / self.trials

    @property
    def std_error(self) -> float | None:
        if self.mode is Mode.EXHAUSTIVE:
            return None
        p = self.estimate
        return (p * (1.0 - p) / self.trials) ** 0.5


def _check_seed(seed: int) -> None:
    if not 0 <= seed < MAX_SEED:
        raise ValueError("seed must be a 64-bit unsigned integer")


def _mc_blocks(seed: int, samples: int, rows: int, radius: int):
    """Deterministic stream of (rows, block) int64 draws from [-radius, radius].

    Block j always comes from Philox(seed) jumped j times, regardless of any
    parallel partitioning of the work."""
    done = 0
    j = 0
    while done < samples:
        n = min(MC_BLOCK, samples - done)
        rng = np.random.Generator(np.random.Philox(key=seed).jumped(j))
        yield rng.integers(-radius, radius + 1, size=(rows, n), dtype=np.int64)
        done += n
        j += 1


def gaussian_pair_density_exhaustive(radius: int) -> DensityEstimate:
    """Exact coprimality density over all ordered Gaussian pairs with
    components in [-radius, radius]; trials = (2*radius+1)^4."""
    hits = kernels.coprime_pair_count_box(radius)
    trials = (2 * radius + 1) ** 4
    return DensityEstimate(hits, trials, radius, Mode.EXHAUSTIVE)


def gaussian_pair_density_mc(samples: int, radius: int, seed: int) -> DensityEstimate:
    """Monte Carlo coprimality density over i.i.d. uniform Gaussian pairs
    from the box of the given radius."""
    if samples < 1:
        raise ValueError("samples must be positive")
    if not 1 <= radius <= kernels.MAX_COMPONENT:
        raise ValueError(f"radius must be in [1, {kernels.MAX_COMPONENT}]")
    _check_seed(seed)
    hits = 0
    for block in _mc_blocks(seed, samples, 4, radius):
        hits += kernels.coprime_count_arrays(block[0], block[1], block[2], block[3])
    return DensityEstimate(hits, samples, radius, Mode.MONTE_CARLO, seed)


def _rational_hits_exhaustive(k: int, radius: int) -> int:
    m = 2 * radius + 1
    total = m**k
    if total > _MAX_EXHAUSTIVE_TUPLES:
        raise ValueError(
            f"(2N+1)^k = {total} tuples is beyond the exhaustive budget; use Monte Carlo"
        )
    hits = 0
    for start in range(0, total, _GRID_CHUNK):
        idx = np.arange(start, min(start + _GRID_CHUNK, total), dtype=np.int64)
        g = np.zeros(idx.size, dtype=np.int64)
        for _ in range(k):
            g = np.gcd(g, np.abs(idx % m - radius))
            idx //= m
        hits += int(np.count_nonzero(g == 1))
    return hits


def rational_tuple_density(
    k: int,
    radius: int,
    mode: Mode = Mode.EXHAUSTIVE,
    samples: int | None = None,
    seed: int = 0,
) -> DensityEstimate:
    """Density of gcd(x_1, ..., x_k) = 1 over the rational-integer box
    [-radius, radius]^k, exhaustively or by Monte Carlo."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if mode is Mode.EXHAUSTIVE:
        hits = _rational_hits_exhaustive(k, radius)
        return DensityEstimate(hits, (2 * radius + 1) ** k, radius, Mode.EXHAUSTIVE)
    if samples is None or samples < 1:
        raise ValueError("Monte Carlo mode needs a positive sample count")
    _check_seed(seed)
    hits = 0
    for block in _mc_blocks(seed, samples, k, radius):
        hits += int(np.count_nonzero(np.gcd.reduce(np.abs(block), axis=0) == 1))
    return DensityEstimate(hits, samples, radius, Mode.MONTE_CARLO, seed)


def divisibility_frequency(d: GaussianInt, radius: int) -> DensityEstimate:
    """Exact fraction of the box [-radius, radius]^2 divisible by the prime
    element d.  Tends to 1/norm(d); the chance that d divides both of two
    independent draws is the square of this frequency (see
    both_divide_frequency)."""
    if not classify(d).is_prime:
        raise ValueError(f"{d} is not a Gaussian prime")
    if radius < 1:
        raise ValueError("radius must be positive")
    a, b = d.re, d.im
    n = d.norm()
    m = 2 * radius + 1
    xs = np.arange(-radius, radius + 1, dtype=np.int64)
    hits = 0
    # z = x + iy is divisible by d iff norm(d) divides both components of
    # z * conj(d); scan the grid in row chunks to bound memory.
    rows = max(1, _GRID_CHUNK // m)
    for start in range(0, m, rows):
        x = xs[start : start + rows][:, None]
        y = xs[None, :]
        ok = ((a * x + b * y) % n == 0) & ((a * y - b * x) % n == 0)
        hits += int(np.count_nonzero(ok))
    return DensityEstimate(hits, m * m, radius, Mode.EXHAUSTIVE)


def both_divide_frequency(d: GaussianInt, radius: int) -> DensityEstimate:
    """Exact fraction of ordered pairs (z1, z2) from the box with d dividing
    both.  The box pair measure is a product, so this is exactly the square
    of the single-element frequency."""
    single = divisibility_frequency(d, radius)
    return DensityEstimate(
        single.hits**2, single.trials**2, radius, Mode.EXHAUSTIVE
    )


@dataclass(frozen=True)
class ConvergenceRow:
    radius: int
    estimate: float
    abs_error: float


def resolve_target(ring: str, k: int = 2) -> float:
    """The analytic limit constant for a coprimality density experiment."""
    if ring == "gauss":
        return zeta.gaussian_coprime_constant().value
    if ring == "rational":
        return zeta.rational_coprime_constant(k).value
    raise ValueError(f"unknown ring {ring!r}")


def convergence_table(
    radii: Sequence[int],
    mode: Mode = Mode.EXHAUSTIVE,
    target: float | None = None,
    ring: str = "gauss",
    k: int = 2,
    samples: int = 1_000_000,
    seed: int = 0,
) -> list[ConvergenceRow]:
    """One (radius, estimate, |estimate - target|) row per radius.

    target=None resolves the analytic constant for the chosen ring.  Errors
    are reported, not asserted: convergence is broadly but not monotonically
    decreasing at desk scale.
    """
    radii = list(radii)
    if not radii:
        raise ValueError("need at least one radius")
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be strictly ascending")
    if ring == "gauss" and k != 2:
        raise ValueError("Gaussian densities are implemented for pairs only")
    if target is None:
        target = resolve_target(ring, k)
    rows = []
    for r in radii:
        if ring == "gauss":
            if mode is Mode.EXHAUSTIVE:
                est = gaussian_pair_density_exhaustive(r)
            else:
                est = gaussian_pair_density_mc(samples, r, seed)
        else:
            est = rational_tuple_density(k, r, mode, samples, seed)
        rows.append(ConvergenceRow(r, est.estimate, abs(est.estimate - target)))
    return rows
