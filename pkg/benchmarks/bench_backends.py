"""Compare the numba kernels against the pure-numpy fallbacks.

Times the three hot loops on both backends in one process and checks that
they return identical integers.  Run from the repository root:

    python benchmarks/bench_backends.py
    python benchmarks/bench_backends.py --radius 60 --samples 4000000
"""

import argparse
import time

import numpy as np

from gaussdensity import backend, kernels


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description="gaussdensity backend benchmark")
    parser.add_argument("--radius", type=int, default=40)
    parser.add_argument("--samples", type=int, default=2_000_000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--threads", type=int, default=None)
    args = parser.parse_args()

    if args.threads is not None:
        backend.set_thread_cap(args.threads)

    rng = np.random.Generator(np.random.Philox(key=0))
    a1, b1, a2, b2 = (
        rng.integers(-(10**6), 10**6 + 1, size=args.samples, dtype=np.int64)
        for _ in range(4)
    )

    numpy_side = {
        "box": lambda: kernels._coprime_pair_count_box_numpy(args.radius),
        "arrays": lambda: kernels._coprime_count_arrays_numpy(a1, b1, a2, b2),
        "cell": lambda: kernels._domain_point_counts_numpy(97, 58, 0, 0),
    }
    labels = {
        "box": f"exhaustive pair count, N={args.radius}",
        "arrays": f"coprimality over {args.samples:,} sampled pairs",
        "cell": "lattice cell point counts, g=97+58i",
    }

    backends = [("numpy", numpy_side)]
    if backend.using_numba():
        nb = kernels._nb()
        numba_side = {
            "box": lambda: int(nb.coprime_pair_count_box(args.radius)),
            "arrays": lambda: int(nb.coprime_count_arrays(a1, b1, a2, b2)),
            "cell": lambda: tuple(map(int, nb.domain_point_counts(97, 58, 0, 0))),
        }
        for fn in numba_side.values():  # compile outside the timed region
            fn()
        backends.insert(0, ("numba", numba_side))
    else:
        print("numba backend unavailable; timing the numpy fallback only")

    print(f"active backend: {backend.active()}, repeat: best of {args.repeat}")
    print(f"{'kernel':44s} " + " ".join(f"{name:>12s}" for name, _ in backends)
          + ("      speedup" if len(backends) == 2 else ""))
    for key, label in labels.items():
        row = f"{label:44s} "
        times = []
        results = []
        for _, side in backends:
            elapsed, result = best_of(side[key], args.repeat)
            times.append(elapsed)
            results.append(result)
            row += f" {elapsed:11.4f}s"
        assert len(set(map(str, results))) == 1, f"backend mismatch on {key}"
        if len(times) == 2:
            row += f"  {times[1] / times[0]:10.1f}x"
        print(row)


if __name__ == "__main__":
    main()
