"""Compare the numpy and numba kernel backends on finite-ring scan workloads.

Run with: python3 benchmarks/bench_backends.py [--repeat N]

Workloads are the hot inner loops of the exhaustive oracle: full witness
scans over M_2(Z_3) (order 81) and Z_360. Numba pays a one-time compile
cost, so a warmup pass runs before timing.
"""

import argparse
import statistics
import time

from dualcore._backend import select_backend
from dualcore.oracle import brute_force
from dualcore.rings import descriptor_from_json, ring_from_descriptor


def _fresh_ring(tag, backend_name):
    ring = ring_from_descriptor(descriptor_from_json(tag))
    ring.kernels = select_backend(backend_name)
    return ring


def _scan_all_dual_cores(ring):
    total = 0
    for enc in range(ring.order):
        a = ring.el(enc)
        total += len(brute_force("left-dual-bc-core", (a, a, a), ring=ring))
    return total


def _time(fn, repeat):
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t0)
    return min(runs), statistics.median(runs)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    workloads = [
        ("M2(Z3) dual-core scan x81", "MatZp:2x2:p3"),
        ("Z360 dual-core scan x360", "Zn:360"),
    ]
    results = {}
    for backend in ("numpy", "numba"):
        try:
            select_backend(backend)
        except ImportError:
            print(f"{backend}: unavailable, skipping")
            continue
        for label, tag in workloads:
            ring = _fresh_ring(tag, backend)
            witnesses = _scan_all_dual_cores(ring)  # warmup + sanity total
            best, med = _time(lambda: _scan_all_dual_cores(ring), args.repeat)
            results.setdefault(label, {})[backend] = (best, med, witnesses)
            print(
                f"{label:28s} {backend:6s} best {best * 1e3:8.2f} ms  "
                f"median {med * 1e3:8.2f} ms  ({witnesses} witnesses)"
            )
    for label, by_backend in results.items():
        if len(by_backend) == 2:
            ratio = by_backend["numpy"][0] / by_backend["numba"][0]
            print(f"{label:28s} numpy/numba best-time ratio: {ratio:.2f}x")
        totals = {v[2] for v in by_backend.values()}
        if len(totals) != 1:
            raise SystemExit(f"backend disagreement on {label}: {totals}")


if __name__ == "__main__":
    main()
