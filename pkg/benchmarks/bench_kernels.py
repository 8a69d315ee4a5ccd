#!/usr/bin/env python
"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--bits 12 16 20] [--repeat 3]

For each key size it finds a prime-order curve, then times a point count
and a full-length linear walk (G up to n*G) on every available backend.
"""

import argparse
import time

from ecwalk._kernels import available_backends
from ecwalk.bench import bit_class_suite


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bits", type=int, nargs="+", default=[12, 16, 20])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(sorted(backends))}")
    header = f"{'bits':>4} {'p':>8} {'job':<12}" + "".join(f"{name:>12}" for name in sorted(backends))
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for bits in args.bits:
        (params,) = bit_class_suite(bits, bits)
        gx, gy = params.G.coords()
        jobs = {
            "count": lambda k: k.count_points(params.p, params.a, params.b),
            "walk": lambda k: k.walk(params.p, params.a, gx, gy, None, params.n),
        }
        for job, run in jobs.items():
            timings, results = {}, set()
            for name, kernel in sorted(backends.items()):
                timings[name], result = best_of(args.repeat, run, kernel)
                results.add(result)
            assert len(results) == 1, f"backends disagree on {job}: {results}"
            line = f"{bits:>4} {params.p:>8} {job:<12}" + "".join(f"{timings[n]:>11.4f}s" for n in sorted(timings))
            if "cython" in timings and "python" in timings:
                line += f"{timings['python'] / timings['cython']:>9.1f}x"
            print(line)


if __name__ == "__main__":
    main()
