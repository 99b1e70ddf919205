#!/usr/bin/env python3
"""Benchmark the compiled summation kernels against the pure-Python fallback.

Times the two hot loops behind every series-route evaluation: generation of
windowed complex partial sums and the phase-weighted averaging cascade.

Usage: python benchmarks/bench_kernels.py [--terms N] [--repeat R]
"""

import argparse
import cmath
import math
import timeit

from malmsten import _kernels_py

try:
    from malmsten import _kernels_cy
except ImportError:
    _kernels_cy = None


def bench(label, fn, repeat):
    best = min(timeit.repeat(fn, number=1, repeat=repeat))
    print(f"  {label:<28} {best * 1e3:9.3f} ms")
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--terms", type=int, default=200_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    theta = math.pi / 2 + math.pi
    z = cmath.exp(1j * theta)
    window = 40
    depth = 16

    backends = [("python", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("cython", _kernels_cy))
    else:
        print("cython extension not built; timing the fallback only")

    results = {}
    for name, mod in backends:
        print(f"backend: {name}")
        partials = mod.log_sine_partials(theta, args.terms, window)
        t_part = bench(
            f"log_sine_partials(N={args.terms})",
            lambda m=mod: m.log_sine_partials(theta, args.terms, window),
            args.repeat,
        )
        t_avg = bench(
            f"weighted_average_limit(d={depth})",
            lambda m=mod, p=partials: m.weighted_average_limit(p, z, depth),
            args.repeat,
        )
        results[name] = (t_part, t_avg)
        value, est = mod.weighted_average_limit(partials, z, depth)
        print(f"  accelerated limit Im = {value.imag:.15f} (est {est:.2e})")

    if len(results) == 2:
        sp = results["python"][0] / results["cython"][0]
        sa = results["python"][1] / results["cython"][1]
        print(f"speedup: partial sums x{sp:.1f}, averaging x{sa:.1f}")


if __name__ == "__main__":
    main()
