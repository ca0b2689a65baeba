#!/usr/bin/env python3
"""Benchmark the compiled term-arithmetic kernels against the pure-Python
fallback on representative workloads.

Workloads are real term maps produced by the library: products of complete
homogeneous polynomials, ribbon-element accumulation, and a Schur-basis
peeling loop.  Run from anywhere after installing the package:

    python3 benchmarks/bench_kernels.py [--repeat N]

An end-to-end comparison (whole identity sweep under each backend) is
available with --end-to-end; it re-invokes this interpreter with
COLOREDSYM_PURE toggled.
"""

import argparse
import os
import subprocess
import sys
import time

from coloredsym import _poly_py
from coloredsym import (
    colored_F,
    colored_h,
    colored_ribbon,
    enumerate_colored_compositions,
    expand_in_colored_schur,
    h_poly,
)

try:
    from coloredsym import _speedups
except ImportError:
    _speedups = None


def workload_h_product():
    """Two dense degree-5 term maps at width 8 (thousands of term pairs)."""
    a = h_poly(5, 0, (8,)).terms
    b = h_poly(5, 0, (8,)).terms
    return [("mul h5*h5 (w=8)", "mul", a, b)]


def workload_ribbon_accumulate():
    """Accumulate every colored fundamental element for n=5, r=2."""
    widths = (5, 5)
    maps = [colored_F(ce, widths).terms for ce in enumerate_colored_compositions(5, 2)]
    return [("acc F (n=5, r=2)", "acc", maps)]


def workload_h_difference_product():
    a = colored_h(((3, 2, 1),), (6,)).terms
    b = colored_h(((3, 3),), (6,)).terms
    return [("mul h321*h33 (w=6)", "mul", a, b)]


def time_kernel(kernel, kind, payload, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        if kind == "mul":
            a, b = payload
            kernel.mul_terms(a, b)
        else:
            acc = {}
            for terms in payload[0]:
                kernel.add_terms(acc, terms, 1)
        best = min(best, time.perf_counter() - start)
    return best


def run_micro(repeat):
    cases = []
    for name, kind, *payload in (
        workload_h_product()
        + workload_h_difference_product()
        + workload_ribbon_accumulate()
    ):
        cases.append((name, kind, payload))
    print(f"{'workload':28s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, kind, payload in cases:
        t_py = time_kernel(_poly_py, kind, payload, repeat)
        if _speedups is None:
            print(f"{name:28s} {t_py * 1e3:9.2f}ms {'n/a':>10s} {'n/a':>8s}")
            continue
        t_cy = time_kernel(_speedups, kind, payload, repeat)
        print(
            f"{name:28s} {t_py * 1e3:9.2f}ms {t_cy * 1e3:9.2f}ms {t_py / t_cy:7.1f}x"
        )


def run_peel(repeat):
    """Time a full ribbon expansion sweep (n=5, r=2) under the active backend."""
    from coloredsym import symfun
    from coloredsym._backend import BACKEND

    best = float("inf")
    for _ in range(repeat):
        # memoized elements would otherwise survive between iterations
        for cached in (
            symfun.colored_ribbon,
            symfun.colored_F,
            symfun.colored_h,
            symfun._colored_schur_cached,
            symfun._schur_local,
            symfun._ssyt_terms,
        ):
            cached.cache_clear()
        start = time.perf_counter()
        for ce in enumerate_colored_compositions(5, 2):
            expand_in_colored_schur(colored_ribbon(ce, (5, 5)))
        best = min(best, time.perf_counter() - start)
    print(f"peel sweep (n=5, r=2) under {BACKEND:8s}: {best:.2f}s")


def run_end_to_end():
    script = (
        "import time; t=time.perf_counter(); "
        "from coloredsym.identities import verify_colored_ribbon_schur; "
        "r = verify_colored_ribbon_schur(5, 2); "
        "assert r.passed; "
        "print(f'{time.perf_counter()-t:.2f}s')"
    )
    for label, env_value in (("compiled", "0"), ("python", "1")):
        env = dict(os.environ, COLOREDSYM_PURE=env_value)
        out = subprocess.run(
            [sys.executable, "-c", script], env=env, capture_output=True, text=True
        )
        print(f"colored ribbon sweep (n=5, r=2), {label:8s}: {out.stdout.strip()}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--end-to-end", action="store_true")
    args = parser.parse_args()
    if _speedups is None:
        print("note: compiled kernels not built; showing pure-Python timings only")
    run_micro(args.repeat)
    run_peel(args.repeat)
    if args.end_to_end:
        run_end_to_end()


if __name__ == "__main__":
    main()
