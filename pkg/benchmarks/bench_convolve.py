"""Compare the compiled convolution kernel with its pure-Python twin.

    python3 benchmarks/bench_convolve.py [--order 40] [--repeat 5]

Part one times raw sparse convolutions of increasing length. Part two
builds B_0(x, y, q) in fresh interpreters, once per backend.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time

from blowup_series import kernels


def _operands(n: int, rng: random.Random):
    exps = sorted(rng.sample(range(4 * n), n))
    return exps, [rng.randint(-(10**6), 10**6) for _ in exps]


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(repeat: int) -> None:
    rng = random.Random(1)
    print(f"{'terms':>7} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for n in (64, 256, 1024, 4096):
        a, b = _operands(n, rng), _operands(n, rng)
        t_py = _best(lambda: kernels.convolve_python(*a, *b), repeat)
        if kernels.BACKEND == "cython":
            assert kernels.convolve_compiled(*a, *b) == kernels.convolve_python(*a, *b)
            t_c = _best(lambda: kernels.convolve_compiled(*a, *b), repeat)
            print(f"{n:7d} {t_py:10.4f} {t_c:11.4f} {t_py / t_c:7.1f}x")
        else:
            print(f"{n:7d} {t_py:10.4f} {'n/a':>11}")


def bench_universal(order: int) -> None:
    code = (
        "import time\n"
        "t0 = time.perf_counter()\n"
        "from blowup_series.blowup import universal_B\n"
        f"universal_B(0, {order})\n"
        "from blowup_series import kernels\n"
        "print(kernels.BACKEND, time.perf_counter() - t0)\n"
    )
    for flag in ("1", ""):
        env = dict(os.environ, BLOWUP_SERIES_PURE=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, seconds = out.stdout.split()
        print(f"B_0 to q^{order} with {backend:8} backend: {float(seconds):.2f} s")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--order", type=int, default=40)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    print(f"default backend: {kernels.BACKEND}")
    bench_kernels(args.repeat)
    bench_universal(args.order)


if __name__ == "__main__":
    main()
