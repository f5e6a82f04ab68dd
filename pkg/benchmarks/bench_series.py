"""Compare the compiled and pure-Python series multiplication kernels.

    python benchmarks/bench_series.py [--repeat 5] [--seed 0]
"""

from __future__ import annotations

import argparse
import random
import timeit
from contextlib import contextmanager

from mubar.diagram import close_braid, parse_braid
from mubar.magnus import TruncatedSeries, _kernel, monomials
from mubar.milnor import mu_table


def random_series(rng: random.Random, nvars: int, cap: int, density: float) -> TruncatedSeries:
    terms = {(): 1}
    for seq in monomials(nvars, cap):
        if rng.random() < density:
            terms[seq] = rng.randint(-5, 5)
    return TruncatedSeries(cap, nvars, terms)


@contextmanager
def backend(mul):
    saved = _kernel.mul
    _kernel.mul = mul
    try:
        yield
    finally:
        _kernel.mul = saved


def bench(label: str, fn, repeat: int) -> float:
    best = min(timeit.repeat(fn, number=1, repeat=repeat))
    print(f"{label:<44} {best * 1e3:10.3f} ms")
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if _kernel.BACKEND != "cython":
        print("compiled kernel not built; only the Python kernel is timed")
    rng = random.Random(args.seed)
    kernels = [("python", _kernel.python_mul)]
    if _kernel.BACKEND == "cython":
        kernels.append(("cython", _kernel.compiled_mul))

    for nvars, cap, density in ((3, 4, 1.0), (3, 6, 0.6), (4, 5, 0.5), (5, 5, 0.3)):
        u = random_series(rng, nvars, cap, density)
        v = random_series(rng, nvars, cap, density)
        times = {}
        for name, mul in kernels:
            with backend(mul):
                times[name] = bench(f"mul k={nvars} n={cap} terms={len(u)} [{name}]",
                                    lambda: u * v, args.repeat)
        if len(times) == 2:
            print(f"{'':<44} speedup x{times['python'] / times['cython']:.1f}")

    for text, strands, cap in (("s1 S2 s1 S2 s1 S2 s2 v2", 3, 4), ("s1 s2 s3 S1 s2 v3 s1 S3", 4, 5)):
        d = close_braid(parse_braid(text, strands))
        times = {}
        for name, mul in kernels:
            with backend(mul):
                times[name] = bench(f"mu_table {strands} strands n={cap} [{name}]",
                                    lambda: mu_table(d, cap), args.repeat)
        if len(times) == 2:
            print(f"{'':<44} speedup x{times['python'] / times['cython']:.1f}")


if __name__ == "__main__":
    main()
