"""Compare the compiled kernels with the numpy fallback.

Run with ``python benchmarks/bench_kernels.py``. Each row reports the best of
several repeats, in microseconds per call, and the speed-up of the compiled
backend. Outputs of the two backends are also checked for equality.
"""

import argparse
import timeit

import numpy as np

from kgcoulomb import _pykernels

try:
    from kgcoulomb import _ckernels
except ImportError:  # pragma: no cover - depends on the build
    _ckernels = None

X = np.geomspace(1e-4, 200.0, 400)
XL = np.linspace(-0.999, 0.999, 400)
CASES = [
    ("laguerre k=4 (400 pts)", "laguerre", (4, 1.83, X)),
    ("laguerre k=40 (400 pts)", "laguerre", (40, 0.12, X)),
    ("legendre l=8 m=3 (400 pts)", "legendre_stripped", (8, 3, XL)),
    ("legendre l=40 m=10 (400 pts)", "legendre_stripped", (40, 10, XL)),
    ("gauss_legendre n=20", "gauss_legendre", (20,)),
    ("gauss_legendre n=256", "gauss_legendre", (256,)),
]


def best_time(fn, args, repeat, number):
    return min(timeit.repeat(lambda: fn(*args), repeat=repeat, number=number)) / number


def same(a, b):
    if isinstance(a, tuple):
        return all(np.allclose(x, y, rtol=1e-14, atol=1e-15) for x, y in zip(a, b))
    return np.allclose(a, b, rtol=1e-14, atol=1e-15)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=200)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; only the fallback is available")
        return 1
    print(f"{'kernel':32s} {'python us':>10s} {'cython us':>10s} {'speed-up':>9s}  equal")
    for name, fn, fargs in CASES:
        py = getattr(_pykernels, fn)
        cy = getattr(_ckernels, fn)
        tp = best_time(py, fargs, args.repeat, args.number)
        tc = best_time(cy, fargs, args.repeat, args.number)
        print(f"{name:32s} {tp * 1e6:10.1f} {tc * 1e6:10.1f} {tp / tc:8.1f}x  {same(py(*fargs), cy(*fargs))}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
