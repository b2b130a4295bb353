"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Vector kernels run on a parameter-sized buffer (282160 entries). The RNG
kernels run on a shorter buffer because the fallback loops in Python.
"""
import argparse
import timeit

import numpy as np

from ewcorr import _fallback
from ewcorr.nn import DEFAULT_ARCHITECTURE, param_count
from ewcorr.rng import seed_state

try:
    from ewcorr import _kernels
except ImportError:
    _kernels = None


def cases(n, n_rng):
    rng = np.random.default_rng(0)
    theta = rng.normal(size=n)
    grad = rng.normal(size=n)
    anchor = theta + rng.normal(scale=0.1, size=n)
    imp = rng.exponential(size=n)
    omega = np.zeros(n)
    out = np.empty(n)
    buf = np.empty(n_rng)
    idx = np.arange(n_rng, dtype=np.int64)
    return {
        "sgd_step": lambda k: k.sgd_step(theta, grad, 1e-12, omega),
        "sgd_ewc_step": lambda k: k.sgd_ewc_step(theta, grad, anchor, imp, 10.0, 1e-12, omega),
        "sgd_ewc_prox_step": lambda k: k.sgd_ewc_prox_step(theta, grad, anchor, imp, 10.0, 1e-12, omega),
        "ewc_penalty": lambda k: k.ewc_penalty(theta, anchor, imp, 10.0, out),
        "pearson": lambda k: k.pearson(theta, grad),
        f"uniform_fill[{n_rng}]": lambda k: k.uniform_fill(seed_state(1), buf),
        f"shuffle[{n_rng}]": lambda k: k.shuffle(seed_state(1), idx),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--rng-size", type=int, default=20000)
    args = ap.parse_args()
    n = param_count(DEFAULT_ARCHITECTURE)
    backends = [("python", _fallback)] + ([("cython", _kernels)] if _kernels is not None else [])
    if _kernels is None:
        print("compiled kernels not built; timing the fallback only")
    print(f"{'kernel':<24}" + "".join(f"{name + ' ms':>14}" for name, _ in backends) + f"{'speedup':>10}")
    for name, fn in cases(n, args.rng_size).items():
        times = []
        for _, mod in backends:
            fn(mod)  # warm up
            number = 3
            best = min(timeit.repeat(lambda: fn(mod), number=number, repeat=args.repeat)) / number
            times.append(best * 1e3)
        speedup = f"{times[0] / times[1]:>9.1f}x" if len(times) == 2 else ""
        print(f"{name:<24}" + "".join(f"{t:>14.3f}" for t in times) + speedup)


if __name__ == "__main__":
    main()
