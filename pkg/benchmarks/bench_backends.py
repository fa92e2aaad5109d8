#!/usr/bin/env python3
"""Compare the compiled and pure-numpy kernel backends on the batched hot
paths behind the property campaigns.

Run from the repository root:

    python3 benchmarks/bench_backends.py --sizes 1000,100000 --repeats 7

Each op is timed over full batches; the best of ``--repeats`` runs is kept
after one untimed warmup call (which also absorbs the compiled backend's
one-time JIT cost).  Large batches typically favor the compiled kernels;
tiny batches are dominated by call overhead and may show no gain.
"""

import argparse
import time

import numpy as np

from pauliq import _kernels_numpy


def _parse_sizes(text):
    try:
        sizes = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated int list") from None
    if not sizes or any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def _load_numba_backend():
    try:
        from pauliq import _kernels_numba
    except ImportError:
        return None
    return _kernels_numba


def _ball(rng, n, radius):
    u = rng.normal(size=(n, 3))
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    return u * (radius * rng.uniform(size=n) ** (1.0 / 3.0))[:, None]


def _shell(rng, n, lo, hi):
    u = rng.normal(size=(n, 3))
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    return u * ((lo**3 + (hi**3 - lo**3) * rng.uniform(size=n)) ** (1.0 / 3.0))[:, None]


def make_data(n, c=1.0):
    rng = np.random.default_rng(2024)

    def cbox(shape):
        return rng.uniform(-1, 1, size=shape) + 1j * rng.uniform(-1, 1, size=shape)

    sa, va = cbox(n), cbox((n, 3))
    return {
        "sa": sa, "va": va, "sb": cbox(n), "vb": cbox((n, 3)),
        # shifted scalar / shrunk vector keep every square norm away from 0
        "si": sa + 3.0, "vi": 0.5 * va,
        "a": _ball(rng, n, 0.9).astype(np.complex128),
        "b": _ball(rng, n, 0.9).astype(np.complex128),
        "v": _shell(rng, n, 0.1 * c, 0.9 * c),
        "u": _shell(rng, n, 0.1 * c, 0.9 * c),
        "t": rng.uniform(-1.5, 1.5, size=n),
        "x": _ball(rng, n, 1.5),
        "c": c,
    }


OPS = (
    ("qmul", lambda k, d: k.qmul(d["sa"], d["va"], d["sb"], d["vb"])),
    ("square_norm", lambda k, d: k.square_norm(d["sa"], d["va"])),
    ("inverse", lambda k, d: k.inverse(d["si"], d["vi"])),
    ("refl_sum", lambda k, d: k.refl_sum(d["a"], d["b"])),
    ("einstein_add", lambda k, d: k.einstein_add(d["v"], d["u"], d["c"])),
    ("boost", lambda k, d: k.boost(d["t"], d["x"], d["v"], d["c"])),
    ("le_boost", lambda k, d: k.le_boost(d["t"], d["x"], d["v"], d["c"])),
)


def best_time(fn, repeats):
    fn()
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes", type=_parse_sizes, default=(1000, 100000),
        help="comma-separated batch sizes (default 1000,100000)",
    )
    parser.add_argument(
        "--repeats", type=int, default=7, help="timed runs per op, best kept (default 7)"
    )
    args = parser.parse_args(argv)

    numba_backend = _load_numba_backend()
    if numba_backend is None:
        print("compiled backend unavailable (numba not installed); timing numpy only")

    header = f"{'op':<14}{'size':>9}{'numpy ms':>12}"
    if numba_backend is not None:
        header += f"{'numba ms':>12}{'speedup':>10}"
    print(header)
    for n in args.sizes:
        data = make_data(n)
        for name, op in OPS:
            t_np = best_time(lambda: op(_kernels_numpy, data), args.repeats)
            line = f"{name:<14}{n:>9}{t_np * 1e3:>12.3f}"
            if numba_backend is not None:
                t_nb = best_time(lambda: op(numba_backend, data), args.repeats)
                line += f"{t_nb * 1e3:>12.3f}{t_np / t_nb:>9.2f}x"
            print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
