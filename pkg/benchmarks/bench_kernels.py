"""Time the compiled permutation-search kernel against the pure-Python one.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--seed 0]

Workloads are label matrices taken from real matrices (the cases the
equivalence engine feeds the kernel) plus random planted instances.
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from chm8 import perms
from chm8._kernels import COMPILED, perm_search, perm_search_py
from chm8.equivalence import _colours, entry_labels
from chm8.families import eval_family
from chm8.verify import dephase, fourier


def _prepared(A, B):
    (la, lb), nl = entry_labels(A, B)
    colours = _colours(la, lb)
    if colours is None:
        raise ValueError("instance is rejected before the search")
    return (la, lb, *colours, nl)


def _scrambled_pair(H, rng):
    D = dephase(H).dephased
    n = len(D)
    return D, perms.apply(rng.permutation(n), D, rng.permutation(n))


def workloads(rng):
    yield "Fourier F8, permuted", _prepared(*_scrambled_pair(fourier(8), rng))
    yield "Butson B1, permuted", _prepared(*_scrambled_pair(eval_family("B1"), rng))
    yield "V8A, permuted", _prepared(*_scrambled_pair(eval_family("V8A"), rng))
    yield "Fourier F16, permuted", _prepared(*_scrambled_pair(fourier(16), rng))
    A = rng.integers(0, 3, (12, 12)).astype(complex)
    B = perms.apply(rng.permutation(12), A, rng.permutation(12))
    yield "random 12x12, 3 labels", _prepared(A, B)
    A = fourier(8)
    B = fourier(8).copy()
    B[[1, 2]] = B[[2, 1]]
    B[3, 5], B[3, 6] = B[3, 6], B[3, 5]
    try:
        yield "Fourier F8 vs corrupted", _prepared(dephase(A).dephased, dephase(B).dephased)
    except ValueError:
        pass


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    if not COMPILED:
        print("compiled kernel not built; both columns time the Python fallback")

    print(f"{'workload':<26} {'python [ms]':>12} {'compiled [ms]':>14} {'speedup':>8}")
    for name, inst in workloads(np.random.default_rng(args.seed)):
        fast_result, slow_result = perm_search(*inst), perm_search_py(*inst)
        agree = (fast_result is None) == (slow_result is None)
        times = []
        for fn in (perm_search_py, perm_search):
            number = 1
            while timeit.timeit(lambda: fn(*inst), number=number) < 0.05 and number < 10**5:
                number *= 4
            best = min(timeit.repeat(lambda: fn(*inst), number=number, repeat=args.repeat))
            times.append(1e3 * best / number)
        flag = "" if agree else "  (results differ)"
        print(f"{name:<26} {times[0]:12.3f} {times[1]:14.4f} {times[0] / times[1]:7.1f}x{flag}")


if __name__ == "__main__":
    main()
