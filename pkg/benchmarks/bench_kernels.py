"""Compare the compiled and pure-Python subset-enumeration kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--max-roots 21]

Each row times a full weight enumeration of one Levi context with both
backends and checks that the two weight maps agree.
"""
import argparse
import statistics
import time

from spinmult import kernels
from spinmult.oracle import _kernel_inputs
from spinmult.rootsys import build_context

CONTEXTS = [(1, 1, 1, 1, 1), (1, 2, 3), (3, 4), (1,) * 6, (1, 1, 2, 3), (2, 2, 2, 2), (1,) * 7]


def time_backend(ctx, backend, repeat):
    delta, base = _kernel_inputs(ctx)
    stop = 1 << ctx.num_roots
    samples, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = kernels.gray_code_counts(delta, base, 0, stop, backend)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--max-roots", type=int, default=21)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; only the python backend is available")
    print(f"{'composition':<14}{'roots':>6}{'subsets':>10}" + "".join(f"{b + ' s':>12}" for b in backends) + f"{'speedup':>10}")
    for c in CONTEXTS:
        ctx = build_context(c)
        if ctx.num_roots > args.max_roots:
            continue
        times, maps = [], []
        for b in backends:
            t, counts = time_backend(ctx, b, args.repeat)
            times.append(t)
            maps.append(dict(counts))
        assert all(m == maps[0] for m in maps), f"backends disagree on {c}"
        speedup = f"{times[-1] / times[0]:.1f}x" if len(times) > 1 else "-"
        label = ",".join(map(str, c))
        print(f"{label:<14}{ctx.num_roots:>6}{1 << ctx.num_roots:>10}" + "".join(f"{t:>12.4f}" for t in times) + f"{speedup:>10}")


if __name__ == "__main__":
    main()
