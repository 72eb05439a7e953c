"""Benchmark: compiled kernels vs the pure-Python fallback.

Times the two hot kernels (matrix mutation, canonical form) in
isolation and an end-to-end exchange-graph exploration driven through
each implementation.  Usage: python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from greenseq import _pure

try:
    from greenseq import _speedups
except ImportError:
    _speedups = None


def random_rows(rng: random.Random, n: int, m: int, max_mult: int = 3):
    rows = [[0] * n for _ in range(n + m)]
    for i in range(n):
        for j in range(i + 1, n):
            c = rng.randint(-max_mult, max_mult)
            rows[i][j] = c
            rows[j][i] = -c
    for f in range(m):
        for j in range(n):
            rows[n + f][j] = rng.randint(-max_mult, max_mult)
    return tuple(tuple(r) for r in rows)


def bench(label: str, func, repeat: int = 3) -> float:
    best = min(func() for _ in range(repeat))
    print(f"  {label:34s} {best * 1000:10.2f} ms")
    return best


def time_mutations(impl, cases) -> float:
    def run():
        t0 = time.perf_counter()
        for rows, n, k in cases:
            impl.mutate_rows(rows, n, k)
        return time.perf_counter() - t0

    return run


def time_canonical(impl, cases) -> float:
    def run():
        t0 = time.perf_counter()
        for rows, n, m in cases:
            impl.canonical_min(rows, n, m)
        return time.perf_counter() - t0

    return run


def time_explore(kernel_name: str):
    # re-select the kernel, then run a full exploration
    import importlib

    import greenseq._kernels as kernels
    from greenseq import exchange, quiver

    impl = _pure if kernel_name == "pure" else _speedups
    kernels.impl = impl
    kernels.mutate_rows = impl.mutate_rows
    kernels.canonical_min = impl.canonical_min
    importlib.reload(quiver)
    importlib.reload(exchange)
    a4 = quiver.ExtMatrix.from_rows(
        4, 0, [[0, 1, 0, 0], [-1, 0, 1, 0], [0, -1, 0, 1], [0, 0, -1, 0]]
    )
    markov = quiver.ExtMatrix.from_rows(3, 0, [[0, 2, -2], [-2, 0, 2], [2, -2, 0]])

    def run():
        t0 = time.perf_counter()
        g = exchange.explore(a4, max_vertices=10_000)
        assert g.complete and len(g.vertices) == 42
        g2 = exchange.explore(markov, max_vertices=2000)
        assert len(g2.vertices) == 2000
        return time.perf_counter() - t0

    return run


def main():
    rng = random.Random(7)
    mut_cases = [
        (random_rows(rng, n, n), n, rng.randrange(n))
        for n in (3, 4, 6, 8)
        for _ in range(2500)
    ]
    canon_cases = [
        (random_rows(rng, n, n), n, n) for n in (3, 4, 6, 8) for _ in range(250)
    ]

    impls = [("pure", _pure)]
    if _speedups is not None:
        impls.append(("speedups", _speedups))
    else:
        print("extension not built; benchmarking the pure kernels only")

    results: dict[tuple[str, str], float] = {}
    for name, impl in impls:
        print(f"kernel: {name}")
        results[(name, "mutate")] = bench(
            f"mutate_rows x{len(mut_cases)}", time_mutations(impl, mut_cases)
        )
        results[(name, "canon")] = bench(
            f"canonical_min x{len(canon_cases)}", time_canonical(impl, canon_cases)
        )
        results[(name, "explore")] = bench(
            "explore A4 (42 classes) + Markov(2000)", time_explore(name)
        )

    if _speedups is not None:
        print("speedup (pure / compiled):")
        for metric in ("mutate", "canon", "explore"):
            ratio = results[("pure", metric)] / results[("speedups", metric)]
            print(f"  {metric:10s} {ratio:6.2f}x")


if __name__ == "__main__":
    main()
