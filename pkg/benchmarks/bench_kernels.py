#!/usr/bin/env python3
"""Compare the compiled search kernels against the pure-Python fallback.

Run after an in-place build:  python3 benchmarks/bench_kernels.py
"""

import time

from rturan import _kernels
from rturan._kernels import pure
from rturan.coloring import conflict_lists
from rturan.graphs import enumerate_embeddings, make_complete, make_double_star


def setup_k6():
    host = make_complete(6)
    pattern = make_double_star(2, 2)
    emb = [list(e.edge_map) for e in enumerate_embeddings(pattern, host)]
    return host.num_edges, conflict_lists(host), emb


def bench(label, fn, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    print(f"  {label:<12} {best * 1000:10.2f} ms")
    return result


def main():
    if _kernels.BACKEND != "cython":
        print("warning: compiled kernel not available; comparing pure vs pure")
    m, conflicts, emb = setup_k6()

    print("exhaustive K6 search, exactly-3-unique DS22, color cap 6:")
    r1 = bench("compiled", lambda: _kernels.find_avoiding_coloring(
        m, conflicts, emb, 3, True, 6, None))
    r2 = bench("pure", lambda: pure.find_avoiding_coloring(
        m, conflicts, emb, 3, True, 6, None))
    assert r1 == (None if r2[0] is None else r2[0], r2[1], r2[2])

    n_samples = 20_000
    print(f"random proper colorings of K6, {n_samples} samples, check 3-unique:")
    s1 = bench("compiled", lambda: _kernels.sample_and_check(
        m, conflicts, emb, 3, True, n_samples, 12345))
    s2 = bench("pure", lambda: pure.sample_and_check(
        m, conflicts, emb, 3, True, n_samples, 12345))
    assert s1 == s2, "backends disagree"

    print("unique counts over all 720 DS22 embeddings of a K6 coloring:")
    colors = pure.random_proper_coloring(m, conflicts, pure.XorShift64Star(7))
    u1 = bench("compiled", lambda: _kernels.unique_counts(colors, emb))
    u2 = bench("pure", lambda: pure.unique_counts(colors, emb))
    assert u1 == u2
    print("backends agree on all results")


if __name__ == "__main__":
    main()
