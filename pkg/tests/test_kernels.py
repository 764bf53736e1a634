import os
import subprocess
import sys

import pytest

from rturan import _kernels
from rturan._kernels import pure
from rturan.coloring import conflict_lists, is_proper
from rturan.graphs import (enumerate_embeddings, make_complete, make_cycle,
                           make_double_star, make_path)

fast = pytest.importorskip("rturan._kernels._fast")


def instance(host, pattern):
    emb = [list(e.edge_map) for e in enumerate_embeddings(pattern, host)]
    return host.num_edges, conflict_lists(host), emb


CASES = [
    (make_complete(4), make_path(3), 2, False, 6),
    (make_complete(4), make_path(3), 3, True, 4),
    (make_complete(6), make_double_star(2, 2), 3, True, 6),
    (make_complete(6), make_double_star(2, 2), 5, False, 15),
    (make_cycle(5), make_path(2), 2, False, 5),
]


@pytest.mark.parametrize("host,pattern,k,exactly,cap", CASES)
def test_find_avoiding_backends_agree(host, pattern, k, exactly, cap):
    m, conf, emb = instance(host, pattern)
    got_fast = fast.find_avoiding_coloring(m, conf, emb, k, exactly, cap, None)
    got_pure = pure.find_avoiding_coloring(m, conf, emb, k, exactly, cap, None)
    assert got_fast == got_pure


def test_find_avoiding_budget_behaviour_matches():
    m, conf, emb = instance(make_complete(6), make_double_star(2, 2))
    for budget in (1, 10, 100):
        got_fast = fast.find_avoiding_coloring(m, conf, emb, 5, False, 15, budget)
        got_pure = pure.find_avoiding_coloring(m, conf, emb, 5, False, 15, budget)
        assert got_fast == got_pure


def test_unique_counts_backends_agree():
    m, conf, emb = instance(make_complete(6), make_double_star(2, 2))
    rng = pure.XorShift64Star(3)
    for _ in range(10):
        colors = pure.random_proper_coloring(m, conf, rng)
        assert fast.unique_counts(colors, emb) == pure.unique_counts(colors, emb)


def test_sampler_backends_bit_identical():
    m, conf, emb = instance(make_complete(6), make_double_star(2, 2))
    for seed in (1, 42, 20240901):
        a = fast.sample_and_check(m, conf, emb, 3, True, 5_000, seed)
        b = pure.sample_and_check(m, conf, emb, 3, True, 5_000, seed)
        assert a == b
        assert a["counterexample"] is None


def test_sampler_reports_counterexamples():
    # k above the edge count is unsatisfiable, so the very first
    # non-rainbow sample comes back as a counterexample
    m, conf, emb = instance(make_complete(4), make_path(2))
    res = pure.sample_and_check(m, conf, emb, 3, False, 100, 5)
    assert res["counterexample"] is not None
    assert is_proper(make_complete(4), res["counterexample"])
    res_fast = fast.sample_and_check(m, conf, emb, 3, False, 100, 5)
    assert res == res_fast


def test_rng_reference_stream():
    rng = pure.XorShift64Star(1)
    stream = [rng.next_u64() for _ in range(4)]
    assert stream == [5180492295206395165, 12380297144915551517,
                      13389498078930870103, 5599127315341312413]


def test_rng_zero_seed_is_remapped():
    assert pure.XorShift64Star(0).state == 0x9E3779B97F4A7C15
    assert pure.XorShift64Star(0).next_u64() == pure.XorShift64Star(2 ** 64).next_u64()


def test_random_coloring_is_proper_and_reproducible():
    host = make_complete(5)
    m, conf = host.num_edges, conflict_lists(host)
    a = pure.random_proper_coloring(m, conf, pure.XorShift64Star(11))
    b = pure.random_proper_coloring(m, conf, pure.XorShift64Star(11))
    assert a == b
    assert is_proper(host, a)


def test_backend_selection_env_override():
    assert _kernels.BACKEND in ("cython", "python")
    env = dict(os.environ, RTURAN_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from rturan import _kernels; print(_kernels.BACKEND)"],
        capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"


def test_large_pattern_guard():
    # the compiled kernel has a fixed per-copy buffer; patterns beyond it
    # must be rejected rather than overrun
    emb = [list(range(65))]
    conf = [[] for _ in range(65)]
    with pytest.raises(ValueError):
        fast.find_avoiding_coloring(65, conf, emb, 1, False, 65, None)
