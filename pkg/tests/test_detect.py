import pytest

from rturan._kernels import pure
from rturan.coloring import conflict_lists, one_factorization, proper_coloring
from rturan.detect import (find_k_unique, is_rainbow_free, report_for,
                           unique_count)
from rturan.graphs import (enumerate_embeddings, make_complete, make_cycle,
                           make_double_star, make_path)

from oracles import naive_max_unique


def test_unique_count_examples():
    p3 = make_path(3)
    rainbow = proper_coloring(p3, (0, 1, 2))
    ident = next(enumerate_embeddings(p3, p3))
    assert unique_count(p3, rainbow, ident) == 3
    c4 = make_cycle(4)
    paired = proper_coloring(c4, (0, 1, 1, 0))
    ident4 = next(e for e in enumerate_embeddings(c4, c4)
                  if e.vertex_map == (0, 1, 2, 3))
    assert unique_count(c4, paired, ident4) == 0
    rep = report_for(c4, paired, ident4)
    assert rep.unique_count == 0 and sorted(rep.color_multiset) == [0, 0, 1, 1]


def test_find_k_unique_modes():
    c4 = make_cycle(4)
    c = proper_coloring(c4, (0, 1, 1, 0))
    p2 = make_path(2)
    # properness forces both edges of any 2-path to differ
    assert find_k_unique(c4, c, p2, 2, "at_least") is not None
    assert find_k_unique(c4, c, p2, 1, "exactly") is None
    assert find_k_unique(c4, c, p2, 3) is None  # k above the edge count
    with pytest.raises(ValueError):
        find_k_unique(c4, c, p2, 1, "approximately")


def test_found_report_is_self_consistent():
    host = make_complete(5)
    f = make_double_star(1, 2)
    c = proper_coloring(host, tuple(pure.random_proper_coloring(
        host.num_edges, conflict_lists(host), pure.XorShift64Star(99))))
    for k in range(f.num_edges + 1):
        rep = find_k_unique(host, c, f, k)
        if rep is not None:
            assert rep.unique_count >= k
            assert unique_count(host, c, rep.embedding) == rep.unique_count


def test_against_naive_max_over_embeddings():
    host = make_complete(5)
    patterns = [make_path(2), make_path(3), make_double_star(1, 1),
                make_double_star(1, 2)]
    rng = pure.XorShift64Star(7)
    conf = conflict_lists(host)
    for _ in range(5):
        colors = pure.random_proper_coloring(host.num_edges, conf, rng)
        c = proper_coloring(host, tuple(colors))
        for f in patterns:
            best = naive_max_unique(f, host, colors)
            for k in range(f.num_edges + 1):
                hit = find_k_unique(host, c, f, k)
                assert (hit is not None) == (best is not None and best >= k)


def test_monotone_in_k():
    host = make_complete(6)
    c = one_factorization(3)
    f = make_double_star(2, 2)
    hits = [find_k_unique(host, c, f, k) is not None
            for k in range(f.num_edges + 1)]
    # once absent, absent for all larger k
    assert hits == sorted(hits, reverse=True)


def test_rainbow_free_k6():
    c = one_factorization(3)
    assert is_rainbow_free(c.graph, c, make_double_star(2, 2))
    assert not is_rainbow_free(c.graph, c, make_path(2))


def test_no_copy_at_all():
    host = make_path(2)
    c = proper_coloring(host, (0, 1))
    assert find_k_unique(host, c, make_cycle(3), 0) is None
    assert find_k_unique(host, c, make_complete(5), 0) is None
