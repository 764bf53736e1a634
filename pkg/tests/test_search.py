import json

import pytest

from rturan.certs import (FAIL, PASS, Certificate, load_certificate,
                          save_certificate)
from rturan.coloring import is_proper, one_factorization
from rturan.detect import find_k_unique
from rturan.graphs import (graph_from_edges, make_complete, make_cycle,
                           make_double_star, make_path)
from rturan.search import (RAINBOW, brute_extremal, classical_turan,
                           contains_copy, exists_avoiding_coloring,
                           graphs_up_to_iso, recheck_certificate,
                           verify_k2s4_construction, verify_k6_rainbow_free,
                           verify_k6_universal_3unique)


def test_exists_avoiding_basic():
    p2 = make_path(2)
    # a proper coloring of a 2-path is forced rainbow
    assert exists_avoiding_coloring(p2, p2, RAINBOW).coloring is None
    c4 = make_cycle(4)
    res = exists_avoiding_coloring(c4, c4, RAINBOW)
    assert res.coloring.colors == (0, 1, 1, 0)
    assert res.exhaustive
    with pytest.raises(ValueError):
        exists_avoiding_coloring(c4, c4, -1)
    with pytest.raises(ValueError):
        exists_avoiding_coloring(c4, c4, 2, mode="sometimes")


def test_exists_avoiding_k6_ds22():
    k6 = make_complete(6)
    ds22 = make_double_star(2, 2)
    res5 = exists_avoiding_coloring(k6, ds22, 5)
    assert res5.coloring is not None
    assert is_proper(k6, res5.coloring)
    assert find_k_unique(k6, res5.coloring, ds22, 5) is None
    # at-least-3-unique copies cannot be dodged at all
    res3 = exists_avoiding_coloring(k6, ds22, 3)
    assert res3.coloring is None and res3.exhaustive
    assert res3.nodes_visited == 29


def test_graphs_up_to_iso_counts():
    assert sum(1 for _ in graphs_up_to_iso(4, 3)) == 3
    assert sum(1 for _ in graphs_up_to_iso(5, 4)) == 6
    # 11 graphs on four vertices in total
    assert sum(sum(1 for _ in graphs_up_to_iso(4, m)) for m in range(7)) == 11


def test_classical_turan():
    assert classical_turan(4, make_path(2)) == 2  # max matching
    assert classical_turan(4, make_path(3)) == 3
    assert classical_turan(5, make_cycle(3)) == 6  # bipartite Turan
    assert contains_copy(make_complete(4), make_cycle(3))
    assert not contains_copy(make_path(4), make_cycle(3))


def test_brute_extremal_value_and_certificates(tmp_path):
    out = brute_extremal(4, make_path(2), RAINBOW)
    assert out["value"] == 2
    lower, upper = out["lower_witness"], out["upper_exhaustion"]
    assert lower.verdict == PASS and upper.verdict == PASS
    ok, detail = recheck_certificate(lower)
    assert ok, detail
    ok, _ = recheck_certificate(upper)
    assert ok
    # round-trip through disk
    p = save_certificate(lower, tmp_path)
    ok, _ = recheck_certificate(load_certificate(p))
    assert ok


def test_recheck_rejects_tampering():
    out = brute_extremal(4, make_path(3), 2)  # avoider lives on K4
    cert = out["lower_witness"]
    obj = cert.to_json()
    obj["payload"]["coloring"]["colors"] = [0] * len(
        obj["payload"]["coloring"]["colors"])
    ok, detail = recheck_certificate(Certificate.from_json(obj))
    assert not ok and "not proper" in detail


def test_brute_extremal_budget_bracket():
    out = brute_extremal(4, make_path(3), 3, budget=2)
    assert out["value"] is None
    assert 0 <= out["lower"] < out["upper"] <= 6


def test_brute_extremal_chain_p3():
    f = make_path(3)
    vals = [brute_extremal(4, f, k)["value"] for k in range(4)]
    assert vals == [3, 3, 6, 6]
    assert vals[0] == classical_turan(4, f)
    assert brute_extremal(4, f, RAINBOW)["value"] == vals[-1]


def test_k6_rainbow_free_certificate():
    cert = verify_k6_rainbow_free()
    assert cert.verdict == PASS
    assert cert.payload["embeddings_checked"] == 720
    ok, detail = recheck_certificate(cert)
    assert ok, detail


def test_k6_universal_small_run_deterministic():
    a = verify_k6_universal_3unique(color_cap=6, sample_count=20_000)
    b = verify_k6_universal_3unique(color_cap=6, sample_count=20_000)
    assert a.verdict == PASS
    assert a.to_json() == b.to_json()
    assert not a.exhaustive  # full claim is out of desk reach by design
    regimes = a.payload
    assert regimes["exhaustive_regime"]["nodes_visited"] > 0
    assert regimes["sampled_regime"]["samples_checked"] + \
        regimes["sampled_regime"]["rainbow_skipped"] == 20_000


def test_k6_universal_threads_match_serial():
    a = verify_k6_universal_3unique(color_cap=6, sample_count=100_000, threads=1)
    b = verify_k6_universal_3unique(color_cap=6, sample_count=100_000, threads=2)
    assert a.to_json() == b.to_json()


def test_k6_universal_planted_fail_is_rejected():
    good = verify_k6_universal_3unique(color_cap=6, sample_count=1_000)
    obj = good.to_json()
    obj["verdict"] = FAIL
    # the 1-factorization does contain exactly-3-unique copies, so it is not
    # a valid counterexample and the recheck must say so
    obj["payload"] = {"counterexample_coloring": list(one_factorization(3).colors),
                      "regime": "planted"}
    ok, detail = recheck_certificate(Certificate.from_json(obj))
    assert not ok and "does contain" in detail


def test_k2s4_construction():
    for s in (0, 1):
        cert = verify_k2s4_construction(s)
        assert cert.verdict == PASS
        assert cert.params["host"] == f"K{2 * s + 4}"
        ok, detail = recheck_certificate(cert)
        assert ok, detail
    with pytest.raises(ValueError):
        verify_k2s4_construction(99)


def test_certificate_serialization(tmp_path):
    cert = verify_k2s4_construction(0)
    path = save_certificate(cert, tmp_path)
    text = path.read_text()
    again = load_certificate(path)
    assert again.to_json() == cert.to_json()
    assert json.loads(text)["schema"] == 1
    bad = json.loads(text)
    bad["schema"] = 99
    with pytest.raises(ValueError):
        Certificate.from_json(bad)


def test_recheck_unknown_kind():
    ok, detail = recheck_certificate(Certificate("mystery", PASS, {}))
    assert not ok and "unknown" in detail


def test_empty_host():
    g = graph_from_edges(3, [])
    res = exists_avoiding_coloring(g, make_path(1), 1)
    assert res.coloring is not None and res.coloring.colors == ()
