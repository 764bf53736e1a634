import pytest

from rturan.coloring import (ColoringError, color_class_profile, is_proper,
                             proper_coloring)
from rturan.graphs import (GraphError, graph_from_edges, make_caterpillar,
                           make_cycle, make_double_star, make_path)
from rturan.spectrum import (KSpectrum, compute_spectrum, ds_spectrum_closed_form,
                             find_qualifying_coloring, full_spectrum_criterion,
                             round_up_k, self_unique_count, witness_family)


def full_values(m):
    return tuple(range(m - 1)) + (m,)


def test_small_path_spectra():
    assert compute_spectrum(make_path(1)).values == (1,)
    assert compute_spectrum(make_path(2)).values == (2,)
    assert compute_spectrum(make_path(3)).values == (1, 3)
    assert compute_spectrum(make_path(4)).values == (0, 2, 4)
    assert compute_spectrum(make_path(5)).values == full_values(5)


def test_small_cycle_spectra():
    assert compute_spectrum(make_cycle(3)).values == (3,)
    assert compute_spectrum(make_cycle(4)).values == (0, 2, 4)
    assert compute_spectrum(make_cycle(5)).values == (1, 3, 5)
    assert compute_spectrum(make_cycle(6)).values == full_values(6)


def test_near_rainbow_value_never_occurs():
    for g in (make_path(2), make_path(5), make_cycle(4), make_cycle(6),
              make_double_star(1, 2), make_double_star(2, 2),
              make_caterpillar([1, 0, 1])):
        spec = compute_spectrum(g)
        assert g.num_edges - 1 not in spec.values
        assert g.num_edges == spec.values[-1]


def test_witnesses_are_valid():
    for spec in (compute_spectrum(make_cycle(5)),
                 compute_spectrum(make_double_star(2, 3)),
                 ds_spectrum_closed_form(2, 3)):
        for v, w in spec.witnesses.items():
            assert is_proper(spec.graph, w)
            assert self_unique_count(w) == v


def test_ds_closed_form_matches_enumeration():
    for r, s in ((0, 3), (1, 1), (1, 2), (2, 2), (2, 3)):
        cf = ds_spectrum_closed_form(r, s)
        assert cf.values == compute_spectrum(cf.graph).values
        j = s - r + 1
        assert cf.values == tuple(j + 2 * l for l in range(r + 1))
    # argument order does not matter
    assert ds_spectrum_closed_form(3, 1).values == ds_spectrum_closed_form(1, 3).values


def test_full_spectrum_criterion():
    qualifying = proper_coloring(make_cycle(6), (0, 1, 1, 0, 1, 0))
    assert full_spectrum_criterion(color_class_profile(qualifying))
    rainbow = proper_coloring(make_path(3), (0, 1, 2))
    assert not full_spectrum_criterion(color_class_profile(rainbow))


def test_find_qualifying_coloring():
    c6 = find_qualifying_coloring(make_cycle(6))
    assert c6 is not None
    assert full_spectrum_criterion(color_class_profile(c6))
    # 4 edges cannot host classes of sizes >= 3 and >= 2
    assert find_qualifying_coloring(make_path(4)) is None


def test_witness_family_cycle():
    f = make_cycle(6)
    fam = witness_family(f, find_qualifying_coloring(f))
    assert sorted(fam) == [0, 1, 2, 3, 4, 6]
    for v, w in fam.items():
        assert is_proper(f, w) and self_unique_count(w) == v


def test_witness_family_requires_qualifying_input():
    c4 = make_cycle(4)
    with pytest.raises(ColoringError):
        witness_family(c4, proper_coloring(c4, (0, 1, 1, 0)))


def test_round_up():
    ds22 = make_double_star(2, 2)  # spectrum {1, 3, 5}
    assert round_up_k(ds22, 0) == 1
    assert round_up_k(ds22, 2) == 3
    assert round_up_k(ds22, 3) == 3
    assert round_up_k(ds22, 4) == 5
    assert round_up_k(ds22, 5) == 5
    assert round_up_k(make_cycle(4), 1) == 2
    with pytest.raises(ValueError):
        round_up_k(ds22, 6)
    spec = compute_spectrum(ds22)
    assert round_up_k(ds22, 2, spectrum=spec) == 3


def test_edge_cap_and_budget():
    with pytest.raises(GraphError):
        compute_spectrum(make_path(13))
    partial = compute_spectrum(make_cycle(6), budget=10)
    assert not partial.exhaustive and partial.nodes_visited > 0


def test_spectrum_json():
    spec = compute_spectrum(make_path(3))
    obj = spec.to_json()
    assert obj["values"] == [1, 3]
    assert obj["exhaustive"] is True
    assert set(obj["witnesses"]) == {"1", "3"}


def test_spectrum_of_disconnected_pattern():
    g = graph_from_edges(4, [(0, 1), (2, 3)])
    # two independent edges: same color gives 0 unique, distinct gives 2
    assert compute_spectrum(g).values == (0, 2)
