import itertools
from fractions import Fraction

import pytest

from rturan.bounds import (ERDOS_SOS, MCLENNAN, augment_binary,
                           augment_caterpillar, augment_double_star,
                           augment_kary, binary_coefficients,
                           caterpillar_bounds, caterpillar_coefficient_literal,
                           ds22_bounds, ds_1_odd_exact, ds_k_unique_bounds,
                           ds_rainbow_bounds, erdos_sos_coefficient,
                           kary_coefficients, tree_assumption, verify_reduction)
from rturan.certs import BUDGET_EXHAUSTED, FAIL, PASS
from rturan.coloring import EdgeColoring, is_proper
from rturan.detect import find_k_unique
from rturan.graphs import (are_isomorphic, diameter, make_double_star,
                           make_path, make_perfect_kary)


def test_erdos_sos_coefficient():
    assert erdos_sos_coefficient(7) == 3
    assert erdos_sos_coefficient(12) == Fraction(11, 2)
    assert erdos_sos_coefficient(1) == 0
    with pytest.raises(ValueError):
        erdos_sos_coefficient(0)


def test_tree_assumption_flags():
    assert tree_assumption(make_double_star(3, 5)) == MCLENNAN  # diameter 3
    assert tree_assumption(make_path(5)) == ERDOS_SOS  # diameter 5
    assert tree_assumption(make_perfect_kary(2, 2)) == MCLENNAN  # diameter 4


def test_ds_k_unique_bounds():
    out = ds_k_unique_bounds(2, 2, 1)
    assert out["k"] == 3
    assert out["lower"].coefficient == 1
    assert out["upper"].coefficient == Fraction(5, 2)
    assert out["upper"].assumptions == (MCLENNAN,)
    out = ds_k_unique_bounds(2, 3, 2)
    assert out["k"] == 6
    assert (out["lower"].coefficient, out["upper"].coefficient) == (2, Fraction(7, 2))
    out = ds_k_unique_bounds(1, 1, 0)
    assert out["k"] == 1
    assert (out["lower"].coefficient, out["upper"].coefficient) == (0, 1)
    with pytest.raises(ValueError):
        ds_k_unique_bounds(3, 2, 0)
    with pytest.raises(ValueError):
        ds_k_unique_bounds(2, 2, 3)


def test_ds_rainbow_and_ds22():
    lo, hi = ds_rainbow_bounds(2, 2)
    assert (lo.coefficient, hi.coefficient) == (Fraction(3, 2), 3)
    lo22, hi22 = ds22_bounds()
    assert (lo22.coefficient, hi22.coefficient) == (Fraction(5, 2), 3)
    assert lo22.coefficient > lo.coefficient  # the K6 blowup beats the generic bound
    # argument order swaps internally
    a = ds_rainbow_bounds(3, 1)
    b = ds_rainbow_bounds(1, 3)
    assert (a[0].coefficient, a[1].coefficient) == (b[0].coefficient, b[1].coefficient)


def test_ds_1_odd_exact():
    for s in range(4):
        rep = ds_1_odd_exact(s)
        assert rep.coefficient == Fraction(2 * s + 3, 2)
        assert rep.assumptions == (MCLENNAN,)
    with pytest.raises(ValueError):
        ds_1_odd_exact(-1)


def test_augment_double_star():
    aug = augment_double_star(2, 2, 2)
    assert are_isomorphic(aug.augmented, make_double_star(2, 4))
    assert aug.edge_count == 7
    aug.validate()
    ident = augment_double_star(2, 3, 0)
    assert ident.augmented == ident.original
    with pytest.raises(ValueError):
        augment_double_star(2, 1, 0)  # r > s
    with pytest.raises(ValueError):
        augment_double_star(1, 2, 2)  # l > r


def test_caterpillar_base_edge_count_grid():
    for c in itertools.product(range(3), repeat=3):
        aug = augment_caterpillar(c)
        c1, c2, c3 = c
        assert aug.edge_count == 3 * c1 + 2 * c2 + c3 + 5
        aug.validate()


def test_caterpillar_literal_vs_constructive():
    out = caterpillar_bounds([1, 1, 1])
    assert out["augmented_edges"] == 11
    assert out["constructive"].coefficient == 5
    assert out["literal"].coefficient == Fraction(15, 2)
    assert out["discrepancy"]
    lit = caterpillar_coefficient_literal([0, 0, 0])
    assert lit.coefficient == 3  # 3 + (l3 + 1) over 2 with l3 = 2
    with pytest.raises(ValueError):
        caterpillar_coefficient_literal([1, 2])


def test_caterpillar_level_four():
    aug = augment_caterpillar([1, 1, 1, 1])
    assert aug.edge_count == 43
    steps = dict(aug.construction_log)
    assert steps["level 4: 4 branches per parent, 7 pendants per branch"] == 32
    aug.validate()


def test_binary_coefficients():
    out = binary_coefficients(2)
    assert out["augmented_edges"] == 12
    assert out["literal"].coefficient == Fraction(3, 2)
    assert out["proof_form"].coefficient == 5
    assert out["constructive"].coefficient == Fraction(11, 2)
    assert out["discrepancy"]
    out3 = binary_coefficients(3)
    assert out3["augmented_edges"] == 142
    assert out3["proof_form"].coefficient == 13
    assert out3["constructive"].coefficient == Fraction(141, 2)
    assert out3["literal"].coefficient == Fraction(13, 2)
    with pytest.raises(ValueError):
        binary_coefficients(1)


def test_kary_coefficients():
    out = kary_coefficients(2, 2)
    # the k-ary literal formula reproduces the binary construction exactly
    assert out["literal"].coefficient == Fraction(11, 2)
    assert out["constructive"].coefficient == Fraction(11, 2)
    assert not out["discrepancy"]
    out32 = kary_coefficients(3, 2)
    assert out32["augmented_edges"] == 36
    assert out32["literal"].coefficient == out32["constructive"].coefficient == Fraction(35, 2)
    aug = augment_kary(2, 3)
    aug.validate()
    assert aug.edge_count == 142


def test_bound_report_json():
    rep = ds_1_odd_exact(1)
    obj = rep.to_json()
    assert obj["coefficient"] == {"num": 5, "den": 2}
    assert obj["assumptions"] == [MCLENNAN]


def test_verify_reduction_pass():
    aug = augment_double_star(1, 1, 1)
    cert = verify_reduction(aug.original, aug, k=3)
    assert cert.verdict == PASS and cert.exhaustive
    assert cert.payload["embeddings_considered"] > 0


def test_verify_reduction_fail_with_counterexample():
    ds22 = make_double_star(2, 2)
    cert = verify_reduction(ds22, ds22, k=5)  # no augmentation: rainbow avoidable
    assert cert.verdict == FAIL
    colors = cert.payload["counterexample_coloring"]
    assert is_proper(ds22, colors)
    c = EdgeColoring(ds22, tuple(colors))
    assert find_k_unique(ds22, c, ds22, 5) is None


def test_verify_reduction_no_copy_and_budget():
    big = make_double_star(3, 3)
    small_host = make_double_star(1, 1)
    cert = verify_reduction(big, small_host, k=1)
    assert cert.verdict == FAIL and "no copy" in cert.payload["reason"]
    aug = augment_double_star(2, 2, 1)
    cert = verify_reduction(aug.original, aug, k=3, budget=2)
    assert cert.verdict == BUDGET_EXHAUSTED and not cert.exhaustive
