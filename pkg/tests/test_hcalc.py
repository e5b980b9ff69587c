"""Frozen expected values for the integer h-vector calculus."""

import random

import pytest

from lefschetz_forge import hcalc as hc


def test_trim():
    assert hc.trim((1, 2, 0, 0)) == (1, 2)
    assert hc.trim(()) == ()
    assert hc.trim((0, 0)) == ()


def test_integrate_difference_roundtrip():
    assert hc.integrate((1, 3, 5, 5)) == (1, 4, 9, 14)
    assert hc.difference((1, 4, 9, 14)) == (1, 3, 5, 5)
    rng = random.Random(7)
    for _ in range(25):
        dh = tuple(rng.randrange(0, 9) for _ in range(rng.randrange(1, 12)))
        dh = hc.trim(dh)
        assert hc.difference(hc.integrate(dh)) == dh


def test_bdl_formula_frozen():
    assert hc.bdl_formula((1, 2, 1), (1, 2, 3, 4), 1) == (1, 3, 5, 5)
    assert hc.bdl_formula((), (1, 2, 3), 0) == (1, 2, 3)
    assert hc.bdl_formula(
        (1, 3, 6, 10, 6, 3, 1),
        (1, 3, 6, 9, 12, 15, 18, 21, 24, 27, 19, 10),
        3,
    ) == (1, 3, 6, 10, 15, 21, 28, 27, 27, 28, 19, 10)


def test_bdl_formula_degree_additivity():
    rng = random.Random(11)
    for _ in range(30):
        dh1 = hc.trim(tuple(rng.randrange(0, 7) for _ in range(rng.randrange(1, 8))))
        dh2 = hc.trim(tuple(rng.randrange(0, 7) for _ in range(rng.randrange(1, 8))))
        d = rng.randrange(0, 4)
        assert sum(hc.bdl_formula(dh1, dh2, d)) == sum(dh1) + sum(dh2)


def test_section_hvec_frozen():
    assert hc.section_hvec(tuple(range(1, 11)), 3) == (
        1, 3, 6, 9, 12, 15, 18, 21, 24, 27, 19, 10)
    assert hc.section_hvec((1, 2, 3, 4), 1) == (1, 2, 3, 4)
    # degree-2 section of the 56-line curve: starts 1,3,5,7 and ends 10,6,2
    sec = hc.section_hvec((1, 2, 3, 4, 5, 6, 7, 8, 8, 6, 4, 2), 2)
    assert sec[:4] == (1, 3, 5, 7)
    assert sec[-3:] == (10, 6, 2)
    assert sum(sec) == 2 * 56


def test_linkage_hvec_frozen():
    assert hc.linkage_hvec((1, 2, 3, 3, 2, 1), (1, 2, 3)) == (1, 2, 3)
    assert hc.linkage_hvec(hc.ci_hvec(6, 6), hc.ci_hvec(3, 3)) == (
        1, 2, 3, 4, 5, 6, 4, 2)
    assert hc.linkage_hvec((1, 2, 1), (1, 2, 1)) == ()


def test_linkage_hvec_involution():
    rng = random.Random(3)
    for _ in range(20):
        a = rng.randrange(2, 8)
        b = rng.randrange(2, 8)
        e = hc.ci_hvec(a + b, a + b + rng.randrange(0, 3))
        d = hc.ci_hvec(a, b)
        c = hc.linkage_hvec(e, d)
        assert hc.linkage_hvec(e, c) == d


def test_linkage_hvec_rejects_invalid():
    with pytest.raises(ValueError):
        hc.linkage_hvec((1, 2, 1), (1, 2, 3))


def test_ci_hvec():
    assert hc.ci_hvec(4, 4) == (1, 2, 3, 4, 3, 2, 1)
    assert hc.ci_hvec(1, 1) == (1,)
    assert hc.ci_hvec(3, 4) == (1, 2, 3, 3, 2, 1)
    assert hc.ci_hvec(5, 1) == (1, 1, 1, 1, 1)
    assert hc.ci_hvec(5, 2) == (1, 2, 2, 2, 2, 1)
    assert hc.ci_hvec(8, 9) == (1, 2, 3, 4, 5, 6, 7, 8, 8, 7, 6, 5, 4, 3, 2, 1)
    for a in range(1, 7):
        for b in range(1, 7):
            h = hc.ci_hvec(a, b)
            assert sum(h) == a * b
            assert hc.gorenstein_symmetric(h)


def test_gorenstein_symmetric():
    assert hc.gorenstein_symmetric((1, 3, 6, 10, 6, 3, 1))
    assert hc.gorenstein_symmetric((1,))
    assert not hc.gorenstein_symmetric((1, 3, 5, 5))


def test_staircase_counts():
    # complement of the fourth power of the maximal ideal: a triangle
    m4 = [(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)]
    assert hc.staircase_counts(m4) == (1, 2, 3, 4)
    assert len(hc.staircase_cells(m4)) == 10
    assert hc.staircase_counts([(1, 1), (0, 2), (2, 0)]) == (1, 2)
    with pytest.raises(ValueError):
        hc.staircase_counts([(1, 1)])


def test_staircase_counts_family_shapes():
    assert hc.staircase_counts(hc._case1_staircase_gens(4)) == (
        1, 2, 3, 4, 5, 6, 5, 3)
    assert hc.staircase_counts(hc._case1_staircase_gens(5)) == (
        1, 2, 3, 4, 5, 6, 7, 6, 5, 3)
    assert hc.staircase_counts(hc._case2_staircase_gens(3)) == (
        1, 2, 3, 4, 5, 6, 3)
    assert hc.staircase_counts(hc._case2_staircase_gens(4)) == (
        1, 2, 3, 4, 5, 6, 7, 6, 3)


def test_predicted_ex23():
    p = hc.predicted_table("ex2.3")
    assert p.h_vector == (1, 3, 5, 5)
    assert p.level and p.socle_type == 5 and p.socle_degree == 3
    assert p.failing_maps == ((2, 3),)
    assert p.certificate_degrees == (3,)
    assert p.certified
    assert p.extras["expected_ranks"][(2, 3)] == 4
    assert p.extras["point_count"] == 14


def test_predicted_type4_family():
    p = hc.predicted_table("thm3.1", 7)
    assert p.h_vector == (1, 3, 5, 7, 9, 9, 7, 4)
    assert p.socle_type == 4 and p.socle_degree == 7
    assert p.failing_maps == ((4, 5),)
    assert p.certificate_degrees == (5,)
    assert all(p.asserted)
    assert p.extras["point_count"] == 45
    assert p.extras["middle_value"] == 9

    assert hc.predicted_table("thm3.1", 8).h_vector == (1, 3, 5, 7, 9, 10, 10, 8, 4)
    assert hc.predicted_table("thm3.1", 9).h_vector == (
        1, 3, 5, 7, 9, 11, 11, 9, 7, 4)

    # smallest parameters: tail entries are computed, not asserted
    p5 = hc.predicted_table("thm3.1", 5)
    assert p5.h_vector == (1, 3, 5, 7, 7, 4)
    assert p5.asserted == (True, True, True, True, True, False)
    p6 = hc.predicted_table("thm3.1", 6)
    assert p6.h_vector == (1, 3, 5, 7, 8, 8, 4)
    assert p6.asserted == (True, True, True, True, True, True, False)
    assert p6.failing_maps == ((4, 5),)
    assert p6.certificate_degrees == (4, 5)

    with pytest.raises(ValueError):
        hc.predicted_table("thm3.1", 4)


def test_predicted_type3_odd_family():
    p = hc.predicted_table("thm3.2", 7)
    assert p.h_vector == (1, 3, 5, 7, 9, 9, 6, 3)
    assert p.socle_type == 3 and p.socle_degree == 7
    assert p.extras["dh_planar"] == (1, 2, 3, 4, 5, 6, 4, 2)
    assert p.extras["intersection_dim"] == 3
    assert p.extras["intersection_degree"] == 6
    assert p.failing_maps == ((4, 5),)

    p9 = hc.predicted_table("thm3.2", 9)
    assert p9.h_vector == (1, 3, 5, 7, 9, 11, 11, 9, 6, 3)
    assert p9.extras["dh_planar"] == (1, 2, 3, 4, 5, 6, 7, 6, 4, 2)

    with pytest.raises(ValueError):
        hc.predicted_table("thm3.2", 8)
    with pytest.raises(ValueError):
        hc.predicted_table("thm3.2", 5)


def test_predicted_type3_even_family():
    p = hc.predicted_table("thm3.3", 12)
    assert p.extras["dh_curve"] == (1, 2, 3, 4, 5, 6, 7, 8, 8, 6, 4, 2)
    assert p.extras["curve_lines"] == 56
    assert p.extras["dh_x1"] == (1, 3, 6, 10, 15, 21, 15, 10, 6, 3, 1)
    assert p.extras["x1_count"] == 91
    assert p.extras["dh_x2"] == (1, 3, 5, 7, 9, 11, 13, 15, 16, 14, 10, 6, 2)
    assert p.h_vector == (1, 3, 6, 10, 15, 21, 28, 36, 31, 24, 16, 9, 3)
    assert p.socle_type == 3 and p.socle_degree == 12
    assert p.failing_maps == ((7, 8),)
    assert not p.certified
    assert p.extras["conditions_expected"] == 8
    assert p.extras["conditions_required"] == 9

    # the three residue classes of r produce type-2 curves of socle degree 2r-1
    for d in (12, 14, 16):
        pd = hc.predicted_table("thm3.3", d)
        curve = pd.extras["dh_curve"]
        assert curve[-1] == 2 and len(curve) - 1 == d - 1
        assert pd.h_vector[-1] == 3

    with pytest.raises(ValueError):
        hc.predicted_table("thm3.3", 11)
    with pytest.raises(ValueError):
        hc.predicted_table("thm3.3", 10)


def test_predicted_ex42():
    p = hc.predicted_table("ex4.2")
    assert p.extras["h_before_truncation"] == (
        1, 3, 6, 10, 15, 21, 28, 27, 27, 28, 19, 10)
    assert p.h_vector == (1, 3, 6, 10, 15, 21, 28, 27, 27, 28)
    assert p.socle_type == 28 and p.socle_degree == 9
    assert p.extras["pre_truncation_socle"] == {9: 1, 11: 10}
    assert p.extras["pre_truncation_count"] == 195
    assert p.extras["point_count"] == 166
    assert p.extras["x1_count"] == 30 and p.extras["x2_count"] == 165
    assert not p.extras["unimodal"]


def test_predicted_ex51():
    p = hc.predicted_table("ex5.1")
    assert p.h_vector == (1, 3, 5, 7, 8, 7, 6)
    assert p.wlp_expected and p.socle_type == 6
    assert p.extras["dh_x2"] == (1, 2, 3, 4, 5, 5, 5)
    assert p.extras["slp_failure"] == {"e": 2, "t": 3, "max_rank": 6}


def test_predicted_plateau_family():
    p = hc.predicted_table("prop5.3", 3)
    assert p.h_vector == (1, 3, 5, 7, 7, 7)
    assert p.failing_maps == ((3, 4), (4, 5))
    assert p.certificate_degrees == (4, 5)
    assert p.socle_type == 7
    assert hc.predicted_table("prop5.3", 2).h_vector == (1, 3, 5, 5)
    p4 = hc.predicted_table("prop5.3", 4)
    assert p4.h_vector == (1, 3, 5, 7, 9, 9, 9, 9)
    assert len(p4.failing_maps) == 3
    with pytest.raises(ValueError):
        hc.predicted_table("prop5.3", 1)


def test_predicted_ex54():
    p = hc.predicted_table("ex5.4")
    assert p.h_vector == (1, 3, 6, 9, 11, 12, 6, 2)
    assert p.wlp_expected and p.socle_type == 2 and p.socle_degree == 7
    assert p.extras["dh_x2"] == (1, 3, 6, 8, 8, 6, 3, 1)
    assert p.extras["expected_ranks"][(4, 5)] == 11
    assert p.failing_maps == ()


def test_predicted_ex55():
    p = hc.predicted_table("ex5.5")
    assert p.extras["h_before_truncation"] == (1, 3, 6, 9, 10, 9, 7, 5, 3, 1)
    assert p.h_vector == (1, 3, 6, 9, 10)
    assert p.socle_type == 10 and p.socle_degree == 4
    assert p.failing_maps == ((3, 4),)
    assert p.extras["ideal_dim_deg3"] == 1
    assert p.extras["product_dim_deg4"] == 2
    assert p.extras["intersection_dim_deg4_min"] == 3
    assert p.extras["pre_truncation_count"] == 54


def test_predicted_table_registry():
    assert len(hc.scenario_ids()) == 9
    for sid in hc.scenario_ids():
        p = hc.predicted_table(sid, hc.DEFAULT_D.get(sid))
        assert p.scenario == sid
        assert len(p.asserted) == len(p.h_vector)
        assert p.h_vector[-1] == p.socle_type if p.level else True
    with pytest.raises(ValueError):
        hc.predicted_table("nope")
    with pytest.raises(ValueError):
        hc.predicted_table("ex2.3", 5)
