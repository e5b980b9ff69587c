import random

import pytest

from lefschetz_forge import gradedideal as gi
from lefschetz_forge.multipoly import HomForm, multiply, product

P = 32003


def linear(coeffs):
    return HomForm.linear(coeffs, P)


def plane_grid_points(avals, bvals):
    return [(1, a, b) for a in avals for b in bvals]


def grid_ci_forms_p2(avals, bvals):
    """The two products of lines cutting out a grid of plane points."""
    f = product([linear([-a, 1, 0]) for a in avals])
    g = product([linear([-b, 0, 1]) for b in bvals])
    return f, g


def grid_lines_p3(avals, bvals):
    """Lines x2 = a*x0, x3 = b*x1 — the pairwise intersections are empty."""
    return [((1, 0, a, 0), (0, 1, 0, b)) for a in avals for b in bvals]


def grid_ci_forms_p3(avals, bvals):
    f = product([linear([-a, 0, 1, 0][:4]) for a in avals])
    g = product([HomForm.linear([0, -b, 0, 1], P) for b in bvals])
    return f, g


def test_single_point_hilbert_function():
    ideal = gi.from_points([(1, 2, 3)], 3, P)
    assert ideal.hf_values(4) == (1, 1, 1, 1, 1)
    assert ideal.h_vector(4) == (1,)
    assert ideal.dim(2) == 6 - 1


def test_two_and_four_points():
    two = gi.from_points([(1, 0, 0), (1, 1, 1)], 3, P)
    assert two.h_vector(4) == (1, 1)
    grid = gi.from_points(plane_grid_points((0, 1), (0, 1)), 3, P)
    assert grid.h_vector(5) == (1, 2, 1)


def test_h_vector_cutoff_guard():
    pts = [(1, i, i * i) for i in range(9)]
    ideal = gi.from_points(pts, 3, P)
    with pytest.raises(ValueError, match="cutoff too small"):
        ideal.h_vector(2)
    assert sum(ideal.h_vector(8)) == 9


def test_random_points_h_vector_sums_to_count():
    rng = random.Random(3)
    for npts in (5, 11):
        pts = [tuple(rng.randrange(P) for _ in range(4)) for _ in range(npts)]
        ideal = gi.from_points(pts, 4, P)
        h = ideal.h_vector(8)
        assert sum(h) == npts
        assert h[0] == 1


def test_empty_point_set_gives_whole_ring():
    ideal = gi.from_points([], 3, P)
    assert ideal.hilbert_function(3) == 0


def test_point_ideal_matches_grid_generators():
    # the 2x2 grid of plane points is cut out by two conic products of lines
    pts = plane_grid_points((0, 1), (0, 1))
    by_points = gi.from_points(pts, 3, P)
    f, g = grid_ci_forms_p2((0, 1), (0, 1))
    by_gens = gi.from_generators([f, g], 3, P)
    assert gi.pieces_equal(by_points, by_gens, range(6))


def test_from_generators_maximal_ideal_powers():
    x = linear([1, 0, 0])
    y = linear([0, 1, 0])
    z = linear([0, 0, 1])
    ideal = gi.from_generators([x, y, z], 3, P)
    assert ideal.hf_values(3) == (1, 0, 0, 0)
    # the quotient is Artinian, so the plain first difference goes negative
    assert ideal.h_vector(3) == (1, -1)


def test_principal_matches_from_generators():
    rng = random.Random(5)
    f = HomForm.random(4, 2, rng, P)
    a = gi.principal(f)
    b = gi.from_generators([f], 4, P)
    assert gi.pieces_equal(a, b, range(6))
    assert a.dim(5) == a.ring_dim(3)  # multiplication by f is injective


def test_single_line_and_ci_curve():
    line = gi.from_lines([((1, 0, 0, 0), (0, 1, 0, 0))], 4, P)
    assert line.hf_values(4) == (1, 2, 3, 4, 5)
    assert line.curve_h_vector(4) == (1,)

    lines = grid_lines_p3((0, 1), (0, 1))
    curve = gi.from_lines(lines, 4, P)
    assert curve.curve_h_vector(6) == (1, 2, 1)
    f, g = grid_ci_forms_p3((0, 1), (0, 1))
    by_gens = gi.from_generators([f, g], 4, P)
    assert gi.pieces_equal(curve, by_gens, range(6))


def test_ideal_sum_matches_generated_ci():
    f, g = grid_ci_forms_p2((0, 1), (0, 1))
    summed = gi.ideal_sum(gi.principal(f), gi.principal(g))
    gen = gi.from_generators([f, g], 3, P)
    assert gi.pieces_equal(summed, gen, range(6))


def test_product_by_form_dims():
    ideal = gi.from_points([(1, 2, 3), (1, 5, 7)], 3, P)
    f = linear([1, 1, 1])
    prod = gi.product_by_form(ideal, f)
    for t in range(1, 6):
        assert prod.dim(t) == ideal.dim(t - 1)


def test_intersection_is_union_of_points():
    rng = random.Random(9)
    a_pts = [(1, rng.randrange(50), rng.randrange(50)) for _ in range(3)]
    b_pts = [(1, rng.randrange(50, 99), rng.randrange(50, 99)) for _ in range(4)]
    ia = gi.from_points(a_pts, 3, P)
    ib = gi.from_points(b_pts, 3, P)
    both = gi.intersect(ia, ib)
    union = gi.from_points(a_pts + b_pts, 3, P)
    assert gi.pieces_equal(both, union, range(6))


def test_colon_removes_a_point_by_linkage():
    # complete intersection grid of 4 points, colon out the one at the origin
    f, g = grid_ci_forms_p2((0, 1), (0, 1))
    big = gi.from_generators([f, g], 3, P)
    residual = gi.colon_by_forms(big, [linear([0, 1, 0]), linear([0, 0, 1])])
    remaining = [pt for pt in plane_grid_points((0, 1), (0, 1)) if pt != (1, 0, 0)]
    expected = gi.from_points(remaining, 3, P)
    assert gi.pieces_equal(residual, expected, range(5))


def test_colon_by_unit_is_whole_ideal():
    ideal = gi.from_points([(1, 1, 1)], 3, P)
    one = HomForm(3, 0, [1], P)
    assert gi.pieces_equal(gi.colon_by_forms(ideal, [one]), ideal, range(4))


def test_membership_conditions():
    import numpy as np

    ideal = gi.from_points([(1, 2, 3), (1, 0, 1)], 3, P)
    cond = gi.membership_conditions(ideal, 2)
    piece = ideal.piece(2)
    assert np.array_equal((cond @ piece.a.T) % P, np.zeros((cond.shape[0], piece.rows)))
    outside = HomForm.monomial((2, 0, 0), P)  # x^2 does not vanish at (1,2,3)
    assert ((cond @ outside.coeffs) % P).any()


def test_cone_over_point_is_line():
    planar = gi.from_points([(1, 0, 0)], 3, P)
    cone = gi.cone_extend(planar)
    line = gi.from_lines([((1, 0, 0, 0), (0, 0, 0, 1))], 4, P)
    assert gi.pieces_equal(cone, line, range(5))


def test_cone_hilbert_function_accumulates():
    pts = plane_grid_points((0, 1, 2), (0, 1))
    planar = gi.from_points(pts, 3, P)
    cone = gi.cone_extend(planar)
    for t in range(6):
        assert cone.hilbert_function(t) == sum(planar.hilbert_function(s) for s in range(t + 1))


def test_hypersurface_section_of_cone():
    planar = gi.from_points([(1, 0, 0), (1, 1, 0)], 3, P)
    cone = gi.cone_extend(planar)
    # a plane meeting the two rulings transversally
    section = gi.hypersurface_section(cone, HomForm.linear([1, 0, 0, -1], P))
    assert section.h_vector(4) == (1, 1)


def test_hypersurface_section_rejects_zero_divisor():
    planar = gi.from_points([(1, 0, 0)], 3, P)
    cone = gi.cone_extend(planar)  # the line through (1,0,0,0) and (0,0,0,1)
    bad = gi.hypersurface_section(cone, HomForm.linear([0, 1, 0, 0], P))
    with pytest.raises(ValueError, match="zero divisor"):
        bad.piece(1)


def test_basic_double_link_two_points_on_a_line():
    line = gi.from_lines([((1, 0, 0, 0), (0, 1, 0, 0))], 4, P)
    point = gi.from_points([(1, 0, 0, 0)], 4, P)
    f = HomForm.linear([0, 1, 1, 1], P)  # misses the point
    linked = gi.basic_double_link(f, point, line)
    assert linked.h_vector(5) == (1, 1)


def test_basic_double_link_rejects_bad_containment():
    line = gi.from_lines([((1, 0, 0, 0), (0, 1, 0, 0))], 4, P)
    off_line = gi.from_points([(1, 1, 1, 1)], 4, P)
    f = HomForm.linear([0, 0, 1, 0], P)
    linked = gi.basic_double_link(f, off_line, line)
    with pytest.raises(ValueError, match="containment"):
        linked.piece(1)


def test_curve_h_vector_cutoff_guard():
    lines = grid_lines_p3((0, 1, 2), (0, 1, 2))
    curve = gi.from_lines(lines, 4, P)
    with pytest.raises(ValueError, match="cutoff too small"):
        curve.curve_h_vector(2)
