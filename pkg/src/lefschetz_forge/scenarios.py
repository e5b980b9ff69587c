"""Named configuration families: construction, measurement, and reporting.

Each builder assembles one family of level point sets (or their saturated
ideals) from explicit coordinates over GF(p): stick figures of lines linked
inside complete intersections, distracted monomial schemes lifted to cones,
and basic double links dividing them by hyperplanes or products of
hyperplanes.  Every numeric claim is measured twice — once from the closed
integer formulas in :mod:`hcalc` and once from exact linear algebra on the
constructed ideal — and the report records where the two agree.

Seeded randomness supplies genericity; every construction carries integrity
checks (h-vectors of intermediate configurations, distinctness of points,
ideal/point-set agreement) so a degenerate draw fails loudly.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field

from .exactfield import validate_prime
from .gradedideal import (
    GradedIdeal,
    basic_double_link,
    colon_by_forms,
    cone_extend,
    contains,
    from_generators,
    from_lines,
    from_points,
    hypersurface_section,
    intersect,
    pieces_equal,
    principal,
)
from .geometry import (
    Grid,
    PlanarGrid,
    cells_complement,
    cone_section_points,
    in_general_position,
    point_h_vector,
    random_plane_avoiding,
    random_points,
    rect_cells,
    section_points,
    triangle_cells,
    truncation_subset,
    union_points,
)
from .hcalc import (
    DEFAULT_D,
    Prediction,
    predicted_table,
    scenario_ids,
    staircase_cells,
)
from .lefschetz import (
    ArtinianAlgebra,
    artinian_reduce,
    base_locus_certificate,
    conditions_imposed,
    has_wlp,
    injective_by_product,
    random_linear,
    slp_rank,
    unimodal,
    wlp_profile,
)
from .multipoly import HomForm, divisible_by_linear, product

DEFAULT_PRIME = 32003
DEFAULT_SEED = 0
DEFAULT_TRIALS = 3

VERTEX = (0, 0, 0, 1)


class ConstructionError(RuntimeError):
    """A configuration could not be realized from the seeded draws."""


@dataclass
class Construction:
    """One realized configuration, ready for analysis."""

    ideal: GradedIdeal
    prediction: Prediction
    points: list | None = None
    checks: dict = dc_field(default_factory=dict)
    measured: dict = dc_field(default_factory=dict)
    certificate_plane: HomForm | None = None
    negative_planes: list = dc_field(default_factory=list)


@dataclass
class ScenarioRun:
    """Analysis result: the JSON-ready report plus the raw objects."""

    report: dict
    construction: Construction
    algebra: ArtinianAlgebra


def _ruling_lines(planar_points, p):
    """The cone lines over plane points, each as a spanning pair."""
    return [
        ((q[0] % p, q[1] % p, q[2] % p, 0), VERTEX) for q in planar_points
    ]


def _linear(coeffs, p):
    return HomForm.linear(coeffs, p)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def _build_ex23(rng, p, d=None):
    """Fourteen points from relinking four general points on a stick figure.

    A triangular stick figure of ten lines carries four of its members'
    plane-section points (one per anti-diagonal line); dividing by a second
    plane adds the full ten-point section.
    """
    pred = predicted_table("ex2.3")
    checks = {}
    grid = Grid.random(4, 4, rng, p)
    tri = triangle_cells(4)
    c_lines = grid.lines_for(tri)
    curve = from_lines(c_lines, 4, p, label="triangle stick figure")
    checks["curve_h"] = curve.curve_h_vector(8) == (1, 2, 3, 4)

    anti = [(i, 3 - i) for i in range(4)]
    anti_lines = grid.lines_for(anti)
    h1 = random_plane_avoiding([], rng, p, lines=c_lines)
    x1 = section_points(anti_lines, h1, p)
    checks["x1_general_position"] = in_general_position(x1, p)
    dh_x1 = point_h_vector(x1, 4, p)
    checks["x1_h"] = dh_x1 == pred.extras["dh_x1"]

    h2 = random_plane_avoiding(x1, rng, p, lines=c_lines)
    x2 = section_points(c_lines, h2, p)
    dh_x2 = point_h_vector(x2, 4, p)
    checks["x2_h"] = dh_x2 == pred.extras["dh_x2"]

    h2_form = _linear(h2, p)
    ideal = basic_double_link(h2_form, from_points(x1, 4, p), curve)
    points = union_points([x1, x2], p)
    checks["point_count"] = len(points) == pred.extras["point_count"]

    return Construction(
        ideal=ideal,
        prediction=pred,
        points=points,
        checks=checks,
        measured={
            "bdl": {
                "dh_inner": dh_x1,
                "dh_section": dh_x2,
                "divisor_degree": 1,
            },
            "x1_points": x1,
            "x2_points": x2,
        },
        certificate_plane=h2_form,
    )


def _build_thm31(rng, p, d=None):
    """Level type-4 sets of any socle degree from a cone over a distraction.

    The plane configuration is the distraction of a four-generator monomial
    staircase; the cone over it is divided by one plane after relinking the
    sub-rectangle's section points.
    """
    pred = predicted_table("thm3.1", d)
    ex = pred.extras
    r = ex["r"]
    checks = {}

    cells = staircase_cells(ex["staircase_gens"])
    nrows = 1 + max(i for i, _ in cells)
    ncols = 1 + max(j for _, j in cells)
    pg = PlanarGrid.random(nrows, ncols, rng, p)
    z_planar = pg.points_for(cells)
    checks["planar_h"] = point_h_vector(z_planar, 3, p) == ex["dh_planar"]

    if ex["case"] == 1:
        y_cells = rect_cells(r, r)
    else:
        y_cells = rect_cells(r + 1, r)
    checks["sub_cells_inside"] = set(y_cells) <= set(cells)
    y_planar = pg.points_for(y_cells)
    checks["sub_h"] = point_h_vector(y_planar, 3, p) == ex["dh_sub"]

    cone = cone_extend(from_points(z_planar, 3, p))
    h1 = random_plane_avoiding(
        [VERTEX], rng, p, lines=_ruling_lines(z_planar, p)
    )
    x1 = cone_section_points(y_planar, h1, p)
    dh_x1 = point_h_vector(x1, 4, p)
    checks["x1_h"] = dh_x1 == ex["dh_sub"]

    h2 = random_plane_avoiding(
        list(x1) + [VERTEX], rng, p, lines=_ruling_lines(z_planar, p)
    )
    x2 = cone_section_points(z_planar, h2, p)
    dh_x2 = point_h_vector(x2, 4, p)
    checks["x2_h"] = dh_x2 == ex["dh_planar"]

    h2_form = _linear(h2, p)
    ideal = basic_double_link(h2_form, from_points(x1, 4, p), cone)
    points = union_points([x1, x2], p)
    checks["point_count"] = len(points) == ex["point_count"]

    return Construction(
        ideal=ideal,
        prediction=pred,
        points=points,
        checks=checks,
        measured={
            "bdl": {
                "dh_inner": dh_x1,
                "dh_section": dh_x2,
                "divisor_degree": 1,
            },
            "x1_points": x1,
            "x2_points": x2,
        },
        certificate_plane=h2_form,
    )


def _build_thm32(rng, p, d=None):
    """Level type-3 sets of odd socle degree via a plane linkage.

    Two plane complete intersections (one of two cubics, one of two
    degree-r forms) share a three-dimensional family of forms two degrees
    up; a general pencil from that family links the cubic configuration to
    a residual containing the degree-r one, and the cones over residual and
    sub-configuration feed the usual one-plane division.  Everything stays
    at the ideal level: the residual's points are never needed.
    """
    pred = predicted_table("thm3.2", d)
    ex = pred.extras
    r = ex["r"]
    cutoff = pred.socle_degree + 3
    checks = {}

    f0 = HomForm.random(3, 3, rng, p)
    g0 = HomForm.random(3, 3, rng, p)
    anchor = from_generators([f0, g0], 3, p)
    checks["anchor_ci"] = anchor.h_vector(8) == ex["dh_anchor"]

    fr = HomForm.random(3, r, rng, p)
    gr = HomForm.random(3, r, rng, p)
    target = from_generators([fr, gr], 3, p)
    checks["sub_ci"] = target.h_vector(2 * r + 2) == ex["dh_sub"]

    both = intersect(anchor, target)
    checks["intersection_dim"] = (
        both.dim(ex["intersection_degree"]) == ex["intersection_dim"]
    )
    basis = both.forms(ex["intersection_degree"])

    def combo():
        out = basis[0].scale(1 + rng.randrange(p - 1))
        for b in basis[1:]:
            out = out + b.scale(rng.randrange(p))
        return out

    link_ci = from_generators([combo(), combo()], 3, p)
    checks["link_ci"] = (
        link_ci.h_vector(2 * r + 6) == ex["dh_link_ci"]
    )

    residual = colon_by_forms(link_ci, [f0, g0])
    checks["residual_h"] = residual.h_vector(2 * r + 4) == ex["dh_planar"]
    checks["residual_contains_sub"] = all(
        contains(target, residual, t) for t in range(cutoff + 2)
    )

    sub_cone = cone_extend(target)
    big_cone = cone_extend(residual)
    h1 = random_plane_avoiding([VERTEX], rng, p)
    x1_ideal = hypersurface_section(sub_cone, _linear(h1, p))
    checks["x1_h"] = x1_ideal.h_vector(cutoff) == ex["dh_sub"]

    h2 = random_plane_avoiding([VERTEX], rng, p)
    h2_form = _linear(h2, p)
    ideal = basic_double_link(h2_form, x1_ideal, big_cone)

    curve_h = big_cone.curve_h_vector(cutoff)
    checks["cone_curve_h"] = curve_h == ex["dh_planar"]

    return Construction(
        ideal=ideal,
        prediction=pred,
        points=None,
        checks=checks,
        measured={
            "bdl": {
                "dh_inner": x1_ideal.h_vector(cutoff),
                "dh_curve": curve_h,
                "divisor_degree": 1,
            },
        },
        certificate_plane=h2_form,
    )


def _build_thm33(rng, p, d=None):
    """Level type-3 sets of even socle degree from a large stick figure.

    A corner block is removed from a full grid of lines; the intersection
    points of two linked triangular sub-figures supply a symmetric point
    configuration, and division by a product of two planes adds a double
    section of the remaining curve.
    """
    pred = predicted_table("thm3.3", d)
    ex = pred.extras
    r = ex["r"]
    e1, e2 = ex["grid_type"]
    tt = ex["residual_type"]
    checks = {}

    grid = Grid.random(e1, e2, rng, p)
    d_cells = [
        (i, j) for i in range(e1 - tt, e1) for j in range(tt)
    ]
    c_cells = cells_complement(rect_cells(e1, e2), d_cells)
    checks["line_count"] = len(c_cells) == ex["curve_lines"]
    c_lines = grid.lines_for(c_cells)
    curve = from_lines(c_lines, 4, p)
    cutoff = pred.socle_degree + 3
    checks["curve_h"] = curve.curve_h_vector(cutoff) == ex["dh_curve"]

    y_cells = [
        (i, j) for i in range(r) for j in range(e2 - (r - i), e2)
    ]
    sub_cells = [
        (i, j) for i in range(r) for j in range(e2 - (r + 1), e2)
    ]
    y_prime = cells_complement(sub_cells, y_cells)
    checks["y_inside_curve"] = set(y_cells) <= set(c_cells)

    x1 = grid.cross_points(y_cells, y_prime)
    checks["x1_count"] = len(x1) == ex["x1_count"]
    dh_x1 = point_h_vector(x1, 4, p)
    checks["x1_h"] = dh_x1 == ex["dh_x1"]

    ha = random_plane_avoiding(x1, rng, p, lines=c_lines)
    hb = random_plane_avoiding(x1, rng, p, lines=c_lines)
    quad = _linear(ha, p) * _linear(hb, p)
    xa = section_points(c_lines, ha, p)
    xb = section_points(c_lines, hb, p)
    dh_x2 = point_h_vector(xa + xb, 4, p)
    checks["x2_h"] = dh_x2 == ex["dh_x2"]

    ideal = basic_double_link(quad, from_points(x1, 4, p), curve)
    points = union_points([x1, xa, xb], p)

    return Construction(
        ideal=ideal,
        prediction=pred,
        points=points,
        checks=checks,
        measured={
            "bdl": {
                "dh_inner": dh_x1,
                "dh_section": dh_x2,
                "divisor_degree": 2,
            },
            "x1_points": x1,
            "x2_points": xa + xb,
        },
    )


def _build_ex42(rng, p, d=None):
    """A non-unimodal level set of 166 points by truncating a double link.

    Thirty intersection points of two linked triangles on a ten-row stick
    figure are relinked by a product of three planes; greedily removing the
    top two socle degrees' worth of points leaves a level set whose
    h-vector dips in the middle.
    """
    pred = predicted_table("ex4.2")
    ex = pred.extras
    checks = {}

    grid = Grid.random(10, 11, rng, p)
    c_cells = triangle_cells(10)
    c_lines = grid.lines_for(c_cells)
    curve = from_lines(c_lines, 4, p)
    checks["curve_h"] = curve.curve_h_vector(14) == ex["dh_curve"]

    inner_cells = triangle_cells(4)
    outer_cells = cells_complement(rect_cells(4, 5), inner_cells)
    x1 = grid.cross_points(inner_cells, outer_cells)
    checks["x1_count"] = len(x1) == ex["x1_count"]
    dh_x1 = point_h_vector(x1, 4, p)
    checks["x1_h"] = dh_x1 == ex["dh_x1"]

    planes = []
    sections = []
    for _ in range(3):
        c = random_plane_avoiding(x1, rng, p, lines=c_lines)
        planes.append(c)
        sections.append(section_points(c_lines, c, p))
    cubic = product([_linear(c, p) for c in planes])
    x2 = [q for sec in sections for q in sec]
    checks["x2_count"] = len(x2) == ex["x2_count"]
    dh_x2 = point_h_vector(x2, 4, p)
    checks["x2_h"] = dh_x2 == ex["dh_x2"]

    big_ideal = basic_double_link(cubic, from_points(x1, 4, p), curve)
    big_points = union_points([x1] + sections, p)
    checks["pre_truncation_count"] = (
        len(big_points) == ex["pre_truncation_count"]
    )
    h_full = point_h_vector(big_points, 4, p)
    checks["pre_truncation_h"] = h_full == ex["h_before_truncation"]
    checks["pre_truncation_ideal"] = pieces_equal(
        big_ideal, from_points(big_points, 4, p), range(14)
    )

    big_algebra = artinian_reduce(
        from_points(big_points, 4, p), rng, cutoff=13, expected_h=h_full
    )
    profile = big_algebra.socle_profile()
    checks["pre_truncation_socle"] = profile == ex["pre_truncation_socle"]
    checks["pre_truncation_not_level"] = (
        big_algebra.is_level() == ex["pre_truncation_level"]
    )

    points = truncation_subset(big_points, pred.h_vector, 4, p, rng)
    checks["point_count"] = len(points) == ex["point_count"]
    checks["h_not_unimodal"] = unimodal(pred.h_vector) == ex["unimodal"]
    ideal = from_points(points, 4, p)

    return Construction(
        ideal=ideal,
        prediction=pred,
        points=points,
        checks=checks,
        measured={
            "bdl": {
                "dh_inner": dh_x1,
                "dh_section": dh_x2,
                "divisor_degree": 3,
                "h_result": h_full,
            },
            "x1_points": x1,
            "x2_points": x2,
            "pre_truncation_points": big_points,
            "pre_truncation_socle": profile,
        },
    )


def _build_ex51(rng, p, d=None):
    """A set with the weak property whose squared maps still drop rank.

    Twelve grid points plus eight general ones in the plane admit a unique
    quintic; dividing by a line gives a plane configuration whose cone,
    relinked against the grid points' section, has every linear
    multiplication of maximal rank while a general quadric multiplication
    falls short.
    """
    pred = predicted_table("ex5.1")
    ex = pred.extras
    checks = {}

    pg = PlanarGrid.random(3, 4, rng, p)
    z1_planar = pg.points_for(rect_cells(3, 4))
    checks["grid_h"] = point_h_vector(z1_planar, 3, p) == ex["dh_x1"]
    extra = random_points(8, rng, p, nvars=3, avoid=z1_planar)
    w = list(z1_planar) + extra
    checks["augmented_h"] = (
        point_h_vector(w, 3, p) == ex["dh_planar_inner"]
    )
    w_ideal = from_points(w, 3, p)
    checks["unique_quintic"] = w_ideal.dim(5) == 1
    quintic = w_ideal.forms(5)[0]

    g = random_plane_avoiding(w, rng, p, nvars=3)
    inner_link = basic_double_link(
        _linear(g, p), w_ideal, principal(quintic)
    )
    checks["planar_bdl_h"] = inner_link.h_vector(10) == ex["dh_x2"]

    big_cone = cone_extend(inner_link)
    h1 = random_plane_avoiding(
        [VERTEX], rng, p, lines=_ruling_lines(z1_planar, p)
    )
    x1 = cone_section_points(z1_planar, h1, p)
    dh_x1 = point_h_vector(x1, 4, p)
    checks["x1_h"] = dh_x1 == ex["dh_x1"]

    h2 = random_plane_avoiding(list(x1) + [VERTEX], rng, p)
    h2_form = _linear(h2, p)
    ideal = basic_double_link(h2_form, from_points(x1, 4, p), big_cone)

    cutoff = pred.socle_degree + 3
    curve_h = big_cone.curve_h_vector(cutoff)
    checks["cone_curve_h"] = curve_h == ex["dh_x2"]

    return Construction(
        ideal=ideal,
        prediction=pred,
        points=None,
        checks=checks,
        measured={
            "bdl": {
                "dh_inner": dh_x1,
                "dh_curve": curve_h,
                "divisor_degree": 1,
            },
            "x1_points": x1,
        },
        certificate_plane=h2_form,
    )


def _build_prop53(rng, p, d=None):
    """Level sets with a plateau of arbitrary length and no weak property.

    A d-by-d plane grid inside a larger general configuration gives two
    nested cones; the division plane's section forces a run of consecutive
    non-surjective multiplications, each certified by a base-locus plane.
    """
    pred = predicted_table("prop5.3", d)
    ex = pred.extras
    dd = ex["d"]
    checks = {}

    pg = PlanarGrid.random(dd, dd, rng, p)
    y1 = pg.points_for(rect_cells(dd, dd))
    checks["grid_h"] = point_h_vector(y1, 3, p) == ex["dh_x1"]
    extra = random_points(dd * (dd + 1), rng, p, nvars=3, avoid=y1)
    y2 = list(y1) + extra
    checks["augmented_h"] = point_h_vector(y2, 3, p) == ex["dh_x2"]

    cone = cone_extend(from_points(y2, 3, p))
    h1 = random_plane_avoiding(
        [VERTEX], rng, p, lines=_ruling_lines(y2, p)
    )
    x1 = cone_section_points(y1, h1, p)
    dh_x1 = point_h_vector(x1, 4, p)
    checks["x1_h"] = dh_x1 == ex["dh_x1"]

    h2 = random_plane_avoiding(
        list(x1) + [VERTEX], rng, p, lines=_ruling_lines(y2, p)
    )
    x2 = cone_section_points(y2, h2, p)
    dh_x2 = point_h_vector(x2, 4, p)
    checks["x2_h"] = dh_x2 == ex["dh_x2"]

    h2_form = _linear(h2, p)
    ideal = basic_double_link(h2_form, from_points(x1, 4, p), cone)
    points = union_points([x1, x2], p)
    checks["point_count"] = len(points) == ex["point_count"]

    return Construction(
        ideal=ideal,
        prediction=pred,
        points=points,
        checks=checks,
        measured={
            "bdl": {
                "dh_inner": dh_x1,
                "dh_section": dh_x2,
                "divisor_degree": 1,
            },
            "x1_points": x1,
            "x2_points": x2,
        },
        certificate_plane=h2_form,
    )


def _build_ex54(rng, p, d=None):
    """Fifty points where the weak property survives a triple-plane division.

    The relinking of two complementary triangles inside a full 3-by-4 grid
    of lines, divided by a product of three planes, keeps every linear
    multiplication at maximal rank — and no single plane sits in the base
    locus of any relevant linear system, confirming there is nothing to
    certify.
    """
    pred = predicted_table("ex5.4")
    ex = pred.extras
    checks = {}

    grid = Grid.random(3, 4, rng, p)
    inner_cells = triangle_cells(3)
    all_cells = rect_cells(3, 4)
    outer_cells = cells_complement(all_cells, inner_cells)
    x1 = grid.cross_points(inner_cells, outer_cells)
    checks["x1_count"] = len(x1) == ex["x1_count"]
    dh_x1 = point_h_vector(x1, 4, p)
    checks["x1_h"] = dh_x1 == ex["dh_x1"]

    full_lines = grid.lines_for(all_cells)
    curve = from_lines(full_lines, 4, p)
    checks["curve_h"] = curve.curve_h_vector(10) == (1, 2, 3, 3, 2, 1)

    planes = []
    sections = []
    for _ in range(3):
        c = random_plane_avoiding(x1, rng, p, lines=full_lines)
        planes.append(c)
        sections.append(section_points(full_lines, c, p))
    cubic = product([_linear(c, p) for c in planes])
    x2 = [q for sec in sections for q in sec]
    checks["x2_count"] = len(x2) == ex["x2_count"]
    dh_x2 = point_h_vector(x2, 4, p)
    checks["x2_h"] = dh_x2 == ex["dh_x2"]

    ideal = basic_double_link(cubic, from_points(x1, 4, p), curve)
    points = union_points([x1] + sections, p)
    checks["point_count"] = len(points) == ex["point_count"]

    negative = [_linear(c, p) for c in grid.rows + grid.cols] + [
        _linear(c, p) for c in planes
    ]

    return Construction(
        ideal=ideal,
        prediction=pred,
        points=points,
        checks=checks,
        measured={
            "bdl": {
                "dh_inner": dh_x1,
                "dh_section": dh_x2,
                "divisor_degree": 3,
            },
            "x1_points": x1,
            "x2_points": x2,
        },
        negative_planes=negative,
    )


def _build_ex55(rng, p, d=None):
    """A level truncation that kills surjectivity and injectivity at once.

    Four section points of a 2-by-2 subgrid, relinked against the full
    5-by-5 grid of lines by a product of two planes, produce a set whose
    only cubic is the product of three known planes; the line criterion
    shows a multiplication that is neither injective nor surjective, and
    the truncated set keeps the failure.
    """
    pred = predicted_table("ex5.5")
    ex = pred.extras
    checks = {}

    grid = Grid.random(5, 5, rng, p)
    sub_cells = rect_cells(2, 2)
    all_cells = rect_cells(5, 5)
    sub_lines = grid.lines_for(sub_cells)
    all_lines = grid.lines_for(all_cells)

    section_plane = random_plane_avoiding([], rng, p, lines=all_lines)
    x1 = section_points(sub_lines, section_plane, p)
    dh_x1 = point_h_vector(x1, 4, p)
    checks["x1_h"] = dh_x1 == ex["dh_x1"]

    ha = random_plane_avoiding(x1, rng, p, lines=all_lines)
    hb = random_plane_avoiding(x1, rng, p, lines=all_lines)
    quad = _linear(ha, p) * _linear(hb, p)
    xa = section_points(all_lines, ha, p)
    xb = section_points(all_lines, hb, p)
    dh_x2 = point_h_vector(xa + xb, 4, p)
    checks["x2_h"] = dh_x2 == ex["dh_x2"]

    big_ideal = basic_double_link(quad, from_points(x1, 4, p), from_lines(all_lines, 4, p))
    big_points = union_points([x1, xa, xb], p)
    checks["pre_truncation_count"] = (
        len(big_points) == ex["pre_truncation_count"]
    )
    h_full = point_h_vector(big_points, 4, p)
    checks["pre_truncation_h"] = h_full == ex["h_before_truncation"]
    checks["pre_truncation_ideal"] = pieces_equal(
        big_ideal, from_points(big_points, 4, p), range(12)
    )

    checks["unique_cubic"] = big_ideal.dim(3) == ex["ideal_dim_deg3"]
    cubic = big_ideal.forms(3)[0]
    checks["cubic_factors"] = all(
        divisible_by_linear(cubic, _linear(c, p))
        for c in (section_plane, ha, hb)
    )

    l1 = _linear(random_plane_avoiding(big_points, rng, p), p)
    l2 = random_linear(rng, p, 4)
    inj = injective_by_product(big_ideal, l1, l2, 4)
    checks["product_dim"] = inj["product_dim"] == ex["product_dim_deg4"]
    checks["intersection_dim"] = (
        inj["intersection_dim"] >= ex["intersection_dim_deg4_min"]
    )
    checks["not_injective"] = not inj["injective"]

    big_algebra = artinian_reduce(
        from_points(big_points, 4, p), rng, cutoff=11, expected_h=h_full
    )
    profile = big_algebra.socle_profile()
    checks["pre_truncation_socle_degrees"] = (
        tuple(sorted(profile)) == ex["pre_truncation_socle_degrees"]
    )
    checks["pre_truncation_not_level"] = (
        big_algebra.is_level() == ex["pre_truncation_level"]
    )

    points = truncation_subset(big_points, pred.h_vector, 4, p, rng)
    checks["point_count"] = len(points) == ex["point_count"]
    ideal = from_points(points, 4, p)

    return Construction(
        ideal=ideal,
        prediction=pred,
        points=points,
        checks=checks,
        measured={
            "bdl": {
                "dh_inner": dh_x1,
                "dh_section": dh_x2,
                "divisor_degree": 2,
                "h_result": h_full,
            },
            "x1_points": x1,
            "x2_points": xa + xb,
            "pre_truncation_points": big_points,
            "injectivity": inj,
        },
    )


_BUILDERS = {
    "ex2.3": _build_ex23,
    "thm3.1": _build_thm31,
    "thm3.2": _build_thm32,
    "thm3.3": _build_thm33,
    "ex4.2": _build_ex42,
    "ex5.1": _build_ex51,
    "prop5.3": _build_prop53,
    "ex5.4": _build_ex54,
    "ex5.5": _build_ex55,
}


# ---------------------------------------------------------------------------
# analysis
# ---------------------------------------------------------------------------


def _compare_h(measured, pred: Prediction) -> bool:
    if all(pred.asserted):
        return tuple(measured) == tuple(pred.h_vector)
    top = len(pred.h_vector)
    mh = list(measured) + [0] * max(0, top - len(measured))
    return all(
        mh[t] == pred.h_vector[t]
        for t in range(top)
        if pred.asserted[t]
    )


def _analyze(build: Construction, rng, trials: int, cutoff: int) -> tuple:
    pred = build.prediction
    ideal = build.ideal
    p = ideal.p
    checks = dict(build.checks)

    measured_h = ideal.h_vector(cutoff)
    if build.points is not None:
        checks["ideal_matches_points"] = pieces_equal(
            ideal, from_points(build.points, ideal.nvars, p),
            range(cutoff + 1),
        )
    h_match = _compare_h(measured_h, pred)
    checks["h_match"] = h_match
    build.measured.setdefault("bdl", {}).setdefault(
        "h_result", measured_h
    )

    algebra = artinian_reduce(ideal, rng, cutoff, expected_h=measured_h)
    profile = algebra.socle_profile()
    socle_degree = algebra.socle_degree()
    socle_type = algebra.socle_type()
    level = algebra.is_level()
    checks["socle_degree"] = socle_degree == pred.socle_degree
    checks["socle_type"] = socle_type == pred.socle_type
    checks["level"] = level == pred.level

    maps = wlp_profile(algebra, rng, trials)
    holds = has_wlp(maps)
    checks["wlp_verdict"] = holds == pred.wlp_expected
    observed = tuple(
        (m["from"], m["to"]) for m in maps if not m["maximal"]
    )
    if pred.failing_maps:
        checks["failing_maps"] = set(observed) == set(pred.failing_maps)
    elif not pred.wlp_expected:
        checks["failing_maps"] = bool(observed)
    else:
        checks["failing_maps"] = not observed
    for (a, b), rank in pred.extras.get("expected_ranks", {}).items():
        checks[f"rank_{a}_{b}"] = maps[a]["rank"] == rank

    slp_report = None
    if "slp_failure" in pred.extras:
        cfg = pred.extras["slp_failure"]
        slp_report = slp_rank(algebra, cfg["e"], cfg["t"], rng, trials)
        checks["slp_rank_bound"] = slp_report["rank"] <= cfg["max_rank"]
        checks["slp_fails"] = not slp_report["maximal"]

    cert_list = []
    if pred.certificate_degrees and build.certificate_plane is not None:
        for t in pred.certificate_degrees:
            cert_list.append(
                {
                    "degree": t,
                    "holds": base_locus_certificate(
                        ideal, build.certificate_plane, t
                    ),
                }
            )
        checks["certificates"] = all(c["holds"] for c in cert_list)
    if build.negative_planes and "certificate_false_through" in pred.extras:
        top = pred.extras["certificate_false_through"]
        checks["no_false_certificate"] = not any(
            base_locus_certificate(ideal, plane, t)
            for plane in build.negative_planes
            for t in range(1, top + 1)
        )

    conditions_report = None
    if "conditions_degree" in pred.extras and build.points is not None:
        t = pred.extras["conditions_degree"]
        l1 = _linear(random_plane_avoiding(build.points, rng, p), p)
        l2 = random_linear(rng, p, ideal.nvars)
        got = conditions_imposed(ideal, l1, l2, t)
        conditions_report = {
            "degree": t,
            "imposed": got,
            "required_for_surjectivity": pred.extras["conditions_required"],
        }
        checks["conditions_count"] = got == pred.extras["conditions_expected"]
        checks["conditions_short"] = got < pred.extras["conditions_required"]

    certified = bool(
        pred.certified
        and pred.certificate_degrees
        and checks.get("certificates", False)
    )
    verdict_basis = "certified" if certified else "witnessed"

    report = {
        "scenario": pred.scenario,
        "params": dict(pred.params),
        "h_vector": list(measured_h),
        "predicted_h_vector": list(pred.h_vector),
        "h_match": h_match,
        "point_count": len(build.points) if build.points is not None else None,
        "socle": {
            "degree": socle_degree,
            "type": socle_type,
            "level": level,
            "profile": {str(k): v for k, v in sorted(profile.items())},
        },
        "wlp": {
            "holds": holds,
            "expected": pred.wlp_expected,
            "maps": maps,
            "failing": [list(x) for x in observed],
        },
        "certificates": cert_list,
        "verdict_basis": verdict_basis,
        "checks": checks,
        "match": all(checks.values()),
    }
    if slp_report is not None:
        report["slp"] = slp_report
    if conditions_report is not None:
        report["conditions"] = conditions_report
    return report, algebra


def run_scenario(
    scenario: str,
    d: int = None,
    prime: int = DEFAULT_PRIME,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    cutoff: int = None,
    timer=time.perf_counter,
) -> ScenarioRun:
    """Build one configuration family and measure everything about it.

    Raises :class:`ConstructionError` when the seeded draws cannot realize
    the configuration (and retrying within the seed stream did not help);
    ValueError for unknown scenario names or out-of-range parameters.
    """
    validate_prime(prime)
    if trials < 1:
        raise ValueError("need at least one trial")
    started = timer()
    pred = predicted_table(scenario, d)  # validates scenario and parameter
    rng = random.Random(f"{scenario}|{prime}|{seed}")

    build = None
    failure = None
    for _ in range(4):
        try:
            build = _BUILDERS[scenario](rng, prime, d)
            break
        except (ValueError, RuntimeError) as err:
            failure = err
    if build is None:
        raise ConstructionError(
            f"could not realize {scenario}: {failure}"
        )

    use_cutoff = cutoff if cutoff is not None else pred.socle_degree + 3
    try:
        report, algebra = _analyze(build, rng, trials, use_cutoff)
    except (ValueError, RuntimeError) as err:
        raise ConstructionError(f"analysis of {scenario} failed: {err}")
    report["params"]["trials"] = trials
    report["params"]["cutoff"] = use_cutoff
    report["seed"] = seed
    report["prime"] = prime
    report["elapsed_ms"] = int((timer() - started) * 1000)
    return ScenarioRun(report=report, construction=build, algebra=algebra)


def available() -> tuple:
    """Scenario identifiers with their adjustable-parameter defaults."""
    out = []
    for name in scenario_ids():
        out.append(
            {
                "scenario": name,
                "parametric": name in DEFAULT_D,
                "default_d": DEFAULT_D.get(name),
            }
        )
    return tuple(out)
