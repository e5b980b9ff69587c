"""Explicit point and line configurations over GF(p).

Everything here produces coordinates: stick figures of lines cut out by two
generic plane families, planar grids from two line families, hyperplane and
hypersurface sections, pairwise intersection points of line families, unions
with duplicate detection, and greedy truncation of a point set to a target
h-vector.  Genericity is obtained from seeded randomness over a large prime
field; every construction is double-checked downstream by exact h-vector
assertions, so a degenerate draw fails loudly rather than silently.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .exactfield import ExactMatrix
from .multipoly import HomForm, evaluation_matrix, normalize_point, product


# -- cells (exponent boxes indexing grid members) ----------------------------

def rect_cells(nrows: int, ncols: int):
    return [(i, j) for i in range(nrows) for j in range(ncols)]


def triangle_cells(n: int):
    """Cells below the anti-diagonal: row i holds n-i cells."""
    return [(i, j) for i in range(n) for j in range(n - i)]


def cells_complement(all_cells, sub_cells):
    sub = set(sub_cells)
    missing = sub - set(all_cells)
    if missing:
        raise ValueError(f"cells {sorted(missing)} are not in the ambient set")
    return [c for c in all_cells if c not in sub]


# -- generic hyperplane families ---------------------------------------------

def random_hyperplane(rng, nvars: int, p: int) -> tuple:
    while True:
        v = tuple(rng.randrange(p) for _ in range(nvars))
        if any(v):
            return v


def check_generic_triples(planes, p: int) -> bool:
    """Every 3 of the hyperplanes must be linearly independent."""
    planes = [tuple(c) for c in planes]
    for trio in combinations(planes, 3):
        if ExactMatrix(np.array(trio, dtype=np.int64), p).rank() != 3:
            return False
    return True


def random_plane_families(nrows: int, ncols: int, rng, p: int, nvars: int = 4):
    """Two generic families of hyperplanes, retried until triples check out."""
    for _ in range(50):
        rows = [random_hyperplane(rng, nvars, p) for _ in range(nrows)]
        cols = [random_hyperplane(rng, nvars, p) for _ in range(ncols)]
        if check_generic_triples(rows + cols, p):
            return tuple(rows), tuple(cols)
    raise RuntimeError("could not draw generic hyperplane families")


def hyperplane_intersection(planes, p: int) -> ExactMatrix:
    """Common zero locus of hyperplanes, as rows spanning the point set."""
    m = ExactMatrix(np.array([list(c) for c in planes], dtype=np.int64), p)
    return m.kernel_basis().transpose()


class Grid:
    """A grid of lines in projective 3-space from two generic plane families.

    Cell (i, j) is the line where row plane i meets column plane j.  Products
    of full rows and full columns cut out the complete-intersection curve of
    all the lines; staircase subsets of cells give the stick figures used to
    realize curves with prescribed h-vectors.
    """

    def __init__(self, rows, cols, p: int):
        self.rows = tuple(tuple(c) for c in rows)
        self.cols = tuple(tuple(c) for c in cols)
        self.p = p
        self._lines = {}

    @classmethod
    def random(cls, nrows: int, ncols: int, rng, p: int) -> "Grid":
        rows, cols = random_plane_families(nrows, ncols, rng, p)
        return cls(rows, cols, p)

    def line(self, i: int, j: int):
        """The cell's line as a pair of spanning points."""
        if (i, j) not in self._lines:
            span = hyperplane_intersection([self.rows[i], self.cols[j]], self.p)
            if span.rows != 2:
                raise ValueError(f"planes of cell ({i},{j}) do not meet in a line")
            self._lines[(i, j)] = (tuple(span.a[0]), tuple(span.a[1]))
        return self._lines[(i, j)]

    def lines_for(self, cells):
        return [self.line(i, j) for i, j in cells]

    def row_form(self, indices=None) -> HomForm:
        idx = range(len(self.rows)) if indices is None else indices
        return product([HomForm.linear(self.rows[i], self.p) for i in idx])

    def col_form(self, indices=None) -> HomForm:
        idx = range(len(self.cols)) if indices is None else indices
        return product([HomForm.linear(self.cols[j], self.p) for j in idx])

    def cross_points(self, cells_a, cells_b):
        """Intersection points of lines from two disjoint cell sets.

        Two grid lines meet exactly when they share a row plane or a column
        plane; each meeting point is the common zero of three of the family
        planes.  All points must come out distinct — a collision means the
        families were not generic enough.
        """
        seen = {}
        out = []
        for (i, j) in cells_a:
            for (k, l) in cells_b:
                if i == k and j == l:
                    raise ValueError("cell sets overlap")
                if i == k:
                    trio = [self.rows[i], self.cols[j], self.cols[l]]
                elif j == l:
                    trio = [self.rows[i], self.rows[k], self.cols[j]]
                else:
                    continue
                pt_mat = hyperplane_intersection(trio, self.p)
                if pt_mat.rows != 1:
                    raise ValueError("three family planes do not meet in a point")
                pt = normalize_point(tuple(pt_mat.a[0]), self.p)
                if pt in seen and seen[pt] != ((i, j), (k, l)):
                    raise ValueError("intersection points collide; families not generic")
                seen[pt] = ((i, j), (k, l))
                out.append(pt)
        return out


class PlanarGrid:
    """A grid of points in the projective plane from two generic line families.

    Cell (i, j) is the point where line a_i meets line b_j — the standard way
    to realize a lifted (distracted) monomial configuration: the points of a
    staircase's complement cells have h-vector equal to the staircase's
    degreewise cell counts.
    """

    def __init__(self, rows, cols, p: int):
        self.rows = tuple(tuple(c) for c in rows)
        self.cols = tuple(tuple(c) for c in cols)
        self.p = p
        self._points = {}

    @classmethod
    def random(cls, nrows: int, ncols: int, rng, p: int) -> "PlanarGrid":
        for _ in range(50):
            rows = [random_hyperplane(rng, 3, p) for _ in range(nrows)]
            cols = [random_hyperplane(rng, 3, p) for _ in range(ncols)]
            if check_generic_triples(rows + cols, p):
                return cls(rows, cols, p)
        raise RuntimeError("could not draw generic line families")

    def point(self, i: int, j: int) -> tuple:
        if (i, j) not in self._points:
            pt = hyperplane_intersection([self.rows[i], self.cols[j]], self.p)
            if pt.rows != 1:
                raise ValueError(f"lines of cell ({i},{j}) do not meet in a point")
            self._points[(i, j)] = normalize_point(tuple(pt.a[0]), self.p)
        return self._points[(i, j)]

    def points_for(self, cells):
        return [self.point(i, j) for i, j in cells]

    def row_form(self, indices=None) -> HomForm:
        idx = range(len(self.rows)) if indices is None else indices
        return product([HomForm.linear(self.rows[i], self.p) for i in idx])

    def col_form(self, indices=None) -> HomForm:
        idx = range(len(self.cols)) if indices is None else indices
        return product([HomForm.linear(self.cols[j], self.p) for j in idx])


# -- sections ----------------------------------------------------------------

def line_plane_point(line, plane, p: int) -> tuple:
    """Where a line (spanned by two points) meets a hyperplane."""
    u, w = line
    cu = sum(c * x for c, x in zip(plane, u)) % p
    cw = sum(c * x for c, x in zip(plane, w)) % p
    if cu == 0 and cw == 0:
        raise ValueError("hyperplane contains the line")
    pt = tuple((cw * a - cu * b) % p for a, b in zip(u, w))
    return normalize_point(pt, p)


def section_points(lines, plane, p: int):
    """One point per line: the hyperplane section of a union of lines."""
    return [line_plane_point(line, plane, p) for line in lines]


def cone_section_points(planar_points, plane, p: int):
    """Hyperplane section of the cone (vertex [0:0:0:1]) over plane points.

    Each planar point [q0:q1:q2] gives a ruling line through the vertex; the
    section point is where that ruling meets the hyperplane.
    """
    vertex = (0, 0, 0, 1)
    out = []
    for q in planar_points:
        base = (q[0] % p, q[1] % p, q[2] % p, 0)
        out.append(line_plane_point((base, vertex), plane, p))
    return out


def random_plane_avoiding(points, rng, p: int, nvars: int = 4,
                          lines=(), tries: int = 200) -> tuple:
    """A random hyperplane missing every given point and every given line."""
    for _ in range(tries):
        c = random_hyperplane(rng, nvars, p)
        if any(sum(a * b for a, b in zip(c, pt)) % p == 0 for pt in points):
            continue
        bad = False
        for u, w in lines:
            if (sum(a * b for a, b in zip(c, u)) % p == 0
                    and sum(a * b for a, b in zip(c, w)) % p == 0):
                bad = True
                break
        if not bad:
            return c
    raise RuntimeError("could not draw a hyperplane avoiding the configuration")


def random_points(k: int, rng, p: int, nvars: int = 3, avoid=(), tries: int = 500):
    """k distinct random projective points, avoiding a given set."""
    taken = {normalize_point(a, p) for a in avoid}
    out = []
    for _ in range(tries):
        if len(out) == k:
            return out
        pt = normalize_point(tuple(rng.randrange(p) for _ in range(nvars)), p)
        if not any(pt):
            continue
        if pt in taken:
            continue
        taken.add(pt)
        out.append(pt)
    raise RuntimeError("could not draw enough distinct points")


def union_points(groups, p: int):
    """Concatenate groups of points, refusing silent duplicates."""
    seen = {}
    out = []
    for gi, group in enumerate(groups):
        for pt in group:
            key = normalize_point(pt, p)
            if key in seen:
                raise ValueError(
                    f"point {key} appears in groups {seen[key]} and {gi}"
                )
            seen[key] = gi
            out.append(key)
    return out


def in_general_position(points, p: int) -> bool:
    """No three of the points on a common line (any ambient dimension)."""
    pts = [tuple(c % p for c in q) for q in points]
    for trio in combinations(pts, 3):
        m = ExactMatrix(np.array(trio, dtype=np.int64), p)
        if m.rank() < 3:
            return False
    return True


# -- truncation to a target h-vector ------------------------------------------

def point_h_vector(points, nvars: int, p: int):
    """h-vector of a point set, stopping as soon as all points are separated.

    The Hilbert function of a reduced point set climbs to the number of
    points and stays there, so the computation can stop at the first degree
    where the evaluation matrix reaches full row rank.
    """
    pts = [tuple(q) for q in points]
    n = len(pts)
    values = []
    prev = 0
    for t in range(n + 2):
        hf = ExactMatrix(evaluation_matrix(pts, nvars, t, p), p).rank()
        values.append(hf - prev)
        prev = hf
        if hf == n:
            return tuple(values)
    raise RuntimeError("points never became separated; duplicates present?")


def separation_support(points, nvars: int, t: int, p: int) -> set:
    """Indices of points whose evaluation row is a combination of the others.

    These are exactly the points appearing in the support of the left kernel
    of the degree-t evaluation matrix; a point outside this set is separated
    from the rest by a degree-t form.
    """
    ev = evaluation_matrix(points, nvars, t, p)
    kern = ExactMatrix(ev.T.copy(), p).kernel_basis()  # columns span left kernel
    if kern.cols == 0:
        return set()
    return set(int(i) for i in np.nonzero(kern.a.any(axis=1))[0])


def truncation_subset(points, target_h, nvars: int, p: int, rng,
                      budget: int = 200):
    """A subset of the points whose h-vector is exactly ``target_h``.

    Removing one point lowers the h-vector by one in a single degree: the
    least degree where that point is separated from the rest.  The greedy
    loop removes random points whose separation degree sits where the current
    h-vector exceeds the target, re-checking after every removal.
    """
    target = list(target_h)
    pts = [tuple(q) for q in points]

    for _ in range(budget):
        h = list(point_h_vector(pts, nvars, p))
        while h and h[-1] == 0:
            h.pop()
        while len(h) < len(target):
            h.append(0)
        while len(target) < len(h):
            target.append(0)
        if h == target:
            return pts
        over = [t for t in range(len(h)) if h[t] > target[t]]
        if any(h[t] < target[t] for t in range(len(h))):
            raise ValueError("target h-vector is not a truncation of the given set")
        # find a point separated first in an over-target degree
        t = max(over)
        supp_now = separation_support(pts, nvars, t, p)
        supp_prev = separation_support(pts, nvars, t - 1, p) if t else set(range(len(pts)))
        candidates = sorted(supp_prev - supp_now)
        if not candidates:
            raise RuntimeError(f"no removable point at degree {t}")
        kick = candidates[rng.randrange(len(candidates))]
        pts.pop(kick)
    raise RuntimeError("truncation budget exhausted")
