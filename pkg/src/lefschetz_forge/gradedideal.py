"""Graded ideals represented degree by degree as exact row spaces.

A ``GradedIdeal`` is a lazy map  t -> (I)_t  where each graded piece is an
``ExactMatrix`` whose rows are coefficient vectors over the canonical
monomial basis.  Constructors cover the ways configurations arise here —
vanishing ideals of points and of line unions, span closures of explicit
generators — and the operations mirror ideal arithmetic: sums, products by a
form, intersections, colons, cones, hypersurface sections, and basic double
links.  Everything is computed over GF(p) with no floating point anywhere.
"""

from __future__ import annotations

import numpy as np

from .exactfield import ExactMatrix, matmul_mod
from .multipoly import (
    HomForm,
    apply_row_basis,
    basis_index,
    basis_size,
    evaluation_matrix,
    monomial_basis,
    mult_matrix,
)


class GradedIdeal:
    """Lazy graded ideal: ``piece(t)`` is the degree-t slice as row space."""

    def __init__(self, nvars: int, p: int, piece_fn, label: str = ""):
        self.nvars = nvars
        self.p = p
        self._piece_fn = piece_fn
        self.label = label
        self._cache = {}

    # -- graded pieces -----------------------------------------------------
    def piece(self, t: int) -> ExactMatrix:
        if t not in self._cache:
            if t < 0:
                mat = ExactMatrix.zeros(0, 0, self.p)
            else:
                mat = self._piece_fn(t).row_space()
            self._cache[t] = mat
        return self._cache[t]

    def dim(self, t: int) -> int:
        """Vector-space dimension of the degree-t piece."""
        if t < 0:
            return 0
        return self.piece(t).rows

    def ring_dim(self, t: int) -> int:
        if t < 0:
            return 0
        return basis_size(self.nvars, t)

    def hilbert_function(self, t: int) -> int:
        """dim of the degree-t piece of the quotient ring."""
        return self.ring_dim(t) - self.dim(t)

    def hf_values(self, cutoff: int) -> tuple:
        return tuple(self.hilbert_function(t) for t in range(cutoff + 1))

    def h_vector(self, cutoff: int) -> tuple:
        """First difference of the Hilbert function, trimmed.

        For the vanishing ideal of a finite point set this is the h-vector of
        the points.  Raises if the difference has not reached zero by the
        cutoff — the caller asked for too small a window.
        """
        hf = self.hf_values(cutoff)
        diffs = [hf[0]] + [hf[t] - hf[t - 1] for t in range(1, cutoff + 1)]
        if diffs and diffs[-1] != 0:
            raise ValueError(
                f"cutoff too small: difference still {diffs[-1]} at degree {cutoff}"
            )
        while diffs and diffs[-1] == 0:
            diffs.pop()
        return tuple(diffs)

    def curve_h_vector(self, cutoff: int) -> tuple:
        """Second difference of the Hilbert function, trimmed.

        The h-vector of a one-dimensional arithmetically Cohen-Macaulay
        scheme (here: unions of lines) is the second difference.
        """
        hf = self.hf_values(cutoff)
        first = [hf[0]] + [hf[t] - hf[t - 1] for t in range(1, cutoff + 1)]
        second = [first[0]] + [first[t] - first[t - 1] for t in range(1, cutoff + 1)]
        if second and second[-1] != 0:
            raise ValueError(
                f"cutoff too small: second difference still {second[-1]} at degree {cutoff}"
            )
        while second and second[-1] == 0:
            second.pop()
        return tuple(second)

    def forms(self, t: int):
        """The degree-t piece as a list of forms (canonical spanning set)."""
        mat = self.piece(t)
        return [HomForm(self.nvars, t, row, self.p) for row in mat.a]

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"GradedIdeal(nvars={self.nvars}, p={self.p}{tag})"


def _empty(nvars: int, t: int, p: int) -> ExactMatrix:
    return ExactMatrix.zeros(0, basis_size(nvars, t), p)


def _check_ring(a: GradedIdeal, b: GradedIdeal):
    if a.nvars != b.nvars or a.p != b.p:
        raise ValueError("ideals live in different rings")


# -- constructors ------------------------------------------------------------

def from_points(points, nvars: int, p: int, label: str = "") -> GradedIdeal:
    """Vanishing ideal of a finite set of (projective) points."""
    pts = [tuple(int(c) % p for c in pt) for pt in points]
    for pt in pts:
        if len(pt) != nvars:
            raise ValueError("point has wrong number of coordinates")
        if not any(pt):
            raise ValueError("the zero vector is not a projective point")

    def piece_fn(t: int) -> ExactMatrix:
        if not pts:
            # empty set: no conditions, the whole ring
            return ExactMatrix(np.eye(basis_size(nvars, t), dtype=np.int64), p)
        ev = ExactMatrix(evaluation_matrix(pts, nvars, t, p), p)
        return ev.kernel_basis().transpose()

    return GradedIdeal(nvars, p, piece_fn, label=label)


def line_samples(line, t: int, p: int):
    """t+1 distinct points on the line spanned by the two given points."""
    u, w = line
    u = tuple(int(c) % p for c in u)
    w = tuple(int(c) % p for c in w)
    if t + 1 > p:
        raise ValueError("degree too large for the field: not enough line points")
    pts = [tuple((a + k * b) % p for a, b in zip(u, w)) for k in range(t)]
    pts.append(w)
    return pts


def from_lines(lines, nvars: int, p: int, label: str = "") -> GradedIdeal:
    """Vanishing ideal of a union of lines, each given by a spanning pair.

    A degree-t form vanishing at t+1 distinct points of a line vanishes on
    the whole line, so each graded piece is the kernel of an evaluation
    matrix at finitely many samples.
    """
    lns = [tuple(line) for line in lines]

    def piece_fn(t: int) -> ExactMatrix:
        pts = []
        for line in lns:
            pts.extend(line_samples(line, t, p))
        if not pts:
            return ExactMatrix(np.eye(basis_size(nvars, t), dtype=np.int64), p)
        ev = ExactMatrix(evaluation_matrix(pts, nvars, t, p), p)
        return ev.kernel_basis().transpose()

    return GradedIdeal(nvars, p, piece_fn, label=label)


def from_generators(gens, nvars: int, p: int, label: str = "") -> GradedIdeal:
    """Ideal generated by explicit forms (span closure, degree by degree)."""
    gens = list(gens)
    for g in gens:
        if g.nvars != nvars or g.p != p:
            raise ValueError("generator lives in the wrong ring")
    by_degree = {}
    for g in gens:
        by_degree.setdefault(g.degree, []).append(g)

    variables = [
        HomForm.linear([1 if i == v else 0 for i in range(nvars)], p)
        for v in range(nvars)
    ]

    ideal = GradedIdeal(nvars, p, lambda t: None, label=label)

    def piece_fn(t: int) -> ExactMatrix:
        blocks = []
        if t > 0:
            prev = ideal.piece(t - 1)
            if prev.rows:
                for x in variables:
                    blocks.append(apply_row_basis(prev.a, x, t - 1))
        for g in by_degree.get(t, []):
            blocks.append(g.coeffs.reshape(1, -1))
        if not blocks:
            return _empty(nvars, t, p)
        return ExactMatrix(np.vstack(blocks), p)

    ideal._piece_fn = piece_fn
    return ideal


def principal(f: HomForm, label: str = "") -> GradedIdeal:
    """The ideal generated by a single form (each piece built directly)."""
    if f.is_zero():
        raise ValueError("zero form does not define a principal ideal")
    nvars, p, e = f.nvars, f.p, f.degree

    def piece_fn(t: int) -> ExactMatrix:
        if t < e:
            return _empty(nvars, t, p)
        return ExactMatrix(mult_matrix(f, t - e).T.copy(), p)

    return GradedIdeal(nvars, p, piece_fn, label=label or "principal")


# -- operations --------------------------------------------------------------

def ideal_sum(a: GradedIdeal, b: GradedIdeal, label: str = "") -> GradedIdeal:
    _check_ring(a, b)

    def piece_fn(t: int) -> ExactMatrix:
        return a.piece(t).stack(b.piece(t))

    return GradedIdeal(a.nvars, a.p, piece_fn, label=label)


def product_by_form(a: GradedIdeal, f: HomForm, label: str = "") -> GradedIdeal:
    """The ideal f * I (each piece is f times the piece e degrees below)."""
    if f.nvars != a.nvars or f.p != a.p:
        raise ValueError("form lives in the wrong ring")
    e = f.degree

    def piece_fn(t: int) -> ExactMatrix:
        if t < e:
            return _empty(a.nvars, t, a.p)
        src = a.piece(t - e)
        if not src.rows:
            return _empty(a.nvars, t, a.p)
        return ExactMatrix(apply_row_basis(src.a, f, t - e), a.p)

    return GradedIdeal(a.nvars, a.p, piece_fn, label=label)


def intersect(a: GradedIdeal, b: GradedIdeal, label: str = "") -> GradedIdeal:
    from .exactfield import subspace_ops

    _check_ring(a, b)

    def piece_fn(t: int) -> ExactMatrix:
        return subspace_ops(a.piece(t), b.piece(t), "intersection")

    return GradedIdeal(a.nvars, a.p, piece_fn, label=label)


def membership_conditions(a: GradedIdeal, t: int) -> np.ndarray:
    """Matrix C with:  v in (I)_t  <=>  C @ v = 0.

    The rows of C span the orthogonal complement of the piece under the
    standard dot product (the kernel of the piece's row matrix).
    """
    return a.piece(t).kernel_basis().transpose().a


def colon_by_forms(j: GradedIdeal, forms, label: str = "") -> GradedIdeal:
    """The colon ideal  (J : (f_1, ..., f_k))  computed degree by degree.

    A degree-t form g belongs exactly when every product g*f_i lies in the
    matching piece of J, which stacks one linear condition block per form.
    """
    forms = list(forms)
    if not forms:
        raise ValueError("colon by the zero ideal is the whole ring")
    for f in forms:
        if f.nvars != j.nvars or f.p != j.p:
            raise ValueError("form lives in the wrong ring")

    nvars, p = j.nvars, j.p

    def piece_fn(t: int) -> ExactMatrix:
        blocks = []
        for f in forms:
            conditions = membership_conditions(j, t + f.degree)
            if conditions.shape[0] == 0:
                continue  # everything of that degree is in J: no constraint
            m = mult_matrix(f, t)
            blocks.append(matmul_mod(conditions, m, p))
        if not blocks:
            return ExactMatrix(np.eye(basis_size(nvars, t), dtype=np.int64), p)
        system = ExactMatrix(np.vstack(blocks), p)
        return system.kernel_basis().transpose()

    return GradedIdeal(nvars, p, piece_fn, label=label)


def cone_extend(a: GradedIdeal, label: str = "") -> GradedIdeal:
    """Extend an ideal in n variables to n+1 (the cone with a new vertex).

    A degree-t element of the extension is a sum over j of
    (new variable)^j times a degree-(t-j) element of the original ideal.
    """
    nvars, p = a.nvars, a.p
    big = nvars + 1

    def piece_fn(t: int) -> ExactMatrix:
        dst_idx = basis_index(big, t)
        blocks = []
        for j in range(t + 1):
            src = a.piece(t - j)
            if not src.rows:
                continue
            src_basis = [m + (j,) for m in monomial_basis(nvars, t - j)]
            cols = [dst_idx[m] for m in src_basis]
            block = np.zeros((src.rows, len(dst_idx)), dtype=np.int64)
            block[:, cols] = src.a
            blocks.append(block)
        if not blocks:
            return _empty(big, t, p)
        return ExactMatrix(np.vstack(blocks), p)

    return GradedIdeal(big, p, piece_fn, label=label)


def contains(a: GradedIdeal, b: GradedIdeal, t: int) -> bool:
    """True when the degree-t piece of ``b`` sits inside that of ``a``."""
    _check_ring(a, b)
    pa, pb = a.piece(t), b.piece(t)
    if not pb.rows:
        return True
    return pa.stack(pb).rank() == pa.rank()


def hypersurface_section(curve: GradedIdeal, f: HomForm, label: str = "") -> GradedIdeal:
    """Ideal of the section of a one-dimensional scheme by a hypersurface.

    Returns the ideal sum  I + (f), checking in every requested degree that
    multiplication by f is injective on the quotient (f avoids the scheme):
    dim (I + f)_t must equal dim I_t + dim R_{t-e} - dim I_{t-e}.  When the
    check fails the chosen hypersurface passes through a component and the
    caller should redraw.
    """
    if f.nvars != curve.nvars or f.p != curve.p:
        raise ValueError("form lives in the wrong ring")
    e = f.degree
    raw = ideal_sum(curve, principal(f))

    def piece_fn(t: int) -> ExactMatrix:
        mat = raw.piece(t)
        expected = curve.dim(t) + curve.ring_dim(t - e) - curve.dim(t - e)
        if mat.rank() != expected:
            raise ValueError(
                f"hypersurface is a zero divisor on the scheme in degree {t}: "
                f"dim {mat.rank()} != {expected}"
            )
        return mat

    return GradedIdeal(curve.nvars, curve.p, piece_fn, label=label)


def basic_double_link(
    f: HomForm, inner: GradedIdeal, outer: GradedIdeal, label: str = ""
) -> GradedIdeal:
    """The ideal  f * I_inner + I_outer  (a basic double link).

    ``outer`` is the ideal of the larger scheme (the curve), ``inner`` the
    ideal containing it (the points being relinked); containment of each used
    piece of ``outer`` inside ``inner`` is verified as pieces are built.
    """
    _check_ring(inner, outer)
    if f.nvars != inner.nvars or f.p != inner.p:
        raise ValueError("form lives in the wrong ring")

    scaled = product_by_form(inner, f)

    def piece_fn(t: int) -> ExactMatrix:
        if not contains(inner, outer, t):
            raise ValueError(
                f"degree-{t} containment failure: the curve ideal is not "
                "inside the point ideal"
            )
        return scaled.piece(t).stack(outer.piece(t))

    return GradedIdeal(inner.nvars, inner.p, piece_fn, label=label)


def pieces_equal(a: GradedIdeal, b: GradedIdeal, degrees) -> bool:
    """Whether the two ideals agree as subspaces in every listed degree."""
    _check_ring(a, b)
    for t in degrees:
        pa, pb = a.piece(t), b.piece(t)
        if pa.rows != pb.rows or pa != pb:  # row_space is canonical
            return False
    return True
