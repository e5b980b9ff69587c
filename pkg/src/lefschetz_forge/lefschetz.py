"""Artinian reductions and Lefschetz-property analysis, all over GF(p).

A saturated ideal of points in projective 3-space is cut down by a linear
form to an Artinian quotient in one variable fewer; multiplication maps by
linear (and higher-degree) forms between its graded pieces are then plain
matrices whose ranks decide the weak and strong Lefschetz properties.  The
geometric criteria — counting the conditions a general line imposes on a
linear system, comparing product and intersection with the line's ideal, and
exhibiting a hyperplane factor forced into a whole linear system — are
implemented directly on the graded ideals, so failures come with checkable
witnesses rather than only rank computations.
"""

from __future__ import annotations

import numpy as np

from .exactfield import ExactMatrix, matmul_mod, subspace_ops
from .gradedideal import GradedIdeal
from .multipoly import (
    HomForm,
    apply_row_basis,
    basis_index,
    basis_size,
    monomial_basis,
    mult_matrix,
)


def random_linear(rng, p: int, nvars: int) -> HomForm:
    while True:
        coeffs = [rng.randrange(p) for _ in range(nvars)]
        if any(coeffs):
            return HomForm.linear(coeffs, p)


def unimodal(seq) -> bool:
    """True when the sequence never strictly rises after a strict fall."""
    fallen = False
    for a, b in zip(seq, seq[1:]):
        if b < a:
            fallen = True
        elif b > a and fallen:
            return False
    return True


# -- Artinian reduction -------------------------------------------------------

class ArtinianAlgebra:
    """Quotient of a polynomial ring in one fewer variable.

    Cutting by the linear form turns the last variable into a combination of
    the others, so each graded piece of the reduced ideal is the image of the
    original piece under a substitution matrix; the algebra piece is the
    quotient of the full space of lower-variable monomials by that image.
    """

    def __init__(self, nvars: int, p: int, pieces: dict, reducer):
        self.nvars = nvars  # number of variables after reduction
        self.p = p
        self._pieces = pieces  # t -> ExactMatrix, canonical row space
        self.reducer = reducer  # coefficient tuple of the linear form used

    def ideal_piece(self, t: int) -> ExactMatrix:
        if t < 0 or t not in self._pieces:
            raise ValueError(f"degree {t} outside the computed range")
        return self._pieces[t]

    def dim(self, t: int) -> int:
        if t < 0:
            return 0
        return basis_size(self.nvars, t) - self.ideal_piece(t).rows

    @property
    def top_degree(self) -> int:
        return max(self._pieces)

    def h_vector(self) -> tuple:
        vals = [self.dim(t) for t in range(self.top_degree + 1)]
        while vals and vals[-1] == 0:
            vals.pop()
        return tuple(vals)

    def socle_degree(self) -> int:
        return len(self.h_vector()) - 1

    # -- multiplication maps ----------------------------------------------
    def mult_rank(self, f: HomForm, t: int) -> int:
        """Rank of multiplication by ``f`` from degree t to t + deg f."""
        if f.nvars != self.nvars or f.p != self.p:
            raise ValueError("form lives in the wrong ring")
        s = t + f.degree
        target = self.ideal_piece(s)
        if self.dim(t) == 0:
            return 0
        image_rows = mult_matrix(f, t).T.copy()
        combined = target.stack(ExactMatrix(image_rows, self.p))
        return combined.rank() - target.rank()

    def socle_dimension(self, t: int) -> int:
        """Dimension of the socle (killed by every variable) in degree t."""
        piece_now = self.ideal_piece(t)
        conditions = self.ideal_piece(t + 1).kernel_basis().transpose().a
        if conditions.shape[0] == 0:
            return self.dim(t)
        blocks = []
        for v in range(self.nvars):
            x = HomForm.linear(
                [1 if i == v else 0 for i in range(self.nvars)], self.p
            )
            blocks.append(matmul_mod(conditions, mult_matrix(x, t), self.p))
        system = ExactMatrix(np.vstack(blocks), self.p)
        solutions = basis_size(self.nvars, t) - system.rank()
        return solutions - piece_now.rows

    def socle_profile(self) -> dict:
        """Socle dimensions by degree (only the nonzero entries)."""
        out = {}
        for t in range(self.top_degree):
            s = self.socle_dimension(t)
            if s:
                out[t] = s
        return out

    def is_level(self) -> bool:
        prof = self.socle_profile()
        return len(prof) == 1 and max(prof) == self.socle_degree()

    def socle_type(self) -> int:
        return self.socle_profile().get(self.socle_degree(), 0)


def substitution_matrix(reducer, t: int, p: int) -> np.ndarray:
    """Matrix of the substitution killing the last variable, in degree t.

    ``reducer`` is the coefficient tuple of the linear form being quotiented
    out; the last coefficient must be invertible.  Columns are indexed by the
    original monomials, rows by monomials in the remaining variables: a
    monomial with last exponent e lands on (image form)^e times its other
    factors, so the columns sharing that exponent form one multiplication
    block.
    """
    n = len(reducer)
    small = n - 1
    a_last = reducer[-1] % p
    if a_last == 0:
        raise ValueError("last coefficient must be invertible to substitute")
    scale = (-pow(int(a_last), p - 2, p)) % p
    image = HomForm.linear([(scale * c) % p for c in reducer[:-1]], p)

    idx_big = basis_index(n, t)
    out = np.zeros((basis_size(small, t), basis_size(n, t)), dtype=np.int64)
    power = None  # image^e, built up as e increases
    for e in range(t + 1):
        if e:
            power = image if power is None else power * image
        cols = [
            idx_big[rest + (e,)] for rest in monomial_basis(small, t - e)
        ]
        if e == 0:
            block = np.eye(basis_size(small, t), dtype=np.int64)
        else:
            block = mult_matrix(power, t - e)
        out[:, cols] = block
    return out


def artinian_reduce(ideal: GradedIdeal, rng, cutoff: int,
                    expected_h=None, tries: int = 20) -> ArtinianAlgebra:
    """Quotient the ideal by a general linear form, verified degreewise.

    The reduction is only faithful when the chosen form is a non-zerodivisor
    on the quotient ring; that holds exactly when every reduced piece has the
    dimension the first difference of the Hilbert function predicts, which is
    checked for every degree up to the cutoff, redrawing on failure.
    """
    p = ideal.p
    n = ideal.nvars
    if expected_h is None:
        expected = list(ideal.h_vector(cutoff))
    else:
        expected = list(expected_h)
    expected += [0] * (cutoff + 1 - len(expected))

    last_err = None
    for _ in range(tries):
        coeffs = tuple(rng.randrange(p) for _ in range(n - 1)) + (
            1 + rng.randrange(p - 1),
        )
        pieces = {}
        ok = True
        for t in range(cutoff + 1):
            sub = substitution_matrix(coeffs, t, p)
            src = ideal.piece(t)
            if src.rows:
                rows = matmul_mod(src.a, sub.T.copy(), p)
                reduced = ExactMatrix(rows, p).row_space()
            else:
                reduced = ExactMatrix.zeros(0, basis_size(n - 1, t), p)
            pieces[t] = reduced
            if basis_size(n - 1, t) - reduced.rows != expected[t]:
                ok = False
                last_err = (
                    f"degree {t}: reduced dimension "
                    f"{basis_size(n - 1, t) - reduced.rows} != {expected[t]}"
                )
                break
        if ok:
            return ArtinianAlgebra(n - 1, p, pieces, coeffs)
    raise RuntimeError(f"no valid linear reduction found: {last_err}")


# -- rank profiles ------------------------------------------------------------

def wlp_profile(algebra: ArtinianAlgebra, rng, trials: int = 3) -> list:
    """Rank of multiplication by a general linear form in each degree.

    Each map's rank is the maximum over the trials (having maximal rank is an
    open condition, so one good witness settles it); a map with a zero-
    dimensional source or target is maximal by convention.
    """
    out = []
    for t in range(1, algebra.top_degree + 1):
        dim_from = algebra.dim(t - 1)
        dim_to = algebra.dim(t)
        bound = min(dim_from, dim_to)
        rank = 0
        if bound:
            for _ in range(max(trials, 1)):
                ell = random_linear(rng, algebra.p, algebra.nvars)
                rank = max(rank, algebra.mult_rank(ell, t - 1))
                if rank == bound:
                    break
        out.append(
            {
                "from": t - 1,
                "to": t,
                "dim_from": dim_from,
                "dim_to": dim_to,
                "rank": rank,
                "maximal": rank == bound,
            }
        )
    return out


def has_wlp(maps) -> bool:
    return all(m["maximal"] for m in maps)


def slp_rank(algebra: ArtinianAlgebra, e: int, t: int, rng,
             trials: int = 3) -> dict:
    """Best rank of multiplication by a general degree-e form from degree t."""
    dim_from = algebra.dim(t)
    dim_to = algebra.dim(t + e)
    bound = min(dim_from, dim_to)
    rank = 0
    for _ in range(max(trials, 1)):
        f = HomForm.random(algebra.nvars, e, rng, algebra.p)
        rank = max(rank, algebra.mult_rank(f, t))
        if rank == bound:
            break
    return {
        "power": e,
        "from": t,
        "to": t + e,
        "dim_from": dim_from,
        "dim_to": dim_to,
        "rank": rank,
        "maximal": rank == bound,
    }


# -- geometric criteria on the ideal side -------------------------------------

def line_ideal_piece(l1: HomForm, l2: HomForm, t: int) -> ExactMatrix:
    """Degree-t piece of the ideal of the line cut out by two linear forms."""
    p = l1.p
    if t < 1:
        return ExactMatrix.zeros(0, basis_size(l1.nvars, t), p)
    rows = np.vstack(
        [mult_matrix(l1, t - 1).T, mult_matrix(l2, t - 1).T]
    )
    return ExactMatrix(rows.copy(), p).row_space()


def conditions_imposed(ideal: GradedIdeal, l1: HomForm, l2: HomForm,
                       t: int) -> int:
    """How many conditions the line (l1, l2) imposes on the degree-t system."""
    lam = line_ideal_piece(l1, l2, t)
    both = subspace_ops(ideal.piece(t), lam, "intersection")
    return ideal.dim(t) - both.rows


def surjective_by_conditions(ideal: GradedIdeal, l1: HomForm, l2: HomForm,
                             t: int) -> bool:
    """Multiplication onto degree t is surjective iff the line imposes t+1
    conditions on the degree-t piece of the ideal."""
    return conditions_imposed(ideal, l1, l2, t) == t + 1


def product_with_line_piece(ideal: GradedIdeal, l1: HomForm, l2: HomForm,
                            t: int) -> ExactMatrix:
    """Degree-t piece of (ideal * line ideal): both forms times the piece
    one degree down."""
    p = ideal.p
    prev = ideal.piece(t - 1)
    if not prev.rows:
        return ExactMatrix.zeros(0, basis_size(ideal.nvars, t), p)
    rows = np.vstack(
        [apply_row_basis(prev.a, l1, t - 1), apply_row_basis(prev.a, l2, t - 1)]
    )
    return ExactMatrix(rows, p).row_space()


def injective_by_product(ideal: GradedIdeal, l1: HomForm, l2: HomForm,
                         t: int) -> dict:
    """Injectivity into degree t via product-versus-intersection dimensions.

    The multiplication map into degree t is injective exactly when the
    product of the ideal with the line's ideal fills the whole intersection
    in that degree.
    """
    lam = line_ideal_piece(l1, l2, t)
    inter = subspace_ops(ideal.piece(t), lam, "intersection")
    prod = product_with_line_piece(ideal, l1, l2, t)
    return {
        "degree": t,
        "product_dim": prod.rows,
        "intersection_dim": inter.rows,
        "injective": prod.rows == inter.rows,
    }


def system_has_no_plane_factor(ideal: GradedIdeal, t: int, rng,
                               attempts: int = 40) -> bool:
    """Certify that no hyperplane divides every member of the degree-t piece.

    Restricting the whole system to a line turns each member into a binary
    form.  A common hyperplane factor would put one rational zero (where the
    line crosses the hyperplane) into every restriction, on every line — so
    a line whose restrictions share no rational zero at all (or, for a
    one-dimensional system, a single restriction with no rational zero)
    proves no such hyperplane exists, for every hyperplane at once.

    True is a proof; False only means no certifying line was found among
    the attempts (the line may keep hitting base points of the system).
    """
    piece = ideal.piece(t)
    if piece.rows == 0:
        return False  # empty system: nothing to restrict
    p = ideal.p
    s = np.arange(p, dtype=np.int64)
    for _ in range(attempts):
        u, w = random_points(2, rng, p, nvars=ideal.nvars)
        affine = (np.outer(s, np.array(w, dtype=np.int64))
                  + np.array(u, dtype=np.int64)) % p
        pts = [tuple(int(c) for c in row) for row in affine]
        pts.append(tuple(w))
        ev = evaluation_matrix(pts, ideal.nvars, t, p)
        vals = matmul_mod(ev, piece.a.T.copy(), p)
        if piece.rows == 1:
            if np.all(vals != 0):  # restriction has no rational zero
                return True
        else:
            if np.all(np.any(vals != 0, axis=1)):  # no common rational zero
                return True
    return False


def base_locus_certificate(ideal: GradedIdeal, plane: HomForm, t: int) -> bool:
    """True when the whole degree-t system has the hyperplane as a factor.

    Containment of the piece in plane * R_{t-1} is exactly the statement
    that the hyperplane sits in the base locus of the linear system, which
    forces a general line's trace point to be a base point — the geometric
    reason a multiplication map fails to be surjective.
    """
    piece = ideal.piece(t)
    if not piece.rows:
        return False
    divisible = ExactMatrix(mult_matrix(plane, t - plane.degree).T.copy(), ideal.p)
    return divisible.stack(piece).rank() == divisible.rank()
