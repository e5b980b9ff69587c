"""Graded monomials and homogeneous forms in n+1 variables.

Monomials of a fixed degree are kept in a deterministic order
(lexicographically descending exponent tuples), so every graded piece of the
polynomial ring has a canonical basis and coefficient vectors are comparable
across runs.  Forms know how to multiply, evaluate at points, substitute
linear images for variables, and expose the matrix of multiplication between
graded pieces — the bridge from geometry to exact linear algebra.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .exactfield import FieldScalar, matmul_mod


@lru_cache(maxsize=None)
def monomial_basis(nvars: int, degree: int) -> tuple:
    """All exponent tuples of the given total degree, lex-descending."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        return ()
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in monomial_basis(nvars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def basis_index(nvars: int, degree: int) -> dict:
    return {m: i for i, m in enumerate(monomial_basis(nvars, degree))}


def basis_size(nvars: int, degree: int) -> int:
    return len(monomial_basis(nvars, degree))


class HomForm:
    """A homogeneous form: coefficient vector over the canonical basis."""

    __slots__ = ("nvars", "degree", "coeffs", "p")

    def __init__(self, nvars: int, degree: int, coeffs, p: int):
        vec = np.asarray(coeffs, dtype=np.int64) % p
        expected = basis_size(nvars, degree)
        if vec.shape != (expected,):
            raise ValueError(
                f"coefficient vector has length {vec.shape}, expected ({expected},)"
            )
        vec = np.ascontiguousarray(vec)
        vec.setflags(write=False)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", vec)
        object.__setattr__(self, "p", p)

    def __setattr__(self, *_):
        raise AttributeError("HomForm is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, degree: int, p: int) -> "HomForm":
        return cls(nvars, degree, np.zeros(basis_size(nvars, degree)), p)

    @classmethod
    def from_dict(cls, nvars: int, degree: int, terms: dict, p: int) -> "HomForm":
        vec = np.zeros(basis_size(nvars, degree), dtype=np.int64)
        idx = basis_index(nvars, degree)
        for mono, c in terms.items():
            mono = tuple(mono)
            if len(mono) != nvars or sum(mono) != degree:
                raise ValueError(f"monomial {mono} does not have degree {degree}")
            vec[idx[mono]] = (vec[idx[mono]] + c) % p
        return cls(nvars, degree, vec, p)

    @classmethod
    def monomial(cls, exps, p: int) -> "HomForm":
        exps = tuple(exps)
        return cls.from_dict(len(exps), sum(exps), {exps: 1}, p)

    @classmethod
    def linear(cls, coeffs, p: int) -> "HomForm":
        """The linear form sum(coeffs[i] * x_i)."""
        coeffs = list(coeffs)
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls.from_dict(n, 1, terms, p)

    @classmethod
    def random(cls, nvars: int, degree: int, rng, p: int) -> "HomForm":
        vec = [rng.randrange(p) for _ in range(basis_size(nvars, degree))]
        return cls(nvars, degree, vec, p)

    # -- inspection --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def terms(self):
        basis = monomial_basis(self.nvars, self.degree)
        for i in np.nonzero(self.coeffs)[0]:
            yield basis[int(i)], int(self.coeffs[int(i)])

    def linear_coeffs(self) -> tuple:
        """Coefficient of each variable; only valid in degree 1."""
        if self.degree != 1:
            raise ValueError("not a linear form")
        out = [0] * self.nvars
        for mono, c in self.terms():
            out[mono.index(1)] = c
        return tuple(out)

    def __eq__(self, other):
        return (
            isinstance(other, HomForm)
            and self.nvars == other.nvars
            and self.degree == other.degree
            and self.p == other.p
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    def __repr__(self):
        parts = []
        for mono, c in list(self.terms())[:4]:
            parts.append(f"{c}*x^{mono}")
        body = " + ".join(parts) if parts else "0"
        return f"HomForm({body}{'...' if len(parts) == 4 else ''})"

    # -- arithmetic --------------------------------------------------------
    def _like(self, other):
        if (
            not isinstance(other, HomForm)
            or other.nvars != self.nvars
            or other.degree != self.degree
            or other.p != self.p
        ):
            raise ValueError("forms are not in the same graded piece")

    def __add__(self, other):
        self._like(other)
        return HomForm(self.nvars, self.degree, self.coeffs + other.coeffs, self.p)

    def __sub__(self, other):
        self._like(other)
        return HomForm(self.nvars, self.degree, self.coeffs - other.coeffs, self.p)

    def scale(self, c: int) -> "HomForm":
        return HomForm(self.nvars, self.degree, self.coeffs * (c % self.p), self.p)

    def __mul__(self, other):
        return multiply(self, other)


def multiply(f: HomForm, g: HomForm) -> HomForm:
    """Product of two homogeneous forms."""
    if f.nvars != g.nvars or f.p != g.p:
        raise ValueError("forms live in different rings")
    p = f.p
    deg = f.degree + g.degree
    vec = np.zeros(basis_size(f.nvars, deg), dtype=np.int64)
    idx = basis_index(f.nvars, deg)
    for mf, cf in f.terms():
        for mg, cg in g.terms():
            mono = tuple(a + b for a, b in zip(mf, mg))
            vec[idx[mono]] = (vec[idx[mono]] + cf * cg) % p
    return HomForm(f.nvars, deg, vec, p)


def product(forms) -> HomForm:
    """Product of a non-empty sequence of forms."""
    forms = list(forms)
    if not forms:
        raise ValueError("empty product")
    acc = forms[0]
    for f in forms[1:]:
        acc = multiply(acc, f)
    return acc


def mult_matrix(f: HomForm, t: int) -> np.ndarray:
    """Matrix of multiplication by ``f`` from degree ``t`` to degree t+deg(f).

    Shape is (N_{t+e}, N_t); for a coefficient column vector c of a degree-t
    form g, the product f*g has coefficient vector  M @ c.
    """
    src = monomial_basis(f.nvars, t)
    dst_idx = basis_index(f.nvars, t + f.degree)
    m = np.zeros((len(dst_idx), len(src)), dtype=np.int64)
    p = f.p
    for j, mono in enumerate(src):
        for mf, cf in f.terms():
            target = tuple(a + b for a, b in zip(mono, mf))
            i = dst_idx[target]
            m[i, j] = (m[i, j] + cf) % p
    return m


def normalize_point(point, p: int) -> tuple:
    """Scale a projective point so its first nonzero coordinate is 1."""
    pt = [int(c) % p for c in point]
    lead = next((c for c in pt if c), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    inv = pow(lead, p - 2, p)
    return tuple((c * inv) % p for c in pt)


def evaluate(f: HomForm, point) -> FieldScalar:
    """Value of the form at a point, as a field scalar."""
    p = f.p
    pt = [c % p for c in point]
    if len(pt) != f.nvars:
        raise ValueError("point has wrong number of coordinates")
    total = 0
    for mono, c in f.terms():
        v = c
        for coord, e in zip(pt, mono):
            if e:
                v = (v * pow(coord, e, p)) % p
        total = (total + v) % p
    return FieldScalar(total, p)


def evaluation_matrix(points, nvars: int, degree: int, p: int) -> np.ndarray:
    """Rows = points, columns = canonical degree-``degree`` monomials.

    Entry (i, j) is the j-th monomial evaluated at the i-th point; built from
    per-coordinate power tables, entirely mod p.
    """
    pts = np.asarray([[c % p for c in pt] for pt in points], dtype=np.int64)
    if pts.size and pts.shape[1] != nvars:
        raise ValueError("points have wrong number of coordinates")
    basis = monomial_basis(nvars, degree)
    n = len(pts)
    out = np.empty((n, len(basis)), dtype=np.int64)
    if n == 0:
        return out
    # power tables: powers[v][e] = coordinate v of each point, to the e-th power
    powers = []
    for v in range(nvars):
        tab = np.empty((degree + 1, n), dtype=np.int64)
        tab[0] = 1
        for e in range(1, degree + 1):
            tab[e] = (tab[e - 1] * pts[:, v]) % p
        powers.append(tab)
    for j, mono in enumerate(basis):
        col = np.ones(n, dtype=np.int64)
        for v, e in enumerate(mono):
            if e:
                col = (col * powers[v][e]) % p
        out[:, j] = col
    return out


def substitute_linear(f: HomForm, images) -> HomForm:
    """Substitute a linear form for each variable: f(img_0, ..., img_n).

    ``images`` must supply one degree-1 form per variable.  The result is
    homogeneous of the same degree as ``f``.
    """
    images = list(images)
    if len(images) != f.nvars:
        raise ValueError("need exactly one image per variable")
    for img in images:
        if img.degree != 1 or img.p != f.p or img.nvars != f.nvars:
            raise ValueError("images must be linear forms in the same ring")
    out = HomForm.zero(f.nvars, f.degree, f.p)
    # cache successive powers of each image as they are needed
    pow_cache = [{0: None} for _ in range(f.nvars)]

    def img_power(v, e):
        cache = pow_cache[v]
        if e not in cache:
            if e == 1:
                cache[1] = images[v]
            else:
                cache[e] = multiply(img_power(v, e - 1), images[v])
        return cache[e]

    for mono, c in f.terms():
        factor = None
        for v, e in enumerate(mono):
            if not e:
                continue
            piece = img_power(v, e)
            factor = piece if factor is None else multiply(factor, piece)
        if factor is None:  # degree-0 form
            term = HomForm(f.nvars, 0, np.array([c]), f.p)
        else:
            term = factor.scale(c)
        out = out + term
    return out


def divisible_by_linear(f: HomForm, ell: HomForm) -> bool:
    """True when the linear form ``ell`` divides ``f``.

    Substitutes the solution of ell = 0 for its leading variable; the form is
    divisible exactly when the substituted form vanishes identically.
    """
    if ell.degree != 1:
        raise ValueError("divisor must be linear")
    if ell.is_zero():
        raise ValueError("zero is not a divisor")
    if f.is_zero():
        return True
    p = f.p
    coeffs = ell.linear_coeffs()
    k = next(i for i, c in enumerate(coeffs) if c)
    inv = pow(coeffs[k], p - 2, p)
    images = []
    for v in range(f.nvars):
        if v != k:
            e = [0] * f.nvars
            e[v] = 1
            images.append(HomForm.linear([1 if i == v else 0 for i in range(f.nvars)], p))
        else:
            # x_k -> -(1/a_k) * sum_{i != k} a_i x_i
            img = [0] * f.nvars
            for i, c in enumerate(coeffs):
                if i != k:
                    img[i] = (-c * inv) % p
            images.append(HomForm.linear(img, p))
    return substitute_linear(f, images).is_zero()


def coeff_rows_to_matrix(forms, p: int) -> np.ndarray:
    """Stack coefficient vectors of same-degree forms as matrix rows."""
    forms = list(forms)
    if not forms:
        raise ValueError("no forms given")
    deg = forms[0].degree
    nv = forms[0].nvars
    for f in forms:
        if f.degree != deg or f.nvars != nv:
            raise ValueError("forms must share a graded piece")
    return np.vstack([f.coeffs for f in forms])


def apply_row_basis(rows: np.ndarray, f: HomForm, t: int) -> np.ndarray:
    """Multiply each row (a degree-t coefficient vector) by the form ``f``.

    Rows of the result are the coefficient vectors of the products in degree
    t + deg(f):  rows @ mult_matrix(f, t).T.
    """
    m = mult_matrix(f, t)
    return matmul_mod(rows, m.T.copy(), f.p)
