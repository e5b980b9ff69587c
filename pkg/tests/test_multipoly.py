import math
import random

import numpy as np
import pytest

from lefschetz_forge import multipoly as mp
from lefschetz_forge.exactfield import FieldScalar

P = 32003


def binom(n, k):
    return math.comb(n, k)


def test_basis_sizes_match_binomials():
    for nvars in (2, 3, 4):
        for t in range(7):
            assert mp.basis_size(nvars, t) == binom(t + nvars - 1, nvars - 1)


def test_basis_order_is_lex_descending():
    basis = mp.monomial_basis(3, 2)
    assert basis == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    for nvars, t in [(2, 5), (4, 3)]:
        b = mp.monomial_basis(nvars, t)
        assert list(b) == sorted(b, reverse=True)
        assert all(sum(m) == t for m in b)
        assert len(set(b)) == len(b)


def test_monomial_and_linear_constructors():
    f = mp.HomForm.monomial((1, 2, 0), P)
    assert f.degree == 3 and f.nvars == 3
    assert dict(f.terms()) == {(1, 2, 0): 1}
    ell = mp.HomForm.linear([5, 0, 7], P)
    assert dict(ell.terms()) == {(1, 0, 0): 5, (0, 0, 1): 7}
    assert ell.linear_coeffs() == (5, 0, 7)


def test_form_is_immutable():
    f = mp.HomForm.monomial((2, 0), P)
    with pytest.raises(AttributeError):
        f.degree = 5
    with pytest.raises(ValueError):
        f.coeffs[0] = 9


def test_multiply_difference_of_squares():
    x = mp.HomForm.linear([1, 0], P)
    y = mp.HomForm.linear([0, 1], P)
    prod = (x + y) * (x - y)
    expected = mp.HomForm.from_dict(2, 2, {(2, 0): 1, (0, 2): -1}, P)
    assert prod == expected


def test_multiply_commutes_and_adds_degrees():
    rng = random.Random(7)
    for _ in range(5):
        f = mp.HomForm.random(3, rng.randrange(1, 4), rng, P)
        g = mp.HomForm.random(3, rng.randrange(1, 4), rng, P)
        fg = mp.multiply(f, g)
        assert fg.degree == f.degree + g.degree
        assert fg == mp.multiply(g, f)


def test_product_helper():
    x = mp.HomForm.linear([1, 0, 0], P)
    cube = mp.product([x, x, x])
    assert cube == mp.HomForm.monomial((3, 0, 0), P)
    with pytest.raises(ValueError):
        mp.product([])


def test_mult_matrix_agrees_with_multiply():
    rng = random.Random(11)
    for _ in range(5):
        f = mp.HomForm.random(4, rng.randrange(1, 3), rng, P)
        t = rng.randrange(0, 3)
        g = mp.HomForm.random(4, t, rng, P)
        m = mp.mult_matrix(f, t)
        assert m.shape == (mp.basis_size(4, t + f.degree), mp.basis_size(4, t))
        via_matrix = (m @ g.coeffs) % P
        assert np.array_equal(via_matrix, mp.multiply(f, g).coeffs)


def test_evaluate_linear_form():
    ell = mp.HomForm.linear([2, 3, 5], P)
    assert mp.evaluate(ell, (1, 1, 1)) == FieldScalar(10, P)
    assert mp.evaluate(ell, (1, 2, P - 1)) == FieldScalar(2 + 6 - 5, P)


def test_evaluate_is_multiplicative():
    rng = random.Random(13)
    for _ in range(5):
        f = mp.HomForm.random(3, 2, rng, P)
        g = mp.HomForm.random(3, 3, rng, P)
        pt = tuple(rng.randrange(P) for _ in range(3))
        lhs = mp.evaluate(mp.multiply(f, g), pt)
        assert lhs == mp.evaluate(f, pt) * mp.evaluate(g, pt)


def test_evaluation_matrix_matches_pointwise():
    rng = random.Random(17)
    pts = [tuple(rng.randrange(P) for _ in range(4)) for _ in range(6)]
    m = mp.evaluation_matrix(pts, 4, 3, P)
    basis = mp.monomial_basis(4, 3)
    assert m.shape == (6, len(basis))
    for i, pt in enumerate(pts):
        for j in rng.sample(range(len(basis)), 8):
            mono = mp.HomForm.monomial(basis[j], P)
            assert m[i, j] == int(mp.evaluate(mono, pt))


def test_evaluation_matrix_vandermonde():
    # two variables: evaluating all degree-d monomials at (1, a) gives powers of a
    pts = [(1, 4)]
    m = mp.evaluation_matrix(pts, 2, 3, P)
    assert list(m[0]) == [1, 4, 16, 64]


def test_normalize_point():
    assert mp.normalize_point((0, 3, 6), P) == (0, 1, 2)
    assert mp.normalize_point((2, 4), P) == (1, 2)
    with pytest.raises(ValueError):
        mp.normalize_point((0, 0, 0), P)


def test_substitute_identity_and_swap():
    rng = random.Random(19)
    f = mp.HomForm.random(3, 4, rng, P)
    ident = [mp.HomForm.linear([1 if i == v else 0 for i in range(3)], P) for v in range(3)]
    assert mp.substitute_linear(f, ident) == f
    # swapping two variables twice is the identity
    swap = [ident[1], ident[0], ident[2]]
    assert mp.substitute_linear(mp.substitute_linear(f, swap), swap) == f


def test_substitute_commutes_with_evaluation():
    rng = random.Random(23)
    f = mp.HomForm.random(3, 3, rng, P)
    images = [mp.HomForm.linear([rng.randrange(P) for _ in range(3)], P) for _ in range(3)]
    g = mp.substitute_linear(f, images)
    for _ in range(4):
        pt = tuple(rng.randrange(P) for _ in range(3))
        image_pt = tuple(int(mp.evaluate(img, pt)) for img in images)
        assert mp.evaluate(g, pt) == mp.evaluate(f, image_pt)


def test_divisible_by_linear():
    x = mp.HomForm.linear([1, 0], P)
    y = mp.HomForm.linear([0, 1], P)
    f = (x + y) * (x - y)
    assert mp.divisible_by_linear(f, x + y)
    assert mp.divisible_by_linear(f, x - y)
    assert not mp.divisible_by_linear(f, x)
    assert not mp.divisible_by_linear(f, mp.HomForm.linear([1, 2], P))


def test_divisible_by_linear_random_products():
    rng = random.Random(29)
    for _ in range(5):
        ell = mp.HomForm.linear([rng.randrange(1, P) for _ in range(4)], P)
        f = mp.HomForm.random(4, 2, rng, P)
        assert mp.divisible_by_linear(mp.multiply(ell, f), ell)
    zero = mp.HomForm.zero(4, 3, P)
    assert mp.divisible_by_linear(zero, ell)
    with pytest.raises(ValueError):
        mp.divisible_by_linear(f, mp.HomForm.zero(4, 1, P))


def test_apply_row_basis_matches_multiply():
    rng = random.Random(31)
    t = 2
    forms = [mp.HomForm.random(3, t, rng, P) for _ in range(3)]
    rows = mp.coeff_rows_to_matrix(forms, P)
    ell = mp.HomForm.linear([1, 5, 9], P)
    out = mp.apply_row_basis(rows, ell, t)
    for i, f in enumerate(forms):
        assert np.array_equal(out[i], mp.multiply(ell, f).coeffs)
