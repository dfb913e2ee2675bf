"""Tests for exact linear algebra: elimination, canonical forms, builders.

Determinants, characteristic polynomials, and minimal polynomials are
checked against the brute-force expansions in oracles.py on every small
case; the canonical-form routines are checked by re-verifying the change
of basis they return.
"""

import itertools
import random

import pytest

from heisenmod import (
    GF,
    DoesNotSplit,
    Echelon,
    FieldElem,
    Matrix,
    MixedFields,
    NonMonic,
    Poly,
    ShapeMismatch,
    Singular,
    assemble_grid,
    char_poly,
    commutator,
    companion,
    direct_sum,
    eigenvalues_with_multiplicity,
    frobenius_form,
    jordan_block,
    jordan_form,
    kron,
    make_extension,
    min_poly,
    poly_apply,
    poly_at,
    similarity_transform,
)
from oracles import brute_char_poly, brute_det, brute_min_poly


def ext(p, m):
    from heisenmod import find_irreducible

    return make_extension(p, find_irreducible(p, m))


def rand_matrix(field, rows, cols, rng):
    return Matrix(field, rows, cols, [rng.randrange(field.order) for _ in range(rows * cols)])


def rand_invertible(field, n, rng):
    while True:
        m = rand_matrix(field, n, n, rng)
        if not m.det().is_zero():
            return m


FIELDS = [GF(2), GF(3), GF(5), ext(2, 2)]


# -- plain arithmetic ---------------------------------------------------------


def test_multiplication_matches_naive_triple_loop():
    rng = random.Random(1)
    for field in FIELDS:
        for _ in range(20):
            r, k, c = rng.randrange(1, 5), rng.randrange(1, 5), rng.randrange(1, 5)
            a = rand_matrix(field, r, k, rng)
            b = rand_matrix(field, k, c, rng)
            prod = a * b
            for i in range(r):
                for j in range(c):
                    acc = field.zero()
                    for t in range(k):
                        acc = acc + a.at(i, t) * b.at(t, j)
                    assert prod.at(i, j) == acc


def test_scalar_multiplication_and_negation():
    field = GF(7)
    rng = random.Random(2)
    a = rand_matrix(field, 3, 3, rng)
    three = field.element(3)
    assert three * a == a + a + a
    assert -a + a == Matrix.zeros(field, 3, 3)


def test_pow_repeated_product_and_negative_exponent():
    field = GF(5)
    rng = random.Random(3)
    a = rand_invertible(field, 3, rng)
    assert a**0 == Matrix.identity(field, 3)
    assert a**3 == a * a * a
    assert a ** (-2) == a.inv() * a.inv()


def test_apply_agrees_with_column_product():
    rng = random.Random(4)
    for field in FIELDS:
        a = rand_matrix(field, 3, 4, rng)
        v = [rng.randrange(field.order) for _ in range(4)]
        col = Matrix(field, 4, 1, v)
        assert a.apply(v) == (a * col).column(0)
    with pytest.raises(ShapeMismatch):
        a.apply([0, 0, 0])


def test_transpose_and_trace():
    field = GF(3)
    rng = random.Random(5)
    a = rand_matrix(field, 3, 4, rng)
    assert a.transpose().transpose() == a
    b = rand_matrix(field, 4, 3, rng)
    assert (a * b).transpose() == b.transpose() * a.transpose()
    assert (a * b).trace() == (b * a).trace()


def test_from_columns_round_trip():
    field = GF(5)
    rng = random.Random(6)
    cols = [[rng.randrange(5) for _ in range(3)] for _ in range(4)]
    m = Matrix.from_columns(field, cols)
    assert (m.rows, m.cols) == (3, 4)
    for j, c in enumerate(cols):
        assert m.column(j) == c


def test_mixed_fields_raise():
    a = Matrix.identity(GF(2), 2)
    b = Matrix.identity(GF(3), 2)
    with pytest.raises(MixedFields):
        a * b
    with pytest.raises(MixedFields):
        a + b


def test_is_scalar():
    field = GF(5)
    assert Matrix.scalar(field, 3, 4).is_scalar() == field.element(4)
    assert Matrix.identity(field, 3).is_scalar() == field.one()
    assert jordan_block(field, 2, 3).is_scalar() is None
    assert Matrix(field, 2, 3, [0] * 6).is_scalar() is None


# -- elimination --------------------------------------------------------------


def test_rref_shape_and_idempotence():
    rng = random.Random(7)
    for field in FIELDS:
        for _ in range(15):
            a = rand_matrix(field, rng.randrange(1, 5), rng.randrange(1, 5), rng)
            r, pivots = a.rref()
            assert list(pivots) == sorted(pivots)
            for k, p in enumerate(pivots):
                # pivot columns are standard basis vectors
                assert r.column(p) == [1 if i == k else 0 for i in range(a.rows)]
            again, pivots2 = r.rref()
            assert again == r and pivots2 == pivots


def test_rank_nullity_and_kernel():
    rng = random.Random(8)
    for field in FIELDS:
        for _ in range(15):
            a = rand_matrix(field, rng.randrange(1, 5), rng.randrange(1, 6), rng)
            kernel = a.kernel_basis()
            assert a.rank() + len(kernel) == a.cols
            for v in kernel:
                assert not any(a.apply(v))
            # kernel vectors are independent: each has a 1 where others are 0
            ech = Echelon(field, a.cols)
            for v in kernel:
                assert ech.insert(v) is not None


def test_solve_finds_a_solution_and_detects_inconsistency():
    rng = random.Random(9)
    for field in FIELDS:
        for _ in range(15):
            a = rand_matrix(field, rng.randrange(1, 5), rng.randrange(1, 5), rng)
            x = [rng.randrange(field.order) for _ in range(a.cols)]
            b = a.apply(x)
            y = a.solve(b)
            assert y is not None and a.apply(y) == b
    a = Matrix.from_rows(GF(3), [[1, 0], [1, 0]])
    assert a.solve([1, 2]) is None
    with pytest.raises(ShapeMismatch):
        a.solve([1, 2, 3])


def test_inv_round_trip_and_singular():
    rng = random.Random(10)
    for field in FIELDS:
        for n in range(1, 5):
            a = rand_invertible(field, n, rng)
            assert a * a.inv() == Matrix.identity(field, n)
            assert a.inv() * a == Matrix.identity(field, n)
    with pytest.raises(Singular):
        Matrix.zeros(GF(2), 2, 2).inv()
    with pytest.raises(ShapeMismatch):
        Matrix.zeros(GF(2), 2, 3).inv()


def test_echelon_tracks_span():
    field = GF(3)
    ech = Echelon(field, 3)
    assert ech.insert([1, 2, 0]) == 0
    assert ech.insert([0, 1, 1]) == 1
    assert ech.insert([1, 0, 1]) is None  # the sum of the first two
    assert ech.dim == 2
    assert ech.contains([2, 1, 0])  # twice the first
    assert not ech.contains([0, 0, 1])
    assert not any(ech.reduce([1, 0, 1]))
    for row, piv in zip(ech.sorted_rows(), sorted(ech.pivots)):
        assert row[piv] == 1  # normalized pivots in pivot order


# -- determinant and characteristic polynomial --------------------------------


def test_det_matches_permutation_expansion_exhaustive_gf2():
    field = GF(2)
    for bits in itertools.product(range(2), repeat=9):
        m = Matrix(field, 3, 3, list(bits))
        assert m.det() == brute_det(m)


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_det_matches_permutation_expansion_random(field):
    rng = random.Random(field.order)
    for n in range(1, 5):
        for _ in range(10):
            m = rand_matrix(field, n, n, rng)
            assert m.det() == brute_det(m)


def test_det_is_multiplicative():
    rng = random.Random(11)
    for field in FIELDS:
        for _ in range(10):
            a = rand_matrix(field, 3, 3, rng)
            b = rand_matrix(field, 3, 3, rng)
            assert (a * b).det() == a.det() * b.det()


def test_char_poly_matches_permutation_expansion_exhaustive_gf2():
    field = GF(2)
    for bits in itertools.product(range(2), repeat=4):
        m = Matrix(field, 2, 2, list(bits))
        assert char_poly(m) == brute_char_poly(m)


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_char_poly_matches_permutation_expansion_random(field):
    rng = random.Random(field.order + 1)
    for n in range(1, 5):
        for _ in range(6):
            m = rand_matrix(field, n, n, rng)
            f = char_poly(m)
            assert f == brute_char_poly(m)
            assert f.is_monic() and f.degree == n
            assert poly_at(f, m).is_zero()  # Cayley-Hamilton


# -- minimal polynomial --------------------------------------------------------


def test_min_poly_matches_kernel_oracle_exhaustive_gf2():
    field = GF(2)
    for bits in itertools.product(range(2), repeat=4):
        m = Matrix(field, 2, 2, list(bits))
        assert min_poly(m) == brute_min_poly(m)


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_min_poly_matches_kernel_oracle_random(field):
    rng = random.Random(field.order + 2)
    for n in range(1, 5):
        for _ in range(6):
            m = rand_matrix(field, n, n, rng)
            f = min_poly(m)
            assert f == brute_min_poly(m)
            assert f.is_monic()
            assert poly_at(f, m).is_zero()
            assert not (char_poly(m) % f).coeffs  # divides the char poly


def ppow(f, k):
    out = Poly(f.field, [1])
    for _ in range(k):
        out = out * f
    return out


def test_min_poly_of_scalar_is_linear():
    field = GF(7)
    m = Matrix.scalar(field, 4, 3)
    assert min_poly(m) == Poly(field, [-3, 1]).monic()
    assert char_poly(m) == ppow(Poly(field, [-3, 1]), 4)


# -- structured builders -------------------------------------------------------


def test_companion_display_convention():
    field = GF(5)
    alpha = field.element(2)
    f = Poly(field, [-alpha, field.zero(), field.one()])  # X^2 - alpha
    c = companion(f)
    assert c.row_lists() == [[0, 2], [1, 0]]
    with pytest.raises(NonMonic):
        companion(Poly(field, [1, 2]))
    with pytest.raises(NonMonic):
        companion(Poly(field, [3]))


def test_companion_has_its_polynomial_as_min_and_char_poly():
    rng = random.Random(12)
    for field in [GF(2), GF(3), ext(2, 2)]:
        for deg in range(1, 5):
            coeffs = [rng.randrange(field.order) for _ in range(deg)] + [1]
            f = Poly(field, coeffs)
            c = companion(f)
            assert min_poly(c) == f
            assert char_poly(c) == f


def test_jordan_block_display_convention():
    field = GF(5)
    j = jordan_block(field, 3, 3)
    assert j.row_lists() == [[3, 0, 0], [1, 3, 0], [0, 1, 3]]
    assert min_poly(j) == ppow(Poly(field, [-3, 1]), 3)


def test_direct_sum_blocks():
    field = GF(3)
    a = Matrix.from_rows(field, [[1, 2], [0, 1]])
    b = Matrix.from_rows(field, [[2]])
    s = direct_sum([a, b])
    assert s.row_lists() == [[1, 2, 0], [0, 1, 0], [0, 0, 2]]
    rng = random.Random(13)
    c, d = rand_matrix(field, 2, 2, rng), rand_matrix(field, 1, 1, rng)
    assert direct_sum([a, b]) * direct_sum([c, d]) == direct_sum([a * c, b * d])
    with pytest.raises(ShapeMismatch):
        direct_sum([])


def test_kron_mixed_product_rule():
    rng = random.Random(14)
    for field in [GF(2), GF(5)]:
        a, c = (rand_matrix(field, 2, 2, rng) for _ in range(2))
        b, d = (rand_matrix(field, 3, 3, rng) for _ in range(2))
        assert kron(a, b) * kron(c, d) == kron(a * c, b * d)
    field = GF(3)
    a = Matrix.from_rows(field, [[0, 1], [2, 0]])
    assert kron(a, Matrix.identity(field, 2)).row_lists() == [
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [2, 0, 0, 0],
        [0, 2, 0, 0],
    ]


def test_assemble_grid_matches_block_layout():
    field = GF(3)
    rng = random.Random(15)
    blocks = [[rand_matrix(field, 2, 2, rng) for _ in range(2)] for _ in range(2)]
    m = assemble_grid(blocks)
    for bi in range(2):
        for bj in range(2):
            for i in range(2):
                for j in range(2):
                    assert m.at(2 * bi + i, 2 * bj + j) == blocks[bi][bj].at(i, j)
    with pytest.raises(ShapeMismatch):
        assemble_grid([[Matrix.identity(field, 2), Matrix.identity(field, 1)]])


def test_commutator_identities():
    field = GF(5)
    rng = random.Random(16)
    a, b = rand_matrix(field, 3, 3, rng), rand_matrix(field, 3, 3, rng)
    assert commutator(a, b) == a * b - b * a
    assert commutator(a, b) + commutator(b, a) == Matrix.zeros(field, 3, 3)
    assert commutator(a, b).trace() == field.zero()


def test_poly_at_matches_power_sum_and_poly_apply():
    rng = random.Random(17)
    for field in [GF(3), ext(2, 2)]:
        a = rand_matrix(field, 3, 3, rng)
        coeffs = [rng.randrange(field.order) for _ in range(5)]
        f = Poly(field, coeffs)
        expect = Matrix.zeros(field, 3, 3)
        for i, c in enumerate(coeffs):
            expect = expect + FieldElem(field, c) * a**i
        assert poly_at(f, a) == expect
        v = [rng.randrange(field.order) for _ in range(3)]
        assert poly_apply(f, a, v) == poly_at(f, a).apply(v)


# -- canonical forms -----------------------------------------------------------


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_frobenius_form_certificate(field):
    rng = random.Random(field.order + 3)
    for n in range(1, 6):
        for _ in range(4):
            a = rand_matrix(field, n, n, rng)
            cf = frobenius_form(a)
            factors = cf.invariant_factors
            assert all(d.is_monic() for d in factors)
            for d1, d2 in zip(factors, factors[1:]):
                assert not (d2 % d1).coeffs  # ascending divisibility chain
            prod = Poly(field, [1])
            for d in factors:
                prod = prod * d
            assert prod == char_poly(a)
            assert factors[-1] == min_poly(a)
            t = cf.transform
            assert t.inv() * a * t == cf.form


def test_frobenius_form_is_a_similarity_invariant():
    rng = random.Random(18)
    for field in [GF(2), GF(3)]:
        for _ in range(8):
            a = rand_matrix(field, 4, 4, rng)
            g = rand_invertible(field, 4, rng)
            b = g.inv() * a * g
            assert frobenius_form(a).invariant_factors == frobenius_form(b).invariant_factors


def test_similarity_transform_decides_and_certifies():
    rng = random.Random(19)
    field = GF(3)
    for _ in range(10):
        a = rand_matrix(field, 4, 4, rng)
        g = rand_invertible(field, 4, rng)
        b = g.inv() * a * g
        t = similarity_transform(a, b)
        assert t is not None
        assert t.inv() * a * t == b
    # same char poly, different min poly: not similar
    a = jordan_block(field, 1, 2)
    b = Matrix.identity(field, 2)
    assert char_poly(a) == char_poly(b)
    assert similarity_transform(a, b) is None
    assert similarity_transform(a, Matrix.identity(field, 3)) is None


def test_eigenvalues_with_multiplicity():
    field = GF(5)
    a = direct_sum([jordan_block(field, 2, 2), jordan_block(field, 4, 1)])
    eig, rest = eigenvalues_with_multiplicity(a)
    assert eig == [(2, 2), (4, 1)]
    assert rest.degree == 0
    b = companion(Poly(GF(2), [1, 1, 1]))  # irreducible, no roots
    eig, rest = eigenvalues_with_multiplicity(b)
    assert eig == [] and rest.degree == 2


def test_jordan_form_recovers_conjugated_blocks():
    rng = random.Random(20)
    for field in [GF(2), GF(3), GF(5)]:
        for _ in range(6):
            spec = []
            total = 0
            while total < 4:
                size = rng.randrange(1, 5 - total)
                spec.append((rng.randrange(field.order), size))
                total += size
            j = direct_sum([jordan_block(field, lam, s) for lam, s in spec])
            g = rand_invertible(field, total, rng)
            a = g.inv() * j * g
            got, t = jordan_form(a)
            assert t.inv() * a * t == got
            # read the block multiset back off the recovered form
            blocks = []
            i = 0
            while i < total:
                lam = got.code_at(i, i)
                size = 1
                while i + size < total and got.code_at(i + size, i + size - 1) == 1:
                    size += 1
                blocks.append((lam, size))
                i += size
            assert sorted(blocks) == sorted(spec)


def test_jordan_form_orders_blocks_by_eigenvalue_then_size():
    field = GF(7)
    j = direct_sum(
        [jordan_block(field, 5, 1), jordan_block(field, 2, 2), jordan_block(field, 2, 1)]
    )
    got, _ = jordan_form(j)
    assert got == direct_sum(
        [jordan_block(field, 2, 2), jordan_block(field, 2, 1), jordan_block(field, 5, 1)]
    )


def test_jordan_form_requires_split_char_poly():
    with pytest.raises(DoesNotSplit):
        jordan_form(companion(Poly(GF(2), [1, 1, 1])))


def test_shape_errors():
    field = GF(3)
    rect = Matrix.zeros(field, 2, 3)
    for op in (rect.det, rect.trace, lambda: min_poly(rect), lambda: char_poly(rect),
               lambda: frobenius_form(rect), lambda: jordan_form(rect)):
        with pytest.raises(ShapeMismatch):
            op()
    with pytest.raises(ShapeMismatch):
        Matrix.zeros(field, 2, 3) * Matrix.zeros(field, 2, 3)
