import random

import pytest

from blanchfield.catalog import random_seifert
from blanchfield.laurent import LaurentPoly
from blanchfield.matrix import LAURENT, ZZ, Matrix
from blanchfield.mkform import (mk_matrix, mk_pairing_value, standard_symplectic,
                                symplectic_normalize)
from blanchfield.pairing import SeifertData, basis_vector, from_seifert
from blanchfield.verify import random_vector

TREFOIL = SeifertData(Matrix.from_int_rows(ZZ, [[-1, 1], [0, -1]]))


def random_unimodular(rng, n):
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        a, b = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        for j in range(n):
            m[a][j] += c * m[b][j]
        if rng.random() < 0.3:
            m[a] = [-x for x in m[a]]
    return Matrix.from_int_rows(ZZ, m)


def test_standard_form_normalizes_to_identity_congruence():
    std = standard_symplectic(2)
    p = symplectic_normalize(std)
    assert p * std * p.transpose() == std
    assert p == Matrix.identity(ZZ, 4)


def test_sign_flip_2x2():
    s = Matrix.from_int_rows(ZZ, [[0, -1], [1, 0]])
    p = symplectic_normalize(s)
    assert p * s * p.transpose() == standard_symplectic(1)


def test_symplectic_normalize_rejects_bad_input():
    with pytest.raises(ValueError):
        symplectic_normalize(Matrix.from_int_rows(ZZ, [[0]]))
    with pytest.raises(ValueError):
        symplectic_normalize(Matrix.from_int_rows(ZZ, [[0, 1], [1, 0]]))
    with pytest.raises(ValueError):
        symplectic_normalize(Matrix.from_int_rows(ZZ, [[0, 2], [-2, 0]]))


def test_symplectic_round_trip_random():
    rng = random.Random(101)
    for _ in range(50):
        k = rng.randint(1, 3)
        q = random_unimodular(rng, 2 * k)
        s = q.transpose() * standard_symplectic(k) * q
        p = symplectic_normalize(s)
        assert p * s * p.transpose() == standard_symplectic(k)
        assert p.det() in (1, -1)


def test_mk_trefoil_matrix():
    form = mk_matrix(TREFOIL)
    expected = Matrix(LAURENT, [
        [LaurentPoly.const(-1), LaurentPoly(1, (-1,))],
        [LaurentPoly(-1, (-1,)), LaurentPoly.parse("t - 2 + t^-1")],
    ])
    assert form.mk == expected
    assert form.congruence == Matrix.identity(ZZ, 2)


def test_mk_trefoil_determinant_is_alexander_up_to_unit():
    form = mk_matrix(TREFOIL)
    assert form.determinant() == LaurentPoly.parse("-t + 1 - t^-1")
    pres_det = from_seifert(TREFOIL).presentation.det()
    assert form.determinant().is_unit_multiple_of(pres_det)


def test_mk_hermitian():
    form = mk_matrix(TREFOIL)
    assert form.mk.conjugate_transpose() == form.mk


def test_mk_empty():
    form = mk_matrix(SeifertData(Matrix(ZZ, (), cols=0)))
    assert form.size == 0
    assert form.determinant() == LaurentPoly.one()


def test_mk_pairing_trefoil_value_and_hermitian():
    form = mk_matrix(TREFOIL)
    e1, e2 = basis_vector(2, 0), basis_vector(2, 1)
    v11 = mk_pairing_value(form, e1, e1)
    assert str(v11) == "(-t)/(t^2 - t + 1)"
    assert mk_pairing_value(form, e1, e2) == mk_pairing_value(form, e2, e1).conjugate()


def test_mk_pairing_zero_vector():
    form = mk_matrix(TREFOIL)
    zero = (LaurentPoly.zero(), LaurentPoly.zero())
    assert mk_pairing_value(form, zero, basis_vector(2, 0)).is_zero()


def test_mk_pairing_well_defined_under_presentation_shift():
    form = mk_matrix(TREFOIL)
    pp = form.to_presented_pairing()
    rng = random.Random(7)
    for _ in range(10):
        v, w, x = (random_vector(rng, 2) for _ in range(3))
        base = pp.value(v, w)
        shifted = tuple(a + s for a, s in zip(v, form.mk.mul_vec(x)))
        assert pp.value(shifted, w) == base


def test_mk_random_entries_hermitian_det():
    rng = random.Random(55)
    for seed in range(15):
        g = rng.randint(1, 3)
        data = random_seifert(g, 3, seed)
        form = mk_matrix(data)
        assert form.mk.conjugate_transpose() == form.mk
        pres_det = from_seifert(data).presentation.det()
        assert form.determinant().is_unit_multiple_of(pres_det)
        # congruence really standardizes the skew part
        skew = data.matrix - data.matrix.transpose()
        assert (form.congruence * skew * form.congruence.transpose()
                == standard_symplectic(g))
