from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from affdescent.measures import (convolve, left_mult_matrix, point_mass, pushforward_classes,
                                 spectrum, uniform, xk_coefficient_A, xk_coefficient_A_forms,
                                 xk_coefficient_C, xk_measure)
from affdescent.weyl import Group, descent_stats_C


@pytest.mark.parametrize("w, k, expected", [((1, 2, 3), 2, F(1, 4)), ((2, 1, 3), 2, 0),
                                            ((3, 2, 1), 2, F(1, 4))])
def test_type_a_examples(w, k, expected):
    assert xk_coefficient_A(w, k) == expected


@pytest.mark.parametrize("w, k, expected", [((1,), 3, F(2, 3)), ((-1,), 3, F(1, 3)), ((1,), 2, F(1, 2))])
def test_type_c_examples(w, k, expected):
    assert xk_coefficient_C(w, k) == expected


def test_s3_x2_table():
    m = xk_measure("A", 3, 2)
    assert dict(m.values) == {(1, 2, 3): F(1, 4), (3, 2, 1): F(1, 4), (2, 3, 1): F(1, 4),
                              (3, 1, 2): F(1, 4), (2, 1, 3): 0, (1, 3, 2): 0}


def test_k1_is_point_mass():
    for n in range(1, 6):
        assert xk_measure("A", n, 1) == point_mass(Group("A", n))
    for n in range(1, 4):
        assert xk_measure("C", n, 1) == point_mass(Group("C", n))


def test_c1_k2():
    assert dict(xk_measure("C", 1, 2).values) == {(1,): F(1, 2), (-1,): F(1, 2)}


def test_rejects_k_zero():
    with pytest.raises(ValueError):
        xk_measure("A", 3, 0)
    with pytest.raises(ValueError):
        xk_measure("A", 3, 2, method="bogus")


@pytest.mark.parametrize("kind, sizes", [("A", range(1, 7)), ("C", range(1, 5))])
def test_total_mass_one(kind, sizes):
    for n in sizes:
        for k in range(1, 7):
            m = xk_measure(kind, n, k)
            assert m.total() == 1
            assert all(p >= 0 for p in m.values.values())


@pytest.mark.parametrize("kind, sizes", [("A", range(1, 6)), ("C", range(1, 4))])
def test_definition_equals_closed_form(kind, sizes):
    for n in sizes:
        for k in range(1, 5):
            assert xk_measure(kind, n, k, "definition") == xk_measure(kind, n, k), (kind, n, k)


def test_four_type_a_forms_agree():
    for n in range(1, 7):
        for w in Group("A", n).elements():
            for k in range(1, 7):
                forms = xk_coefficient_A_forms(w, k)
                assert len(set(forms)) == 1, (w, k, forms)


def test_type_c_odd_k_depends_on_descents_only():
    for n in range(1, 5):
        for k in (1, 3, 5):
            by_d = {}
            for w in Group("C", n).elements():
                by_d.setdefault(descent_stats_C(w).d, set()).add(xk_coefficient_C(w, k))
            assert all(len(vals) == 1 for vals in by_d.values())


@pytest.mark.parametrize("kind, sizes", [("A", range(1, 6)), ("C", range(1, 4))])
def test_convolution(kind, sizes):
    for n in sizes:
        for k in range(1, 10):
            for h in range(1, 10 // k + 1):
                if k * h > 9:
                    continue
                got = convolve(xk_measure(kind, n, k), xk_measure(kind, n, h))
                assert got == xk_measure(kind, n, k * h), (kind, n, k, h)


def test_convolution_group_mismatch():
    with pytest.raises(ValueError):
        convolve(xk_measure("A", 3, 2), xk_measure("A", 4, 2))


@given(st.integers(1, 5), st.integers(1, 6))
def test_point_mass_is_neutral(n, k):
    m = xk_measure("A", n, k)
    assert convolve(point_mass(m.group), m) == m


def test_pushforward_examples():
    assert pushforward_classes(xk_measure("A", 3, 2)) == {
        (1, 1, 1): F(1, 4), (2, 1): F(1, 4), (3,): F(1, 2)}
    assert pushforward_classes(xk_measure("C", 1, 3)) == {((1,), ()): F(2, 3), ((), (1,)): F(1, 3)}
    assert pushforward_classes(point_mass(Group("A", 4))) == {(1, 1, 1, 1): 1, (2, 1, 1): 0, (2, 2): 0,
                                                             (3, 1): 0, (4,): 0}


def test_left_mult_matrix_point_mass_is_identity():
    elements, matrix = left_mult_matrix(point_mass(Group("C", 2)))
    assert matrix == [[int(i == j) for j in range(len(elements))] for i in range(len(elements))]


@pytest.mark.parametrize("kind, n, k", [("A", 3, 2), ("A", 4, 3), ("C", 2, 3)])
def test_left_mult_matrix_columns_and_uniform(kind, n, k):
    elements, matrix = left_mult_matrix(xk_measure(kind, n, k))
    size = len(elements)
    for j in range(size):
        assert sum(matrix[i][j] for i in range(size)) == 1
    u = F(1, size)
    for row in matrix:
        assert sum(x * u for x in row) == u


def test_left_mult_matrix_guard():
    with pytest.raises(ValueError):
        left_mult_matrix(uniform(Group("A", 6)))


def test_spectrum_has_eigenvalue_one():
    eig = spectrum(xk_measure("A", 3, 2))
    assert eig[0] == 1
    assert all(abs(z) <= 1 + 1e-9 for z in eig)
