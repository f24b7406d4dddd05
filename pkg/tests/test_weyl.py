import pytest
from hypothesis import given, strategies as st

from affdescent.roots import cyclic_descent_set, root_datum, root_image
from affdescent.weyl import (Group, compose, cycle_shape, cycle_shape_multiset, cycle_type,
                             descent_stats_A, descent_stats_C, inverse, is_unimodal,
                             shape_as_permutation)


def test_cyclic_descents_of_41325():
    assert descent_stats_A((4, 1, 3, 2, 5)).cd == 3


def test_identity_stats_type_a():
    for n in range(2, 7):
        s = descent_stats_A(tuple(range(1, n + 1)))
        assert (s.d, s.maj, s.cd) == (0, 0, 1)


def test_reversal_s3():
    s = descent_stats_A((3, 2, 1))
    assert s.Des == {1, 2} and s.maj == 3 and s.cd == 2 and s.length == 3


def test_signed_example():
    s = descent_stats_C((-2, 3, 1, 4, -6, -5, 7))
    assert s.Des == {1, 2, 6} and s.d == 3 and s.cd == 3


def test_identity_and_negation_type_c():
    s = descent_stats_C((1, 2, 3))
    assert (s.d, s.cd) == (0, 1)
    s = descent_stats_C((-1,))
    assert (s.d, s.cd) == (1, 1)


@pytest.mark.parametrize("kind, n, size", [("A", 3, 6), ("C", 2, 8), ("C", 1, 2), ("A", 5, 120)])
def test_enumeration_sizes(kind, n, size):
    elements = list(Group(kind, n).elements())
    assert len(elements) == size == len(set(elements))
    assert elements == sorted(elements)
    assert all(Group(kind, n).contains(w) for w in elements)


def test_type_c_one_elements():
    assert list(Group("C", 1).elements()) == [(-1,), (1,)]


def test_enumeration_guard():
    with pytest.raises(ValueError):
        next(Group("A", 11).elements())


def test_cd_bounds_type_a():
    for n in range(2, 8):
        for w in Group("A", n).elements():
            assert 1 <= descent_stats_A(w).cd <= n - 1


def test_cd_minus_d_type_c():
    for n in range(1, 5):
        for w in Group("C", n).elements():
            s = descent_stats_C(w)
            assert s.cd == s.d + (w[0] > 0)


@pytest.mark.parametrize("kind", ["A", "C"])
def test_stats_agree_with_root_images(kind):
    for n in range(2 if kind == "A" else 1, 5):
        datum = root_datum(kind, n)
        for w in Group(kind, n).elements():
            stats = descent_stats_A(w) if kind == "A" else descent_stats_C(w)
            assert stats.Cdes == cyclic_descent_set(datum, w)
            assert stats.Des == cyclic_descent_set(datum, w) - {0}


def test_root_image_examples():
    a2 = root_datum("A", 3)
    assert root_image(a2, (1, 2, 3), a2.roots[0]) == ((-1, 0, 1), False)
    assert root_image(a2, (2, 3, 1), a2.roots[0]) == ((1, -1, 0), True)
    c1 = root_datum("C", 1)
    assert root_image(c1, (-1,), (2,)) == ((-2,), False)
    with pytest.raises(ValueError):
        root_image(a2, (1, 2, 3), (1, 1, 0))


def test_cycle_type_examples():
    assert cycle_type((2, 3, 1)) == (3,)
    assert cycle_type((-2, 3, 1, 4, -6, -5, 7)) == ((2, 1, 1), (3,))
    assert cycle_type((1, 2, 3), "C") == ((1, 1, 1), ())


@pytest.mark.parametrize("kind", ["A", "C"])
def test_cycle_type_is_class_function(kind):
    for n in range(1, 5):
        group = list(Group(kind, n).elements())
        for w in group:
            label = cycle_type(w, kind)
            for g in group:
                assert cycle_type(compose(compose(g, w), inverse(g)), kind) == label


def test_shape_examples():
    assert cycle_shape_multiset((2, 1)) == ((1, 2),)
    assert cycle_shape_multiset((2, 1, 4, 3)) == ((1, 2), (1, 2))
    assert cycle_shape_multiset((3, 1, 2)) == ((1, 3, 2),)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=7, unique=True))
def test_shape_invariant_under_order_preserving_relabel(cycle):
    ranks = {x: r for r, x in enumerate(sorted(cycle), start=1)}
    assert cycle_shape(cycle) == cycle_shape([ranks[x] for x in cycle])
    assert cycle_shape(cycle) == cycle_shape([3 * x + 100 for x in cycle])


def test_shape_as_permutation_round_trip():
    for n in range(1, 7):
        for w in Group("A", n).elements():
            for shape in cycle_shape_multiset(w):
                perm = shape_as_permutation(shape)
                assert cycle_shape_multiset(perm) == (shape,)


@given(st.permutations(list(range(1, 8))))
def test_inverse_and_compose(w):
    w = tuple(w)
    assert compose(w, inverse(w)) == tuple(range(1, 8))
    assert inverse(inverse(w)) == w


def test_unimodal_predicate():
    assert is_unimodal((1, 3, 2)) and is_unimodal((3, 2, 1)) and not is_unimodal((2, 1, 3))
