import itertools

import pytest

from affdescent.roots import (a_k_I, a_k_table, act, all_index_sets, alcove_vertices,
                              is_root, root_datum, u_size)


def literal_count(datum, k, I, radius):
    # the two-case definition, scanned over a generous cube; the pairing with
    # alpha_0 in the definition is the level, since alpha_0 is stored as -theta
    r = datum.rank
    count = 0
    for t in itertools.product(range(-radius, radius + 1), repeat=datum.n):
        if not datum.in_lattice(t):
            continue
        level = datum.level(t)
        if (level != k) if 0 in I else (level >= k):
            continue
        if all((datum.pair(i, t) == 0) if i in I else (datum.pair(i, t) > 0) for i in range(1, r + 1)):
            count += 1
    return count


def test_a2_k2_full_simple_set():
    datum = root_datum("A", 3)
    assert a_k_I(datum, 2, {1, 2}) == 1


def test_k1_is_identity_only():
    datum = root_datum("A", 3)
    table = a_k_table("A", 3, 1)
    assert table == {frozenset({1, 2}): 1}
    assert all(a_k_I(datum, 1, I) == (I == frozenset({1, 2})) for I in all_index_sets(datum))


def test_a5_table_row():
    datum = root_datum("A", 6)
    assert a_k_I(datum, 2, set(range(6)) - {1, 5}) == 1


def test_rejects_bad_index_set_and_type():
    with pytest.raises(ValueError):
        a_k_I(root_datum("A", 3), 2, {3})
    with pytest.raises(ValueError):
        root_datum("B", 3)


@pytest.mark.parametrize("kind, n, radius", [("A", 2, 6), ("A", 3, 5), ("A", 4, 4), ("C", 1, 6), ("C", 2, 5),
                                             ("C", 3, 4)])
def test_engine_matches_literal_definition(kind, n, radius):
    datum = root_datum(kind, n)
    for k in range(1, 4 if n < 4 else 3):
        for I in all_index_sets(datum):
            assert a_k_I(datum, k, I) == literal_count(datum, k, I, radius), (kind, n, k, sorted(I))


@pytest.mark.parametrize("kind, sizes", [("A", range(2, 6)), ("C", range(1, 4))])
def test_weighted_sum_is_k_to_rank(kind, sizes):
    for n in sizes:
        datum = root_datum(kind, n)
        u = {I: u_size(datum, I) for I in all_index_sets(datum)}
        for k in range(1, 5):
            table = a_k_table(kind, n, k)
            assert sum(c * u[I] for I, c in table.items()) == k ** datum.rank


@pytest.mark.parametrize("n", [1, 2, 3])
def test_shuffle_table_type_a_even(n):
    table = a_k_table("A", 2 * n, 2)
    assert len(table) == n + 1
    assert set(table.values()) == {1}


def test_alpha0_is_negative_highest_root():
    assert root_datum("A", 4).roots[0] == (-1, 0, 0, 1)
    assert root_datum("C", 3).roots[0] == (-2, 0, 0)


def test_simple_roots_and_vertices():
    c2 = root_datum("C", 2)
    assert c2.roots[1:] == ((1, -1), (0, 2))
    verts = alcove_vertices(c2, 2)
    for v in verts[1:]:
        assert -sum(a * b for a, b in zip(c2.roots[0], v)) == 2


def test_action_preserves_roots():
    for kind, n in [("A", 4), ("C", 3)]:
        datum = root_datum(kind, n)
        for w in datum.group.elements():
            for alpha in datum.roots:
                assert is_root(datum, act(w, alpha))
