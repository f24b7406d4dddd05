import itertools
import math
from fractions import Fraction as F

import pytest

from affdescent.alcove import (mirror_point, orbit_partition, refined_measure,
                               refinement_class_consistency, stabilizer_set, stable_points)
from affdescent.measures import xk_measure
from affdescent.weyl import Group, compose, cycle_type, length


def permuted(w, v):
    # (w.v)_{w(i)} = v_i
    out = [None] * len(v)
    for i, img in enumerate(w):
        out[img - 1] = v[i]
    return out


def is_stable(v, q):
    return any(all((q * a - b).denominator == 1 for a, b in zip(v, permuted(w, v)))
               for w in Group("A", len(v)).elements())


def char_det(w, q):
    # det(q I - w) is the product of (q^len - 1) over the cycles of w
    return math.prod(q ** c - 1 for c in cycle_type(w))


def grid_oracle(n, q):
    """Stable points found by scanning the alcove on the lattice (1/D) Z^n."""
    D = math.lcm(*(char_det(w, q) for w in Group("A", n).elements()))
    found = set()
    for head in itertools.product(range(-D, D + 1), repeat=n - 1):
        coords = list(head) + [-sum(head)]
        if any(a < b for a, b in zip(coords, coords[1:])) or coords[0] - coords[-1] > D:
            continue
        v = tuple(F(c, D) for c in coords)
        if is_stable(v, q):
            found.add(v)
    return found


def test_three_two_points():
    assert set(stable_points(3, 2)) == {
        (0, 0, 0), (F(1, 3), 0, F(-1, 3)), (F(2, 7), F(1, 7), F(-3, 7)), (F(3, 7), F(-1, 7), F(-2, 7))}


def test_guards():
    with pytest.raises(ValueError):
        stable_points(6, 2)
    with pytest.raises(ValueError):
        stable_points(3, 8)
    with pytest.raises(ValueError):
        stable_points(3, 6)


@pytest.mark.parametrize("n", range(1, 6))
def test_counts(n):
    for q in (2, 3, 4, 5, 7):
        if n == 5 and q > 4:
            continue
        points = stable_points(n, q)
        assert len(points) == len(set(points)) == q ** (n - 1)
        assert (0,) * n in points


@pytest.mark.parametrize("n, q", [(2, 2), (2, 3), (2, 5), (2, 7), (3, 2), (3, 3)])
def test_points_match_grid_oracle(n, q):
    assert set(stable_points(n, q)) == grid_oracle(n, q)


def test_stabilizer_examples():
    origin = stabilizer_set((0, 0, 0), 2)
    assert origin.members == frozenset(Group("A", 3).elements())
    assert origin.minimal == (1, 2, 3)
    assert stabilizer_set((F(1, 3), 0, F(-1, 3)), 2).members == {(3, 2, 1)}
    minimal = stabilizer_set((F(2, 7), F(1, 7), F(-3, 7)), 2).minimal
    assert cycle_type(minimal) == (3,)
    with pytest.raises(ValueError):
        stabilizer_set((F(1, 5), 0, F(-1, 5)), 2)


@pytest.mark.parametrize("n, q", [(n, q) for n in (2, 3, 4) for q in (2, 3, 4, 5)])
def test_stabilizers_are_cosets_with_unique_minimum(n, q):
    for v in stable_points(n, q):
        data = stabilizer_set(v, q)
        size = math.prod(math.factorial(len(b)) for b in data.blocks)
        assert len(data.members) == size
        best = min(length(w) for w in data.members)
        assert [w for w in data.members if length(w) == best] == [data.minimal]
        assert cycle_type(data.minimal) == orbit_partition(v, q)


@pytest.mark.parametrize("n, q", [(3, 2), (3, 5), (4, 3), (5, 2)])
def test_mirror_symmetry(n, q):
    points = set(stable_points(n, q))
    assert {mirror_point(v) for v in points} == points
    w0 = tuple(range(n, 0, -1))
    m = refined_measure(n, q)
    for w in m.group.elements():
        assert m[w] == m[compose(compose(w0, w), w0)]


def test_refined_measure_three_two():
    assert refined_measure(3, 2) == xk_measure("A", 3, 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_refinement_matches_xq_in_small_rank(q):
    for n in (1, 2, 3):
        assert refined_measure(n, q) == xk_measure("A", n, q)


@pytest.mark.parametrize("n, q", [(n, q) for n in (2, 3, 4) for q in (2, 3, 4, 5)])
def test_class_consistency(n, q):
    assert refinement_class_consistency(n, q)


def test_rank_three_refinement_differs_from_x3():
    # exhibited counterexample: both elements are involutions, so no inversion
    # convention can repair it
    m, x = refined_measure(4, 3), xk_measure("A", 4, 3)
    assert (m[(2, 1, 4, 3)], m[(3, 4, 1, 2)]) == (F(1, 9), F(1, 27))
    assert (x[(2, 1, 4, 3)], x[(3, 4, 1, 2)]) == (F(1, 27), F(1, 9))
