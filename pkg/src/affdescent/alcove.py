"""Frobenius-stable points of the type A fundamental alcove and the refinement
of the class map to individual permutations.

A point ``v`` (zero coordinate sum, ``v_1 >= ... >= v_n``, ``v_1 - v_n <= 1``) is
stable when ``q v - w.v`` is an integer vector for some ``w`` in S_n, where
``(w.v)_{w(i)} = v_i``.  Among all such ``w`` the one of least length is taken.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .classes import class_distribution
from .fields import prime_power
from .measures import Measure, pushforward_classes
from .roots import alcove_vertices, root_datum
from .weyl import Group, compose, cycle_type, length

__all__ = [
    "StabilizerData",
    "MinimalLengthTie",
    "stable_points",
    "stabilizer_set",
    "refined_measure",
    "refinement_class_consistency",
    "orbit_partition",
    "mirror_point",
]

N_LIMIT = 5
Q_LIMIT = 7

Point = tuple[Fraction, ...]


class MinimalLengthTie(ArithmeticError):
    """Two stabilizing permutations share the least length."""


def _check_guard(n: int, q: int) -> None:
    prime_power(q)
    if not 1 <= n <= N_LIMIT or q > Q_LIMIT:
        raise ValueError(f"stable points limited to n <= {N_LIMIT}, q <= {Q_LIMIT}")


def _action_matrix(w: tuple[int, ...]) -> list[list[int]]:
    # P with (P v)_{w(i)} = v_i
    n = len(w)
    P = [[0] * n for _ in range(n)]
    for i, img in enumerate(w):
        P[img - 1][i] = 1
    return P


def _adjugate(M: list[list[int]]) -> tuple[list[list[int]], int]:
    # integer adjugate and determinant through an exact rational inverse
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M)]
    det = Fraction(1)
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
            det = -det
        det *= aug[col][col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    adj = [[det * aug[i][n + j] for j in range(n)] for i in range(n)]
    if det.denominator != 1 or any(x.denominator != 1 for row in adj for x in row):
        raise ArithmeticError("non-integral adjugate")
    return [[int(x) for x in row] for row in adj], int(det)


def _points_for(w: tuple[int, ...], q: int) -> set[Point]:
    n = len(w)
    if n == 1:
        return {(Fraction(0),)}
    P = _action_matrix(w)
    M = [[q * int(i == j) - P[i][j] for j in range(n)] for i in range(n)]
    adj, det = _adjugate(M)
    if det <= 0:
        raise ArithmeticError(f"q I - w has non-positive determinant {det}")
    # y = M v with v in the alcove lies in the box spanned by M applied to the vertices
    verts = alcove_vertices(root_datum("A", n), 1)
    images = [[sum(M[r][c] * v[c] for c in range(n)) for v in verts] for r in range(n)]
    ranges = [range(math.floor(min(col)), math.ceil(max(col)) + 1) for col in images]
    grid = np.array(list(itertools.product(*ranges[:-1])), dtype=np.int64).reshape(-1, n - 1)
    last = -grid.sum(axis=1, keepdims=True)
    Y = np.hstack([grid, last])
    Y = Y[(last[:, 0] >= ranges[-1].start) & (last[:, 0] < ranges[-1].stop)]
    N = Y @ np.array(adj, dtype=np.int64).T  # det * v
    keep = N[:, 0] - N[:, -1] <= det
    for c in range(n - 1):
        keep &= N[:, c] >= N[:, c + 1]
    return {tuple(Fraction(int(x), det) for x in row) for row in N[keep]}


@lru_cache(maxsize=None)
def _stable_points_cached(n: int, q: int) -> tuple[Point, ...]:
    found: set[Point] = set()
    for w in Group("A", n).elements():
        found |= _points_for(w, q)
    points = tuple(sorted(found, reverse=True))
    if len(points) != q ** (n - 1):
        raise ArithmeticError(f"found {len(points)} stable points for n={n}, q={q}; "
                              f"expected {q ** (n - 1)}")
    return points


def stable_points(n: int, q: int) -> list[Point]:
    """All stable points of the closed alcove, exactly ``q**(n-1)`` of them."""
    _check_guard(n, q)
    return list(_stable_points_cached(n, q))


def _frac_part(x: Fraction) -> Fraction:
    return x - math.floor(x)


def _stabilizes(w: tuple[int, ...], v: Point, q: int) -> bool:
    # (q v - w.v)_{w(i)} = q v_{w(i)} - v_i
    return all((q * v[img - 1] - v[i]).denominator == 1 for i, img in enumerate(w))


@dataclass(frozen=True)
class StabilizerData:
    point: Point
    members: frozenset
    minimal: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]


def _blocks(v: Point) -> tuple[tuple[int, ...], ...]:
    groups: dict[Fraction, list[int]] = {}
    for i, x in enumerate(v, start=1):
        groups.setdefault(_frac_part(x), []).append(i)
    return tuple(sorted(tuple(b) for b in groups.values()))


def _young_subgroup(n: int, blocks) -> list[tuple[int, ...]]:
    out = []
    for images in itertools.product(*(itertools.permutations(b) for b in blocks)):
        u = [0] * n
        for block, img in zip(blocks, images):
            for i, j in zip(block, img):
                u[i - 1] = j
        out.append(tuple(u))
    return out


def stabilizer_set(v, q: int) -> StabilizerData:
    """``S(v)``, checked to be a left coset of the Young subgroup of the mod-1
    coincidence blocks, and its unique shortest element.

    Raises :class:`MinimalLengthTie` if the shortest element is not unique.
    """
    v = tuple(Fraction(x) for x in v)
    n = len(v)
    members = frozenset(w for w in Group("A", n).elements() if _stabilizes(w, v, q))
    if not members:
        raise ValueError(f"{v} is not stable for q={q}")
    blocks = _blocks(v)
    anchor = min(members)
    coset = frozenset(compose(anchor, u) for u in _young_subgroup(n, blocks))
    if coset != members:
        raise ArithmeticError(f"S(v) for {v} is not a coset of the block subgroup")
    best = min(length(w) for w in members)
    shortest = [w for w in members if length(w) == best]
    if len(shortest) != 1:
        raise MinimalLengthTie(f"{len(shortest)} shortest elements for {v}: {sorted(shortest)}")
    return StabilizerData(v, members, shortest[0], blocks)


def orbit_partition(v, q: int) -> tuple[int, ...]:
    """Orbits of the distinct coordinates mod 1 under ``x -> q x``; each orbit size
    is repeated by the multiplicity of its values."""
    fracs = [_frac_part(Fraction(x)) for x in v]
    mult: dict[Fraction, int] = {}
    for x in fracs:
        mult[x] = mult.get(x, 0) + 1
    seen: set[Fraction] = set()
    parts = []
    for x in mult:
        if x in seen:
            continue
        orbit = []
        y = x
        while y not in orbit:
            orbit.append(y)
            y = _frac_part(q * y)
        if y != x or any(mult.get(z) != mult[x] for z in orbit):
            raise ArithmeticError(f"coordinates of {v} are not closed under x -> {q}x")
        seen.update(orbit)
        parts.extend([len(orbit)] * mult[x])
    return tuple(sorted(parts, reverse=True))


def mirror_point(v) -> Point:
    """``(v_1, ..., v_n) -> (-v_n, ..., -v_1)``."""
    return tuple(-Fraction(x) for x in reversed(v))


def refined_measure(n: int, q: int) -> Measure:
    """Uniform law on stable points, pushed to their shortest stabilizing permutation."""
    points = stable_points(n, q)
    group = Group("A", n)
    weight = Fraction(1, len(points))
    values = {w: Fraction(0) for w in group.elements()}
    for v in points:
        values[stabilizer_set(v, q).minimal] += weight
    return Measure(group, values)


def refinement_class_consistency(n: int, q: int) -> bool:
    """Class law of the refined measure equals the SL(n, q) class law, and each
    point's shortest permutation has the cycle type of its Frobenius orbits."""
    for v in stable_points(n, q):
        if cycle_type(stabilizer_set(v, q).minimal, "A") != orbit_partition(v, q):
            return False
    left = {k: p for k, p in pushforward_classes(refined_measure(n, q)).items() if p}
    return left == class_distribution("SL", n, q)

