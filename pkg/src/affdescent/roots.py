"""Root data of types A_{n-1} and C_n and the lattice-point counts ``a_{k,I}``.

Index 0 always denotes the affine root ``alpha_0``, the negative of the highest
root ``theta``; indices ``1..r`` are the simple roots.  The level of a coroot
lattice point ``t`` is ``<theta, t> = -<alpha_0, t>``; the dilated alcove is
``<alpha_i, t> >= 0`` (i >= 1) together with level at most ``k``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .weyl import Group

__all__ = [
    "RootDatum",
    "root_datum",
    "is_root",
    "is_positive_root",
    "act",
    "root_image",
    "cyclic_descent_set",
    "a_k_table",
    "a_k_I",
    "u_size",
]

Vector = tuple[int, ...]


@dataclass(frozen=True)
class RootDatum:
    """Roots in the ambient space ``Z^n`` with the dot-product pairing.

    ``roots[0]`` is ``alpha_0``; ``roots[1:]`` the simple roots.  Type A points
    of the coroot lattice are integer vectors with zero coordinate sum; type C
    uses all of ``Z^n``.
    """

    kind: str
    n: int
    roots: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.roots) - 1

    @property
    def group(self) -> Group:
        return Group(self.kind, self.n)

    def in_lattice(self, t: Vector) -> bool:
        return self.kind == "C" or sum(t) == 0

    def pair(self, index: int, t: Vector) -> int:
        return sum(a * b for a, b in zip(self.roots[index], t))

    def level(self, t: Vector) -> int:
        return -self.pair(0, t)


def _unit(n: int, i: int, scale: int = 1) -> list[int]:
    v = [0] * n
    v[i - 1] = scale
    return v


@lru_cache(maxsize=None)
def root_datum(kind: str, n: int) -> RootDatum:
    if kind == "A":
        simple = []
        for i in range(1, n):
            v = _unit(n, i)
            v[i] = -1
            simple.append(tuple(v))
        alpha0 = [0] * n
        alpha0[n - 1] += 1
        alpha0[0] -= 1
        return RootDatum("A", n, (tuple(alpha0), *simple))
    if kind == "C":
        simple = []
        for i in range(1, n):
            v = _unit(n, i)
            v[i] = -1
            simple.append(tuple(v))
        simple.append(tuple(_unit(n, n, 2)))
        return RootDatum("C", n, (tuple(_unit(n, 1, -2)), *simple))
    raise ValueError(f"unsupported root system type {kind!r}")


def is_root(datum: RootDatum, v: Vector) -> bool:
    nonzero = [x for x in v if x]
    if datum.kind == "A":
        return len(v) == datum.n and sorted(nonzero) == [-1, 1]
    if len(nonzero) == 1:
        return abs(nonzero[0]) == 2
    return len(nonzero) == 2 and all(abs(x) == 1 for x in nonzero)


def is_positive_root(v: Vector) -> bool:
    # positive roots of both types have a positive first nonzero coordinate
    for x in v:
        if x:
            return x > 0
    raise ValueError("zero vector is not a root")


def act(w: tuple[int, ...], v: Vector) -> Vector:
    """``w . v`` for the action ``e_i -> sign(w(i)) e_{|w(i)|}``."""
    out = [0] * len(v)
    for i, x in enumerate(v):
        img = w[i]
        if img > 0:
            out[img - 1] += x
        else:
            out[-img - 1] -= x
    return tuple(out)


def root_image(datum: RootDatum, w: tuple[int, ...], alpha: Vector) -> tuple[Vector, bool]:
    """Image of a root under ``w`` and whether that image is positive."""
    if not is_root(datum, alpha):
        raise ValueError(f"{alpha} is not a root of {datum.kind}{datum.n}")
    image = act(w, alpha)
    return image, is_positive_root(image)


def cyclic_descent_set(datum: RootDatum, w: tuple[int, ...]) -> frozenset:
    """Indices of the roots of ``Pi~`` that ``w`` sends to negative roots."""
    if datum.rank == 0:
        # S_1: alpha_0 degenerates to the zero vector
        return frozenset()
    return frozenset(i for i, alpha in enumerate(datum.roots)
                     if not root_image(datum, w, alpha)[1])


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    # Gauss-Jordan elimination on a square nonsingular system
    n = len(rows)
    m = [row[:] + [b] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def alcove_vertices(datum: RootDatum, k: int) -> list[tuple[Fraction, ...]]:
    """Vertices of the ``k``-dilated closed fundamental alcove.

    The origin plus, for each simple root, the point where every other simple
    root vanishes and the level equals ``k`` (``k`` times a fundamental coweight,
    rescaled by its mark).
    """
    n, r = datum.n, datum.rank
    verts = [tuple(Fraction(0) for _ in range(n))]
    for i in range(1, r + 1):
        rows = [[Fraction(x) for x in datum.roots[j]] for j in range(1, r + 1) if j != i]
        rhs = [Fraction(0)] * (r - 1)
        rows.append([Fraction(-x) for x in datum.roots[0]])
        rhs.append(Fraction(k))
        if datum.kind == "A":
            rows.append([Fraction(1)] * n)
            rhs.append(Fraction(0))
        verts.append(tuple(_solve(rows, rhs)))
    return verts


def _bounding_box(datum: RootDatum, k: int) -> list[range]:
    verts = alcove_vertices(datum, k)
    box = []
    for c in range(datum.n):
        lo = min(v[c] for v in verts)
        hi = max(v[c] for v in verts)
        box.append(range(math.floor(lo) - 1, math.ceil(hi) + 2))
    return box


def _alcove_points(datum: RootDatum, k: int):
    """Lattice points of the dilated closed alcove, scanning its bounding box.

    Coordinates are chosen left to right; a root inequality is tested as soon as
    every coordinate in its support is fixed, which prunes the scan.
    """
    n = datum.n
    box = _bounding_box(datum, k)
    supports = []
    for idx, alpha in enumerate(datum.roots):
        last = max(i for i, x in enumerate(alpha) if x) if any(alpha) else -1
        supports.append(last)
    checks = [[idx for idx in range(1, len(datum.roots)) if supports[idx] == c]
              for c in range(n)]
    t = [0] * n

    def rec(c: int):
        if c == n:
            point = tuple(t)
            if datum.in_lattice(point) and datum.level(point) <= k:
                yield point
            return
        for x in box[c]:
            t[c] = x
            if all(datum.pair(idx, t) >= 0 for idx in checks[c]):
                yield from rec(c + 1)
        t[c] = 0

    yield from rec(0)


@lru_cache(maxsize=None)
def a_k_table(kind: str, n: int, k: int) -> dict[frozenset, int]:
    """``I -> a_{k,I}`` for every ``I`` with a nonzero count.

    Each lattice point of the dilated alcove satisfies exactly one defining
    system: the one whose ``I`` is its set of tight constraints (simple roots
    pairing to zero, and index 0 when the level equals ``k``).
    """
    if k < 1:
        raise ValueError("a_{k,I} requires k >= 1")
    datum = root_datum(kind, n)
    table: dict[frozenset, int] = {}
    for t in _alcove_points(datum, k):
        tight = {i for i in range(1, datum.rank + 1) if datum.pair(i, t) == 0}
        if datum.level(t) == k:
            tight.add(0)
        key = frozenset(tight)
        table[key] = table.get(key, 0) + 1
    return table


def a_k_I(datum: RootDatum, k: int, I) -> int:
    """Cellini's lattice-point count for the index set ``I`` (a subset of ``0..r``)."""
    I = frozenset(I)
    if not I <= set(range(datum.rank + 1)):
        raise ValueError(f"index set {sorted(I)} not inside 0..{datum.rank}")
    return a_k_table(datum.kind, datum.n, k).get(I, 0)


def u_size(datum: RootDatum, I) -> int:
    """``|U_I|``: elements with no cyclic descent in ``I``."""
    I = frozenset(I)
    return sum(1 for w in datum.group.elements()
               if not (cyclic_descent_set(datum, w) & I))


def all_index_sets(datum: RootDatum):
    idx = range(datum.rank + 1)
    for size in range(len(idx) + 1):
        for combo in itertools.combinations(idx, size):
            yield frozenset(combo)
