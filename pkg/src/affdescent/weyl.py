"""Elements of the Weyl groups S_n (type A_{n-1}) and C_n (signed permutations).

Elements are plain tuples in one-line form: ``w[i-1] == w(i)``.  Type C entries
carry a sign, with ``w(-i) == -w(i)`` implied.  Products compose right to left,
``(u * v)(i) == u(v(i))``.

Class labels:

* type A: a partition, a weakly decreasing tuple of cycle lengths;
* type C: a pair ``(positive, negative)`` of such tuples, holding the lengths of
  the cycles of ``|w|`` whose sign product is +1 and -1 respectively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterator, NamedTuple

__all__ = [
    "GROUP_SIZE_LIMIT",
    "Group",
    "DescentStats",
    "descent_stats_A",
    "descent_stats_C",
    "descents",
    "cycles",
    "cycle_type",
    "cycle_shape",
    "cycle_shape_multiset",
    "shape_as_permutation",
    "inverse",
    "compose",
    "length",
    "is_unimodal",
]

GROUP_SIZE_LIMIT = 10 ** 7

Perm = tuple[int, ...]


@dataclass(frozen=True)
class Group:
    """A Weyl group of type ``"A"`` (acting on n letters) or ``"C"`` (rank n)."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("A", "C"):
            raise ValueError(f"unsupported Weyl group type {self.kind!r}")
        if self.n < 1:
            raise ValueError("group requires n >= 1")

    @property
    def rank(self) -> int:
        return self.n - 1 if self.kind == "A" else self.n

    @property
    def order(self) -> int:
        if self.kind == "A":
            return factorial(self.n)
        return 2 ** self.n * factorial(self.n)

    @property
    def identity(self) -> Perm:
        return tuple(range(1, self.n + 1))

    def elements(self) -> Iterator[Perm]:
        """Every element once, in lexicographic order of the one-line form.

        Type C orders entries as ``-n < ... < -1 < 1 < ... < n``.
        """
        if self.order > GROUP_SIZE_LIMIT:
            raise ValueError(f"{self} has {self.order} elements, above the "
                             f"enumeration limit {GROUP_SIZE_LIMIT}")
        if self.kind == "A":
            yield from itertools.permutations(range(1, self.n + 1))
            return
        yield from _signed_perms(self.n, [], set())

    def contains(self, w: Perm) -> bool:
        if len(w) != self.n:
            return False
        absolute = sorted(abs(x) for x in w)
        if absolute != list(range(1, self.n + 1)):
            return False
        return self.kind == "C" or all(x > 0 for x in w)

    def __str__(self) -> str:
        return f"{self.kind}{self.n}" if self.kind == "C" else f"S{self.n}"


def _signed_perms(n: int, prefix: list[int], used: set[int]) -> Iterator[Perm]:
    if len(prefix) == n:
        yield tuple(prefix)
        return
    for x in itertools.chain(range(-n, 0), range(1, n + 1)):
        if abs(x) in used:
            continue
        used.add(abs(x))
        prefix.append(x)
        yield from _signed_perms(n, prefix, used)
        prefix.pop()
        used.discard(abs(x))


def compose(u: Perm, v: Perm) -> Perm:
    """``u * v``: apply ``v`` first.  Works for signed and unsigned elements."""
    return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w, start=1):
        if x > 0:
            out[x - 1] = i
        else:
            out[-x - 1] = -i
    return tuple(out)


def length(w: Perm) -> int:
    """Inversion count of an unsigned permutation."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def descents(w: Perm) -> list[int]:
    """Descent positions ``i`` with ``w(i) > w(i+1)``, for unsigned ``w``."""
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


class DescentStats(NamedTuple):
    Des: frozenset
    d: int
    Cdes: frozenset
    cd: int
    maj: int
    length: int


def descent_stats_A(w: Perm) -> DescentStats:
    """Descent statistics of a permutation.

    ``Cdes`` holds simple root indices ``1..n-1`` plus ``0`` for the affine root
    ``e_n - e_1``, which ``w`` sends negative exactly when ``w(n) > w(1)``.
    """
    des = descents(w)
    cdes = set(des)
    if w[-1] > w[0]:
        cdes.add(0)
    return DescentStats(
        Des=frozenset(des),
        d=len(des),
        Cdes=frozenset(cdes),
        cd=len(cdes),
        maj=sum(des),
        length=length(w),
    )


def _type_c_key(x: int, n: int) -> int:
    # order 1 < 2 < ... < n < -n < ... < -1
    return x if x > 0 else 2 * n + 1 + x


def descent_stats_C(w: Perm) -> DescentStats:
    """Descent statistics of a signed permutation.

    Simple roots are ``e_i - e_{i+1}`` (index i) and ``2 e_n`` (index n); the
    affine root ``-2 e_1`` has index 0 and is a cyclic descent iff ``w(1) > 0``.
    ``length`` is left as -1: signed lengths are not used anywhere.
    """
    n = len(w)
    key = [_type_c_key(x, n) for x in w]
    des = [i for i in range(1, n) if key[i - 1] > key[i]]
    if w[-1] < 0:
        des.append(n)
    cdes = set(des)
    if w[0] > 0:
        cdes.add(0)
    return DescentStats(
        Des=frozenset(des),
        d=len(des),
        Cdes=frozenset(cdes),
        cd=len(cdes),
        maj=sum(des),
        length=-1,
    )


def cycles(w: Perm) -> list[list[int]]:
    """Cycles of ``|w|``, each starting at its smallest letter, sorted by that letter.

    Each cycle lists ``i, |w(i)|, |w(|w(i)|)|, ...``.
    """
    n = len(w)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = abs(w[i - 1])
        out.append(cyc)
    return out


def cycle_type(w: Perm, kind: str | None = None):
    """Conjugacy class label.  ``kind`` defaults to ``"C"`` iff some entry is negative."""
    if kind is None:
        kind = "C" if any(x < 0 for x in w) else "A"
    if kind == "A":
        return tuple(sorted((len(c) for c in cycles(w)), reverse=True))
    positive, negative = [], []
    for cyc in cycles(w):
        sign = 1
        for i in cyc:
            if w[i - 1] < 0:
                sign = -sign
        (positive if sign > 0 else negative).append(len(cyc))
    return (tuple(sorted(positive, reverse=True)),
            tuple(sorted(negative, reverse=True)))


def cycle_shape(cycle: list[int]) -> Perm:
    """Relabel a cycle order-preservingly onto ``1..k`` and start it at 1."""
    rank = {x: r for r, x in enumerate(sorted(cycle), start=1)}
    word = [rank[x] for x in cycle]
    start = word.index(1)
    return tuple(word[start:] + word[:start])


def cycle_shape_multiset(w: Perm) -> tuple[Perm, ...]:
    """Shapes of all cycles of ``w``, sorted by (size, word)."""
    return tuple(sorted((cycle_shape(c) for c in cycles(w)),
                        key=lambda s: (len(s), s)))


def shape_as_permutation(shape: Perm) -> Perm:
    """The permutation of ``1..k`` whose single cycle is ``shape``."""
    k = len(shape)
    out = [0] * k
    for j, x in enumerate(shape):
        out[x - 1] = shape[(j + 1) % k]
    return tuple(out)


def is_unimodal(w: Perm) -> bool:
    peak = w.index(max(w))
    return (all(w[i] < w[i + 1] for i in range(peak))
            and all(w[i] > w[i + 1] for i in range(peak, len(w) - 1)))
