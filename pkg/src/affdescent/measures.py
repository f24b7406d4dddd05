"""The probability elements ``x_k`` and operations on measures over a Weyl group.

Type A coefficients come in four equivalent forms (box partitions, transposed box
partitions, Ramanujan sums, q-binomial extraction); type C has a binomial closed
form.  ``xk_measure(..., method="definition")`` instead sums the lattice-point
counts ``a_{k,I}`` over index sets avoiding the cyclic descents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Callable, Mapping

from . import numtheory as nt
from .roots import a_k_table, cyclic_descent_set, root_datum
from .weyl import Group, compose, cycle_type, descent_stats_A, descent_stats_C, inverse

__all__ = [
    "Measure",
    "xk_coefficient_A",
    "xk_coefficient_A_forms",
    "xk_coefficient_C",
    "xk_measure",
    "convolve",
    "pushforward_classes",
    "left_mult_matrix",
    "spectrum",
    "point_mass",
    "uniform",
]

LEFT_MULT_LIMIT = 384
DEFINITION_RANK_LIMIT = 5


@dataclass(frozen=True)
class Measure:
    """A finitely supported probability measure on a Weyl group.

    ``values`` is dense over the group: every element appears, zero or not.
    """

    group: Group
    values: Mapping[tuple, Fraction] = field(repr=False)

    def __getitem__(self, w) -> Fraction:
        return self.values.get(tuple(w), Fraction(0))

    def total(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))

    def support(self) -> list[tuple]:
        return [w for w, p in self.values.items() if p]

    def inverted(self) -> "Measure":
        """The measure ``w -> m(w^{-1})``."""
        return Measure(self.group, {inverse(w): p for w, p in self.values.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Measure) or other.group != self.group:
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return all(self[w] == other[w] for w in keys)

    def __hash__(self):
        return hash((self.group, frozenset(w for w in self.support())))


def _from_function(group: Group, coeff: Callable[[tuple], Fraction]) -> Measure:
    return Measure(group, {w: coeff(w) for w in group.elements()})


def point_mass(group: Group, w=None) -> Measure:
    target = group.identity if w is None else tuple(w)
    return _from_function(group, lambda x: Fraction(int(x == target)))


def uniform(group: Group) -> Measure:
    p = Fraction(1, group.order)
    return _from_function(group, lambda x: p)


# type A

def _form_box(n: int, k: int, cd: int, maj: int) -> int:
    return nt.box_partition_count_mod(n - 1, k - cd, -maj, n)


@lru_cache(maxsize=None)
def _bounded_part_counts(parts_max: int, size_max: int) -> tuple[int, ...]:
    # counts[s] = partitions of s into at most parts_max parts, each <= size_max,
    # by adding one allowed part size at a time
    if parts_max < 0 or size_max < 0:
        return ()
    top = parts_max * size_max
    # table[j][s]: partitions of s using exactly j parts (parts in 1..size_max)
    table = [[0] * (top + 1) for _ in range(parts_max + 1)]
    table[0][0] = 1
    for part in range(1, size_max + 1):
        for j in range(1, parts_max + 1):
            row, prev = table[j], table[j - 1]
            for s in range(part, top + 1):
                row[s] += prev[s - part]
    return tuple(sum(table[j][s] for j in range(parts_max + 1)) for s in range(top + 1))


def _form_transpose(n: int, k: int, cd: int, maj: int) -> int:
    counts = _bounded_part_counts(k - cd, n - 1)
    return sum(c for s, c in enumerate(counts) if (s + maj) % n == 0)


def _form_ramanujan(n: int, k: int, cd: int, maj: int) -> Fraction:
    # returns k^{n-1} times the coefficient
    slack = k - cd
    if slack > 0:
        total = 0
        for d in nt.divisors(gcd(n, slack)):
            total += comb((n + slack - d) // d, slack // d) * nt.ramanujan_sum(d, -maj)
        return Fraction(total, n)
    if slack == 0:
        return Fraction(int(maj % n == 0))
    return Fraction(0)


def _form_qbinomial(n: int, k: int, cd: int, maj: int) -> int:
    if k - cd < 0:
        return 0
    poly = nt.q_binomial(k + n - cd - 1, n - 1)
    return sum(c for j, c in enumerate(poly) if (j + maj) % n == 0)


def xk_coefficient_A_forms(w, k: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """The four closed forms for the coefficient of ``w`` in ``x_k`` (type A)."""
    if k < 1:
        raise ValueError("x_k requires k >= 1")
    n = len(w)
    stats = descent_stats_A(tuple(w))
    scale = Fraction(1, k ** (n - 1))
    return (
        scale * _form_box(n, k, stats.cd, stats.maj),
        scale * _form_transpose(n, k, stats.cd, stats.maj),
        scale * _form_ramanujan(n, k, stats.cd, stats.maj),
        scale * _form_qbinomial(n, k, stats.cd, stats.maj),
    )


def xk_coefficient_A(w, k: int) -> Fraction:
    """Coefficient of the permutation ``w`` in ``x_k``.

    >>> xk_coefficient_A((3, 2, 1), 2)
    Fraction(1, 4)
    """
    if k < 1:
        raise ValueError("x_k requires k >= 1")
    n = len(w)
    stats = descent_stats_A(tuple(w))
    return Fraction(_form_box(n, k, stats.cd, stats.maj), k ** (n - 1))


def xk_coefficient_C(w, k: int) -> Fraction:
    """Coefficient of the signed permutation ``w`` in ``x_k``."""
    if k < 1:
        raise ValueError("x_k requires k >= 1")
    n = len(w)
    stats = descent_stats_C(tuple(w))
    if k % 2:
        top = (k - 1) // 2 + n - stats.d
    else:
        top = k // 2 + n - stats.cd
    return Fraction(comb(top, n) if top >= 0 else 0, k ** n)


def _definition_measure(group: Group, k: int) -> Measure:
    if group.rank > DEFINITION_RANK_LIMIT:
        raise ValueError(f"definition method limited to rank <= {DEFINITION_RANK_LIMIT}")
    datum = root_datum(group.kind, group.n)
    table = a_k_table(group.kind, group.n, k)
    scale = Fraction(1, k ** group.rank)
    values = {}
    for w in group.elements():
        cdes = cyclic_descent_set(datum, w)
        values[w] = scale * sum(c for I, c in table.items() if not (I & cdes))
    return Measure(group, values)


def xk_measure(kind: str, n: int, k: int, method: str = "closed_form") -> Measure:
    """The full measure ``x_k`` on the Weyl group of the given type."""
    group = Group(kind, n)
    if k < 1:
        raise ValueError("x_k requires k >= 1")
    if method == "definition":
        return _definition_measure(group, k)
    if method not in ("closed_form", "closed"):
        raise ValueError(f"unknown method {method!r}")
    coeff = xk_coefficient_A if kind == "A" else xk_coefficient_C
    return _from_function(group, lambda w: coeff(w, k))


def convolve(m1: Measure, m2: Measure) -> Measure:
    """Group-algebra product: the coefficient of ``w`` is the sum of
    ``m1(u) m2(v)`` over ``u v = w``."""
    if m1.group != m2.group:
        raise ValueError(f"cannot convolve measures on {m1.group} and {m2.group}")
    out = {w: Fraction(0) for w in m1.group.elements()}
    right = [(v, q) for v, q in m2.values.items() if q]
    for u, p in m1.values.items():
        if not p:
            continue
        for v, q in right:
            out[compose(u, v)] += p * q
    return Measure(m1.group, out)


def pushforward_classes(m: Measure) -> dict:
    """Total mass on each conjugacy class label."""
    out: dict = {}
    for w, p in m.values.items():
        label = cycle_type(w, m.group.kind)
        out[label] = out.get(label, Fraction(0)) + p
    return out


def left_mult_matrix(m: Measure) -> tuple[list[tuple], list[list[Fraction]]]:
    """Matrix of left multiplication by ``sum m(w) w`` in the group-element basis.

    Entry ``[g][h]`` is ``m(g h^{-1})``, so column ``h`` is the law of ``w h``.
    Returns the element order together with the matrix.
    """
    group = m.group
    if group.order > LEFT_MULT_LIMIT:
        raise ValueError(f"left multiplication matrix limited to |W| <= {LEFT_MULT_LIMIT}")
    elements = list(group.elements())
    index = {w: i for i, w in enumerate(elements)}
    size = len(elements)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for w, p in m.values.items():
        if not p:
            continue
        for h in elements:
            matrix[index[compose(w, h)]][index[h]] += p
    return elements, matrix


def spectrum(m: Measure) -> list[complex]:
    """Floating-point eigenvalues of the left multiplication matrix.

    Exploratory output only; nothing exact depends on it.
    """
    import numpy as np

    _, matrix = left_mult_matrix(m)
    arr = np.array([[float(x) for x in row] for row in matrix])
    eig = np.linalg.eigvals(arr)
    return sorted((complex(round(z.real, 10), round(z.imag, 10)) for z in eig),
                  key=lambda z: (-abs(z), -z.real, z.imag))
