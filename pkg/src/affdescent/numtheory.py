"""Exact number-theoretic primitives.

Ramanujan sums, Von Sterneck multiset counts, Gaussian binomials, box-restricted
partition counts and aperiodic necklace counts.  Everything is integer or
:class:`~fractions.Fraction` arithmetic.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, gcd

__all__ = [
    "divisors",
    "mobius",
    "ramanujan_sum",
    "von_sterneck_count",
    "reciprocity_check",
    "q_binomial",
    "box_partition_count_mod",
    "f_coeff",
    "aperiodic_necklace_count",
    "necklace_total",
    "multichoose",
]


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in increasing order (trial division)."""
    if n <= 0:
        raise ValueError(f"divisors of non-positive integer {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n <= 0:
        raise ValueError(f"mobius of non-positive integer {n}")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def multichoose(n: int, k: int) -> int:
    """Number of multisets of size ``k`` drawn from ``n`` kinds."""
    if k == 0:
        return 1
    if n <= 0:
        return 0
    return comb(n + k - 1, k)


def ramanujan_sum(m: int, n: int) -> int:
    """C_m(n) via ``sum(d * mu(m // d) for d | gcd(m, n))``.

    >>> ramanujan_sum(4, 2)
    -2
    """
    if m < 1:
        raise ValueError("ramanujan_sum requires m >= 1")
    g = gcd(m, n % m) if n % m else m
    return sum(d * mobius(m // d) for d in divisors(g))


def von_sterneck_count(n: int, m: int, k: int) -> int:
    """Number of size-``k`` multisets from ``{0, ..., m-1}`` with sum ``n`` mod ``m``."""
    if m < 1:
        raise ValueError("von_sterneck_count requires m >= 1")
    if k < 1:
        raise ValueError("von_sterneck_count requires k >= 1")
    total = 0
    for d in divisors(gcd(m, k)):
        total += comb((m + k - d) // d, k // d) * ramanujan_sum(d, n)
    count, rem = divmod(total, m)
    if rem:
        raise ArithmeticError(f"non-integral Von Sterneck sum for {(n, m, k)}")
    return count


def reciprocity_check(x: int, y: int, n: int) -> bool:
    """Whether ``x`` parts mod ``y`` and ``y`` parts mod ``x`` give equal counts."""
    return von_sterneck_count(n, y, x) == von_sterneck_count(n, x, y)


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> tuple[int, ...]:
    """Gaussian binomial ``[a choose b]_q`` as a coefficient tuple, constant first.

    The zero polynomial is the empty tuple.

    >>> q_binomial(4, 2)
    (1, 1, 2, 1, 1)
    """
    if a < 0 or b < 0:
        raise ValueError("q_binomial requires non-negative arguments")
    if b > a:
        return ()
    if b == 0 or b == a:
        return (1,)
    # [a, b] = [a-1, b-1] + q^b [a-1, b]
    left = q_binomial(a - 1, b - 1)
    right = q_binomial(a - 1, b)
    out = [0] * (b * (a - b) + 1)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + b] += c
    return tuple(out)


def box_partition_count_mod(parts_max: int, size_max: int, residue: int,
                            modulus: int) -> int:
    """Partitions with at most ``parts_max`` parts, each at most ``size_max``,
    whose size is congruent to ``residue`` mod ``modulus``.

    A negative ``size_max`` describes an empty box and gives 0.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if size_max < 0 or parts_max < 0:
        return 0
    coeffs = q_binomial(parts_max + size_max, parts_max)
    residue %= modulus
    return sum(coeffs[j] for j in range(residue, len(coeffs), modulus))


@lru_cache(maxsize=None)
def _digit_sum_poly(k: int, d: int) -> tuple[int, ...]:
    # coefficients of (1 + z + ... + z^(k-1))^d
    poly = [1]
    for _ in range(d):
        nxt = [0] * (len(poly) + k - 1)
        for i, c in enumerate(poly):
            if c:
                for j in range(k):
                    nxt[i + j] += c
        poly = nxt
    return tuple(poly)


def f_coeff(n: int, k: int, d: int) -> int:
    """Coefficient of ``z^n`` in ``((z^k - 1) / (z - 1))^d``: words of length ``d``
    over ``{0, ..., k-1}`` with symbol sum ``n``."""
    if k < 1:
        raise ValueError("f_coeff requires k >= 1")
    poly = _digit_sum_poly(k, d)
    if n < 0 or n >= len(poly):
        return 0
    return poly[n]


def aperiodic_necklace_count(i: int, k: int, m: int) -> int:
    """Aperiodic necklaces of length ``i`` on ``{0, ..., k-1}`` with symbol sum ``m``.

    Mobius inversion over periods: a word of period ``i/d`` repeated ``d`` times
    has symbol sum divisible by ``d``, so only divisors of ``gcd(i, m)`` appear and
    the primitive block carries sum ``m/d``.
    """
    if i < 1 or k < 1:
        raise ValueError("aperiodic_necklace_count requires i, k >= 1")
    if m < 0:
        return 0
    total = 0
    for d in divisors(i):
        if m % d == 0:
            total += mobius(d) * f_coeff(m // d, k, i // d)
    count, rem = divmod(total, i)
    if rem:
        raise ArithmeticError(f"non-integral necklace count for {(i, k, m)}")
    return count


def necklace_total(i: int, k: int) -> int:
    """All aperiodic necklaces of length ``i`` on ``k`` symbols."""
    return sum(mobius(d) * k ** (i // d) for d in divisors(i)) // i

