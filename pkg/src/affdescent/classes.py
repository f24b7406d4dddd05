"""Semisimple classes of SL(n, q), Sp(2n, q) and orbits on sp(2n, q) as
polynomials, and the map to Weyl-group class labels.

Labels use the conventions of :mod:`affdescent.weyl`: a partition for type A,
and a pair ``(positive, negative)`` of partitions for type C, where a part ``i``
in ``positive`` (resp. ``negative``) stands for one positive (negative) i-cycle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

import numpy as np

from .fields import FiniteField, Poly, factor, make_field, reciprocal_conjugate, sign_conjugate

__all__ = [
    "SL_LIMIT",
    "SP_LIMIT",
    "enumerate_sl",
    "enumerate_sp",
    "enumerate_sp_lie",
    "phi_A",
    "phi_C",
    "phi_C_lie",
    "class_distribution",
    "label_weight",
]

SL_LIMIT = 10 ** 6
SP_LIMIT = 10 ** 7
SP_LIE_LIMIT = 10 ** 6
_CHUNK = 1 << 20


def enumerate_sl(n: int, q: int) -> Iterator[Poly]:
    """Monic degree-``n`` polynomials with constant term 1."""
    fq = make_field(q)
    if n < 1:
        raise ValueError("n must be positive")
    if q ** (n - 1) > SL_LIMIT:
        raise ValueError(f"q^(n-1) = {q ** (n - 1)} exceeds {SL_LIMIT}")
    for f in fq.monic_polys(n - 1):
        # f runs over z^(n-1) + ...; shift up and put 1 in front
        yield (1,) + f


def _multiplicity(fq: FiniteField, f: Poly, g: Poly) -> int:
    m = 0
    while True:
        quot, rem = fq.poly_divmod(f, g)
        if rem:
            return m
        f = quot
        m += 1


def _selfreciprocal_candidates(fq: FiniteField, degree: int) -> Iterator[Poly]:
    # Every monic polynomial of the given degree is scanned in numpy chunks;
    # a polynomial is kept when c_i == c_0^{-1} c_{N-i} for all i, which forces
    # c_0 == c_0^{-1}.  Ordering matches FiniteField.monic_polys.
    q = fq.q
    total = q ** degree
    mul = np.array(fq.mul, dtype=np.int64)
    inv = np.array(fq.inv, dtype=np.int64)
    powers = [q ** (degree - 1 - i) for i in range(degree)]
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = [(idx // powers[i]) % q for i in range(degree)]
        c0 = digits[0]
        mask = c0 != 0
        c0inv = inv[c0]
        mask &= c0inv == c0
        for i in range(1, degree):
            if not mask.any():
                break
            mask &= digits[i] == mul[c0inv, digits[degree - i]]
        for j in np.flatnonzero(mask):
            yield tuple(int(d[j]) for d in digits) + (1,)


def enumerate_sp(n: int, q: int) -> list[Poly]:
    """Self-reciprocal monic degree-``2n`` polynomials with nonzero constant term
    in which ``z - 1`` and ``z + 1`` occur to even multiplicity.

    Raises ArithmeticError unless exactly ``q**n`` polynomials are found.
    """
    fq = make_field(q)
    if n < 1:
        raise ValueError("n must be positive")
    if q ** (2 * n) > SP_LIMIT:
        raise ValueError(f"q^(2n) = {q ** (2 * n)} exceeds {SP_LIMIT}")
    linear = {(fq.neg[1], 1), (1, 1)}
    out = []
    for f in _selfreciprocal_candidates(fq, 2 * n):
        if all(_multiplicity(fq, f, g) % 2 == 0 for g in linear):
            out.append(f)
    if len(out) != q ** n:
        raise ArithmeticError(f"found {len(out)} classes for Sp({2 * n}, {q}), expected {q ** n}")
    return out


def enumerate_sp_lie(n: int, q: int) -> list[Poly]:
    """Even monic degree-``2n`` polynomials ``g(z^2)``, q odd."""
    fq = make_field(q)
    if q % 2 == 0:
        raise ValueError("the Lie algebra side needs odd characteristic")
    if n < 1:
        raise ValueError("n must be positive")
    if q ** n > SP_LIE_LIMIT:
        raise ValueError(f"q^n = {q ** n} exceeds {SP_LIE_LIMIT}")
    out = []
    for g in fq.monic_polys(n):
        f = [0] * (2 * n + 1)
        f[::2] = g
        out.append(tuple(f))
    return out


def _partition(parts) -> tuple[int, ...]:
    return tuple(sorted(parts, reverse=True))


def phi_A(f: Poly, q: int) -> tuple[int, ...]:
    """Partition of factor degrees, each repeated by its multiplicity."""
    fq = make_field(q)
    parts = []
    for g, mult in factor(fq, f):
        parts.extend([len(g) - 1] * mult)
    return _partition(parts)


def _paired_label(fq: FiniteField, f: Poly, conjugate, forced_even) -> tuple:
    factors = factor(fq, f)
    mults = dict(factors)
    positive, negative = [], []
    for g, mult in factors:
        h = conjugate(fq, g)
        d = len(g) - 1
        if h != g:
            if mults.get(h) != mult:
                raise ValueError(f"factor {g} and its conjugate {h} have unequal multiplicity")
            if g < h:
                positive.extend([d] * mult)
            continue
        r, s = divmod(mult, 2)
        if s and g in forced_even:
            raise ValueError(f"self-paired factor {g} must have even multiplicity")
        positive.extend([d] * r)
        if s:
            if d % 2:
                raise ValueError(f"self-conjugate factor {g} of odd degree with odd multiplicity")
            negative.append(d // 2)
    return _partition(positive), _partition(negative)


def phi_C(f: Poly, q: int) -> tuple:
    """Type C label of a symplectic class, pairing factors under the reciprocal."""
    fq = make_field(q)
    forced = {(fq.neg[1], 1), (1, 1)}
    return _paired_label(fq, f, reciprocal_conjugate, forced)


def phi_C_lie(f: Poly, q: int) -> tuple:
    """Type C label of a Lie algebra orbit, pairing factors under ``z -> -z``."""
    fq = make_field(q)
    return _paired_label(fq, f, sign_conjugate, {(0, 1)})


def label_weight(label) -> int:
    if label and isinstance(label[0], tuple):
        return sum(label[0]) + sum(label[1])
    return sum(label)


def class_distribution(kind: str, n: int, q: int) -> dict:
    """Uniform measure on the classes of the given kind pushed to Weyl labels.

    ``kind`` is ``"SL"``, ``"Sp"`` or ``"SpLie"``; ``n`` is the rank plus one for
    SL and the rank for the other two.
    """
    if kind == "SL":
        polys, phi = list(enumerate_sl(n, q)), phi_A
    elif kind == "Sp":
        polys, phi = enumerate_sp(n, q), phi_C
    elif kind == "SpLie":
        polys, phi = enumerate_sp_lie(n, q), phi_C_lie
    else:
        raise ValueError(f"unknown class kind {kind!r}")
    weight = Fraction(1, len(polys))
    out: dict = {}
    for f in polys:
        label = phi(f, q)
        if label_weight(label) != n:
            raise ArithmeticError(f"label {label} of {f} has the wrong weight")
        out[label] = out.get(label, Fraction(0)) + weight
    return out
