"""Finite fields F_q (q = p^m <= 64), polynomials over them, and counting lemmas.

Field elements are integers ``0..q-1``: the element ``c_0 + c_1 t + ... `` of
``F_p[t] / (modulus)`` has index ``c_0 + c_1 p + ...``.  Index 0 is zero and
index 1 is one.  Polynomials over F_q are tuples of element indices, constant
term first, with no trailing zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .numtheory import divisors, mobius

__all__ = [
    "FIELD_SIZE_LIMIT",
    "FiniteField",
    "make_field",
    "prime_power",
    "irreducibles",
    "is_irreducible",
    "factor",
    "reciprocal_conjugate",
    "sign_conjugate",
    "count_irreducibles",
    "count_selfreciprocal_irreducibles",
    "enumerate_selfreciprocal_irreducibles",
    "count_transitive_unimodal",
    "irreducible_count_by_norm",
    "necklace_norm_histogram",
]

FIELD_SIZE_LIMIT = 64
POLY_SPACE_LIMIT = 10 ** 7

Poly = tuple[int, ...]


def prime_power(q: int) -> tuple[int, int]:
    """``(p, m)`` with ``q == p**m`` and ``p`` prime; ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, m


def _fp_divides(p: int, f: list[int], g: list[int]) -> bool:
    # whether monic g divides f over F_p (lists, constant first)
    r = f[:]
    dg = len(g) - 1
    for top in range(len(r) - 1, dg - 1, -1):
        c = r[top] % p
        if c:
            for j in range(dg + 1):
                r[top - dg + j] = (r[top - dg + j] - c * g[j]) % p
    return not any(x % p for x in r[:dg])


def _fp_irreducible(p: int, f: list[int]) -> bool:
    d = len(f) - 1
    for e in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=e):
            if _fp_divides(p, f, list(low) + [1]):
                return False
    return True


@dataclass(frozen=True, eq=False)
class FiniteField:
    """F_q with multiplication tables and a fixed generator of the unit group."""

    p: int
    m: int
    modulus: tuple[int, ...]
    add: tuple[tuple[int, ...], ...] = field(repr=False)
    mul: tuple[tuple[int, ...], ...] = field(repr=False)
    neg: tuple[int, ...] = field(repr=False)
    inv: tuple[int, ...] = field(repr=False)
    generator: int = 0
    log: tuple[int, ...] = field(repr=False, default=())

    @property
    def q(self) -> int:
        return self.p ** self.m

    @property
    def one(self) -> int:
        return 1

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def power(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return self.exp(self.log[a] * e)

    def exp(self, e: int) -> int:
        """``generator ** e``."""
        x = 1
        g = self.generator
        for _ in range(e % (self.q - 1)):
            x = self.mul[x][g]
        return x

    def __repr__(self) -> str:
        return f"FiniteField(q={self.q}, modulus={self.modulus})"

    # polynomial arithmetic over F_q

    def poly_trim(self, f) -> Poly:
        f = list(f)
        while f and f[-1] == 0:
            f.pop()
        return tuple(f)

    def poly_add(self, f: Poly, g: Poly) -> Poly:
        n = max(len(f), len(g))
        add = self.add
        out = [add[f[i] if i < len(f) else 0][g[i] if i < len(g) else 0] for i in range(n)]
        return self.poly_trim(out)

    def poly_sub(self, f: Poly, g: Poly) -> Poly:
        return self.poly_add(f, tuple(self.neg[c] for c in g))

    def poly_scale(self, c: int, f: Poly) -> Poly:
        row = self.mul[c]
        return self.poly_trim(row[x] for x in f)

    def poly_mul(self, f: Poly, g: Poly) -> Poly:
        if not f or not g:
            return ()
        add, mul = self.add, self.mul
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                row = mul[a]
                for j, b in enumerate(g):
                    if b:
                        out[i + j] = add[out[i + j]][row[b]]
        return self.poly_trim(out)

    def poly_divmod(self, f: Poly, g: Poly) -> tuple[Poly, Poly]:
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        add, mul, neg = self.add, self.mul, self.neg
        r = list(f)
        dg = len(g) - 1
        lead_inv = self.inv[g[-1]]
        if len(r) <= dg:
            return (), self.poly_trim(r)
        quot = [0] * (len(r) - dg)
        for top in range(len(r) - 1, dg - 1, -1):
            c = r[top]
            if c:
                c = mul[c][lead_inv]
                quot[top - dg] = c
                nc = neg[c]
                row = mul[nc]
                for j in range(dg + 1):
                    if g[j]:
                        r[top - dg + j] = add[r[top - dg + j]][row[g[j]]]
        return self.poly_trim(quot), self.poly_trim(r[:dg])

    def poly_mod(self, f: Poly, g: Poly) -> Poly:
        return self.poly_divmod(f, g)[1]

    def poly_monic(self, f: Poly) -> Poly:
        if not f:
            return f
        return self.poly_scale(self.inv[f[-1]], f)

    def poly_gcd(self, f: Poly, g: Poly) -> Poly:
        while g:
            f, g = g, self.poly_mod(f, g)
        return self.poly_monic(f)

    def poly_powmod(self, f: Poly, e: int, mod: Poly) -> Poly:
        result: Poly = (1,)
        base = self.poly_mod(f, mod)
        while e:
            if e & 1:
                result = self.poly_mod(self.poly_mul(result, base), mod)
            base = self.poly_mod(self.poly_mul(base, base), mod)
            e >>= 1
        return result

    def poly_eval(self, f: Poly, x: int) -> int:
        acc = 0
        for c in reversed(f):
            acc = self.add[self.mul[acc][x]][c]
        return acc

    def monic_polys(self, degree: int):
        """All monic polynomials of the given degree, lower coefficients varying
        lexicographically with the constant term slowest."""
        if self.q ** degree > POLY_SPACE_LIMIT:
            raise ValueError(f"{self.q}^{degree} polynomials exceed the enumeration limit")
        for low in itertools.product(range(self.q), repeat=degree):
            yield tuple(low) + (1,)


@lru_cache(maxsize=None)
def make_field(q: int) -> FiniteField:
    """F_q with the lexicographically least monic irreducible modulus.

    Moduli are compared on ``(c_0, c_1, ..., c_{m-1})``.  The stored generator
    is the least element index of multiplicative order ``q - 1``.
    """
    p, m = prime_power(q)
    if q > FIELD_SIZE_LIMIT:
        raise ValueError(f"field size {q} above the limit {FIELD_SIZE_LIMIT}")
    if m == 1:
        modulus = (0, 1)
    else:
        modulus = next(tuple(low) + (1,) for low in itertools.product(range(p), repeat=m)
                       if _fp_irreducible(p, list(low) + [1]))

    def digits(a: int) -> list[int]:
        return [(a // p ** i) % p for i in range(m)]

    def index(ds) -> int:
        return sum(d * p ** i for i, d in enumerate(ds))

    vecs = [digits(a) for a in range(q)]
    add = tuple(tuple(index([(x + y) % p for x, y in zip(vecs[a], vecs[b])])
                      for b in range(q)) for a in range(q))

    def mul_vec(x: list[int], y: list[int]) -> list[int]:
        prod = [0] * (2 * m - 1)
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                prod[i + j] = (prod[i + j] + a * b) % p
        for top in range(2 * m - 2, m - 1, -1):
            c = prod[top]
            if c:
                for j in range(m + 1):
                    prod[top - m + j] = (prod[top - m + j] - c * modulus[j]) % p
        return prod[:m]

    mul = tuple(tuple(index(mul_vec(vecs[a], vecs[b])) for b in range(q)) for a in range(q))
    neg = tuple(index([(-x) % p for x in vecs[a]]) for a in range(q))
    inv = [0] * q
    for a in range(1, q):
        inv[a] = next(b for b in range(1, q) if mul[a][b] == 1)

    def order(a: int) -> int:
        x, k = a, 1
        while x != 1:
            x = mul[x][a]
            k += 1
        return k

    generator = next(a for a in range(1, q) if order(a) == q - 1)
    log = [0] * q
    x = 1
    for e in range(q - 1):
        log[x] = e
        x = mul[x][generator]
    if any(mul[a][inv[a]] != 1 for a in range(1, q)):
        raise ArithmeticError(f"modulus {modulus} does not define a field")
    return FiniteField(p, m, modulus, add, mul, neg, tuple(inv), generator, tuple(log))


def is_irreducible(fq: FiniteField, f: Poly) -> bool:
    """Ben-Or test: no common factor with ``z^(q^i) - z`` for ``i <= deg/2``."""
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if f[0] == 0:
        return False
    z: Poly = (0, 1)
    power = z
    for _ in range(d // 2):
        power = fq.poly_powmod(power, fq.q, f)
        if len(fq.poly_gcd(f, fq.poly_sub(power, z))) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def _irreducibles_cached(q: int, d: int) -> tuple[Poly, ...]:
    fq = make_field(q)
    if d == 1:
        return tuple((a, 1) for a in range(q))
    # sieve: strike out every product of a lower-degree irreducible and a monic
    # cofactor; what survives of degree d is irreducible
    reducible = set()
    for e in range(1, d // 2 + 1):
        for g in _irreducibles_cached(q, e):
            for h in fq.monic_polys(d - e):
                reducible.add(fq.poly_mul(g, h))
    return tuple(f for f in fq.monic_polys(d) if f not in reducible)


def irreducibles(fq: FiniteField, d: int) -> list[Poly]:
    """All monic irreducibles of degree ``d`` in lexicographic enumeration order."""
    if d < 1:
        raise ValueError("degree must be positive")
    if fq.q ** d > POLY_SPACE_LIMIT:
        raise ValueError(f"{fq.q}^{d} exceeds the enumeration limit")
    return list(_irreducibles_cached(fq.q, d))


def count_irreducibles(q: int, d: int) -> int:
    """``(1/d) sum_{e | d} mu(e) q^(d/e)``."""
    return sum(mobius(e) * q ** (d // e) for e in divisors(d)) // d


def _poly_key(f: Poly):
    return (len(f), tuple(reversed(f)))


@lru_cache(maxsize=65536)
def _factor_cached(q: int, f: Poly) -> tuple[tuple[Poly, int], ...]:
    fq = make_field(q)
    rest = f
    found = []
    d = 1
    while 2 * d <= len(rest) - 1:
        for g in _irreducibles_cached(q, d):
            mult = 0
            while True:
                quot, rem = fq.poly_divmod(rest, g)
                if rem:
                    break
                rest = quot
                mult += 1
            if mult:
                found.append((g, mult))
        d += 1
    if len(rest) > 1:
        # no factor of degree <= deg/2 remains
        for i, (g, mult) in enumerate(found):
            if g == rest:
                found[i] = (g, mult + 1)
                break
        else:
            found.append((rest, 1))
    found.sort(key=lambda gm: _poly_key(gm[0]))
    return tuple(found)


def factor(fq: FiniteField, f: Poly) -> list[tuple[Poly, int]]:
    """Factor a monic polynomial into ``(irreducible, multiplicity)`` pairs.

    Factors are sorted by degree, then by coefficients from the top down.
    """
    f = tuple(f)
    if len(f) < 2 or f[-1] != 1:
        raise ValueError("factor expects a monic polynomial of degree >= 1")
    result = list(_factor_cached(fq.q, f))
    product: Poly = (1,)
    for g, mult in result:
        for _ in range(mult):
            product = fq.poly_mul(product, g)
    if product != f:
        raise ArithmeticError(f"factorization of {f} does not recompose")
    return result


def reciprocal_conjugate(fq: FiniteField, f: Poly) -> Poly:
    """``f(0)^{-1} z^{deg f} f(1/z)``: monic, same degree."""
    f = tuple(f)
    if not f or f[0] == 0:
        raise ValueError("reciprocal conjugate needs a nonzero constant term")
    return fq.poly_scale(fq.inv[f[0]], tuple(reversed(f)))


def sign_conjugate(fq: FiniteField, f: Poly) -> Poly:
    """``(-1)^{deg f} f(-z)``: monic, same degree."""
    f = tuple(f)
    d = len(f) - 1
    return fq.poly_trim(c if (i + d) % 2 == 0 else fq.neg[c] for i, c in enumerate(f))


def count_selfreciprocal_irreducibles(q: int, n: int) -> int:
    """Closed form for monic irreducibles of degree ``n``, nonzero constant term,
    fixed by :func:`reciprocal_conjugate`."""
    if n < 1:
        raise ValueError("degree must be positive")
    e = 1 if q % 2 == 0 else 2
    if n == 1:
        return e
    if n % 2:
        return 0
    total = Fraction(0)
    for d in divisors(n):
        if d % 2:
            total += mobius(d) * (q ** (n // (2 * d)) + 1 - e)
    total /= n
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral count for q={q}, n={n}")
    return int(total)


def enumerate_selfreciprocal_irreducibles(fq: FiniteField, n: int) -> list[Poly]:
    """Direct enumeration: monic degree-``n`` polynomials with nonzero constant
    term that equal their reciprocal conjugate and are irreducible."""
    out = []
    for f in fq.monic_polys(n):
        if f[0] and reciprocal_conjugate(fq, f) == f and is_irreducible(fq, f):
            out.append(f)
    return out


def count_transitive_unimodal(n: int) -> int:
    """``(1/2n) sum_{d | n, d odd} mu(d) 2^(n/d)``."""
    if n < 1:
        raise ValueError("n must be positive")
    total = sum(mobius(d) * 2 ** (n // d) for d in divisors(n) if d % 2)
    count, rem = divmod(total, 2 * n)
    if rem:
        raise ArithmeticError(f"non-integral unimodal cycle count for n={n}")
    return count


def irreducible_count_by_norm(fq: FiniteField, i: int) -> dict[int, int]:
    """Histogram over F_q^* of root norms ``(-1)^i f(0)`` of degree-``i``
    irreducibles with nonzero constant term."""
    if fq.q ** i > 10 ** 6:
        raise ValueError("norm histogram limited to q^i <= 10^6")
    hist = {a: 0 for a in range(1, fq.q)}
    for f in irreducibles(fq, i):
        if f[0] == 0:
            continue
        norm = f[0] if i % 2 == 0 else fq.neg[f[0]]
        hist[norm] += 1
    return hist


def necklace_norm_histogram(fq: FiniteField, i: int) -> dict[int, int]:
    """The same histogram predicted from aperiodic necklaces on ``q`` symbols.

    A root ``tau^a`` of a degree-``i`` irreducible has norm ``phi^a`` where
    ``tau^((q^i - 1)/(q - 1)) = phi``; the base-q digits of ``a`` form an aperiodic
    necklace and ``a`` is congruent to their sum mod ``q - 1``.  For ``i == 1``
    the digit words ``(0)`` and ``(q-1)`` name the same root, so one is dropped.
    """
    from .numtheory import aperiodic_necklace_count

    q = fq.q
    hist = {a: 0 for a in range(1, q)}
    for m in range(i * (q - 1) + 1):
        count = aperiodic_necklace_count(i, q, m)
        if count:
            hist[fq.exp(m)] += count
    if i == 1:
        hist[1] -= 1
    return hist
