"""Card shuffles through the word model, the Gessel-Reutenauer necklace map,
unimodal permutations and the 2-to-1 map from signed 2-shuffles to them.

A shuffle outcome is recorded as the deck read from the top: ``deck[p-1]`` is
the (signed) card at position ``p``, cards being labelled ``1..n`` by their
original position.  A flipped card carries a minus sign.

Every shuffle is driven by a word ``b`` of pile labels ``0..k-1``, one per final
deck position.  The letter counts give the cut sizes and the word itself gives
the interleaving, so the uniform measure on the ``k^n`` words realizes
"multinomial cut, then uniform interleaving".
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

from .measures import Measure
from .weyl import Group, cycle_shape_multiset, cycles, descents, inverse, shape_as_permutation

__all__ = [
    "ShuffleKind",
    "GSR",
    "TYPE_C",
    "HALF_AND_FLIP",
    "WORD_SPACE_LIMIT",
    "deck_from_word",
    "words",
    "exact_distribution",
    "gsr_coefficient",
    "sample",
    "samples",
    "standard_permutation",
    "canonical_necklace",
    "gr_necklace_multiset",
    "unimodal_enumerate",
    "transitive_unimodal_count",
    "gannon_census",
    "eta",
    "in_signed_two_shuffle_support",
    "shape_distribution",
    "shape_product_formula",
    "fixed_point_fraction_unimodal",
]

WORD_SPACE_LIMIT = 10 ** 7
UNIMODAL_LIMIT = 10 ** 6

GSR = "gsr"
TYPE_C = "typec"
HALF_AND_FLIP = "halfflip"


@dataclass(frozen=True)
class ShuffleKind:
    """``gsr`` and ``typec`` take any ``k >= 1``; ``halfflip`` always has ``k == 2``."""

    name: str
    k: int = 2

    def __post_init__(self):
        if self.name not in (GSR, TYPE_C, HALF_AND_FLIP):
            raise ValueError(f"unknown shuffle kind {self.name!r}")
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.name == HALF_AND_FLIP and self.k != 2:
            raise ValueError("the half-and-flip shuffle is a 2-pile shuffle")

    @property
    def group_kind(self) -> str:
        return "C" if self.name == TYPE_C else "A"


def _flipped(k: int, pile: int) -> bool:
    # piles numbered from 1: odd k flips the even piles, even k the odd ones
    number = pile + 1
    return number % 2 == 0 if k % 2 else number % 2 == 1


def _piles(kind: ShuffleKind, sizes: list[int], n: int) -> list[list[int]]:
    if kind.name == HALF_AND_FLIP:
        # pile 1 keeps the middle; pile 0 is the bottom j cards set on the top j
        j = sizes[1] // 2
        return [list(range(j + 1, n - j + 1)),
                list(range(n - j + 1, n + 1)) + list(range(1, j + 1))]
    piles, start = [], 0
    for c, size in enumerate(sizes):
        cards = list(range(start + 1, start + size + 1))
        start += size
        if kind.name == TYPE_C and _flipped(kind.k, c):
            cards = [-x for x in reversed(cards)]
        piles.append(cards)
    return piles


def deck_from_word(kind: ShuffleKind, word: Sequence[int]) -> tuple[int, ...]:
    """Cut sizes from the letter counts, then deal position ``p`` from pile ``word[p]``."""
    n = len(word)
    sizes = [0] * kind.k
    for c in word:
        sizes[c] += 1
    if kind.name == HALF_AND_FLIP and sizes[1] % 2:
        raise ValueError("half-and-flip words use pile 1 an even number of times")
    streams = [iter(p) for p in _piles(kind, sizes, n)]
    return tuple(next(streams[c]) for c in word)


def words(kind: ShuffleKind, n: int) -> Iterator[tuple[int, ...]]:
    """All equally likely words of the shuffle, in lexicographic order."""
    for word in itertools.product(range(kind.k), repeat=n):
        if kind.name == HALF_AND_FLIP and word.count(1) % 2:
            continue
        yield word


def _word_count(kind: ShuffleKind, n: int) -> int:
    if kind.name == HALF_AND_FLIP:
        return 2 ** (n - 1)
    return kind.k ** n


def exact_distribution(kind: ShuffleKind, n: int) -> Measure:
    """Law of the shuffled deck, by enumerating every word."""
    if n < 1:
        raise ValueError("n must be positive")
    if kind.k ** n > WORD_SPACE_LIMIT:
        raise ValueError(f"{kind.k}^{n} words exceed the enumeration limit")
    group = Group(kind.group_kind, n)
    weight = Fraction(1, _word_count(kind, n))
    values = {w: Fraction(0) for w in group.elements()}
    for word in words(kind, n):
        values[deck_from_word(kind, word)] += weight
    return Measure(group, values)


def gsr_coefficient(w, k: int) -> Fraction:
    """``binomial(n + k - d(w) - 1, n) / k^n``; the GSR deck has law ``w -> gsr_coefficient(w^{-1})``."""
    n = len(w)
    top = n + k - len(descents(tuple(w))) - 1
    return Fraction(comb(top, n) if top >= n else 0, k ** n)


def _random_word(kind: ShuffleKind, n: int, rng: random.Random) -> list[int]:
    word = [rng.randrange(kind.k) for _ in range(n)]
    if kind.name == HALF_AND_FLIP and word.count(1) % 2:
        # the first n-1 letters are free; the last one fixes the parity
        word[-1] ^= 1
    return word


def sample(kind: ShuffleKind, n: int, seed: int) -> tuple[int, ...]:
    """One shuffled deck; the seed fully determines the output."""
    return deck_from_word(kind, _random_word(kind, n, random.Random(seed)))


def samples(kind: ShuffleKind, n: int, seed: int, count: int) -> list[tuple[int, ...]]:
    """``count`` independent decks from one seeded stream."""
    rng = random.Random(seed)
    return [deck_from_word(kind, _random_word(kind, n, rng)) for _ in range(count)]


def standard_permutation(word: Sequence) -> tuple[int, ...]:
    """Rank each letter, ties broken left to right.

    >>> standard_permutation("bbaabcccbcbb")
    (3, 4, 1, 2, 5, 9, 10, 11, 6, 12, 7, 8)
    """
    if not len(word):
        raise ValueError("empty word")
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    out = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return tuple(out)


def canonical_necklace(letters: Sequence) -> tuple:
    """Least rotation."""
    letters = tuple(letters)
    return min(letters[i:] + letters[:i] for i in range(len(letters)))


def gr_necklace_multiset(word: Sequence) -> tuple[tuple, ...]:
    """Necklaces of ``word``: each cycle of ``st(word)``, read along
    ``i -> st^{-1}(i)``, with positions replaced by their letters."""
    st_inv = inverse(standard_permutation(word))
    out = []
    for cyc in cycles(st_inv):
        out.append(canonical_necklace([word[i - 1] for i in cyc]))
    return tuple(sorted(out, key=lambda c: (len(c), c)))


def unimodal_enumerate(n: int) -> list[tuple[int, ...]]:
    """Permutations rising to ``n`` and then falling, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    if 2 ** (n - 1) > UNIMODAL_LIMIT:
        raise ValueError(f"2^{n - 1} unimodal permutations exceed the limit")
    out = []
    for mask in range(2 ** (n - 1)):
        left = [i for i in range(1, n) if mask >> (i - 1) & 1]
        right = [i for i in range(n - 1, 0, -1) if not mask >> (i - 1) & 1]
        out.append(tuple(left + [n] + right))
    out.sort()
    return out


def transitive_unimodal_count(n: int) -> int:
    """Unimodal ``n``-cycles, by enumeration."""
    return sum(1 for w in unimodal_enumerate(n) if len(cycles(w)) == 1)


def gannon_census(n: int) -> dict[tuple, int]:
    """Number of unimodal permutations with each realized multiset of cycle shapes."""
    census: Counter = Counter(cycle_shape_multiset(w) for w in unimodal_enumerate(n))
    return dict(sorted(census.items(), key=lambda kv: (len(kv[0]), kv[0])))


def in_signed_two_shuffle_support(w: Sequence[int]) -> bool:
    """Whether ``w`` is a deck produced by the 2-pile signed shuffle.

    The flipped top pile deals ``-j, ..., -1`` in that order and the second pile
    deals ``j+1, ..., n`` in order.
    """
    neg = [x for x in w if x < 0]
    pos = [x for x in w if x > 0]
    j = len(neg)
    return neg == list(range(-j, 0)) and pos == list(range(j + 1, len(w) + 1))


def eta(w: Sequence[int]) -> tuple[int, ...]:
    """Invert, drop signs, then conjugate by ``i -> n + 1 - i``."""
    w = tuple(w)
    if not in_signed_two_shuffle_support(w):
        raise ValueError(f"{w} is not produced by the signed 2-shuffle")
    n = len(w)
    unsigned = [abs(x) for x in inverse(w)]
    out = [0] * n
    for i in range(1, n + 1):
        out[i - 1] = n + 1 - unsigned[n - i]
    return tuple(out)


def shape_distribution(n: int, k: int) -> dict[tuple, Fraction]:
    """Law of the multiset of cycle shapes of the GSR ``k``-shuffled deck."""
    out: dict = {}
    for w, p in exact_distribution(ShuffleKind(GSR, k), n).values.items():
        if p:
            key = cycle_shape_multiset(w)
            out[key] = out.get(key, Fraction(0)) + p
    return out


def shape_product_formula(multiset: Sequence[tuple], k: int) -> Fraction:
    """``k^-n`` times, over shapes ``s`` with multiplicity ``n_s``, the number of
    size-``n_s`` multisets from ``binomial(|s| + k - d(s^{-1}) - 1, |s|)`` kinds."""
    n = sum(len(s) for s in multiset)
    p = Fraction(1, k ** n)
    for s, ns in Counter(multiset).items():
        size = len(s)
        kinds = comb(size + k - 1 - len(descents(inverse(shape_as_permutation(s)))), size)
        p *= comb(kinds + ns - 1, ns)
    return p


def fixed_point_fraction_unimodal(n: int) -> Fraction:
    """Exact share of unimodal permutations of ``1..n`` with a fixed point."""
    perms = unimodal_enumerate(n)
    hits = sum(1 for w in perms if any(x == i for i, x in enumerate(w, start=1)))
    return Fraction(hits, len(perms))

