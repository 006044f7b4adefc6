"""Cactus group words and their images in the symmetric group.

A word ``g_1 g_2 ... g_m`` is stored flat, in written order, and read as an
operator product: ``g_m`` acts first. Generators are ``T(i)`` (the
Bender-Knuth generator ``t_i``) and ``Q(i, j)`` (the interval generator
``q_[i,j]``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence


class WordError(ValueError):
    pass


class InvalidIndices(WordError):
    pass


class InvalidRank(WordError):
    pass


class T(NamedTuple):
    i: int

    def __str__(self):
        return f"t{self.i}"

    @property
    def min_rank(self) -> int:
        return self.i + 1


class Q(NamedTuple):
    i: int
    j: int

    def __str__(self):
        return f"q[{self.i},{self.j}]"

    @property
    def min_rank(self) -> int:
        return self.j


def _check_generator(g) -> None:
    if isinstance(g, T):
        if g.i < 1:
            raise InvalidIndices(f"t_{g.i}: index must be >= 1")
    elif isinstance(g, Q):
        if not 1 <= g.i < g.j:
            raise InvalidIndices(f"q[{g.i},{g.j}]: need 1 <= i < j")
    else:
        raise WordError(f"not a generator: {g!r}")


@dataclass(frozen=True)
class CactusWord:
    generators: tuple = ()
    rank: int | None = None

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            _check_generator(g)
        if self.rank is not None and self.min_rank > self.rank:
            raise InvalidRank(f"word needs rank {self.min_rank}, got {self.rank}")

    @property
    def min_rank(self) -> int:
        return max((g.min_rank for g in self.generators), default=1)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __mul__(self, other: "CactusWord") -> "CactusWord":
        ranks = [r for r in (self.rank, other.rank) if r is not None]
        return CactusWord(self.generators + other.generators, max(ranks) if ranks else None)

    def __pow__(self, k: int) -> "CactusWord":
        return CactusWord(self.generators * k, self.rank)

    def __str__(self):
        return " ".join(map(str, self.generators))

    def expand(self) -> "CactusWord":
        """Rewrite every ``Q(i, j)`` as the ``t``-word of ``q_{ij}``."""
        gens = []
        for g in self.generators:
            if isinstance(g, Q):
                gens.extend(qjk_word(g.i, g.j).generators)
            else:
                gens.append(g)
        return CactusWord(tuple(gens), self.rank)


def qi_word(i: int) -> CactusWord:
    """``q_i = t_1 (t_2 t_1) ... (t_i t_{i-1} ... t_1)``; ``q_0`` is empty."""
    if i < 0:
        raise InvalidIndices("q_i needs i >= 0")
    gens = []
    for top in range(1, i + 1):
        gens.extend(T(s) for s in range(top, 0, -1))
    return CactusWord(tuple(gens))


def qjk_word(j: int, k: int) -> CactusWord:
    """``q_{jk} = q_{k-1} q_{k-j} q_{k-1}``."""
    if not 1 <= j < k:
        raise InvalidIndices(f"q_{{{j},{k}}} needs 1 <= j < k")
    outer = qi_word(k - 1)
    return outer * qi_word(k - j) * outer


_WORD_TOKEN = re.compile(
    r"t(\d+)|q\[\s*(\d+)\s*,\s*(\d+)\s*\]|qi(\d+)|qjk\(\s*(\d+)\s*,\s*(\d+)\s*\)"
)


def parse_word(text: str) -> CactusWord:
    """Parse ``t3 q[2,7] qi5 qjk(3,7)``; ``qi`` and ``qjk`` expand to ``t``-words."""
    gens: list = []
    for tok in text.split():
        m = _WORD_TOKEN.fullmatch(tok)
        if not m:
            raise WordError(f"cannot parse generator {tok!r}")
        g = m.groups()
        if g[0] is not None:
            gens.append(T(int(g[0])))
        elif g[1] is not None:
            gens.append(Q(int(g[1]), int(g[2])))
        elif g[3] is not None:
            gens.extend(qi_word(int(g[3])).generators)
        else:
            gens.extend(qjk_word(int(g[4]), int(g[5])).generators)
    return CactusWord(tuple(gens))


class Permutation:
    """A permutation of ``{1..n}`` in one-line notation.

    ``p * q`` is the composite ``p ∘ q`` (``q`` first), matching the operator
    reading of words.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_mapping(cls, n: int, mapping: dict[int, int]) -> "Permutation":
        return cls(mapping.get(x, x) for x in range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        return cls.from_mapping(n, {a: b, b: a})

    @classmethod
    def reversal(cls, n: int, values: Sequence[int]) -> "Permutation":
        """Send ``values[s]`` to ``values[-1 - s]``; the values need not be consecutive."""
        return cls.from_mapping(n, dict(zip(values, reversed(values))))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("permutations of different size")
        return Permutation(self.images[y - 1] for y in other.images)

    def __pow__(self, k: int) -> "Permutation":
        result = Permutation.identity(self.n)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for x, y in enumerate(self.images, 1):
            inv[y - 1] = x
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images, 1))

    def act_on_word(self, word: Sequence) -> list:
        """Rearrange positions: position ``x`` of the result holds ``word[self(x)]``."""
        return [word[y - 1] for y in self.images]

    def support(self) -> list[int]:
        return [x for x, y in enumerate(self.images, 1) if x != y]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        return "".join(map(str, self.images)) if self.n < 10 else " ".join(map(str, self.images))

    def two_line(self, domain: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(domain), tuple(self(x) for x in domain)


def generator_image(g, n: int) -> Permutation:
    if isinstance(g, T):
        return Permutation.transposition(n, g.i, g.i + 1)
    return Permutation.reversal(n, range(g.i, g.j + 1))


def to_symmetric(w: CactusWord, n: int) -> Permutation:
    """Image under ``C_n -> S_n``: ``q_[i,j]`` reverses ``[i..j]``, ``t_i`` swaps ``i, i+1``."""
    if w.min_rank > n:
        raise InvalidRank(f"word needs rank {w.min_rank}, got {n}")
    result = Permutation.identity(n)
    for g in w.generators:
        result = result * generator_image(g, n)
    return result


def trace_word(w: CactusWord, start: Sequence, n: int) -> list[list]:
    """Successive arrangements of ``start`` as the generators are applied in written order."""
    states = [list(start)]
    for g in w.generators:
        states.append(generator_image(g, n).act_on_word(states[-1]))
    return states


@dataclass(frozen=True)
class Violation:
    relation: str
    indices: tuple[int, ...]


def verify_presentation(n: int) -> list[Violation]:
    """Check both presentations' relations in ``S_n``; returns the violated instances."""
    if n < 2:
        raise InvalidRank("presentation checks need n >= 2")
    ident = Permutation.identity(n)

    def q(i, j):
        return to_symmetric(CactusWord((Q(i, j),)), n)

    def t(i):
        return to_symmetric(CactusWord((T(i),)), n)

    bad = []
    intervals = list(combinations(range(1, n + 1), 2))
    for i, j in intervals:
        if q(i, j) * q(i, j) != ident:
            bad.append(Violation("q[i,j]^2", (i, j)))
        # both presentation routes must agree
        if to_symmetric(qjk_word(i, j), n) != q(i, j):
            bad.append(Violation("q[i,j] = q_jk expansion", (i, j)))
    for (i, j), (k, l) in ((a, b) for a in intervals for b in intervals):
        if j < k and q(i, j) * q(k, l) != q(k, l) * q(i, j):
            bad.append(Violation("disjoint commute", (i, j, k, l)))
        if i <= k < l <= j and q(i, j) * q(k, l) * q(i, j) != q(i + j - l, i + j - k):
            bad.append(Violation("nesting", (i, j, k, l)))
    for i in range(1, n):
        if t(i) * t(i) != ident:
            bad.append(Violation("t_i^2", (i,)))
        for j in range(1, n):
            if abs(i - j) > 1 and (t(i) * t(j)) ** 2 != ident:
                bad.append(Violation("(t_i t_j)^2", (i, j)))
    for i, j, k in cactus_triples(n):
        if (t(i) * to_symmetric(qjk_word(j, k), n)) ** 2 != ident:
            bad.append(Violation("(t_i q_jk)^2", (i, j, k)))
    return bad


def cactus_triples(n: int) -> list[tuple[int, int, int]]:
    """All ``(i, j, k)`` with ``i + 1 < j < k <= n``, lexicographically."""
    return [
        (i, j, k)
        for i in range(1, n + 1)
        for j in range(i + 2, n + 1)
        for k in range(j + 1, n + 1)
    ]
