"""Finite posets, the chain-union building blocks, and linear extensions.

Elements of a poset of size ``n`` are the integers ``0..n-1``. Labels of a
linear extension are 1-based, so a linear extension of an ``n``-element poset
is a bijection onto ``{1, ..., n}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np


class PosetError(ValueError):
    pass


class NotAPoset(PosetError):
    """The given relation has a cycle."""


class InadmissiblePartition(PosetError):
    pass


def _closure(size: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    # up[a] is the bitset of b with a <= b
    up = [1 << a for a in range(size)]
    succ = [[] for _ in range(size)]
    for a, b in pairs:
        if not (0 <= a < size and 0 <= b < size):
            raise PosetError(f"element out of range in relation ({a}, {b})")
        if a == b:
            raise NotAPoset(f"reflexive pair ({a}, {a}) given as a strict relation")
        succ[a].append(b)

    state = [0] * size  # 0 new, 1 on stack, 2 done
    for root in range(size):
        if state[root]:
            continue
        stack = [(root, iter(succ[root]))]
        state[root] = 1
        while stack:
            node, it = stack[-1]
            for nxt in it:
                if state[nxt] == 1:
                    raise NotAPoset("relation contains a cycle")
                if state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, iter(succ[nxt])))
                    break
            else:
                stack.pop()
                state[node] = 2
                for b in succ[node]:
                    up[node] |= up[b]
    return up


def _reduction(size: int, up: Sequence[int]) -> frozenset[tuple[int, int]]:
    covers = set()
    for a in range(size):
        strict = up[a] & ~(1 << a)
        implied = 0
        b = strict
        while b:
            low = b & -b
            c = low.bit_length() - 1
            implied |= up[c] & ~(1 << c)
            b ^= low
        direct = strict & ~implied
        while direct:
            low = direct & -direct
            covers.add((a, low.bit_length() - 1))
            direct ^= low
    return frozenset(covers)


@dataclass(frozen=True, eq=False)
class Poset:
    """An immutable finite poset stored by its Hasse diagram.

    ``covers`` holds pairs ``(a, b)`` meaning ``b`` covers ``a``. Comparability
    is precomputed once as bitset rows (``up``) and as a boolean matrix.

    Two optional pieces of structure are carried along by the constructors:

    * ``blocks``: sizes of the ordinal summands, bottom to top, when the poset
      was built with :func:`ordinal_sum`. The summands occupy consecutive
      index ranges.
    * ``chain_of``: for every element, the index of the chain it lies on, when
      every ordinal summand is a disjoint union of chains.
    """

    size: int
    covers: frozenset[tuple[int, int]]
    up: tuple[int, ...] = field(repr=False)
    blocks: tuple[int, ...] | None = None
    chain_of: tuple[int, ...] | None = None

    @classmethod
    def from_relations(
        cls,
        size: int,
        pairs: Iterable[tuple[int, int]],
        *,
        blocks: tuple[int, ...] | None = None,
        chain_of: tuple[int, ...] | None = None,
    ) -> "Poset":
        """Build a poset from any generating set of strict relations ``a < b``."""
        if size < 0:
            raise PosetError("size must be non-negative")
        up = _closure(size, pairs)
        return cls(size, _reduction(size, up), tuple(up), blocks, chain_of)

    def leq(self, a: int, b: int) -> bool:
        return bool((self.up[a] >> b) & 1)

    def less(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    @cached_property
    def leq_matrix(self) -> np.ndarray:
        m = np.zeros((self.size, self.size), dtype=bool)
        for a, row in enumerate(self.up):
            for b in range(self.size):
                m[a, b] = (row >> b) & 1
        return m

    @cached_property
    def comparability_matrix(self) -> np.ndarray:
        m = self.leq_matrix
        return m | m.T

    @cached_property
    def down(self) -> tuple[int, ...]:
        """Bitset of strict predecessors of each element."""
        d = [0] * self.size
        for a, row in enumerate(self.up):
            b = row & ~(1 << a)
            while b:
                low = b & -b
                d[low.bit_length() - 1] |= 1 << a
                b ^= low
        return tuple(d)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        ups = [[] for _ in range(self.size)]
        for a, b in self.covers:
            ups[a].append(b)
        return tuple(tuple(sorted(u)) for u in ups)

    @property
    def elements(self) -> range:
        return range(self.size)

    def is_connected(self) -> bool:
        if self.size == 0:
            return True
        adj = [set() for _ in range(self.size)]
        for a, b in self.covers:
            adj[a].add(b)
            adj[b].add(a)
        seen = {0}
        todo = [0]
        while todo:
            for nxt in adj[todo.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        return len(seen) == self.size

    def relabel(self, perm: Sequence[int]) -> "Poset":
        """Return the isomorphic poset where element ``a`` becomes ``perm[a]``."""
        return Poset.from_relations(self.size, ((perm[a], perm[b]) for a, b in self.covers))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.size == other.size and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.size, self.covers))

    def __repr__(self) -> str:
        return f"Poset(size={self.size}, covers={sorted(self.covers)})"

    def to_text(self) -> str:
        lines = [f"n {self.size}"]
        lines += [f"cover {a} {b}" for a, b in sorted(self.covers)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Poset":
        """Parse the ``n <size>`` / ``cover <a> <b>`` text format."""
        size = None
        pairs = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "n" and len(parts) == 2 and size is None:
                size = int(parts[1])
            elif parts[0] == "cover" and len(parts) == 3 and size is not None:
                pairs.append((int(parts[1]), int(parts[2])))
            else:
                raise PosetError(f"line {lineno}: cannot parse {raw!r}")
        if size is None:
            raise PosetError("missing 'n <size>' header")
        return cls.from_relations(size, pairs)


def chain(n: int) -> Poset:
    if n < 0:
        raise PosetError("chain length must be non-negative")
    return Poset.from_relations(
        n, ((a, a + 1) for a in range(n - 1)),
        blocks=(n,) if n else (), chain_of=(0,) * n,
    )


def antichain(m: int) -> Poset:
    if m < 0:
        raise PosetError("antichain size must be non-negative")
    return Poset.from_relations(m, (), blocks=(m,) if m else (), chain_of=tuple(range(m)))


def _single_block(P: Poset) -> bool:
    return P.blocks is not None and len(P.blocks) <= 1


def disjoint_union(P: Poset, Q: Poset) -> Poset:
    off = P.size
    pairs = list(P.covers) + [(a + off, b + off) for a, b in Q.covers]
    size = P.size + Q.size
    chain_of = None
    if P.chain_of is not None and Q.chain_of is not None and _single_block(P) and _single_block(Q):
        shift = max(P.chain_of, default=-1) + 1
        chain_of = P.chain_of + tuple(c + shift for c in Q.chain_of)
    return Poset.from_relations(size, pairs, blocks=(size,) if size else (), chain_of=chain_of)


def ordinal_sum(P: Poset, Q: Poset) -> Poset:
    """Stack ``Q`` above ``P``; ``P`` keeps indices ``0..|P|-1``."""
    off = P.size
    pairs = list(P.covers) + [(a + off, b + off) for a, b in Q.covers]
    tops = [a for a in P.elements if not P.upper_covers[a]]
    q_down = [0] * Q.size
    for a, b in Q.covers:
        q_down[b] += 1
    bottoms = [b + off for b in Q.elements if q_down[b] == 0]
    pairs += [(a, b) for a in tops for b in bottoms]
    blocks = None
    if P.blocks is not None and Q.blocks is not None:
        blocks = P.blocks + Q.blocks
    chain_of = None
    if P.chain_of is not None and Q.chain_of is not None:
        shift = max(P.chain_of, default=-1) + 1
        chain_of = P.chain_of + tuple(c + shift for c in Q.chain_of)
    return Poset.from_relations(P.size + Q.size, pairs, blocks=blocks, chain_of=chain_of)


def ordinal_sum_of(posets: Iterable[Poset]) -> Poset:
    result = chain(0)
    for P in posets:
        result = ordinal_sum(result, P)
    return result


def sandwich(P: Poset, D: Poset, Q: Poset) -> Poset:
    """``P ⊕ D ⊕ Q`` with the three summands recorded as its blocks."""
    R = ordinal_sum(ordinal_sum(P, D), Q)
    return Poset(R.size, R.covers, R.up, (P.size, D.size, Q.size), None)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(x < 1 for x in parts):
            raise InadmissiblePartition(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InadmissiblePartition(f"parts must be weakly decreasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def ell(self) -> int:
        return len(self.parts)

    @property
    def admissible(self) -> bool:
        return self.ell > 1 or (self.n == 1 and self.ell == 1)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "D[" + ",".join(map(str, self.parts)) + "]"


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as weakly decreasing tuples, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def chain_union(lam: Partition | Sequence[int]) -> Poset:
    """``D_λ``: chain ``c`` holds ``λ_c`` consecutive indices, bottom to top."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    if not lam.admissible:
        raise InadmissiblePartition(
            f"{lam} is a single chain of length {lam.n}; D_λ needs at least two chains"
        )
    pairs = []
    chain_of = []
    start = 0
    for c, length in enumerate(lam.parts):
        pairs += [(start + t, start + t + 1) for t in range(length - 1)]
        chain_of += [c] * length
        start += length
    return Poset.from_relations(start, pairs, blocks=(start,), chain_of=tuple(chain_of))


def ferrers(shape: Sequence[int]) -> Poset:
    """Ferrers poset: boxes ``(r, c)`` with ``(r, c) < (r, c+1)`` and ``(r, c) < (r+1, c)``."""
    Partition(tuple(shape))
    index = {}
    for r, length in enumerate(shape):
        for c in range(length):
            index[r, c] = len(index)
    pairs = []
    for (r, c), a in index.items():
        if (r, c + 1) in index:
            pairs.append((a, index[r, c + 1]))
        if (r + 1, c) in index:
            pairs.append((a, index[r + 1, c]))
    return Poset.from_relations(len(index), pairs)


def random_poset(n: int, rng: np.random.Generator, density: float = 0.3) -> Poset:
    """A random poset: random relations compatible with a random linear order."""
    order = rng.permutation(n)
    pairs = [
        (int(order[a]), int(order[b]))
        for a in range(n) for b in range(a + 1, n)
        if rng.random() < density
    ]
    return Poset.from_relations(n, pairs)


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    """Brute-force isomorphism test; meant for tiny posets only."""
    if P.size != Q.size or len(P.covers) != len(Q.covers):
        return False
    return any(
        P.relabel(perm).covers == Q.covers
        for perm in itertools.permutations(range(P.size))
    )


def canonical_form(P: Poset) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Lexicographically least relabelled cover list; an isomorphism invariant."""
    best = None
    for perm in itertools.permutations(range(P.size)):
        key = tuple(sorted((perm[a], perm[b]) for a, b in P.covers))
        if best is None or key < best:
            best = key
    return P.size, best or ()


@dataclass(frozen=True)
class LinearExtension:
    """A labelling ``labels[e]`` of element ``e`` by ``1..n``."""

    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise PosetError(f"labels {labels} are not a bijection onto 1..{len(labels)}")

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        """``inverse[v - 1]`` is the element carrying label ``v``."""
        inv = [0] * len(self.labels)
        for e, v in enumerate(self.labels):
            inv[v - 1] = e
        return tuple(inv)

    def element(self, label: int) -> int:
        return self.inverse[label - 1]

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, e: int) -> int:
        return self.labels[e]

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "LinearExtension":
        """Build from the list of elements in label order."""
        labels = [0] * len(order)
        for v, e in enumerate(order, 1):
            labels[e] = v
        return cls(tuple(labels))


def is_linear_extension(P: Poset, labels: Sequence[int]) -> bool:
    if len(labels) != P.size:
        return False
    if sorted(labels) != list(range(1, P.size + 1)):
        return False
    return all(labels[a] < labels[b] for a, b in P.covers)


def linear_extension_array(P: Poset) -> np.ndarray:
    """All linear extensions as an ``(N, size)`` array of labels.

    Built layer by layer: every partial word is extended by each element whose
    predecessors are all used. Rows are sorted lexicographically by the label
    sequence ``(f(0), f(1), ...)``.
    """
    n = P.size
    if n == 0:
        return np.zeros((1, 0), dtype=np.int16)
    if n > 62:
        raise PosetError("enumeration supports at most 62 elements")
    down = [np.int64(d) for d in P.down]
    words = np.zeros((1, 0), dtype=np.int16)
    used = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        rows, elems = [], []
        for e in range(n):
            bit = np.int64(1 << e)
            ok = ((used & bit) == 0) & ((used & down[e]) == down[e])
            idx = np.nonzero(ok)[0]
            rows.append(idx)
            elems.append(np.full(len(idx), e, dtype=np.int16))
        rows = np.concatenate(rows)
        elems = np.concatenate(elems)
        words = np.concatenate([words[rows], elems[:, None]], axis=1)
        used = used[rows] | (np.int64(1) << elems.astype(np.int64))
    labels = np.empty_like(words)
    rows = np.arange(words.shape[0])[:, None]
    labels[rows, words] = np.arange(1, n + 1, dtype=np.int16)[None, :]
    order = np.lexsort(labels.T[::-1])
    return labels[order]


def enumerate_linear_extensions(P: Poset) -> Iterator[LinearExtension]:
    for row in linear_extension_array(P):
        yield LinearExtension(tuple(int(x) for x in row))


def count_linear_extensions(P: Poset) -> int:
    """Count by dynamic programming over order ideals (no enumeration)."""
    n = P.size
    down = P.down
    counts = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for ideal, c in counts.items():
            for e in range(n):
                if not (ideal >> e) & 1 and (down[e] & ideal) == down[e]:
                    key = ideal | (1 << e)
                    nxt[key] = nxt.get(key, 0) + c
        counts = nxt
    return sum(counts.values())


def all_posets(n: int) -> list[Poset]:
    """One representative of every isomorphism class of ``n``-element posets.

    Exhaustive over naturally labelled relations, so only practical for
    ``n <= 5``.
    """
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    seen = {}
    for mask in range(1 << len(pairs)):
        chosen = [pr for bit, pr in enumerate(pairs) if (mask >> bit) & 1]
        P = Poset.from_relations(n, chosen)
        if len(P.covers) != len(chosen) or P.covers != frozenset(chosen):
            continue  # every poset also appears with exactly its cover set
        key = canonical_form(P)
        if key not in seen:
            seen[key] = P
    return [seen[k] for k in sorted(seen)]
