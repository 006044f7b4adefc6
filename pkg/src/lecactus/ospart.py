"""Ordered set partitions and the permutation model of the dynamics.

A linear extension ``g`` of a chain union ``D_λ`` is determined by which chain
each label sits on. Inside ``R = P ⊕ D_λ ⊕ Q`` the moves that reach ``D_λ``
act on these block assignments by permutations of ``{1..n}``.

Action convention: a permutation ``w`` moves the number ``x`` of a block to
``w(x)`` in the same block, i.e. ``new_block_of[w(x)] = old_block_of[x]``. With
this convention the permutation of an operator product ``A B`` is ``w_A ∘ w_B``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cactus import InvalidIndices, Permutation
from .dynamics import IndexOutOfRange
from .poset import LinearExtension, Poset, PosetError


class NotAnOrdinalSum(PosetError):
    pass


def amod(x: int, n: int) -> int:
    """The representative of ``x`` modulo ``n`` in ``{1..n}``."""
    if n < 1:
        raise ValueError("modulus must be positive")
    return (x - 1) % n + 1


@dataclass(frozen=True)
class OrderedSetPartition:
    """``block_of[v - 1]`` is the (0-based) chain holding the number ``v``."""

    block_of: tuple[int, ...]
    ell: int

    @property
    def n(self) -> int:
        return len(self.block_of)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.ell)]
        for v, b in enumerate(self.block_of, 1):
            out[b].append(v)
        return tuple(tuple(b) for b in out)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def act(self, w: Permutation) -> "OrderedSetPartition":
        if w.n != self.n:
            raise ValueError("permutation and partition sizes differ")
        new = [0] * self.n
        for x, b in enumerate(self.block_of, 1):
            new[w(x) - 1] = b
        return OrderedSetPartition(tuple(new), self.ell)


def _chains(D: Poset) -> list[list[int]]:
    if D.chain_of is None or (D.blocks is not None and len(D.blocks) > 1):
        raise PosetError("poset is not a recorded disjoint union of chains")
    chains: dict[int, list[int]] = {}
    for e, c in enumerate(D.chain_of):
        chains.setdefault(c, []).append(e)
    # constructors lay chains out bottom to top in index order
    return [chains[c] for c in sorted(chains)]


def from_linear_extension(D: Poset, g: LinearExtension) -> OrderedSetPartition:
    chains = _chains(D)
    block_of = [0] * D.size
    for b, elems in enumerate(chains):
        for e in elems:
            block_of[g[e] - 1] = b
    return OrderedSetPartition(tuple(block_of), len(chains))


def to_linear_extension(D: Poset, osp: OrderedSetPartition) -> LinearExtension:
    """Inverse of :func:`from_linear_extension`: labels increase up each chain."""
    chains = _chains(D)
    labels = [0] * D.size
    for elems, numbers in zip(chains, osp.blocks):
        if len(elems) != len(numbers):
            raise ValueError("block sizes do not match the chain lengths")
        for e, v in zip(elems, numbers):
            labels[e] = v
    return LinearExtension(tuple(labels))


def induced_extension(R: Poset, f: LinearExtension, block: int = 1) -> LinearExtension:
    """Restrict ``f`` to one ordinal summand of ``R`` and shift labels down to start at 1."""
    if R.blocks is None or not 0 <= block < len(R.blocks):
        raise NotAnOrdinalSum("block boundaries are not recorded for this poset")
    p = sum(R.blocks[:block])
    n = R.blocks[block]
    return LinearExtension(tuple(f[e] - p for e in range(p, p + n)))


@dataclass(frozen=True)
class Triple:
    p: int
    n: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.n < 1:
            raise ValueError(f"invalid triple {self}")

    @property
    def total(self) -> int:
        return self.p + self.n + self.q

    def __iter__(self):
        return iter((self.p, self.n, self.q))


def promotion_perm(k: int, n: int) -> Permutation:
    """``∂_k`` on partitions of ``{1..n}``: ``v -> v - 1`` for ``1 < v <= k`` and ``1 -> k``."""
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"promotion index {k} outside [1, {n}]")
    return Permutation.from_mapping(n, {v: v - 1 if v > 1 else k for v in range(1, k + 1)})


def evacuation_perm(k: int, n: int) -> Permutation:
    """``q_{k-1}`` on partitions of ``{1..n}``: ``v -> k + 1 - v`` for ``v <= k``."""
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"evacuation index {k} outside [1, {n}]")
    return Permutation.reversal(n, range(1, k + 1))


def q_restriction(t: Triple, k: int) -> Permutation:
    """Effect of ``q_{k-1}`` on the middle block of ``P ⊕ D ⊕ Q``."""
    p, n, _ = t
    if not 1 <= k <= t.total:
        raise IndexOutOfRange(f"k = {k} outside [1, {t.total}]")
    if k - 1 <= p:
        return Permutation.identity(n)
    if k - 1 < p + n:
        return evacuation_perm(k - p, n)
    return evacuation_perm(n, n) * promotion_perm(n, n) ** (k - p - n)


def qjk_restriction(t: Triple, j: int, k: int) -> Permutation:
    """Effect of ``q_{jk}`` on the middle block.

    Uses :func:`qjk_interval` where it applies and otherwise composes three
    evacuations.
    """
    p, n, _ = t
    if not 1 <= j < k <= t.total:
        raise IndexOutOfRange(f"(j, k) = ({j}, {k}) invalid for total size {t.total}")
    closed = qjk_interval(t, j, k)
    return closed if closed is not None else qjk_fallback(t, j, k)


def qjk_interval(t: Triple, j: int, k: int) -> Permutation | None:
    """Closed form of ``q_{jk}`` on the middle block, or ``None`` outside its range.

    When ``k >= p + n`` and ``p <= k - j < p + n`` the action reverses the
    cyclic interval ``m - ℓ, ..., m`` (values reduced into ``{1..n}``) with
    ``m = (k - p - n) mod n`` and ``ℓ = k - j - p``.
    """
    p, n, _ = t
    r = k - p - n
    ell = k - j - p
    if r < 0 or not 0 <= ell < n:
        return None
    m = amod(r, n)
    return Permutation.reversal(n, [amod(m - ell + s, n) for s in range(ell + 1)])


def qjk_fallback(t: Triple, j: int, k: int) -> Permutation:
    outer = q_restriction(t, k)
    return outer * q_restriction(t, k - j + 1) * outer


def bk_restriction(t: Triple, i: int) -> Permutation:
    p, n, _ = t
    if not 1 <= i <= t.total - 1:
        raise IndexOutOfRange(f"t_{i} invalid for total size {t.total}")
    if p + 1 <= i <= p + n - 1:
        return Permutation.transposition(n, i - p, i - p + 1)
    return Permutation.identity(n)


def relation_restriction(t: Triple, i: int, j: int, k: int) -> Permutation:
    """``(t_i q_{jk})^2`` on the middle block."""
    if not (i + 1 < j < k <= t.total and i >= 1):
        raise InvalidIndices(f"need 1 <= i, i + 1 < j < k <= {t.total}; got {(i, j, k)}")
    half = bk_restriction(t, i) * qjk_restriction(t, j, k)
    return half * half
