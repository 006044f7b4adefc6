"""Deciding whether the cactus relations hold on a poset's linear extensions.

Two independent routes:

* :func:`is_le_cactus_bruteforce` acts with every ``(t_i q_{jk})^2`` on every
  linear extension.
* :func:`classify_chain_union_sum` applies the arithmetic criterion on block
  sizes to ordinal sums of chain unions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .cactus import CactusWord, T, cactus_triples, qjk_word
from .dynamics import ActionTable, apply_word
from .ospart import OrderedSetPartition, Triple, amod, relation_restriction
from .poset import (
    LinearExtension,
    Partition,
    Poset,
    PosetError,
    chain_union,
    count_linear_extensions,
    enumerate_linear_extensions,
    ordinal_sum_of,
    partitions,
)

DEFAULT_MAX_EXTENSIONS = 10**6


class InadmissibleBlock(PosetError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def cactus_compatible(p: int, n: int, q: int) -> bool:
    """Whether every ``(t_i q_{jk})^2`` fixes the middle labels of ``P ⊕ D ⊕ Q``."""
    if p < 0 or q < 0 or n < 1:
        raise ValueError(f"invalid triple ({p}, {n}, {q})")
    return compatibility_regime(p, n, q)[0]


def compatibility_regime(p: int, n: int, q: int) -> tuple[bool, str]:
    """Verdict together with the name of the rule that decided it."""
    if n <= 2:
        return True, f"n={n}"
    m = amod(q, n)
    if n == 3:
        if p > q - 1:
            return True, "n=3, p>q-1"
        if p == q - 1:
            return m not in (1, 3), f"n=3, p=q-1, q mod n={m}"
        return False, "n=3, p<q-1"
    r = q + n - p
    if r < 4:
        return True, "p>q+n-4"
    if r == 4:
        return m not in (1, 3), f"p=q+n-4, q mod n={m}"
    return m > r - 1, f"p=q+n-{r}, q mod n={m}"


@dataclass(frozen=True)
class Witness:
    extension: tuple[int, ...]
    i: int
    j: int
    k: int

    def word(self) -> CactusWord:
        half = CactusWord((T(self.i),)) * qjk_word(self.j, self.k)
        return half * half

    def replay(self, P: Poset) -> LinearExtension:
        """``(t_i q_{jk})^2`` applied to the witness extension."""
        return apply_word(P, LinearExtension(self.extension), self.word())

    def reproduces(self, P: Poset) -> bool:
        return self.replay(P).labels != self.extension

    def to_dict(self) -> dict:
        return {"extension": list(self.extension), "i": self.i, "j": self.j, "k": self.k}

    @classmethod
    def from_dict(cls, d: dict) -> "Witness":
        return cls(tuple(d["extension"]), d["i"], d["j"], d["k"])


@dataclass(frozen=True)
class Verdict:
    is_le_cactus: bool
    method: str
    witness: Witness | None = None
    stats: dict = field(default_factory=dict, compare=False)
    triples: tuple = field(default=(), compare=False)

    def to_dict(self, poset: str | None = None) -> dict:
        return {
            "poset": poset,
            "verdict": self.is_le_cactus,
            "method": self.method,
            "witness": self.witness.to_dict() if self.witness else None,
            "stats": self.stats,
        }

    def to_json(self, poset: str | None = None) -> str:
        return json.dumps(self.to_dict(poset), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Verdict":
        d = json.loads(text)
        w = Witness.from_dict(d["witness"]) if d["witness"] else None
        return cls(d["verdict"], d["method"], w, d.get("stats", {}))


@dataclass(frozen=True)
class BlockSequence:
    """Blocks ``D_{μ_1} ⊕ ... ⊕ D_{μ_ℓ}``, bottom first."""

    mus: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        mus = tuple(tuple(mu) for mu in self.mus)
        object.__setattr__(self, "mus", mus)
        for mu in mus:
            if not mu:
                raise InadmissibleBlock("empty block")
            try:
                Partition(mu)
            except PosetError as exc:
                raise InadmissibleBlock(str(exc)) from None

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sum(mu) for mu in self.mus)

    def normalized(self) -> "BlockSequence":
        """Split every single chain ``C_m`` into ``m`` one-element blocks."""
        out = []
        for mu in self.mus:
            if len(mu) == 1:
                out.extend([(1,)] * mu[0])
            else:
                out.append(mu)
        return BlockSequence(tuple(out))

    def poset(self) -> Poset:
        return ordinal_sum_of(chain_union(mu) for mu in self.normalized().mus)

    def triples(self, tail_size: int = 0) -> list[Triple]:
        sizes = self.normalized().sizes
        total = sum(sizes) + tail_size
        out = []
        below = 0
        for a in sizes:
            out.append(Triple(below, a, total - below - a))
            below += a
        return out

    def __str__(self):
        return " > ".join("D[" + ",".join(map(str, mu)) + "]" for mu in self.mus)


def _as_sequence(seq) -> BlockSequence:
    return seq if isinstance(seq, BlockSequence) else BlockSequence(tuple(seq))


def classify_chain_union_sum(seq) -> Verdict:
    seq = _as_sequence(seq)
    if not seq.mus:
        raise InadmissibleBlock("need at least one block")
    return _closed_form(seq.triples())


def classify_with_tail(seq, tail_size: int, tail_is_le_cactus: bool = True) -> Verdict:
    """``D_{μ_1} ⊕ ... ⊕ D_{μ_ℓ} ⊕ P`` for an LE-cactus tail ``P`` of the given size."""
    if not tail_is_le_cactus:
        raise ValueError("the tail criterion only applies to an LE-cactus tail")
    seq = _as_sequence(seq)
    return _closed_form(seq.triples(tail_size))


def _closed_form(triples: list[Triple]) -> Verdict:
    rows = []
    ok = True
    for t in triples:
        good, rule = compatibility_regime(*t)
        rows.append((t, good, rule))
        ok = ok and good
    return Verdict(ok, "closed-form", None, {"blocks": len(triples)}, tuple(rows))


def necessary_condition_disconnected(p: int, n: int, q: int) -> bool:
    """For a disconnected middle poset of size ``n``, ``P ⊕ D ⊕ Q`` is LE-cactus only if this holds."""
    return cactus_compatible(p, n, q)


def _chain_union_blocks(P: Poset) -> list[tuple[int, int, int]] | None:
    """``(offset, size, chain_count)`` of each ordinal summand, if ``P`` is a chain-union sum."""
    if P.chain_of is None or P.blocks is None:
        return None
    out = []
    start = 0
    for size in P.blocks:
        chains = len(set(P.chain_of[start:start + size]))
        out.append((start, size, chains))
        start += size
    return out


def is_le_cactus_bruteforce(
    P: Poset,
    max_extensions: int = DEFAULT_MAX_EXTENSIONS,
    path: str = "generic",
    table: ActionTable | None = None,
) -> Verdict:
    """Check every cactus relation on every linear extension.

    Triples are scanned in lexicographic order and, for the first failing
    triple, the witness is the first moved extension in enumeration order.
    ``path="ospart"`` evaluates the relations on chain-union ordinal sums
    through block permutations instead of the action table.
    """
    count = count_linear_extensions(P)
    if count > max_extensions:
        raise BudgetExceeded(f"{count} linear extensions exceed the cap of {max_extensions}")
    triples = cactus_triples(P.size)
    stats = {"extensions": count, "triples": len(triples), "path": path}
    if path == "ospart":
        blocks = _chain_union_blocks(P)
        if blocks is None:
            raise ValueError("ospart path needs a chain-union ordinal sum")
        return _bruteforce_ospart(P, blocks, triples, stats)
    if path != "generic":
        raise ValueError(f"unknown path {path!r}")
    table = table or ActionTable(P)
    for i, j, k in triples:
        moved = np.nonzero(table.relation(i, j, k) != table.identity)[0]
        if len(moved):
            f = table.extension(int(moved[0]))
            return Verdict(False, "brute-force", Witness(f.labels, i, j, k), stats)
    return Verdict(True, "brute-force", None, stats)


def _bruteforce_ospart(P, blocks, triples, stats) -> Verdict:
    total = P.size
    for i, j, k in triples:
        perms = []
        for start, size, chains in blocks:
            if chains < 2:
                continue  # a single chain has one labelling
            w = relation_restriction(Triple(start, size, total - start - size), i, j, k)
            if not w.is_identity():
                perms.append((start, size, w))
        if not perms:
            continue
        for f in enumerate_linear_extensions(P):
            for start, size, w in perms:
                before = _block_partition(P, f, start, size)
                if before.act(w) != before:
                    return Verdict(False, "brute-force", Witness(f.labels, i, j, k), stats)
        raise AssertionError("non-identity block permutation moved no extension")
    return Verdict(True, "brute-force", None, stats)


def _block_partition(P: Poset, f: LinearExtension, start: int, size: int):
    chain_ids = sorted(set(P.chain_of[start:start + size]))
    local = {c: b for b, c in enumerate(chain_ids)}
    block_of = [0] * size
    for e in range(start, start + size):
        block_of[f[e] - start - 1] = local[P.chain_of[e]]
    return OrderedSetPartition(tuple(block_of), len(chain_ids))


def cross_validate(seq, max_extensions: int = DEFAULT_MAX_EXTENSIONS) -> tuple[Verdict, Verdict]:
    """Closed form and brute force on the same block sequence."""
    seq = _as_sequence(seq)
    closed = classify_chain_union_sum(seq)
    brute = is_le_cactus_bruteforce(seq.poset(), max_extensions)
    return closed, brute


def census(total: int) -> list[BlockSequence]:
    """Canonical chain-union ordinal sums of the given size.

    Blocks are ``(1,)`` or partitions with at least two parts; compositions are
    listed with the first block size increasing, partitions in reverse
    lexicographic order.
    """
    def block_options(a):
        if a == 1:
            return [(1,)]
        return [lam for lam in partitions(a) if len(lam) > 1]

    def rec(rest):
        if rest == 0:
            yield ()
            return
        for a in range(1, rest + 1):
            for mu in block_options(a):
                for tail in rec(rest - a):
                    yield (mu,) + tail

    return [BlockSequence(s) for s in rec(total)]

