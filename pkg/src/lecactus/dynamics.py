"""Bender-Knuth moves, promotion and evacuation on linear extensions.

Single-extension operations work on :class:`LinearExtension` values.
:class:`ActionTable` precomputes the action of every ``t_i`` on the whole set
of linear extensions as index arrays, which is what the exhaustive checks use.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .cactus import CactusWord, Q, T, qjk_word
from .poset import LinearExtension, Poset, linear_extension_array


class IndexOutOfRange(IndexError):
    pass


def _check(i: int, lo: int, hi: int, what: str) -> None:
    if not lo <= i <= hi:
        raise IndexOutOfRange(f"{what} index {i} outside [{lo}, {hi}]")


def bk(P: Poset, f: LinearExtension, i: int) -> LinearExtension:
    """``t_i``: swap labels ``i`` and ``i+1`` if they sit on incomparable elements."""
    _check(i, 1, P.size - 1, "t_i")
    a, b = f.element(i), f.element(i + 1)
    if P.comparable(a, b):
        return f
    labels = list(f.labels)
    labels[a], labels[b] = i + 1, i
    return LinearExtension(tuple(labels))


def promotion(P: Poset, f: LinearExtension, i: int) -> LinearExtension:
    """``∂_i`` by sliding along the promotion chain."""
    _check(i, 1, P.size, "promotion")
    labels = list(f.labels)
    node = f.element(1)
    while True:
        below = [c for c in P.upper_covers[node] if labels[c] <= i]
        if not below:
            break
        nxt = min(below, key=labels.__getitem__)
        labels[node] = labels[nxt]
        node = nxt
    labels[node] = i + 1
    for e, v in enumerate(labels):
        if 2 <= v <= i:
            labels[e] = v - 1
    labels[node] = i
    return LinearExtension(tuple(labels))


def promotion_by_bk(P: Poset, f: LinearExtension, i: int) -> LinearExtension:
    """``t_{i-1} ... t_1`` applied to ``f`` (``t_1`` first)."""
    _check(i, 1, P.size, "promotion")
    for s in range(1, i):
        f = bk(P, f, s)
    return f


def evacuation(P: Poset, f: LinearExtension, i: int) -> LinearExtension:
    """``q_i``: promotion rounds ``∂_{i+1}, ∂_i, ..., ∂_1``."""
    _check(i, 1, P.size - 1, "evacuation")
    for r in range(i + 1, 0, -1):
        f = promotion(P, f, r)
    return f


def _evacuation0(P, f, i):
    return f if i == 0 else evacuation(P, f, i)


def apply_generator(P: Poset, f: LinearExtension, g) -> LinearExtension:
    if isinstance(g, T):
        return bk(P, f, g.i)
    if isinstance(g, Q):
        _check(g.j, g.i + 1, P.size, "q[i,j]")
        # q_{jk} = q_{k-1} q_{k-j} q_{k-1}
        j, k = g.i, g.j
        f = _evacuation0(P, f, k - 1)
        f = _evacuation0(P, f, k - j)
        return _evacuation0(P, f, k - 1)
    raise TypeError(f"not a generator: {g!r}")


def apply_word(P: Poset, f: LinearExtension, w: CactusWord) -> LinearExtension:
    """Apply ``w`` right to left: the last generator acts first."""
    for g in w.generators:
        if isinstance(g, T):
            _check(g.i, 1, P.size - 1, "t_i")
        else:
            _check(g.j, g.i + 1, P.size, "q[i,j]")
    for g in reversed(w.generators):
        f = apply_generator(P, f, g)
    return f


class ActionTable:
    """Action of the Bender-Knuth group on all linear extensions of ``P``.

    Extensions are indexed by their row in :func:`linear_extension_array`.
    An action is an integer array ``a`` with ``a[x]`` the index of the image
    of extension ``x``; ``compose(a, b)`` is ``a ∘ b`` (``b`` first).
    """

    def __init__(self, P: Poset, labels: np.ndarray | None = None):
        self.poset = P
        self.labels = linear_extension_array(P) if labels is None else labels
        self.size = P.size
        self.count = self.labels.shape[0]
        self._index = self._make_index()

    def _make_index(self):
        n = self.size
        if n <= 15:
            weights = np.array([n ** (n - 1 - e) for e in range(n)], dtype=np.int64)
            codes = (self.labels.astype(np.int64) - 1) @ weights
            return ("codes", codes, weights)
        table = {tuple(row): r for r, row in enumerate(self.labels.tolist())}
        return ("dict", table, None)

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        kind, data, weights = self._index
        if kind == "codes":
            codes = (rows.astype(np.int64) - 1) @ weights
            return np.searchsorted(data, codes)
        return np.array([data[tuple(r)] for r in rows.tolist()], dtype=np.int64)

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.empty_like(self.labels)
        rows = np.arange(self.count)[:, None]
        inv[rows, self.labels - 1] = np.arange(self.size, dtype=self.labels.dtype)[None, :]
        return inv

    @property
    def identity(self) -> np.ndarray:
        return np.arange(self.count)

    @cached_property
    def _t(self) -> dict[int, np.ndarray]:
        return {}

    def t(self, i: int) -> np.ndarray:
        _check(i, 1, self.size - 1, "t_i")
        if i not in self._t:
            a = self.inverse[:, i - 1]
            b = self.inverse[:, i]
            swap = ~self.poset.comparability_matrix[a, b]
            moved = self.labels[swap].copy()
            r = np.arange(moved.shape[0])
            moved[r, a[swap]] = i + 1
            moved[r, b[swap]] = i
            action = self.identity.copy()
            action[swap] = self.lookup(moved)
            self._t[i] = action
        return self._t[i]

    @staticmethod
    def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return a[b]

    @cached_property
    def _promotions(self) -> dict[int, np.ndarray]:
        return {1: self.identity}

    def promotion(self, i: int) -> np.ndarray:
        """``∂_i = t_{i-1} ∂_{i-1}``."""
        _check(i, 1, self.size, "promotion")
        if i not in self._promotions:
            self._promotions[i] = self.compose(self.t(i - 1), self.promotion(i - 1))
        return self._promotions[i]

    @cached_property
    def _evacuations(self) -> dict[int, np.ndarray]:
        return {0: self.identity}

    def evacuation(self, i: int) -> np.ndarray:
        """``q_i = q_{i-1} ∂_{i+1}``; ``q_0`` is the identity."""
        _check(i, 0, self.size - 1, "evacuation")
        if i not in self._evacuations:
            self._evacuations[i] = self.compose(self.evacuation(i - 1), self.promotion(i + 1))
        return self._evacuations[i]

    def qjk(self, j: int, k: int) -> np.ndarray:
        _check(k, j + 1, self.size, "q_jk")
        outer = self.evacuation(k - 1)
        return outer[self.evacuation(k - j)[outer]]

    def word(self, w: CactusWord) -> np.ndarray:
        action = self.identity
        for g in w.generators:
            if isinstance(g, T):
                action = self.compose(action, self.t(g.i))
            else:
                action = self.compose(action, self.qjk(g.i, g.j))
        return action

    def relation(self, i: int, j: int, k: int) -> np.ndarray:
        """``(t_i q_{jk})^2`` as an action."""
        half = self.t(i)[self.qjk(j, k)]
        return half[half]

    def extension(self, index: int) -> LinearExtension:
        return LinearExtension(tuple(int(x) for x in self.labels[index]))


def expand_generator(g) -> CactusWord:
    return qjk_word(g.i, g.j) if isinstance(g, Q) else CactusWord((g,))
