"""Bender-Knuth dynamics on linear extensions and the LE-cactus property.

The main entry points:

* :mod:`lecactus.poset` builds posets and enumerates linear extensions.
* :mod:`lecactus.dynamics` implements Bender-Knuth moves, promotion and
  evacuation, singly and as vectorized actions on every extension at once.
* :mod:`lecactus.cactus` handles cactus words and their permutation images.
* :mod:`lecactus.ospart` models the moves on chain unions as permutations.
* :mod:`lecactus.classify` decides the LE-cactus property by brute force and,
  for ordinal sums of chain unions, in closed form.
"""

from .cactus import CactusWord, Permutation, Q, T, qi_word, qjk_word, to_symmetric
from .classify import (
    BlockSequence,
    BudgetExceeded,
    Verdict,
    Witness,
    cactus_compatible,
    classify_chain_union_sum,
    classify_with_tail,
    is_le_cactus_bruteforce,
)
from .dynamics import ActionTable, apply_word, bk, evacuation, promotion
from .expr import parse_expression
from .poset import (
    LinearExtension,
    Poset,
    antichain,
    chain,
    chain_union,
    disjoint_union,
    enumerate_linear_extensions,
    ordinal_sum,
)

__version__ = "0.1.0"

__all__ = [
    "ActionTable", "BlockSequence", "BudgetExceeded", "CactusWord", "LinearExtension",
    "Permutation", "Poset", "Q", "T", "Verdict", "Witness", "antichain", "apply_word", "bk",
    "cactus_compatible", "chain", "chain_union", "classify_chain_union_sum", "classify_with_tail",
    "disjoint_union", "enumerate_linear_extensions", "evacuation", "is_le_cactus_bruteforce",
    "ordinal_sum", "parse_expression", "promotion", "qi_word", "qjk_word", "to_symmetric",
]
