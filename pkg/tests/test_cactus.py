from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st

from lecactus.cactus import (
    CactusWord,
    InvalidIndices,
    InvalidRank,
    Permutation,
    Q,
    T,
    WordError,
    cactus_triples,
    parse_word,
    qi_word,
    qjk_word,
    to_symmetric,
    trace_word,
    verify_presentation,
)


def adjacent_product(indices, n):
    """Oracle: compose adjacent transpositions written left to right."""
    swaps = [Permutation.transposition(n, i, i + 1) for i in indices]
    return reduce(lambda a, b: a * b, swaps, Permutation.identity(n))


def test_qi_word_shapes():
    assert qi_word(0).generators == ()
    assert qi_word(1).generators == (T(1),)
    assert qi_word(2).generators == (T(1), T(2), T(1))
    assert len(qi_word(3)) == 6
    with pytest.raises(InvalidIndices):
        qi_word(-1)


@pytest.mark.parametrize("j,k", [(1, 2), (1, 4), (2, 5), (3, 7), (6, 7)])
def test_qjk_word_length(j, k):
    assert len(qjk_word(j, k)) == k * (k - 1) + (k - j) * (k - j + 1) // 2


def test_qjk_word_composition():
    assert qjk_word(3, 4) == qi_word(3) * qi_word(1) * qi_word(3)
    with pytest.raises(InvalidIndices):
        qjk_word(3, 3)


def test_word_algebra():
    w = CactusWord((T(1), Q(2, 4)))
    assert (w * w).generators == (T(1), Q(2, 4), T(1), Q(2, 4))
    assert w ** 2 == w * w
    assert w.min_rank == 4
    assert len(w.expand()) == 1 + len(qjk_word(2, 4))


def test_parse_word():
    assert parse_word("t3 q[2,7]").generators == (T(3), Q(2, 7))
    assert parse_word("qi2") == qi_word(2)
    assert parse_word("qjk(2,4)") == qjk_word(2, 4)
    assert parse_word("") == CactusWord()
    with pytest.raises(WordError):
        parse_word("s2")


def test_worked_example_trace():
    n = 8
    w = CactusWord((Q(2, 7), Q(3, 5), Q(2, 7)))
    states = ["".join(map(str, s)) for s in trace_word(w, range(1, n + 1), n)]
    assert states == ["12345678", "17654328", "17456328", "12365478"]
    assert to_symmetric(w, n) == to_symmetric(CactusWord((Q(4, 6),)), n)


@pytest.mark.parametrize("i", range(1, 8))
def test_qi_maps_to_longest_element(i):
    n = i + 1
    got = to_symmetric(qi_word(i), n)
    assert got == Permutation(range(n, 0, -1))
    indices = [s for top in range(1, i + 1) for s in range(top, 0, -1)]
    assert got == adjacent_product(indices, n)


def test_q_generator_image_matches_expansion():
    for n in range(2, 8):
        for k in range(2, n + 1):
            for j in range(1, k):
                assert to_symmetric(CactusWord((Q(j, k),)), n) == to_symmetric(qjk_word(j, k), n)


def test_qjk_images_are_involutions():
    n = 7
    for k in range(2, n + 1):
        for j in range(1, k):
            image = to_symmetric(qjk_word(j, k), n)
            assert (image * image).is_identity()


def test_presentation_small_rank():
    assert verify_presentation(4) == []
    with pytest.raises(InvalidRank):
        verify_presentation(1)


def test_nesting_instance():
    n = 8
    q = lambda i, j: to_symmetric(CactusWord((Q(i, j),)), n)
    i, j, k, l = 2, 7, 3, 5
    assert q(i, j) * q(k, l) * q(i, j) == q(i + j - l, i + j - k)


def test_invalid_rank():
    with pytest.raises(InvalidRank):
        to_symmetric(CactusWord((T(4),)), 4)
    with pytest.raises(InvalidIndices):
        CactusWord((Q(3, 3),))


def test_cactus_triples():
    assert cactus_triples(3) == []
    assert cactus_triples(4) == [(1, 3, 4)]
    assert len(cactus_triples(6)) == 6 + 3 + 1  # i = 1, 2, 3
    assert cactus_triples(5) == sorted(cactus_triples(5))


def generators(n):
    ts = st.builds(T, st.integers(1, n - 1))
    qs = st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda p: p[0] < p[1]).map(lambda p: Q(*p))
    return st.lists(st.one_of(ts, qs), max_size=8).map(lambda g: CactusWord(tuple(g)))


@settings(max_examples=100, deadline=None)
@given(generators(7), generators(7))
def test_homomorphism(a, b):
    n = 7
    assert to_symmetric(a * b, n) == to_symmetric(a, n) * to_symmetric(b, n)
    assert to_symmetric(a.expand(), n) == to_symmetric(a, n)


def test_permutation_basics():
    p = Permutation((2, 3, 1))
    assert p(1) == 2 and p.inverse()(2) == 1
    assert (p * p.inverse()).is_identity()
    assert p ** 3 == Permutation.identity(3)
    assert p.support() == [1, 2, 3]
    assert Permutation.reversal(5, [2, 3, 4]) == Permutation((1, 4, 3, 2, 5))
    # composition is right-to-left: (p * q)(x) == p(q(x))
    q = Permutation((1, 3, 2))
    assert all((p * q)(x) == p(q(x)) for x in range(1, 4))
