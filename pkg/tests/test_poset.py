import itertools
from math import factorial, prod

import numpy as np
import pytest
from hypothesis import given, settings

from lecactus.expr import ExpressionError, parse_block, parse_expression
from lecactus.poset import (
    InadmissiblePartition,
    LinearExtension,
    NotAPoset,
    Partition,
    Poset,
    PosetError,
    all_posets,
    antichain,
    chain,
    chain_union,
    count_linear_extensions,
    disjoint_union,
    enumerate_linear_extensions,
    ferrers,
    is_isomorphic,
    is_linear_extension,
    ordinal_sum,
    partitions,
    random_poset,
    sandwich,
)

from helpers import brute_extensions, posets


def test_chain():
    assert chain(1).size == 1 and not chain(1).covers
    C3 = chain(3)
    assert C3.covers == {(0, 1), (1, 2)}
    assert C3.leq(0, 2) and not C3.leq(2, 0)
    assert chain(0).size == 0


def test_antichain():
    A2 = antichain(2)
    assert not A2.leq(0, 1) and not A2.leq(1, 0)
    assert antichain(1) == chain(1)
    assert len(list(enumerate_linear_extensions(antichain(3)))) == 6


def test_disjoint_union():
    D = disjoint_union(chain(2), chain(1))
    assert D.size == 3 and len(D.covers) == 1
    assert is_isomorphic(D, chain_union((2, 1)))
    P = chain(2)
    assert is_isomorphic(disjoint_union(P, chain(0)), P)
    assert is_isomorphic(disjoint_union(chain(1), chain(1)), antichain(2))


def test_ordinal_sum():
    assert is_isomorphic(ordinal_sum(chain(2), chain(3)), chain(5))
    R = ordinal_sum(antichain(2), chain(1))
    assert R.size == 3 and R.covers == {(0, 2), (1, 2)}
    P = chain_union((2, 1))
    assert ordinal_sum(P, chain(0)) == P
    assert ordinal_sum(chain(0), P) == P


def test_ordinal_sum_is_associative_on_small_posets():
    small = [P for n in range(4) for P in all_posets(n)]
    for P, Q, R in itertools.product(small, repeat=3):
        if P.size + Q.size + R.size > 6:
            continue
        left = ordinal_sum(ordinal_sum(P, Q), R)
        right = ordinal_sum(P, ordinal_sum(Q, R))
        assert left == right  # identical index layout, so equality is exact


def test_chain_union():
    D = chain_union((2, 1))
    assert D.size == 3 and len(D.covers) == 1 and D.chain_of == (0, 0, 1)
    assert is_isomorphic(chain_union((1, 1, 1)), antichain(3))
    with pytest.raises(InadmissiblePartition):
        chain_union((3,))
    assert chain_union((1,)).size == 1
    with pytest.raises(InadmissiblePartition):
        chain_union((1, 2))


def test_partition_invariants():
    lam = Partition((3, 1, 1))
    assert lam.n == 5 and lam.ell == 3 and lam.admissible
    assert not Partition((4,)).admissible
    assert Partition((1,)).admissible
    with pytest.raises(InadmissiblePartition):
        Partition((2, 0))


def test_enumeration_examples():
    assert len(list(enumerate_linear_extensions(chain(4)))) == 1
    assert len(list(enumerate_linear_extensions(antichain(3)))) == 6
    D = chain_union((2, 2))
    got = [f.labels for f in enumerate_linear_extensions(D)]
    assert got == brute_extensions(D)
    assert len(got) == 6 == factorial(4) // (2 * 2)
    assert [f.labels for f in enumerate_linear_extensions(chain(0))] == [()]


@pytest.mark.parametrize("n", range(1, 8))
def test_multinomial_counts(n):
    for lam in partitions(n):
        if len(lam) < 2 and n > 1:
            continue
        expected = factorial(n) // prod(factorial(x) for x in lam)
        D = chain_union(lam)
        assert sum(1 for _ in enumerate_linear_extensions(D)) == expected
        assert count_linear_extensions(D) == expected


@settings(max_examples=60, deadline=None)
@given(posets())
def test_enumeration_matches_bruteforce_oracle(P):
    got = [f.labels for f in enumerate_linear_extensions(P)]
    assert got == brute_extensions(P)
    assert len(set(got)) == len(got)
    assert all(is_linear_extension(P, f) for f in got)
    assert count_linear_extensions(P) == len(got)


@settings(max_examples=60, deadline=None)
@given(posets(max_size=7))
def test_covers_form_hasse_diagram(P):
    for cover in P.covers:
        rest = Poset.from_relations(P.size, P.covers - {cover})
        assert rest.up != P.up
    for a, b in itertools.product(P.elements, repeat=2):
        reach = a == b or any(
            P.leq(c, b) for c in P.elements if (a, c) in P.covers
        )
        assert P.leq(a, b) == reach


def test_is_linear_extension():
    C2 = chain(2)
    assert is_linear_extension(C2, (1, 2))
    assert not is_linear_extension(C2, (2, 1))
    assert not is_linear_extension(C2, (1, 1))


def test_linear_extension_value():
    f = LinearExtension((3, 1, 2))
    assert f.inverse == (1, 2, 0)
    assert f.element(3) == 0
    assert LinearExtension.from_order([1, 2, 0]) == f
    with pytest.raises(PosetError):
        LinearExtension((1, 3))


def test_cycle_rejected():
    with pytest.raises(NotAPoset):
        Poset.from_relations(3, [(0, 1), (1, 2), (2, 0)])


def test_redundant_relations_are_reduced():
    P = Poset.from_relations(3, [(0, 1), (1, 2), (0, 2)])
    assert P.covers == {(0, 1), (1, 2)}


def test_text_format_roundtrip():
    P = parse_expression("A2 > C1 + C2 > A1")
    text = P.to_text()
    assert text.splitlines()[0] == f"n {P.size}"
    assert Poset.from_text(text) == P
    Q = Poset.from_text("# comment\nn 3\ncover 0 2\ncover 1 2\n")
    assert Q == ordinal_sum(antichain(2), chain(1))
    with pytest.raises(PosetError):
        Poset.from_text("cover 0 1\n")


def test_expression_grammar():
    assert parse_expression("C3") == chain(3)
    assert parse_expression("A3 > A1") == ordinal_sum(antichain(3), chain(1))
    # '>' binds looser than '+'
    assert parse_expression("C1 + C1 > C1") == ordinal_sum(antichain(2), chain(1))
    assert parse_expression("C1 + (C1 > C1)") == disjoint_union(chain(1), chain(2))
    assert parse_expression("D[2, 1]") == chain_union((2, 1))
    P = parse_expression("D[1,1] > D[2,1]")
    assert P.blocks == (2, 3) and P.chain_of == (0, 1, 2, 2, 3)
    for bad in ["", "C", "D[]", "A2 >", "C2 C3", "(C1"]:
        with pytest.raises(ExpressionError):
            parse_expression(bad)
    assert parse_block("A3") == (1, 1, 1)
    assert parse_block("C2") == (2,)


def test_chain_metadata_survives_only_where_meaningful():
    assert parse_expression("(C1 > C1) + C1").chain_of is None
    assert parse_expression("C2 + C1").chain_of == (0, 0, 1)


def test_sandwich_blocks():
    R = sandwich(chain(2), chain_union((1, 1)), chain(1))
    assert R.blocks == (2, 2, 1)
    assert R.leq(0, 4) and not R.comparable(2, 3)


def test_ferrers():
    F = ferrers((2, 1))
    assert F.size == 3 and F.covers == {(0, 1), (0, 2)}
    # linear extensions of a Ferrers poset are standard Young tableaux: f^(3,2) = 5
    assert count_linear_extensions(ferrers((3, 2))) == 5


def test_all_posets_counts():
    assert [len(all_posets(n)) for n in range(6)] == [1, 1, 2, 5, 16, 63]


def test_random_poset_is_deterministic():
    a = random_poset(6, np.random.default_rng(7))
    b = random_poset(6, np.random.default_rng(7))
    assert a == b
