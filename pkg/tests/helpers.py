import itertools

from hypothesis import strategies as st

from lecactus.poset import Poset


def brute_extensions(P):
    """Oracle: every bijection onto 1..n filtered by order compatibility."""
    return sorted(
        labels for labels in itertools.permutations(range(1, P.size + 1))
        if all(labels[a] < labels[b] for a in P.elements for b in P.elements if P.less(a, b))
    )


@st.composite
def posets(draw, max_size=6):
    n = draw(st.integers(0, max_size))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    perm = draw(st.permutations(range(n)))
    return Poset.from_relations(n, [(perm[a], perm[b]) for a, b in chosen])
