"""Hypothesis strategies for elections and graphs over single-letter names."""

from __future__ import annotations

import string

from hypothesis import strategies as st

from consensus_lab.core import Digraph, Election, UndirectedGraph

NAMES = string.ascii_lowercase


@st.composite
def rankings(draw, m: int):
    return tuple(draw(st.permutations(NAMES[:m])))


@st.composite
def elections(draw, min_m: int = 1, max_m: int = 5, max_voters: int = 6, min_voters: int = 0):
    m = draw(st.integers(min_m, max_m))
    votes = draw(st.lists(rankings(m), min_size=min_voters, max_size=max_voters))
    return Election(NAMES[:m], votes)


@st.composite
def digraphs(draw, max_n: int = 5, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    vs = NAMES[:n]
    arcs = set()
    for i in range(n):
        for j in range(i + 1, n):
            d = draw(st.sampled_from((None, "fwd", "back")))
            if d == "fwd":
                arcs.add((vs[i], vs[j]))
            elif d == "back":
                arcs.add((vs[j], vs[i]))
    return Digraph(tuple(vs), frozenset(arcs))


@st.composite
def graphs(draw, max_n: int = 5, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    vs = NAMES[:n]
    pairs = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return UndirectedGraph(tuple(vs), frozenset(p for p, keep in zip(pairs, mask) if keep))
