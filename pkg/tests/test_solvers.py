from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from consensus_lab.config import Limits
from consensus_lab.core import Digraph, Election, WeakOrder, majority_graph
from consensus_lab.errors import SizeLimitExceeded
from consensus_lab.instances import borda_example, kemeny_example
from consensus_lab.reductions import election_from_digraph
from consensus_lab.solvers import (ConsensusResult, borda_consensus,
                                   borda_scores, brute_force_consensus_set,
                                   consensus_witness, kemeny_consensus_set,
                                   kemeny_score, slater_consensus_set,
                                   slater_optimum, slater_score,
                                   slater_winners)
from strategies import digraphs, elections

CYCLE = Digraph(tuple("abc"), frozenset({("a", "b"), ("b", "c"), ("c", "a")}))


def R(text):
    return tuple(text)


# --- Kemeny ----------------------------------------------------------------

def test_kemeny_worked_example():
    res = kemeny_consensus_set(kemeny_example())
    assert res.optimum == 6
    assert res.consensuses == (R("abcd"), R("bcad"), R("cabd"))
    assert kemeny_score(kemeny_example()) == 6


def test_kemeny_single_voter():
    e = Election("abc", [R("bca")])
    assert kemeny_consensus_set(e) == ConsensusResult(0, (R("bca"),))


def test_kemeny_two_candidates():
    assert kemeny_score(Election("ab", [R("ab"), R("ab"), R("ba")])) == 1
    res = kemeny_consensus_set(Election("ab", [R("ab"), R("ba")]))
    assert res.optimum == 1 and res.consensuses == (R("ab"), R("ba"))


def test_no_candidates():
    e = Election((), [])
    assert kemeny_score(e) == 0
    assert kemeny_consensus_set(e).consensuses == ((),)


def test_size_limits():
    e = Election("abcdef", [R("abcdef")])
    small = Limits(max_candidates=5, max_consensus_set=5, max_brute_force=5)
    with pytest.raises(SizeLimitExceeded):
        kemeny_score(e, small)
    with pytest.raises(SizeLimitExceeded):
        kemeny_consensus_set(e, small)
    with pytest.raises(SizeLimitExceeded):
        brute_force_consensus_set(e, "kemeny", small)


@settings(max_examples=80)
@given(elections(max_m=6, max_voters=6))
def test_kemeny_matches_brute_force(e):
    assert kemeny_consensus_set(e) == brute_force_consensus_set(e, "kemeny")


@given(elections(max_m=6, max_voters=5))
def test_reversal_symmetry(e):
    fwd = kemeny_consensus_set(e)
    back = kemeny_consensus_set(e.reversed())
    assert back.optimum == fwd.optimum
    assert set(back.consensuses) == {x[::-1] for x in fwd.consensuses}


@given(elections(min_m=1, max_m=5, max_voters=5), st.data())
def test_adding_a_consensus_voter_keeps_it(e, data):
    x = data.draw(st.sampled_from(kemeny_consensus_set(e).consensuses))
    assert x in kemeny_consensus_set(e.with_votes([x]))


@given(elections(max_m=7, max_voters=5))
def test_witness_is_first_consensus(e):
    best, x = consensus_witness(e, "kemeny")
    res = kemeny_consensus_set(e, Limits(max_consensus_set=7))
    assert (best, x) == (res.optimum, res.consensuses[0])


def test_result_serialization():
    res = kemeny_consensus_set(kemeny_example())
    assert res.to_text() == "score: 6\na>b>c>d\nb>c>a>d\nc>a>b>d\n"
    assert res.to_dict()["consensuses"][0] == ["a", "b", "c", "d"]


# --- Slater ----------------------------------------------------------------

def test_slater_score_on_cycle():
    assert slater_score(R("abc"), CYCLE) == 2
    scores = {"".join(x): slater_score(x, CYCLE) for x in permutations("abc")}
    # rotations of the cycle keep two arcs; their reversals keep one
    assert scores == {"abc": 2, "bca": 2, "cab": 2, "acb": 1, "bac": 1, "cba": 1}


def test_slater_cycle_consensuses_and_winners():
    e = Election("abc", [R("abc"), R("bca"), R("cab")])
    assert majority_graph(e) == CYCLE
    res = slater_consensus_set(e)
    assert res.optimum == 2 and len(res.consensuses) == 3
    assert brute_force_consensus_set(e, "slater").consensuses == res.consensuses
    assert slater_winners(e) == ("a", "b", "c")


def test_slater_acyclic_unanimous():
    e = Election("abc", [R("bac")] * 3)
    assert slater_consensus_set(e).consensuses == (R("bac"),)
    assert slater_winners(e) == ("b",)


@given(digraphs(max_n=6), st.data())
def test_slater_complementarity(g, data):
    x = tuple(data.draw(st.permutations(g.vertices)))
    pos = {c: i for i, c in enumerate(x)}
    disagree = sum(pos[a] > pos[b] for a, b in g.arcs)
    assert slater_score(x, g) + disagree == len(g.arcs)


@settings(max_examples=80)
@given(elections(max_m=6, max_voters=6))
def test_slater_matches_brute_force(e):
    assert slater_consensus_set(e) == brute_force_consensus_set(e, "slater")


@given(elections(min_m=1, max_m=5, max_voters=5), st.data())
def test_weighted_slater_matches_brute_force(e, data):
    w = {c: data.draw(st.integers(1, 4)) for c in e.candidates}
    weighted = Election(e.candidates, e.voters, w)
    assert slater_consensus_set(weighted) == brute_force_consensus_set(weighted, "slater")
    assert slater_optimum(weighted) == max(slater_score(x, weighted)
                                           for x in permutations(e.candidates))


@given(elections(min_m=1, max_m=6, max_voters=5))
def test_slater_winners_are_heads(e):
    res = slater_consensus_set(e)
    assert slater_winners(e) == tuple(sorted({x[0] for x in res.consensuses}))


def test_weight_product_rule():
    # one arc a->b; weights 3 and 2 give 6 for agreeing rankings
    g = Digraph(("a", "b"), frozenset({("a", "b")}))
    assert slater_score(R("ab"), g, {"a": 3, "b": 2}) == 6
    assert slater_score(R("ba"), g, {"a": 3, "b": 2}) == 0


def test_weight_cap():
    e = Election("ab", [R("ab")], {"a": 50})
    with pytest.raises(SizeLimitExceeded):
        slater_optimum(e, limits=Limits(max_weight=10))


@given(digraphs(max_n=6))
def test_kemeny_equals_slater_on_equal_weights(g):
    e = election_from_digraph(g)
    assert kemeny_consensus_set(e).consensuses == slater_consensus_set(e).consensuses


# --- Borda -----------------------------------------------------------------

def test_borda_worked_example():
    s = borda_scores(borda_example())
    assert s == {"a": 11, "b": 13, "c": 6, "d": 0}
    assert str(borda_consensus(borda_example())) == "b>a>c>d"


def test_borda_one_voter():
    assert borda_scores(Election("abc", [R("abc")])) == {"a": 2, "b": 1, "c": 0}


def test_borda_after_manipulation():
    e = borda_example().with_votes([R("acdb")])
    assert borda_scores(e) == {"a": 14, "b": 13, "c": 8, "d": 1}
    assert borda_consensus(e) == WeakOrder.parse("a>b>c>d")
    voted_target = borda_example().with_votes([R("abcd")])
    assert borda_scores(voted_target) == {"a": 14, "b": 15, "c": 7, "d": 0}


def test_borda_ties_share_a_tier():
    e = Election("abc", [R("abc"), R("bac")])
    assert str(borda_consensus(e)) == "a=b>c"


@given(elections(max_m=6, max_voters=7))
def test_borda_points_conserved(e):
    assert sum(borda_scores(e).values()) == e.n_voters * e.m * (e.m - 1) // 2
