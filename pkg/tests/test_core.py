from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from consensus_lab.core import (Digraph, Election, UndirectedGraph, WeakOrder,
                                check_name, distance_from_tally,
                                distance_to_election, kendall_tau,
                                majority_graph, pairwise_tally, parse_ranking,
                                restrict_ranking, weighted_majority_graph)
from consensus_lab.errors import DomainError
from consensus_lab.instances import borda_example, kemeny_example
from strategies import elections, rankings


def naive_disagreements(x, y):
    # independent of kendall_tau: compare every pair by explicit positions
    px = {c: i for i, c in enumerate(x)}
    py = {c: i for i, c in enumerate(y)}
    return sum((px[a] < px[b]) != (py[a] < py[b]) for a, b in combinations(x, 2))


# --- kendall_tau -----------------------------------------------------------

def test_kendall_identity():
    assert kendall_tau("abc", "abc") == 0


def test_kendall_full_reversal():
    assert kendall_tau("abcd", "dcba") == 6


def test_kendall_worked_pair():
    assert kendall_tau(tuple("abcd"), tuple("cadb")) == 3


def test_kendall_mismatched_sets():
    with pytest.raises(DomainError):
        kendall_tau("abc", "abd")


@given(st.integers(1, 7).flatmap(lambda m: st.tuples(rankings(m), rankings(m))))
def test_kendall_matches_pairwise_count(pair):
    x, y = pair
    assert kendall_tau(x, y) == naive_disagreements(x, y)


@given(st.integers(1, 7).flatmap(lambda m: st.tuples(rankings(m), rankings(m), rankings(m))))
def test_kendall_metric(triple):
    x, y, z = triple
    assert kendall_tau(x, y) == kendall_tau(y, x)
    assert (kendall_tau(x, y) == 0) == (x == y)
    assert kendall_tau(x, z) <= kendall_tau(x, y) + kendall_tau(y, z)
    m = len(x)
    assert kendall_tau(x, y) + kendall_tau(x, y[::-1]) == m * (m - 1) // 2


# --- distances and tallies -------------------------------------------------

def test_distance_example_consensus():
    assert distance_to_election(tuple("abcd"), kemeny_example()) == 6


def test_distance_dabc():
    # per-voter distances 3 + 4 + 4, recomputed by naive pair counting
    e = kemeny_example()
    assert [naive_disagreements(tuple("dabc"), v) for v in e.votes()] == [3, 4, 4]
    assert distance_to_election(tuple("dabc"), e) == 11


def test_distance_no_voters():
    assert distance_to_election(tuple("abc"), Election("abc", [])) == 0


@given(elections(max_m=6), st.data())
def test_distance_equals_tally_sum(e, data):
    x = data.draw(rankings(e.m))
    expected = sum(naive_disagreements(x, v) for v in e.votes())
    assert distance_to_election(x, e) == expected
    assert distance_from_tally(x, pairwise_tally(e)) == expected


def test_tally_examples():
    t = pairwise_tally(kemeny_example())
    assert (t["a", "b"], t["b", "a"]) == (2, 1)
    single = pairwise_tally(Election("ab", [("a", "b")]))
    assert (single["a", "b"], single["b", "a"]) == (1, 0)
    t3 = pairwise_tally(borda_example())
    assert (t3["a", "b"], t3["b", "a"]) == (2, 3)


@given(elections(max_m=5, max_voters=7))
def test_tally_pairs_sum_to_voters(e):
    t = pairwise_tally(e)
    for a, b in combinations(e.candidates, 2):
        assert t[a, b] + t[b, a] == e.n_voters


# --- majority graphs -------------------------------------------------------

def test_weighted_majority_graph_example():
    g = weighted_majority_graph(kemeny_example())
    assert g.arcs == {("a", "b"): 1, ("b", "c"): 1, ("c", "a"): 1,
                      ("a", "d"): 1, ("b", "d"): 1, ("c", "d"): 3}
    assert majority_graph(kemeny_example()).arcs == frozenset(g.arcs)


def test_tie_gives_no_arc():
    assert weighted_majority_graph(Election("ab", [("a", "b"), ("b", "a")])).arcs == {}


@given(elections(max_m=5, max_voters=7))
def test_weighted_majority_graph_laws(e):
    g = weighted_majority_graph(e)
    t = pairwise_tally(e)
    for a, b in combinations(e.candidates, 2):
        assert not ((a, b) in g.arcs and (b, a) in g.arcs)
        margin = t[a, b] - t[b, a]
        if margin > 0:
            assert g.arcs[a, b] == margin
        elif margin < 0:
            assert g.arcs[b, a] == -margin
        else:
            assert (a, b) not in g.arcs and (b, a) not in g.arcs
    assert all(a != b for a, b in g.arcs)


@given(st.integers(2, 5).flatmap(
    lambda m: st.lists(rankings(m), min_size=1, max_size=7).filter(lambda v: len(v) % 2)))
def test_odd_voter_count_gives_tournament(votes):
    e = Election(sorted(votes[0]), votes)
    g = majority_graph(e)
    assert len(g.arcs) == e.m * (e.m - 1) // 2


# --- data model ------------------------------------------------------------

def test_election_normalizes_and_aggregates():
    e = Election(["b", "a"], [("a", "b"), (2, ("b", "a")), ("a", "b")])
    assert e.candidates == ("a", "b")
    assert e.voters == ((2, ("a", "b")), (2, ("b", "a")))
    assert e.n_voters == 4


def test_election_rejects_bad_votes():
    with pytest.raises(DomainError):
        Election("abc", [("a", "b")])
    with pytest.raises(DomainError):
        Election("ab", [("a", "a")])
    with pytest.raises(DomainError):
        Election("ab", [(0, ("a", "b"))])
    with pytest.raises(DomainError):
        Election("ab", [], {"a": 0})


def test_election_vote_editing():
    e = kemeny_example()
    more = e.with_votes([tuple("abcd")])
    assert more.n_voters == 4
    assert more.without_votes([tuple("abcd")]) == e
    with pytest.raises(DomainError):
        e.without_votes([tuple("dcba")])


def test_restrict_drops_candidates_from_votes():
    e = kemeny_example().without_candidates(["d"])
    assert e.candidates == ("a", "b", "c")
    assert ("c", "a", "b") in e.votes()
    assert restrict_ranking(tuple("dcba"), "ab") == ("b", "a")


def test_names_and_rankings():
    assert check_name("x_1") == "x_1"
    for bad in ("", "a b", "a>b", "é"):
        with pytest.raises(DomainError):
            check_name(bad)
    assert parse_ranking(" a > b>c ") == ("a", "b", "c")


def test_digraph_invariants():
    with pytest.raises(DomainError):
        Digraph(("a",), frozenset({("a", "a")}))
    with pytest.raises(DomainError):
        Digraph(("a", "b"), frozenset({("a", "b"), ("b", "a")}))
    with pytest.raises(DomainError):
        Digraph(("a",), frozenset({("a", "b")}))


def test_undirected_graph_complement():
    g = UndirectedGraph(("u", "v", "w"), frozenset({("v", "u")}))
    assert g.has_edge("u", "v")
    assert g.complement().edges == frozenset({("u", "w"), ("v", "w")})
    with pytest.raises(DomainError):
        UndirectedGraph(("u",), frozenset({("u", "u")}))


def test_weak_order_round_trip():
    wo = WeakOrder.parse("b=a>c")
    assert str(wo) == "a=b>c"
    assert not wo.is_strict()
    assert WeakOrder.from_ranking("cab").is_strict()
    with pytest.raises(DomainError):
        WeakOrder.parse("a>a")
