from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from consensus_lab.config import Limits
from consensus_lab.core import Digraph, Election, UndirectedGraph, weighted_majority_graph
from consensus_lab.errors import DomainError, PreconditionError
from consensus_lab.recognition import (fasr_restriction, gnd_prime_solvable, has_independent_set,
                                       is_fas, is_kemeny_consensus,
                                       is_minimal_fas, is_minimum_fas,
                                       is_minimum_gnd_prime,
                                       is_minimum_vertex_cover, vcr_restriction)
from consensus_lab.reductions import (ALIASES, REDUCTIONS, REJECT_CDC,
                                      REJECT_RECOGNITION, CnfFormula,
                                      QSat2Instance, Rejected, assignments,
                                      election_from_digraph,
                                      fasr_to_kemeny_recognition,
                                      fasrr_to_kemeny_cdc, gnd_to_vcrr,
                                      hat_graph, pad_blocks, phi_to_phi_prime,
                                      qsat2_to_gnd_prime, qsat2_truth,
                                      random_minimal_fas, vc_to_fas,
                                      vcrr_to_fasrr, verify_reduction)
from consensus_lab.strategic import kemeny_cdc_to_consensus
from strategies import digraphs, graphs


def dg(vertices, *arcs):
    return Digraph(tuple(vertices), frozenset(tuple(a) for a in arcs))


def ug(vertices, *edges):
    return UndirectedGraph(tuple(vertices), frozenset(tuple(e) for e in edges))


CYCLE = dg("abc", "ab", "bc", "ca")
LITERALS = (1, -1, 2, -2)
ONE_CLAUSE = [c for r in (1, 2, 3) for c in combinations(LITERALS, r)]


def q1(*clauses):
    return QSat2Instance(CnfFormula(2, tuple(clauses)), (1,), (2,))


# --- hat construction ------------------------------------------------------

def test_hat_single_edge():
    h, xs = vc_to_fas(ug("uv", "uv"), {"u"})
    assert len(h.vertices) == 4 and len(h.arcs) == 4
    assert h.arcs == {("u", "u_p"), ("v", "v_p"), ("u_p", "v"), ("v_p", "u")}
    assert xs == {("u", "u_p")}
    assert is_minimum_fas(h, xs)


def test_hat_edgeless():
    h, xs = vc_to_fas(ug("uvw"), set())
    assert is_fas(h, set()) and is_minimum_fas(h, xs)


def test_hat_name_clash():
    with pytest.raises(DomainError):
        hat_graph(ug(["u", "u_p"]))


@given(graphs(max_n=5), st.data())
def test_hat_transfers_cover_status(g, data):
    x = data.draw(st.sets(st.sampled_from(g.vertices))) if g.vertices else set()
    h, xs = vc_to_fas(g, x)
    assert is_fas(h, xs) == (all(u in x or v in x for u, v in g.edges))
    assert is_minimum_fas(h, xs) == is_minimum_vertex_cover(g, x)


# --- e(G) ------------------------------------------------------------------

def test_e_of_g_single_arc():
    e = election_from_digraph(dg("abc", "ab"))
    assert sorted(e.votes()) == [tuple("abc"), tuple("cab")]


def test_e_of_g_arcless():
    assert election_from_digraph(dg("abc")).n_voters == 0


@given(digraphs(max_n=6))
def test_e_of_g_majority_graph(g):
    e = election_from_digraph(g)
    assert e.n_voters == 2 * len(g.arcs)
    assert weighted_majority_graph(e).arcs == {a: 2 for a in g.arcs}


# --- FAS recognition to Kemeny recognition ---------------------------------

def test_fas_to_recognition_examples():
    e, order = fasr_to_kemeny_recognition(CYCLE, {("a", "b")})
    assert order == tuple("bca")
    assert is_kemeny_consensus(e, order)
    assert fasr_to_kemeny_recognition(CYCLE, {("a", "b"), ("b", "c")}) is REJECT_RECOGNITION
    chain = dg("abc", "ab", "bc")
    e, order = fasr_to_kemeny_recognition(chain, set())
    assert order == tuple("abc") and is_kemeny_consensus(e, order)


def test_reject_values_are_no_instances():
    e, order = REJECT_RECOGNITION
    assert not is_kemeny_consensus(e, order)
    e, k, order = REJECT_CDC
    assert kemeny_cdc_to_consensus(e, k, order) is None
    assert isinstance(REJECT_CDC, Rejected)


@settings(max_examples=40)
@given(digraphs(max_n=5), st.integers(0, 1), st.integers(0, 2 ** 32 - 1))
def test_fasrr_to_cdc_biconditional(g, k, seed):
    x = random_minimal_fas(np.random.default_rng(seed), g)
    e, k2, order = fasrr_to_kemeny_cdc(g, k, x)
    assert k2 == k
    left = fasr_restriction(g, k, x) is not None
    assert left == (kemeny_cdc_to_consensus(e, k, order) is not None)


def test_fasrr_to_cdc_cycle_with_pendant():
    g = dg("abcd", "ab", "bc", "ca", "cd")
    x = {("c", "a")}
    e, k, order = fasrr_to_kemeny_cdc(g, 1, x)
    assert kemeny_cdc_to_consensus(e, k, order) == ()
    assert fasrr_to_kemeny_cdc(g, 1, {("c", "a"), ("a", "b")}) is REJECT_CDC


# --- formulas --------------------------------------------------------------

def test_phi_prime_example():
    phi = CnfFormula(3, ((2, 3),))
    assert phi_to_phi_prime(phi).clauses == ((1, 2, 3), (-1,))
    assert phi_to_phi_prime(CnfFormula(0, ())).clauses == ((-1,),)
    with pytest.raises(DomainError):
        phi_to_phi_prime(CnfFormula(2, ((1, 2),)))


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(st.integers(2, n).flatmap(lambda v: st.sampled_from((v, -v))),
                      min_size=1, max_size=3), max_size=5))))
def test_phi_prime_laws(spec):
    n, clauses = spec
    phi = CnfFormula(n, tuple(tuple(c) for c in clauses))
    prime = phi_to_phi_prime(phi)
    m = len(prime.clauses)
    for a in assignments(range(1, n + 1)):
        if a[1]:
            assert prime.satisfied_count(a) == m - 1
        else:
            assert prime.satisfied_count(a) == phi.satisfied_count(a) + 1


def test_formula_validation():
    with pytest.raises(ValueError):
        CnfFormula(1, ((2,),))
    with pytest.raises(ValueError):
        QSat2Instance(CnfFormula(2, ()), (1,), (1,))
    with pytest.raises(ValueError):
        QSat2Instance(CnfFormula(3, ()), (1,), (2,))


def test_qsat2_truth_one_clause():
    # only a clause on the outer variable alone can be falsified by its choice
    truth = {c: qsat2_truth(q1(c)) for c in ONE_CLAUSE}
    assert {c for c, t in truth.items() if t} == {(1,), (-1,)}


def test_pad_blocks():
    q = QSat2Instance(CnfFormula(3, ((1, 2, 3),)), (1,), (2, 3))
    p = pad_blocks(q)
    assert len(p.exists_vars) == len(p.inner_vars) == 2
    assert qsat2_truth(p) == qsat2_truth(q)
    with pytest.raises(DomainError):
        qsat2_to_gnd_prime(q)


# --- QSAT2 to GND' ---------------------------------------------------------

def test_gnd_prime_gadget_size():
    img = qsat2_to_gnd_prime(q1((2,)))
    # 4n + 3m core vertices and two padding sets of 2n + m - 2
    assert len(img.graph.vertices) == 7 + 2
    assert img.ell == 2 and img.k == 1
    assert set(img.x) == {"x1", "nx1"}


def test_gnd_prime_gadget_structure():
    img = qsat2_to_gnd_prime(QSat2Instance(CnfFormula(4, ((1, 3, -4), (-2, 4))), (1, 2), (3, 4)))
    g, n, m = img.graph, 2, 2
    assert len(g.vertices) == 4 * n + 3 * m + 2 * n * (2 * n + m - 2)
    assert not g.has_edge("x1", "nx1") and g.has_edge("y1", "ny1")
    assert g.has_edge("a1", "b1") and g.has_edge("a1", "x1") and g.has_edge("c1", "ny2")
    # padding set plus its literal pair is an independent set of size 2n + m
    block = [f"I1_{t}" for t in range(1, 2 * n + m - 1)] + ["x1", "nx1"]
    assert len(block) == 2 * n + m
    assert not any(g.has_edge(u, v) for u, v in combinations(block, 2))
    assert has_independent_set(g.remove_vertices(set(g.vertices) - set(block)), 2 * n + m)


@pytest.mark.parametrize("clause", ONE_CLAUSE)
def test_gnd_prime_equivalence_one_clause(clause):
    q = q1(clause)
    g, ell, x, k = qsat2_to_gnd_prime(q)
    assert qsat2_truth(q) == (not is_minimum_gnd_prime(g, ell, x))
    assert qsat2_truth(q) == gnd_prime_solvable(g, ell, k)


# --- GND to VC restriction and onward ---------------------------------------

def test_gnd_to_vcrr_example():
    h, k, x = gnd_to_vcrr(ug("uv", "uv"), 1, 1)
    assert h.vertices == ("u", "v", "z1")
    assert h.edges == {("u", "z1"), ("v", "z1")}
    assert (k, set(x)) == (1, {"u", "v"})
    assert vcr_restriction(h, k, x) is not None


def test_gnd_to_vcrr_edgeless():
    h, k, x = gnd_to_vcrr(ug("uvw"), 0, 1)
    assert vcr_restriction(h, k, x) == ()


def test_vcrr_to_fasrr_precondition():
    with pytest.raises(PreconditionError):
        vcrr_to_fasrr(ug("uvw", "uv", "vw", "uw"), 1, {"u", "v", "w"})
    h, k, xs = vcrr_to_fasrr(ug("uvw", "uv", "vw", "uw"), 1, {"u", "v"})
    assert is_minimal_fas(h, xs) and k == 1


# --- harness ---------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(set(REDUCTIONS) - {"qsat2_to_kemeny_cdc"}))
def test_harness_zero_failures(name):
    report = verify_reduction(name, trials=60, seed=3)
    assert report.trials == 60
    assert report.agreements + len(report.failures) == report.trials
    assert report.ok, report.to_text()


@pytest.mark.parametrize("name", ["fasr_to_kemeny_recognition", "gnd_to_vcrr",
                                  "vcrr_to_fasrr", "vcrd_to_fasrd", "fasrr_to_kemeny_cdc",
                                  "qsat2_to_gnd_prime", "phi_to_phi_prime"])
def test_harness_samples_both_answers(name):
    red = REDUCTIONS[name]
    answers = set()
    for child in np.random.SeedSequence(3).spawn(60):
        rng = np.random.default_rng(child)
        answers.add(red.left(red.sample(rng, red.default_size), Limits()))
    assert answers == {True, False}


def test_harness_is_deterministic():
    a = verify_reduction("vc2fas", 5, 30, seed=11)
    b = verify_reduction("vc_to_fas", 5, 30, seed=11)
    assert a.to_text() == b.to_text()
    assert a.to_dict() == b.to_dict()


def test_harness_unknown_name():
    with pytest.raises(DomainError):
        verify_reduction("nope")
    assert set(ALIASES.values()) <= set(REDUCTIONS)


def test_reduction_images_are_elections():
    e, order = fasr_to_kemeny_recognition(CYCLE, {("b", "c")})
    assert isinstance(e, Election) and sorted(order) == list(CYCLE.vertices)
