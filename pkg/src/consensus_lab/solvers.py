"""Exact Kemeny, Slater and Borda outcomes.

Kemeny and Slater are solved by the subset dynamic program in
:mod:`consensus_lab._dp`; :func:`brute_force_consensus_set` enumerates all
``m!`` rankings and serves as an independent check on it.

Slater uses the (unweighted) majority graph. With unary candidate weights a
ranking agreeing with arc ``(a, b)`` earns ``w(a) * w(b)``, so a candidate of
weight ``M`` behaves like ``M`` interchangeable unit candidates. Kemeny and
Borda ignore candidate weights.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Literal, Mapping, Sequence, Union

import numpy as np

from . import _dp
from .config import Limits, resolve
from .core import (Digraph, Election, Ranking, WeakOrder, check_ranking,
                   distance_to_election, format_ranking, majority_graph,
                   pairwise_tally)
from .errors import DomainError, SizeLimitExceeded

Rule = Literal["kemeny", "slater"]


@dataclass(frozen=True)
class ConsensusResult:
    """Optimal score and the complete, sorted set of rankings attaining it.

    For Kemeny the optimum is the least total Kendall tau distance; for Slater
    it is the largest agreement score.
    """

    optimum: int
    consensuses: tuple[Ranking, ...]

    def __contains__(self, x) -> bool:
        return tuple(x) in self.consensuses

    def to_text(self) -> str:
        lines = [f"score: {self.optimum}"]
        lines += [format_ranking(x) for x in self.consensuses]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"optimum": self.optimum,
                "consensuses": [list(x) for x in self.consensuses]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _check_size(m: int, limit: int, what: str):
    if m > limit:
        raise SizeLimitExceeded(f"{what}: {m} candidates exceeds the limit of {limit}")


# ---------------------------------------------------------------------------
# Kemeny

def kemeny_cost_matrix(e: Election) -> np.ndarray:
    return np.array(pairwise_tally(e).matrix)


def kemeny_score(e: Election, limits: Limits | None = None) -> int:
    """Least total Kendall tau distance of any ranking to the voters."""
    limits = resolve(limits)
    _check_size(e.m, limits.max_candidates, "kemeny_score")
    return int(_dp.subset_table(kemeny_cost_matrix(e))[-1])


def kemeny_consensus_set(e: Election, limits: Limits | None = None) -> ConsensusResult:
    limits = resolve(limits)
    _check_size(e.m, limits.max_consensus_set, "kemeny_consensus_set")
    cost = kemeny_cost_matrix(e)
    table = _dp.subset_table(cost)
    return ConsensusResult(
        int(table[-1]),
        tuple(tuple(e.candidates[i] for i in order)
              for order in _dp.optimal_orders(cost, table)))


# ---------------------------------------------------------------------------
# Slater

Weights = Union[Mapping[str, int], None]


def _graph_and_weights(g: Union[Digraph, Election], weights: Weights):
    if isinstance(g, Election):
        w = dict(g.weights) if weights is None else dict(weights)
        return majority_graph(g), w
    return g, dict(weights or {})


def slater_cost_matrix(g: Digraph, weights: Weights = None) -> np.ndarray:
    """``cost[b, a] = w(a) w(b)`` for every arc ``(b, a)``: the penalty for
    ranking ``a`` above ``b`` against the majority."""
    w = dict(weights or {})
    wv = np.array([w.get(v, 1) for v in g.vertices], dtype=np.int64)
    return g.adjacency() * np.outer(wv, wv)


def slater_score(x: Sequence[str], g: Union[Digraph, Election], weights: Weights = None) -> int:
    """Weighted number of majority arcs ``(a, b)`` with ``a`` ranked above ``b``.

    ``g`` is either a majority graph or an election (whose majority graph and
    candidate weights are then used unless ``weights`` is given).
    """
    g, w = _graph_and_weights(g, weights)
    x = check_ranking(x, g.vertices)
    pos = {c: i for i, c in enumerate(x)}
    return sum(w.get(a, 1) * w.get(b, 1) for a, b in g.arcs if pos[a] < pos[b])


def _slater_total(g: Digraph, w: Mapping[str, int]) -> int:
    return sum(w.get(a, 1) * w.get(b, 1) for a, b in g.arcs)


def _check_weights(w: Mapping[str, int], limits: Limits):
    big = [c for c, v in w.items() if v > limits.max_weight]
    if big:
        raise SizeLimitExceeded(
            f"candidate weight above the cap of {limits.max_weight}: {', '.join(sorted(big))}")


def _slater_problem(e: Union[Election, Digraph], weights: Weights, limits: Limits):
    g, w = _graph_and_weights(e, weights)
    _check_weights(w, limits)
    cost = slater_cost_matrix(g, w)
    return g, cost, _slater_total(g, w)


def slater_optimum(e: Union[Election, Digraph], weights: Weights = None,
                   limits: Limits | None = None) -> int:
    """Largest Slater score over all rankings."""
    limits = resolve(limits)
    g, cost, total = _slater_problem(e, weights, limits)
    _check_size(len(g.vertices), limits.max_candidates, "slater_optimum")
    return total - int(_dp.subset_table(cost)[-1])


def slater_consensus_set(e: Union[Election, Digraph], weights: Weights = None,
                         limits: Limits | None = None) -> ConsensusResult:
    limits = resolve(limits)
    g, cost, total = _slater_problem(e, weights, limits)
    _check_size(len(g.vertices), limits.max_consensus_set, "slater_consensus_set")
    table = _dp.subset_table(cost)
    return ConsensusResult(
        total - int(table[-1]),
        tuple(tuple(g.vertices[i] for i in order)
              for order in _dp.optimal_orders(cost, table)))


def slater_winners(e: Union[Election, Digraph], weights: Weights = None,
                   limits: Limits | None = None) -> tuple[str, ...]:
    """Candidates ranked first in at least one Slater consensus."""
    limits = resolve(limits)
    g, cost, _ = _slater_problem(e, weights, limits)
    _check_size(len(g.vertices), limits.max_candidates, "slater_winners")
    if not g.vertices:
        return ()
    table = _dp.subset_table(cost)
    return tuple(g.vertices[i] for i in _dp.optimal_first_elements(cost, table))


def consensus_witness(e: Election, rule: Rule = "kemeny",
                      limits: Limits | None = None) -> tuple[int, Ranking]:
    """Optimum and the lexicographically first optimal ranking.

    Only needs the size bound of the score computation, so it works where
    listing the full consensus set would be too expensive.
    """
    limits = resolve(limits)
    _check_size(e.m, limits.max_candidates, "consensus_witness")
    if rule == "kemeny":
        cost, total, sign = kemeny_cost_matrix(e), 0, 1
    elif rule == "slater":
        _, cost, total = _slater_problem(e, None, limits)
        sign = -1
    else:
        raise DomainError(f"unknown rule {rule!r}")
    table = _dp.subset_table(cost)
    best = total + sign * int(table[-1])
    return best, tuple(e.candidates[i] for i in _dp.first_optimal_order(cost, table))


# ---------------------------------------------------------------------------
# Oracle

def brute_force_consensus_set(e: Election, rule: Rule = "kemeny",
                              limits: Limits | None = None) -> ConsensusResult:
    """Optimal rankings by explicit enumeration of all ``m!`` orders.

    Scores every ranking from first principles (per-voter Kendall tau for
    Kemeny, arc agreement for Slater), sharing no code with the dynamic
    program.
    """
    limits = resolve(limits)
    _check_size(e.m, limits.max_brute_force, "brute_force_consensus_set")
    if rule == "kemeny":
        def score(x):
            return distance_to_election(x, e)
        better = min
    elif rule == "slater":
        g = majority_graph(e)
        w = dict(e.weights)

        def score(x):
            return slater_score(x, g, w)
        better = max
    else:
        raise DomainError(f"unknown rule {rule!r}")
    scored = [(score(x), x) for x in permutations(e.candidates)]
    best = better(s for s, _ in scored)
    return ConsensusResult(best, tuple(sorted(x for s, x in scored if s == best)))


# ---------------------------------------------------------------------------
# Borda

def borda_scores(e: Election) -> dict[str, int]:
    """Each voter gives ``m - i`` points to the candidate in position ``i``."""
    m = e.m
    scores = dict.fromkeys(e.candidates, 0)
    for count, vote in e.voters:
        for i, c in enumerate(vote):
            scores[c] += count * (m - 1 - i)
    return scores


def weak_order_from_scores(scores: Mapping[str, int]) -> WeakOrder:
    by_score: dict[int, set[str]] = {}
    for c, s in scores.items():
        by_score.setdefault(s, set()).add(c)
    return WeakOrder(tuple(frozenset(by_score[s]) for s in sorted(by_score, reverse=True)))


def borda_consensus(e: Election) -> WeakOrder:
    """Candidates by descending Borda score; equal scores share a tier."""
    return weak_order_from_scores(borda_scores(e))
