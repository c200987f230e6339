"""Elections, graphs and the Kendall tau machinery.

All values here are immutable once built. Candidate and vertex names are
plain strings (tokens over ``[A-Za-z0-9_]``); a ranking is a tuple of names,
most preferred first.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .errors import DomainError

Ranking = tuple[str, ...]
Arc = tuple[str, str]
Edge = tuple[str, str]

_TOKEN = re.compile(r"[A-Za-z0-9_]+\Z")


def check_name(name: str) -> str:
    if not isinstance(name, str) or not _TOKEN.match(name):
        raise DomainError(f"invalid name {name!r}: expected a token over [A-Za-z0-9_]")
    return name


def _distinct_sorted(names: Iterable[str], what: str) -> tuple[str, ...]:
    names = list(names)
    for n in names:
        check_name(n)
    dup = [n for n, c in Counter(names).items() if c > 1]
    if dup:
        raise DomainError(f"duplicate {what} name(s): {', '.join(sorted(dup))}")
    return tuple(sorted(names))


def parse_ranking(text: str) -> Ranking:
    """Read ``"a > b > c"`` into ``("a", "b", "c")``. Whitespace is optional."""
    parts = [p.strip() for p in text.split(">")]
    if not text.strip() or any(not p for p in parts):
        raise DomainError(f"malformed ranking {text!r}")
    for p in parts:
        check_name(p)
    return tuple(parts)


def format_ranking(x: Sequence[str]) -> str:
    return ">".join(x)


def check_ranking(x: Sequence[str], candidates: Iterable[str]) -> Ranking:
    """Return ``x`` as a tuple after checking it is a permutation of ``candidates``."""
    x = tuple(x)
    cands = set(candidates)
    if len(x) != len(cands) or set(x) != cands:
        raise DomainError(
            f"ranking {format_ranking(x)!r} is not a permutation of {{{', '.join(sorted(cands))}}}")
    return x


def restrict_ranking(x: Sequence[str], keep: Iterable[str]) -> Ranking:
    keep = set(keep)
    return tuple(c for c in x if c in keep)


# ---------------------------------------------------------------------------
# Elections

VoteSpec = Union[Sequence[str], tuple[int, Sequence[str]]]


def _is_group(v) -> bool:
    return isinstance(v, tuple) and len(v) == 2 and isinstance(v[0], (int, np.integer))


@dataclass(frozen=True)
class Election:
    """Candidates, optional unary candidate weights, and a multiset of votes.

    ``voters`` accepts plain rankings or ``(count, ranking)`` pairs; they are
    aggregated into canonical groups sorted by ranking. ``weights`` accepts a
    mapping; candidates of weight 1 are not stored.

    >>> e = Election("abc", [("a", "b", "c"), (2, "cba")])
    >>> e.voters
    ((1, ('a', 'b', 'c')), (2, ('c', 'b', 'a')))
    >>> e.n_voters
    3
    """

    candidates: tuple[str, ...]
    voters: tuple[tuple[int, Ranking], ...] = ()
    weights: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        cands = _distinct_sorted(self.candidates, "candidate")
        counts: Counter = Counter()
        for v in self.voters:
            if _is_group(v):
                count, vote = int(v[0]), v[1]
            else:
                count, vote = 1, v
            if count <= 0:
                raise DomainError(f"vote count must be positive, got {count}")
            counts[check_ranking(tuple(vote), cands)] += count
        raw = self.weights
        items = raw.items() if isinstance(raw, Mapping) else raw
        weights = {}
        for c, w in items:
            if c not in cands:
                raise DomainError(f"weight given for unknown candidate {c!r}")
            if not isinstance(w, (int, np.integer)) or w <= 0:
                raise DomainError(f"weight of {c!r} must be a positive integer, got {w!r}")
            if w != 1:
                weights[c] = int(w)
        object.__setattr__(self, "candidates", cands)
        object.__setattr__(self, "voters", tuple((counts[r], r) for r in sorted(counts)))
        object.__setattr__(self, "weights", tuple(sorted(weights.items())))

    @property
    def m(self) -> int:
        return len(self.candidates)

    @property
    def n_voters(self) -> int:
        return sum(c for c, _ in self.voters)

    def weight(self, c: str) -> int:
        return dict(self.weights).get(c, 1)

    def weight_vector(self) -> np.ndarray:
        w = dict(self.weights)
        return np.array([w.get(c, 1) for c in self.candidates], dtype=np.int64)

    def votes(self) -> list[Ranking]:
        """All votes expanded with multiplicity, in canonical order."""
        return [r for c, r in self.voters for _ in range(c)]

    def with_votes(self, votes: Iterable[VoteSpec]) -> "Election":
        return Election(self.candidates, self.voters + tuple(votes), self.weights)

    def without_votes(self, votes: Iterable[Sequence[str]]) -> "Election":
        """Remove one unit per listed vote; every removal must exist."""
        counts = Counter({r: c for c, r in self.voters})
        for v in votes:
            v = tuple(v)
            if counts[v] <= 0:
                raise DomainError(f"no voter {format_ranking(v)!r} left to remove")
            counts[v] -= 1
        return Election(self.candidates, [(c, r) for r, c in counts.items() if c > 0],
                        self.weights)

    def restrict(self, keep: Iterable[str]) -> "Election":
        """The election on a subset of the candidates, votes restricted accordingly."""
        keep = set(keep)
        unknown = keep - set(self.candidates)
        if unknown:
            raise DomainError(f"unknown candidate(s): {', '.join(sorted(unknown))}")
        return Election(tuple(keep),
                        [(c, restrict_ranking(r, keep)) for c, r in self.voters],
                        [(c, w) for c, w in self.weights if c in keep])

    def without_candidates(self, drop: Iterable[str]) -> "Election":
        return self.restrict(set(self.candidates) - set(drop))

    def reversed(self) -> "Election":
        return Election(self.candidates, [(c, r[::-1]) for c, r in self.voters], self.weights)


# ---------------------------------------------------------------------------
# Kendall tau

def kendall_tau(x: Sequence[str], y: Sequence[str]) -> int:
    """Number of unordered candidate pairs ordered oppositely by ``x`` and ``y``."""
    x, y = tuple(x), tuple(y)
    check_ranking(y, x)
    pos = {c: i for i, c in enumerate(y)}
    seq = [pos[c] for c in x]
    return sum(1 for i, j in combinations(range(len(seq)), 2) if seq[i] > seq[j])


def distance_to_election(x: Sequence[str], e: Election) -> int:
    """Sum of Kendall tau distances from ``x`` to every voter (with multiplicity)."""
    x = check_ranking(x, e.candidates)
    return sum(count * kendall_tau(x, vote) for count, vote in e.voters)


def distance_from_tally(x: Sequence[str], tally: "PairwiseTally") -> int:
    """``sum over a ranked above b in x of n(b, a)``: the same quantity as
    :func:`distance_to_election`, computed from pairwise counts."""
    x = check_ranking(x, tally.candidates)
    idx = [tally.index[c] for c in x]
    n = tally.matrix
    return int(sum(n[b, a] for i, a in enumerate(idx) for b in idx[i + 1:]))


class PairwiseTally:
    """``n(a, b)``: how many voters rank ``a`` above ``b``.

    Backed by an ``m x m`` integer matrix in candidate order; the diagonal is
    zero and carries no meaning.
    """

    def __init__(self, candidates: tuple[str, ...], matrix: np.ndarray):
        self.candidates = candidates
        self.index = {c: i for i, c in enumerate(candidates)}
        self.matrix = matrix
        self.matrix.setflags(write=False)

    def __getitem__(self, pair: tuple[str, str]) -> int:
        a, b = pair
        if a == b:
            raise KeyError(pair)
        return int(self.matrix[self.index[a], self.index[b]])

    def __eq__(self, other):
        return (isinstance(other, PairwiseTally) and self.candidates == other.candidates
                and np.array_equal(self.matrix, other.matrix))

    def __repr__(self):
        return f"PairwiseTally({self.candidates!r}, {self.matrix.tolist()!r})"


def pairwise_tally(e: Election) -> PairwiseTally:
    m = e.m
    index = {c: i for i, c in enumerate(e.candidates)}
    n = np.zeros((m, m), dtype=np.int64)
    for count, vote in e.voters:
        pos = np.empty(m, dtype=np.int64)
        for p, c in enumerate(vote):
            pos[index[c]] = p
        n += count * (pos[:, None] < pos[None, :])
    return PairwiseTally(e.candidates, n)


# ---------------------------------------------------------------------------
# Graphs

@dataclass(frozen=True)
class Digraph:
    """Irreflexive, antisymmetric directed graph."""

    vertices: tuple[str, ...]
    arcs: frozenset[Arc] = field(default_factory=frozenset)

    def __post_init__(self):
        verts = _distinct_sorted(self.vertices, "vertex")
        vs = set(verts)
        arcs = frozenset((a, b) for a, b in self.arcs)
        for a, b in arcs:
            if a not in vs or b not in vs:
                raise DomainError(f"arc ({a},{b}) has an endpoint outside the vertex set")
            if a == b:
                raise DomainError(f"loop at {a!r}: digraph must be irreflexive")
            if (b, a) in arcs:
                raise DomainError(f"arcs ({a},{b}) and ({b},{a}): digraph must be antisymmetric")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arcs", arcs)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def remove_arcs(self, x: Iterable[Arc]) -> "Digraph":
        return Digraph(self.vertices, self.arcs - set(map(tuple, x)))

    def remove_vertices(self, w: Iterable[str]) -> "Digraph":
        w = set(w)
        return Digraph(tuple(v for v in self.vertices if v not in w),
                       frozenset(a for a in self.arcs if a[0] not in w and a[1] not in w))

    def adjacency(self) -> np.ndarray:
        index = {v: i for i, v in enumerate(self.vertices)}
        adj = np.zeros((len(self.vertices),) * 2, dtype=np.int64)
        for a, b in self.arcs:
            adj[index[a], index[b]] = 1
        return adj


def _edge(u: str, v: str) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph; edges are stored as sorted pairs."""

    vertices: tuple[str, ...]
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        verts = _distinct_sorted(self.vertices, "vertex")
        vs = set(verts)
        edges = set()
        for u, v in self.edges:
            if u not in vs or v not in vs:
                raise DomainError(f"edge {{{u},{v}}} has an endpoint outside the vertex set")
            if u == v:
                raise DomainError(f"loop at {u!r}: graph must be simple")
            edges.add(_edge(u, v))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(edges))

    def has_edge(self, u: str, v: str) -> bool:
        return _edge(u, v) in self.edges

    def neighbors(self) -> dict[str, set[str]]:
        nb: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return nb

    def remove_vertices(self, w: Iterable[str]) -> "UndirectedGraph":
        w = set(w)
        return UndirectedGraph(tuple(v for v in self.vertices if v not in w),
                               frozenset(e for e in self.edges if e[0] not in w and e[1] not in w))

    def complement(self) -> "UndirectedGraph":
        return UndirectedGraph(self.vertices, frozenset(
            (u, v) for u, v in combinations(self.vertices, 2) if (u, v) not in self.edges))


@dataclass(frozen=True)
class WeightedMajorityGraph:
    """Arc ``(a, b)`` with weight ``n(a,b) - n(b,a)`` wherever that is positive."""

    vertices: tuple[str, ...]
    arcs: Mapping[Arc, int]

    def digraph(self) -> Digraph:
        return Digraph(self.vertices, frozenset(self.arcs))


def weighted_majority_graph(e: Election) -> WeightedMajorityGraph:
    n = pairwise_tally(e).matrix
    margin = n - n.T
    cands = e.candidates
    arcs = {(cands[i], cands[j]): int(margin[i, j])
            for i, j in zip(*np.nonzero(margin > 0))}
    return WeightedMajorityGraph(cands, dict(sorted(arcs.items())))


def majority_graph(e: Election) -> Digraph:
    return weighted_majority_graph(e).digraph()


# ---------------------------------------------------------------------------
# Weak orders

@dataclass(frozen=True)
class WeakOrder:
    """Ordered tiers of tied candidates, best tier first."""

    tiers: tuple[frozenset[str], ...]

    def __post_init__(self):
        tiers = tuple(frozenset(t) for t in self.tiers)
        seen: set[str] = set()
        for t in tiers:
            if not t:
                raise DomainError("weak order tiers must be nonempty")
            if seen & t:
                raise DomainError("weak order tiers must be disjoint")
            seen |= t
        object.__setattr__(self, "tiers", tiers)

    @classmethod
    def from_ranking(cls, x: Sequence[str]) -> "WeakOrder":
        return cls(tuple(frozenset([c]) for c in x))

    @classmethod
    def parse(cls, text: str) -> "WeakOrder":
        """``"a=b>c"`` gives tiers ``{a, b} > {c}``."""
        tiers = []
        for part in text.split(">"):
            names = [n.strip() for n in part.split("=")]
            if any(not n for n in names):
                raise DomainError(f"malformed weak order {text!r}")
            tiers.append(frozenset(check_name(n) for n in names))
        return cls(tuple(tiers))

    @property
    def candidates(self) -> frozenset[str]:
        return frozenset().union(*self.tiers)

    def is_strict(self) -> bool:
        return all(len(t) == 1 for t in self.tiers)

    def __str__(self):
        return ">".join("=".join(sorted(t)) for t in self.tiers)
