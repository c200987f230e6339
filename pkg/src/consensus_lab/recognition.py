"""Deciders for the optimal-solution recognition problems.

Consensus recognition compares a ranking's score to the optimum from the
subset dynamic program. Feedback arc set, vertex cover and generalized node
deletion questions are answered by exhaustive search over subsets in order
of increasing size, with early exit.

Deletion and restriction variants return a witness vertex set (a sorted
tuple, first in canonical order) or ``None``.
"""

from __future__ import annotations

import heapq
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Literal, Sequence

from . import _dp
from .config import Limits, resolve
from .core import (Arc, Digraph, Election, UndirectedGraph, check_ranking,
                   distance_to_election)
from .errors import DomainError, PreconditionError, SizeLimitExceeded
from .solvers import kemeny_score, slater_optimum, slater_score


def is_kemeny_consensus(e: Election, x: Sequence[str], limits: Limits | None = None) -> bool:
    x = check_ranking(x, e.candidates)
    return distance_to_election(x, e) == kemeny_score(e, limits)


def is_slater_consensus(e: Election, x: Sequence[str], limits: Limits | None = None) -> bool:
    x = check_ranking(x, e.candidates)
    return slater_score(x, e) == slater_optimum(e, limits=limits)


# ---------------------------------------------------------------------------
# Shared enumeration helpers

def _budget(n: int, r: int, limits: Limits, what: str):
    if r < 0:
        return
    if comb(n, r) > limits.max_combinations:
        raise SizeLimitExceeded(
            f"{what}: C({n},{r}) = {comb(n, r)} subsets exceeds the budget of "
            f"{limits.max_combinations}")


def subsets_upto(items: Sequence, k: int, limits: Limits, what: str) -> Iterator[tuple]:
    """Subsets of ``items`` with at most ``k`` elements, by size then
    lexicographically (``items`` should already be sorted)."""
    k = min(k, len(items))
    total = sum(comb(len(items), r) for r in range(k + 1))
    if total > limits.max_combinations:
        raise SizeLimitExceeded(
            f"{what}: {total} candidate sets exceeds the budget of {limits.max_combinations}")
    for r in range(k + 1):
        yield from combinations(items, r)


# ---------------------------------------------------------------------------
# Feedback arc sets

def topological_order(vertices: Iterable[str], arcs: Iterable[Arc]) -> tuple[str, ...] | None:
    """Topological order, smallest available name first; ``None`` if cyclic."""
    vertices = list(vertices)
    succ: dict[str, list[str]] = {v: [] for v in vertices}
    indeg = dict.fromkeys(vertices, 0)
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    ready = [v for v in vertices if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    return tuple(order) if len(order) == len(vertices) else None


def _arc_set(g: Digraph, x: Iterable[Arc]) -> frozenset[Arc]:
    x = frozenset(tuple(a) for a in x)
    stray = x - g.arcs
    if stray:
        raise DomainError(f"arcs not in the graph: {sorted(stray)}")
    return x


def is_acyclic(g: Digraph) -> bool:
    return topological_order(g.vertices, g.arcs) is not None


def is_fas(g: Digraph, x: Iterable[Arc]) -> bool:
    x = _arc_set(g, x)
    return topological_order(g.vertices, g.arcs - x) is not None


def is_minimal_fas(g: Digraph, x: Iterable[Arc]) -> bool:
    x = _arc_set(g, x)
    if not is_fas(g, x):
        return False
    return all(not is_fas(g, x - {a}) for a in x)


def minimum_fas_size(g: Digraph, limits: Limits | None = None) -> int:
    """Size of a minimum fas: the fewest backward arcs over all vertex orders."""
    limits = resolve(limits)
    if len(g.vertices) > limits.max_candidates:
        raise SizeLimitExceeded(
            f"minimum_fas_size: {len(g.vertices)} vertices exceeds the limit of "
            f"{limits.max_candidates}")
    return int(_dp.subset_table(g.adjacency())[-1])


def is_minimum_fas(g: Digraph, x: Iterable[Arc], limits: Limits | None = None,
                   method: Literal["auto", "subsets", "ordering"] = "auto") -> bool:
    """Is ``x`` a fas of ``g`` with no smaller fas existing?

    ``"subsets"`` searches all arc sets of size ``|x| - 1`` (supersets of a
    fas are fas, so that size suffices). ``"ordering"`` compares ``|x|`` to
    :func:`minimum_fas_size`. ``"auto"`` uses subsets while within budget.
    """
    limits = resolve(limits)
    x = _arc_set(g, x)
    if not is_fas(g, x):
        return False
    if not x:
        return True
    arcs = g.sorted_arcs()
    if method == "auto":
        method = "subsets" if comb(len(arcs), len(x) - 1) <= limits.max_combinations else "ordering"
    if method == "ordering":
        return minimum_fas_size(g, limits) == len(x)
    _budget(len(arcs), len(x) - 1, limits, "is_minimum_fas")
    return not any(is_fas(g, y) for y in combinations(arcs, len(x) - 1))


# ---------------------------------------------------------------------------
# Vertex covers

def _vertex_set(g, x: Iterable[str]) -> frozenset[str]:
    x = frozenset(x)
    stray = x - set(g.vertices)
    if stray:
        raise DomainError(f"vertices not in the graph: {sorted(stray)}")
    return x


def is_vertex_cover(g: UndirectedGraph, x: Iterable[str]) -> bool:
    x = _vertex_set(g, x)
    return all(u in x or v in x for u, v in g.edges)


def is_minimal_vertex_cover(g: UndirectedGraph, x: Iterable[str]) -> bool:
    x = _vertex_set(g, x)
    return is_vertex_cover(g, x) and all(not is_vertex_cover(g, x - {v}) for v in x)


def is_minimum_vertex_cover(g: UndirectedGraph, x: Iterable[str],
                            limits: Limits | None = None) -> bool:
    limits = resolve(limits)
    x = _vertex_set(g, x)
    if not is_vertex_cover(g, x):
        return False
    if not x:
        return True
    _budget(len(g.vertices), len(x) - 1, limits, "is_minimum_vertex_cover")
    return not any(is_vertex_cover(g, y) for y in combinations(g.vertices, len(x) - 1))


# ---------------------------------------------------------------------------
# Generalized node deletion

def _has_clique(nb: dict[str, set[str]], cand: set[str], size: int) -> bool:
    if size <= 0:
        return True
    if len(cand) < size:
        return False
    for v in sorted(cand):
        if _has_clique(nb, cand & nb[v], size - 1):
            return True
        cand = cand - {v}
        if len(cand) < size:
            return False
    return False


def has_clique(g: UndirectedGraph, size: int) -> bool:
    return _has_clique(g.neighbors(), set(g.vertices), size)


def has_independent_set(g: UndirectedGraph, size: int) -> bool:
    vs = set(g.vertices)
    nb = {v: vs - {v} - n for v, n in g.neighbors().items()}
    return _has_clique(nb, vs, size)


def _kills(g: UndirectedGraph, ell: int, independent: bool):
    test = has_independent_set if independent else has_clique
    return lambda w: not test(g.remove_vertices(w), ell + 1)


def gnd_witness(g: UndirectedGraph, ell: int, k: int, independent: bool = False,
                limits: Limits | None = None) -> tuple[str, ...] | None:
    """Smallest-first vertex set ``W`` with ``|W| <= k`` such that ``g - W``
    has no clique (independent set, if ``independent``) of size ``ell + 1``."""
    limits = resolve(limits)
    kills = _kills(g, ell, independent)
    for w in subsets_upto(g.vertices, k, limits, "gnd_witness"):
        if kills(w):
            return w
    return None


def gnd_solvable(g: UndirectedGraph, ell: int, k: int, limits: Limits | None = None) -> bool:
    return gnd_witness(g, ell, k, False, limits) is not None


def gnd_prime_solvable(g: UndirectedGraph, ell: int, k: int,
                       limits: Limits | None = None) -> bool:
    return gnd_witness(g, ell, k, True, limits) is not None


def _is_minimum_gnd(g, ell, x, independent, limits):
    limits = resolve(limits)
    x = _vertex_set(g, x)
    if not _kills(g, ell, independent)(x):
        return False
    if not x:
        return True
    # deleting more vertices never creates a clique, so size |x| - 1 suffices
    _budget(len(g.vertices), len(x) - 1, limits, "is_minimum_gnd")
    kills = _kills(g, ell, independent)
    return not any(kills(w) for w in combinations(g.vertices, len(x) - 1))


def is_minimum_gnd(g: UndirectedGraph, ell: int, x: Iterable[str],
                   limits: Limits | None = None) -> bool:
    """Is ``x`` a smallest vertex set whose removal leaves no ``K_{ell+1}``?"""
    return _is_minimum_gnd(g, ell, x, False, limits)


def is_minimum_gnd_prime(g: UndirectedGraph, ell: int, x: Iterable[str],
                         limits: Limits | None = None) -> bool:
    """Independent-set form: no independent set of size ``ell + 1`` may remain."""
    return _is_minimum_gnd(g, ell, x, True, limits)


# ---------------------------------------------------------------------------
# Deletion and restriction variants

def vcr_deletion(g: UndirectedGraph, k: int, x: Iterable[str],
                 limits: Limits | None = None) -> tuple[str, ...] | None:
    """``W`` with ``|W| <= k`` such that ``x`` is a minimum vertex cover of
    ``g - W``. ``W`` necessarily avoids ``x``."""
    limits = resolve(limits)
    x = _vertex_set(g, x)
    pool = [v for v in g.vertices if v not in x]
    for w in subsets_upto(pool, k, limits, "vcr_deletion"):
        if is_minimum_vertex_cover(g.remove_vertices(w), x, limits):
            return w
    return None


def fasr_deletion(g: Digraph, k: int, x: Iterable[Arc],
                  limits: Limits | None = None) -> tuple[str, ...] | None:
    """``W`` with ``|W| <= k`` such that ``x`` is a minimum fas of ``g - W``.

    Deleting an endpoint of an arc of ``x`` would remove that arc from the
    graph, so ``W`` ranges over vertices not touched by ``x``.
    """
    limits = resolve(limits)
    x = _arc_set(g, x)
    ends = {v for a in x for v in a}
    pool = [v for v in g.vertices if v not in ends]
    for w in subsets_upto(pool, k, limits, "fasr_deletion"):
        if is_minimum_fas(g.remove_vertices(w), x, limits):
            return w
    return None


def vcr_restriction(g: UndirectedGraph, k: int, x: Iterable[str],
                    limits: Limits | None = None) -> tuple[str, ...] | None:
    """``W`` with ``|W| <= k`` such that ``x - W`` is a minimum vertex cover of
    ``g - W``. Raises :class:`PreconditionError` unless ``x`` is a minimal
    cover of ``g``."""
    limits = resolve(limits)
    x = _vertex_set(g, x)
    if not is_minimal_vertex_cover(g, x):
        raise PreconditionError("x is not a minimal vertex cover of g")
    for w in subsets_upto(g.vertices, k, limits, "vcr_restriction"):
        if is_minimum_vertex_cover(g.remove_vertices(w), x - set(w), limits):
            return w
    return None


def fasr_restriction(g: Digraph, k: int, x: Iterable[Arc],
                     limits: Limits | None = None) -> tuple[str, ...] | None:
    """``W`` with ``|W| <= k`` such that the arcs of ``x`` surviving in
    ``g - W`` form a minimum fas of ``g - W``. Raises
    :class:`PreconditionError` unless ``x`` is a minimal fas of ``g``."""
    limits = resolve(limits)
    x = _arc_set(g, x)
    if not is_minimal_fas(g, x):
        raise PreconditionError("x is not a minimal fas of g")
    for w in subsets_upto(g.vertices, k, limits, "fasr_restriction"):
        ws = set(w)
        kept = {a for a in x if a[0] not in ws and a[1] not in ws}
        if is_minimum_fas(g.remove_vertices(w), kept, limits):
            return w
    return None
