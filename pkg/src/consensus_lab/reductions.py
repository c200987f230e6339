"""Reduction gadgets and a randomized harness that checks them.

Constructors:

* :func:`vc_to_fas` - vertex cover to feedback arc set (hat graph).
* :func:`election_from_digraph` - the two-voters-per-arc election ``e(G)``
  whose weighted majority graph is ``G`` with every weight 2.
* :func:`fasr_to_kemeny_recognition`, :func:`fasrr_to_kemeny_cdc`.
* :func:`phi_to_phi_prime`.
* :func:`qsat2_to_gnd_prime`, :func:`gnd_to_vcrr`, :func:`vcrr_to_fasrr`,
  :func:`vcrd_to_fasrd`, and the composed :func:`qsat2_to_kemeny_cdc`.

:func:`verify_reduction` samples instances, builds the image, decides both
sides with the exact solvers and reports any disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from .config import Limits, resolve
from .core import (Arc, Digraph, Election, Ranking, UndirectedGraph, _edge,
                   weighted_majority_graph)
from .errors import DomainError, PreconditionError
from .recognition import (fasr_deletion, fasr_restriction,
                          gnd_solvable, is_fas, is_kemeny_consensus,
                          is_minimal_fas, is_minimal_vertex_cover,
                          is_minimum_fas, is_minimum_gnd_prime,
                          is_minimum_vertex_cover, is_vertex_cover,
                          topological_order, vcr_deletion, vcr_restriction)


# ---------------------------------------------------------------------------
# Formulas

@dataclass(frozen=True)
class CnfFormula:
    """CNF over variables ``1..num_vars``; literals are nonzero signed ints."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        clauses = tuple(tuple(int(l) for l in c) for c in self.clauses)
        for c in clauses:
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range 1..{self.num_vars}")
        object.__setattr__(self, "clauses", clauses)

    def satisfied_count(self, assignment: dict[int, bool]) -> int:
        return sum(any(assignment[abs(l)] == (l > 0) for l in c) for c in self.clauses)

    def evaluate(self, assignment: dict[int, bool]) -> bool:
        return self.satisfied_count(assignment) == len(self.clauses)

    def variables(self) -> list[int]:
        return sorted({abs(l) for c in self.clauses for l in c})


def assignments(variables: Sequence[int]):
    for bits in product((False, True), repeat=len(variables)):
        yield dict(zip(variables, bits))


def is_satisfiable(f: CnfFormula) -> bool:
    return any(f.evaluate(a) for a in assignments(range(1, f.num_vars + 1)))


@dataclass(frozen=True)
class QSat2Instance:
    """``exists x . not exists y . formula(x, y)``."""

    formula: CnfFormula
    exists_vars: tuple[int, ...]
    inner_vars: tuple[int, ...]

    def __post_init__(self):
        xs, ys = tuple(self.exists_vars), tuple(self.inner_vars)
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            raise ValueError("variable repeated within a block")
        if set(xs) & set(ys):
            raise ValueError("variable blocks must be disjoint")
        if set(xs) | set(ys) != set(range(1, self.formula.num_vars + 1)):
            raise ValueError("variable blocks must cover exactly 1..num_vars")
        object.__setattr__(self, "exists_vars", xs)
        object.__setattr__(self, "inner_vars", ys)


def qsat2_truth(q: QSat2Instance) -> bool:
    """Nested brute force."""
    for outer in assignments(q.exists_vars):
        if not any(q.formula.evaluate({**outer, **inner})
                   for inner in assignments(q.inner_vars)):
            return True
    return False


def pad_blocks(q: QSat2Instance) -> QSat2Instance:
    """Add unused variables to the smaller block so both blocks have equal
    size. Truth is unchanged since the new variables occur in no clause."""
    xs, ys = list(q.exists_vars), list(q.inner_vars)
    n = q.formula.num_vars
    while len(xs) < len(ys):
        n += 1
        xs.append(n)
    while len(ys) < len(xs):
        n += 1
        ys.append(n)
    return QSat2Instance(CnfFormula(n, q.formula.clauses), tuple(xs), tuple(ys))


def phi_to_phi_prime(phi: CnfFormula) -> CnfFormula:
    """Prefix every clause with ``x1`` and append the unit clause ``not x1``.

    ``phi`` must not use variable 1.
    """
    if any(abs(l) == 1 for c in phi.clauses for l in c):
        raise DomainError("phi must use variables indexed from 2")
    return CnfFormula(max(phi.num_vars, 1),
                      tuple((1,) + c for c in phi.clauses) + ((-1,),))


# ---------------------------------------------------------------------------
# Graph constructions

PRIME = "_p"


def _prime(v: str) -> str:
    return v + PRIME


def hat_graph(g: UndirectedGraph) -> Digraph:
    """Split each vertex ``v`` into ``v -> v'``; each edge ``{v, w}`` becomes
    the arcs ``v' -> w`` and ``w' -> v``."""
    names = set(g.vertices)
    clash = [v for v in g.vertices if _prime(v) in names]
    if clash:
        raise DomainError(f"vertex names clash with their split copies: {clash}")
    arcs = {(v, _prime(v)) for v in g.vertices}
    for v, w in g.edges:
        arcs.add((_prime(v), w))
        arcs.add((_prime(w), v))
    return Digraph(tuple(g.vertices) + tuple(_prime(v) for v in g.vertices), frozenset(arcs))


def hat_arcs(x: Iterable[str]) -> frozenset[Arc]:
    return frozenset((v, _prime(v)) for v in x)


def vc_to_fas(g: UndirectedGraph, x: Iterable[str]) -> tuple[Digraph, frozenset[Arc]]:
    x = set(x)
    if not x <= set(g.vertices):
        raise DomainError("x must be a subset of the vertices")
    return hat_graph(g), hat_arcs(x)


def election_from_digraph(g: Digraph) -> Election:
    """Two voters per arc ``(a, b)``: ``a > b > rest ascending`` and
    ``rest descending > a > b``."""
    votes = []
    for a, b in g.sorted_arcs():
        rest = [v for v in g.vertices if v not in (a, b)]
        votes.append((a, b, *rest))
        votes.append((*reversed(rest), a, b))
    return Election(g.vertices, votes)


@dataclass(frozen=True)
class Rejected:
    """Stand-in image for inputs that fail a reduction's syntactic check.

    ``instance`` is a fixed no-instance of the target problem, so pipelines
    stay total.
    """

    instance: tuple

    def __iter__(self):
        return iter(self.instance)


_REJECT_ELECTION = Election(("a", "b"), [(2, ("a", "b"))])
REJECT_RECOGNITION = Rejected((_REJECT_ELECTION, ("b", "a")))
REJECT_CDC = Rejected((_REJECT_ELECTION, 0, ("b", "a")))


def consistent_order(g: Digraph, x: Iterable[Arc]) -> Ranking:
    """Total order extending ``g - x`` (which must be acyclic); incomparable
    vertices are taken in name order."""
    order = topological_order(g.vertices, g.arcs - frozenset(x))
    if order is None:
        raise PreconditionError("g - x is not acyclic")
    return order


def fasr_to_kemeny_recognition(g: Digraph, x: Iterable[Arc]):
    """``(e(G), order consistent with G - X)`` or :data:`REJECT_RECOGNITION`
    when ``x`` is not a minimal fas."""
    x = frozenset(x)
    if not x <= g.arcs or not is_minimal_fas(g, x):
        return REJECT_RECOGNITION
    return election_from_digraph(g), consistent_order(g, x)


def fasrr_to_kemeny_cdc(g: Digraph, k: int, x: Iterable[Arc]):
    """``(e(G), k, order consistent with G - X)`` or :data:`REJECT_CDC`."""
    x = frozenset(x)
    if not x <= g.arcs or not is_minimal_fas(g, x):
        return REJECT_CDC
    return election_from_digraph(g), k, consistent_order(g, x)


def _fresh(prefix: str, taken: set[str], count: int) -> list[str]:
    out, i = [], 1
    while len(out) < count:
        name = f"{prefix}{i}"
        if name not in taken:
            out.append(name)
        i += 1
    return out


def join_independent(g: UndirectedGraph, count: int) -> tuple[UndirectedGraph, list[str]]:
    """``g`` joined to ``count`` new pairwise non-adjacent vertices."""
    new = _fresh("z", set(g.vertices), count)
    edges = set(g.edges) | {_edge(u, z) for u in g.vertices for z in new}
    return UndirectedGraph(tuple(g.vertices) + tuple(new), frozenset(edges)), new


def gnd_to_vcrr(g: UndirectedGraph, k: int, ell: int) -> tuple[UndirectedGraph, int, tuple[str, ...]]:
    """``(complement(G) joined to ell independent vertices, k, V(G))``."""
    h, _ = join_independent(g.complement(), ell)
    return h, k, tuple(g.vertices)


def vcrr_to_fasrr(g: UndirectedGraph, k: int, x: Iterable[str]) -> tuple[Digraph, int, frozenset[Arc]]:
    x = set(x)
    if not is_minimal_vertex_cover(g, x):
        raise PreconditionError("x is not a minimal vertex cover of g")
    return hat_graph(g), k, hat_arcs(x)


def vcrd_to_fasrd(g: UndirectedGraph, k: int, x: Iterable[str]) -> tuple[Digraph, int, frozenset[Arc]]:
    h, xs = vc_to_fas(g, x)
    return h, k, xs


@dataclass(frozen=True)
class GndPrimeImage:
    graph: UndirectedGraph
    ell: int
    x: tuple[str, ...]
    k: int

    def __iter__(self):
        return iter((self.graph, self.ell, self.x, self.k))


def _triangle_literals(clause: Sequence[int]) -> tuple[int, int, int]:
    if not 1 <= len(clause) <= 3:
        raise DomainError(f"clause {clause} must have 1 to 3 literals")
    lits = list(clause)
    while len(lits) < 3:
        lits.append(lits[-1])
    return tuple(lits)


def qsat2_to_gnd_prime(q: QSat2Instance) -> GndPrimeImage:
    """Graph ``H``, ``ell``, vertex set ``X`` and ``k`` such that ``q`` is true
    exactly when ``X`` is *not* a minimum set whose deletion leaves no
    independent set of size ``ell + 1``.

    Vertex names: ``x<i>``/``nx<i>`` for the existential literals (no edge
    between them), ``y<i>``/``ny<i>`` joined by an edge, clause triangles
    ``a<j>, b<j>, c<j>`` each tied to one literal vertex, and padding sets
    ``I<i>_<t>``, ``J<i>_<t>`` of ``2n + m - 2`` vertices adjacent to
    everything outside themselves and ``{x<i>, nx<i>}``. Clauses shorter than
    three literals repeat their last literal.
    """
    n = len(q.exists_vars)
    if len(q.inner_vars) != n:
        raise DomainError("blocks must have equal size (see pad_blocks)")
    if n == 0:
        raise DomainError("need at least one existential variable")
    m = len(q.formula.clauses)
    triples = [_triangle_literals(c) for c in q.formula.clauses]
    lit_vertex = {}
    for i, v in enumerate(q.exists_vars, 1):
        lit_vertex[v], lit_vertex[-v] = f"x{i}", f"nx{i}"
    for i, v in enumerate(q.inner_vars, 1):
        lit_vertex[v], lit_vertex[-v] = f"y{i}", f"ny{i}"

    core = [f"x{i}" for i in range(1, n + 1)] + [f"nx{i}" for i in range(1, n + 1)]
    core += [f"y{i}" for i in range(1, n + 1)] + [f"ny{i}" for i in range(1, n + 1)]
    edges = {_edge(f"y{i}", f"ny{i}") for i in range(1, n + 1)}
    for j, lits in enumerate(triples, 1):
        tri = [f"a{j}", f"b{j}", f"c{j}"]
        core += tri
        edges |= {_edge(tri[0], tri[1]), _edge(tri[1], tri[2]), _edge(tri[0], tri[2])}
        edges |= {_edge(t, lit_vertex[l]) for t, l in zip(tri, lits)}

    pad = 2 * n + m - 2
    groups = []
    for i in range(1, n + 1):
        for tag in ("I", "J"):
            groups.append((i, [f"{tag}{i}_{t}" for t in range(1, pad + 1)]))
    vertices = core + [v for _, grp in groups for v in grp]
    for i, grp in groups:
        exempt = set(grp) | {f"x{i}", f"nx{i}"}
        for p in grp:
            edges |= {_edge(p, v) for v in vertices if v not in exempt}
    h = UndirectedGraph(tuple(vertices), frozenset(edges))
    x = tuple(sorted([f"x{i}" for i in range(1, n + 1)] + ["nx1"]))
    return GndPrimeImage(h, 2 * n + m - 1, x, n)


@dataclass(frozen=True)
class ChainImage:
    """Every intermediate instance of the QSAT2 to Kemeny-CDC chain."""

    gnd_prime: GndPrimeImage
    gnd: tuple[UndirectedGraph, int, int]
    vcrr: tuple[UndirectedGraph, int, tuple[str, ...]]
    fasrr: tuple[Digraph, int, frozenset[Arc]]
    cdc: tuple


def qsat2_to_kemeny_cdc(q: QSat2Instance) -> ChainImage:
    """QSAT2 -> GND' -> GND -> VC restriction -> FAS restriction -> Kemeny-CDC.

    The GND' image ``(H, ell, X, k)`` is read as the deletion question
    ``(H, k, ell)``: ``X`` is a solution of size ``k + 1``, so it fails to be
    minimum exactly when some set of ``k`` vertices works. Complementing
    ``H`` turns independent sets into cliques.
    """
    gp = qsat2_to_gnd_prime(q)
    gnd = (gp.graph.complement(), gp.k, gp.ell)
    vcrr = gnd_to_vcrr(*gnd)
    fasrr = vcrr_to_fasrr(*vcrr)
    return ChainImage(gp, gnd, vcrr, fasrr, fasrr_to_kemeny_cdc(*fasrr))


# ---------------------------------------------------------------------------
# Random instances

def random_undirected(rng: np.random.Generator, n: int, p: float = 0.5) -> UndirectedGraph:
    names = [f"v{i}" for i in range(n)]
    edges = {(names[i], names[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return UndirectedGraph(tuple(names), frozenset(edges))


def random_digraph(rng: np.random.Generator, n: int, p: float = 0.6) -> Digraph:
    """Each unordered pair gets an arc with probability ``p``, in a random direction."""
    names = [chr(ord("a") + i) if n <= 26 else f"v{i}" for i in range(n)]
    arcs = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                arcs.add((names[i], names[j]) if rng.random() < 0.5 else (names[j], names[i]))
    return Digraph(tuple(names), frozenset(arcs))


def random_minimal_fas(rng: np.random.Generator, g: Digraph) -> frozenset[Arc]:
    """Backward arcs of a random vertex order, pruned to a minimal fas."""
    order = list(rng.permutation(list(g.vertices))) if g.vertices else []
    pos = {v: i for i, v in enumerate(order)}
    x = {a for a in g.arcs if pos[a[0]] > pos[a[1]]}
    for a in sorted(x, key=lambda _: rng.random()):
        if is_fas(g, x - {a}):
            x.discard(a)
    return frozenset(x)


def random_minimal_cover(rng: np.random.Generator, g: UndirectedGraph) -> frozenset[str]:
    x = set(g.vertices)
    for v in rng.permutation(list(g.vertices)) if g.vertices else []:
        if is_vertex_cover(g, x - {v}):
            x.discard(v)
    return frozenset(x)


def random_cnf(rng: np.random.Generator, variables: Sequence[int], m: int,
               max_len: int = 3) -> tuple[tuple[int, ...], ...]:
    clauses = []
    for _ in range(m):
        size = int(rng.integers(1, max_len + 1))
        clauses.append(tuple(int(rng.choice(variables)) * (1 if rng.random() < 0.5 else -1)
                             for _ in range(size)))
    return tuple(clauses)


def random_qsat2(rng: np.random.Generator, n: int, m: int) -> QSat2Instance:
    xs = tuple(range(1, n + 1))
    ys = tuple(range(n + 1, 2 * n + 1))
    return QSat2Instance(CnfFormula(2 * n, random_cnf(rng, xs + ys, m)), xs, ys)


# ---------------------------------------------------------------------------
# Harness

@dataclass
class ReductionReport:
    name: str
    trials: int = 0
    agreements: int = 0
    failures: list[tuple[Any, Any, Any]] = field(default_factory=list)
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, instance, left, right):
        self.trials += 1
        if left == right:
            self.agreements += 1
        else:
            self.failures.append((instance, left, right))

    def to_text(self) -> str:
        lines = [f"reduction: {self.name}", f"seed: {self.seed}", f"trials: {self.trials}",
                 f"agreements: {self.agreements}", f"failures: {len(self.failures)}"]
        for inst, left, right in self.failures:
            lines.append(f"  left={left!r} right={right!r} instance={inst!r}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"name": self.name, "seed": self.seed, "trials": self.trials,
                "agreements": self.agreements,
                "failures": [{"instance": repr(i), "left": repr(l), "right": repr(r)}
                             for i, l, r in self.failures]}


@dataclass(frozen=True)
class _Reduction:
    sample: Callable[[np.random.Generator, int], Any]
    left: Callable[[Any, Limits], Any]
    right: Callable[[Any, Limits], Any]
    default_size: int


def _size(rng, max_size, low=1):
    return int(rng.integers(low, max(low, max_size) + 1))


def _vc_sample(rng, max_size):
    g = random_undirected(rng, _size(rng, max_size))
    x = frozenset(v for v in g.vertices if rng.random() < 0.5)
    return g, x


def _vc_status(inst, limits):
    g, x = inst
    return (is_vertex_cover(g, x), is_minimal_vertex_cover(g, x),
            is_minimum_vertex_cover(g, x, limits))


def _fas_status(inst, limits):
    h, xs = vc_to_fas(*inst)
    return is_fas(h, xs), is_minimal_fas(h, xs), is_minimum_fas(h, xs, limits)


def _digraph_sample(rng, max_size):
    return random_digraph(rng, _size(rng, max_size))


def _wmg_left(g, limits):
    return {a: 2 for a in g.sorted_arcs()}, 2 * len(g.arcs)


def _wmg_right(g, limits):
    e = election_from_digraph(g)
    return dict(weighted_majority_graph(e).arcs), e.n_voters


def _fas_instance_sample(rng, max_size):
    g = _digraph_sample(rng, max_size)
    if rng.random() < 0.7:
        x = random_minimal_fas(rng, g)
    else:
        x = frozenset(a for a in g.arcs if rng.random() < 0.4)
    return g, x


def _kemeny_rec_right(inst, limits):
    e, order = fasr_to_kemeny_recognition(*inst)
    return is_kemeny_consensus(e, order, limits)


def _phi_sample(rng, max_size):
    n = _size(rng, max_size, 2)
    m = int(rng.integers(0, max_size + 1))
    return CnfFormula(n, random_cnf(rng, list(range(2, n + 1)), m)) if n >= 2 \
        else CnfFormula(1, ())


def _phi_left(phi, limits):
    return is_satisfiable(phi)


def _phi_right(phi, limits):
    prime = phi_to_phi_prime(phi)
    m = len(prime.clauses)
    # every assignment with x1 true satisfies exactly m - 1 clauses
    for a in assignments(range(2, prime.num_vars + 1)):
        if prime.satisfied_count({**a, 1: True}) != m - 1:
            return "broken"
    return is_satisfiable(prime)


def _qsat_sample(rng, max_size):
    return random_qsat2(rng, 1, _size(rng, max_size))


def _qsat_right(q, limits):
    g, ell, x, k = qsat2_to_gnd_prime(q)
    return not is_minimum_gnd_prime(g, ell, x, limits)


def _gnd_sample(rng, max_size):
    g = random_undirected(rng, _size(rng, max_size))
    return g, int(rng.integers(0, 3)), int(rng.integers(1, 4))


def _gnd_left(inst, limits):
    g, k, ell = inst
    return gnd_solvable(g, ell, k, limits)


def _vcrr_right(inst, limits):
    return vcr_restriction(*gnd_to_vcrr(*inst), limits) is not None


def _vcrr_sample(rng, max_size):
    g = random_undirected(rng, _size(rng, max_size))
    return g, int(rng.integers(0, 2)), random_minimal_cover(rng, g)


def _vcrr_left(inst, limits):
    return vcr_restriction(*inst, limits) is not None


def _fasrr_right(inst, limits):
    return fasr_restriction(*vcrr_to_fasrr(*inst), limits) is not None


def _vcrd_sample(rng, max_size):
    g = random_undirected(rng, _size(rng, max_size))
    return g, int(rng.integers(0, 3)), frozenset(v for v in g.vertices if rng.random() < 0.5)


def _vcrd_left(inst, limits):
    return vcr_deletion(*inst, limits) is not None


def _fasrd_right(inst, limits):
    return fasr_deletion(*vcrd_to_fasrd(*inst), limits) is not None


def _cdc_sample(rng, max_size):
    g, x = _fas_instance_sample(rng, max_size)
    return g, int(rng.integers(0, 2)), x


def _fasrr_left(inst, limits):
    g, k, x = inst
    if not is_minimal_fas(g, x):
        return False
    return fasr_restriction(g, k, x, limits) is not None


def _cdc_right(inst, limits):
    from .strategic import kemeny_cdc_to_consensus
    e, k, order = fasrr_to_kemeny_cdc(*inst)
    return kemeny_cdc_to_consensus(e, k, order, limits) is not None


def _chain_right(q, limits):
    from .strategic import kemeny_cdc_to_consensus
    e, k, order = qsat2_to_kemeny_cdc(q).cdc
    big = Limits(max_candidates=max(limits.max_candidates, e.m),
                 max_combinations=limits.max_combinations)
    return kemeny_cdc_to_consensus(e, k, order, big) is not None


def _chain_left(q, limits):
    return qsat2_truth(q)


REDUCTIONS: dict[str, _Reduction] = {
    "vc_to_fas": _Reduction(_vc_sample, _vc_status, _fas_status, 5),
    "e_of_g_wmg": _Reduction(_digraph_sample, _wmg_left, _wmg_right, 6),
    "fasr_to_kemeny_recognition": _Reduction(
        _fas_instance_sample, lambda i, l: is_minimum_fas(*i, l), _kemeny_rec_right, 5),
    "phi_to_phi_prime": _Reduction(_phi_sample, _phi_left, _phi_right, 4),
    "qsat2_to_gnd_prime": _Reduction(_qsat_sample, lambda q, l: qsat2_truth(q), _qsat_right, 2),
    "gnd_to_vcrr": _Reduction(_gnd_sample, _gnd_left, _vcrr_right, 4),
    "vcrr_to_fasrr": _Reduction(_vcrr_sample, _vcrr_left, _fasrr_right, 6),
    "vcrd_to_fasrd": _Reduction(_vcrd_sample, _vcrd_left, _fasrd_right, 4),
    "fasrr_to_kemeny_cdc": _Reduction(_cdc_sample, _fasrr_left, _cdc_right, 4),
    "qsat2_to_kemeny_cdc": _Reduction(lambda rng, s: random_qsat2(rng, 1, 1),
                                      _chain_left, _chain_right, 1),
}

ALIASES = {
    "vc2fas": "vc_to_fas",
    "g2election": "e_of_g_wmg",
    "fas2rec": "fasr_to_kemeny_recognition",
    "phi2phiprime": "phi_to_phi_prime",
    "qsat2gnd": "qsat2_to_gnd_prime",
    "gnd2vcrr": "gnd_to_vcrr",
    "vcrr2fasrr": "vcrr_to_fasrr",
    "vcrd2fasrd": "vcrd_to_fasrd",
    "fasrr2cdc": "fasrr_to_kemeny_cdc",
    "chain": "qsat2_to_kemeny_cdc",
}


def verify_reduction(name: str, max_size: int | None = None, trials: int = 100,
                     seed: int = 0, limits: Limits | None = None) -> ReductionReport:
    """Sample ``trials`` instances of at most ``max_size`` (vertices, or
    clauses for formula reductions), and decide each instance and its image
    independently. Trial ``i`` draws from its own stream spawned from
    ``seed``, so reports are reproducible."""
    key = ALIASES.get(name, name)
    if key not in REDUCTIONS:
        raise DomainError(f"unknown reduction {name!r}; known: {', '.join(sorted(REDUCTIONS))}")
    red = REDUCTIONS[key]
    limits = resolve(limits)
    size = red.default_size if max_size is None else max_size
    report = ReductionReport(key, seed=seed)
    for child in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(child)
        inst = red.sample(rng, size)
        report.record(inst, red.left(inst, limits), red.right(inst, limits))
    return report
