"""Line-based text formats for elections, graphs, CNF and QSAT2 instances.

Election file::

    # comment
    candidates: a,b,c,d
    weights: a=2,c=3          (optional; omitted candidates weigh 1)
    2: a>b>c>d
    1: c>a>d>b

Graph file::

    vertices: u,v,w
    edge: u,v                 (undirected)   or   arc: u,v   (directed)

CNF files are DIMACS. A QSAT2 file is a DIMACS body preceded by the lines
``e-vars: 1 2`` and ``a-negated-vars: 3 4`` naming the outer existential
block and the negated inner existential block (``1..2`` ranges allowed).

Any of these files may carry extra ``key: value`` directive lines
(``order:``, ``set:``, ``limit:``, ``ell:``, ``target:``...) which
:func:`split_directives` separates out; they let a reduction's output be
fed straight back into the deciders.
"""

from __future__ import annotations

from typing import Iterable, Union

from .core import (Digraph, Election, UndirectedGraph, check_name, format_ranking)
from .errors import DomainError, FormatError
from .reductions import CnfFormula, QSat2Instance

DIRECTIVES = ("order", "set", "limit", "ell", "target", "manipulators", "prefer", "k")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def split_directives(text: str) -> tuple[str, dict[str, str]]:
    """Remove directive lines; return the remaining text and the directives."""
    keep, found = [], {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        key, sep, value = line.partition(":")
        if sep and key.strip() in DIRECTIVES:
            found[key.strip()] = value.strip()
            keep.append("")
        else:
            keep.append(raw)
    return "\n".join(keep), found


def _names(value: str, no: int) -> list[str]:
    names = [n.strip() for n in value.split(",")] if value.strip() else []
    try:
        return [check_name(n) for n in names]
    except DomainError as exc:
        raise FormatError(str(exc), no) from None


def _int(value: str, no: int, what: str) -> int:
    try:
        v = int(value.strip())
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {value.strip()!r}", no) from None
    if v <= 0:
        raise FormatError(f"{what} must be positive, got {v}", no)
    return v


# ---------------------------------------------------------------------------
# Elections

def parse_election(text: str, max_weight: int | None = None) -> Election:
    candidates = None
    weights: dict[str, int] = {}
    groups = []
    for no, line in _lines(text):
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise FormatError(f"expected 'key: value', got {line!r}", no)
        if key == "candidates":
            if candidates is not None:
                raise FormatError("repeated candidates line", no)
            names = _names(value, no)
            dup = sorted({n for n in names if names.count(n) > 1})
            if dup:
                raise FormatError(f"duplicate candidate(s): {', '.join(dup)}", no)
            candidates = names
            continue
        if candidates is None:
            raise FormatError("the first line must be 'candidates: ...'", no)
        if key == "weights":
            for item in (i.strip() for i in value.split(",") if i.strip()):
                name, eq, w = item.partition("=")
                name = name.strip()
                if not eq:
                    raise FormatError(f"weight entry {item!r} is not 'name=weight'", no)
                if name not in candidates:
                    raise FormatError(f"unknown candidate {name!r}", no)
                weights[name] = _int(w, no, f"weight of {name!r}")
                if max_weight is not None and weights[name] > max_weight:
                    raise FormatError(
                        f"weight of {name!r} exceeds the cap of {max_weight}", no)
            continue
        count = _int(key, no, "vote count")
        vote = [n.strip() for n in value.split(">")]
        for n in vote:
            if n not in candidates:
                raise FormatError(f"unknown candidate {n!r}", no)
        if len(vote) != len(candidates) or len(set(vote)) != len(vote):
            raise FormatError("vote must rank every candidate exactly once", no)
        groups.append((count, tuple(vote)))
    if candidates is None:
        raise FormatError("missing 'candidates:' line")
    return Election(tuple(candidates), tuple(groups), weights)


def serialize_election(e: Election) -> str:
    lines = [f"candidates: {','.join(e.candidates)}"]
    if e.weights:
        lines.append("weights: " + ",".join(f"{c}={w}" for c, w in e.weights))
    lines += [f"{count}: {format_ranking(vote)}" for count, vote in e.voters]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Graphs

Graph = Union[Digraph, UndirectedGraph]


def parse_graph(text: str) -> Graph:
    """Parse a graph file. Files with ``arc:`` lines give a :class:`Digraph`;
    anything else (including edgeless files) an :class:`UndirectedGraph`."""
    vertices = None
    pairs: list[tuple[str, str]] = []
    kind = None
    for no, line in _lines(text):
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise FormatError(f"expected 'key: value', got {line!r}", no)
        if key == "vertices":
            if vertices is not None:
                raise FormatError("repeated vertices line", no)
            vertices = _names(value, no)
            continue
        if vertices is None:
            raise FormatError("the first line must be 'vertices: ...'", no)
        if key not in ("edge", "arc"):
            raise FormatError(f"unknown line type {key!r}", no)
        if kind is not None and kind != key:
            raise FormatError("a graph file cannot mix 'edge' and 'arc' lines", no)
        kind = key
        ends = _names(value, no)
        if len(ends) != 2:
            raise FormatError(f"{key} needs exactly two endpoints", no)
        for v in ends:
            if v not in vertices:
                raise FormatError(f"unknown vertex {v!r}", no)
        pairs.append((ends[0], ends[1]))
    if vertices is None:
        raise FormatError("missing 'vertices:' line")
    try:
        if kind == "arc":
            return Digraph(tuple(vertices), frozenset(pairs))
        return UndirectedGraph(tuple(vertices), frozenset(pairs))
    except DomainError as exc:
        raise FormatError(str(exc)) from None


def parse_digraph(text: str) -> Digraph:
    g = parse_graph(text)
    if isinstance(g, UndirectedGraph):
        if g.edges:
            raise FormatError("expected a directed graph ('arc:' lines)")
        return Digraph(g.vertices)
    return g


def parse_undirected_graph(text: str) -> UndirectedGraph:
    g = parse_graph(text)
    if isinstance(g, Digraph):
        raise FormatError("expected an undirected graph ('edge:' lines)")
    return g


def serialize_graph(g: Graph) -> str:
    lines = [f"vertices: {','.join(g.vertices)}"]
    if isinstance(g, Digraph):
        lines += [f"arc: {a},{b}" for a, b in g.sorted_arcs()]
    else:
        lines += [f"edge: {u},{v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# DIMACS CNF and QSAT2

def _parse_var_list(value: str, no: int) -> list[int]:
    out = []
    for tok in value.replace(",", " ").split():
        lo, dots, hi = tok.partition("..")
        try:
            if dots:
                out.extend(range(int(lo.lstrip("xy")), int(hi.lstrip("xy")) + 1))
            else:
                out.append(int(tok))
        except ValueError:
            raise FormatError(f"bad variable token {tok!r}", no) from None
    return out


def parse_cnf(text: str) -> CnfFormula:
    header = None
    lits: list[int] = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError("header must be 'p cnf VARS CLAUSES'", no)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise FormatError("header counts must be integers", no) from None
            continue
        if header is None:
            raise FormatError("clause before 'p cnf' header", no)
        try:
            lits.extend(int(t) for t in line.split())
        except ValueError:
            raise FormatError(f"non-integer literal in {line!r}", no) from None
    if header is None:
        raise FormatError("missing 'p cnf' header")
    clauses, cur = [], []
    for lit in lits:
        if lit == 0:
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(lit)
    if cur:
        clauses.append(tuple(cur))
    if len(clauses) != header[1]:
        raise FormatError(f"header announces {header[1]} clauses, found {len(clauses)}")
    try:
        return CnfFormula(header[0], tuple(clauses))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize_cnf(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"


def parse_qsat2(text: str) -> QSat2Instance:
    blocks: dict[str, list[int]] = {}
    body = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("c "):
            line = line[2:].strip()
        key, sep, value = line.partition(":")
        if sep and key.strip() in ("e-vars", "a-negated-vars"):
            blocks[key.strip()] = _parse_var_list(value, no)
            body.append("")
        else:
            body.append(raw)
    for key in ("e-vars", "a-negated-vars"):
        if key not in blocks:
            raise FormatError(f"missing '{key}:' line")
    formula = parse_cnf("\n".join(body))
    try:
        return QSat2Instance(formula, tuple(blocks["e-vars"]), tuple(blocks["a-negated-vars"]))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize_qsat2(q: QSat2Instance) -> str:
    head = (f"e-vars: {' '.join(map(str, q.exists_vars))}\n"
            f"a-negated-vars: {' '.join(map(str, q.inner_vars))}\n")
    return head + serialize_cnf(q.formula)


def format_names(names: Iterable[str]) -> str:
    return ",".join(names)


def parse_vertex_set(text: str) -> frozenset[str]:
    """``"u,v,w"``; the empty string is the empty set."""
    try:
        return frozenset(check_name(n.strip()) for n in text.split(",") if n.strip())
    except DomainError as exc:
        raise FormatError(str(exc)) from None


def parse_arc_set(text: str) -> frozenset[tuple[str, str]]:
    """``"a>b,c>d"``; the empty string is the empty set."""
    arcs = set()
    for item in (i.strip() for i in text.split(",") if i.strip()):
        ends = [e.strip() for e in item.split(">")]
        if len(ends) != 2:
            raise FormatError(f"arc {item!r} is not of the form 'a>b'")
        try:
            arcs.add((check_name(ends[0]), check_name(ends[1])))
        except DomainError as exc:
            raise FormatError(str(exc)) from None
    return frozenset(arcs)


def format_arc_set(arcs: Iterable[tuple[str, str]]) -> str:
    return ",".join(f"{a}>{b}" for a, b in sorted(arcs))
