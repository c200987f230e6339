"""Command-line entry point.

::

    consensus-lab consensus {kemeny|slater|borda} FILE [--all] [--json]
    consensus-lab recognize KIND FILE [--order R] [--set S] [--ell L] [--limit K]
    consensus-lab manipulate {kemeny|borda|slater-winner} FILE --manipulators K
                             (--target T | --prefer P)
    consensus-lab control {cdc|cdv|cav} FILE --limit K --target T [--pool FILE]
                          [--rule {kemeny|slater}]
    consensus-lab reduce NAME IN [-o OUT] [--pad]
    consensus-lab verify NAME [--max-size N] [--trials T] [--seed S]

Options missing from the command line are read from directive lines in the
input file (``order:``, ``set:``, ``limit:``, ``ell:``, ``target:``,
``manipulators:``, ``prefer:``), so the output of ``reduce`` can be handed
straight to the matching decider.

Exit codes: 0 yes, 1 no (or a failed verification), 2 input error, 3 size
limit exceeded, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, TextIO

from . import formats, recognition, reductions, solvers, strategic
from .config import Limits, default_limits
from .core import (Election, WeakOrder, distance_to_election, format_ranking,
                   parse_ranking)
from .errors import (ConsensusLabError, DomainError, FormatError,
                     PreconditionError, SizeLimitExceeded)

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_LIMIT, EXIT_INTERNAL = 0, 1, 2, 3, 4
MAX_SEED = 2 ** 64 - 1


class InvariantBreach(ConsensusLabError):
    """A computed result failed a consistency check."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    options: dict[str, Any]
    limits: Limits
    seed: int = 0
    output: str = "text"

    def __post_init__(self):
        if not 0 <= self.seed <= MAX_SEED:
            raise DomainError(f"seed must lie in [0, 2**64 - 1], got {self.seed}")
        if self.output not in ("text", "json"):
            raise DomainError(f"unknown output mode {self.output!r}")


@dataclass
class Outcome:
    code: int
    lines: list[str] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    def render(self, mode: str) -> str:
        if mode == "json":
            return json.dumps(self.data, sort_keys=True, indent=2) + "\n"
        return "".join(line + "\n" for line in self.lines)


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


# ---------------------------------------------------------------------------
# Input helpers

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


class _Input:
    """File text with directives split off, plus command-line overrides."""

    def __init__(self, path: str, opts: dict[str, Any]):
        self.body, self.directives = formats.split_directives(_read(path))
        self.opts = opts

    def get(self, key: str, *aliases: str, required: bool = True) -> str | None:
        value = self.opts.get(key)
        if value is not None:
            return str(value)
        for k in (key, *aliases):
            if k in self.directives:
                return self.directives[k]
        if required:
            raise DomainError(f"missing --{key} (and no '{key}:' line in the input)")
        return None

    def get_int(self, key: str, *aliases: str, required: bool = True) -> int | None:
        raw = self.get(key, *aliases, required=required)
        if raw is None:
            return None
        try:
            value = int(raw)
        except ValueError:
            raise DomainError(f"{key} must be an integer, got {raw!r}") from None
        if value < 0:
            raise DomainError(f"{key} must be nonnegative, got {value}")
        return value

    def election(self, limits: Limits) -> Election:
        return formats.parse_election(self.body, limits.max_weight)


def _directive_lines(**items) -> str:
    return "".join(f"{k}: {v}\n" for k, v in items.items())


# ---------------------------------------------------------------------------
# consensus

def _check_members(e: Election, result: solvers.ConsensusResult, rule: str):
    for x in result.consensuses:
        score = distance_to_election(x, e) if rule == "kemeny" else solvers.slater_score(x, e)
        if score != result.optimum:
            raise InvariantBreach(f"{format_ranking(x)} scores {score}, not {result.optimum}")
    if e.candidates and not result.consensuses:
        raise InvariantBreach("empty consensus set")


def cmd_consensus(cfg: RunConfig) -> Outcome:
    o = cfg.options
    src = _Input(o["file"], o)
    e = src.election(cfg.limits)
    rule = o["rule"]
    if rule == "borda":
        scores = solvers.borda_scores(e)
        wo = solvers.borda_consensus(e)
        lines = [f"{c}: {scores[c]}" for c in e.candidates] + [f"consensus: {wo}"]
        return Outcome(EXIT_YES, lines, {"rule": rule, "scores": scores, "consensus": str(wo)})
    complete = o["all"] or e.m <= cfg.limits.max_consensus_set
    if complete:
        if rule == "kemeny":
            result = solvers.kemeny_consensus_set(e, cfg.limits)
        else:
            result = solvers.slater_consensus_set(e, limits=cfg.limits)
    else:
        best, witness = solvers.consensus_witness(e, rule, cfg.limits)
        result = solvers.ConsensusResult(best, (witness,))
    _check_members(e, result, rule)
    lines = result.to_text().splitlines()
    if not complete:
        lines.insert(1, "# first consensus only; use --all for the complete set")
    data = {"rule": rule, "complete": complete, **result.to_dict()}
    data["consensuses"] = [format_ranking(x) for x in result.consensuses]
    return Outcome(EXIT_YES, lines, data)


# ---------------------------------------------------------------------------
# recognize

def _witness_outcome(w, data: dict) -> Outcome:
    data = {**data, "answer": w is not None,
            "witness": None if w is None else list(w)}
    lines = [f"answer: {_yes_no(w is not None)}"]
    if w is not None:
        lines.append(f"witness: {formats.format_names(w)}")
    return Outcome(EXIT_YES if w is not None else EXIT_NO, lines, data)


def cmd_recognize(cfg: RunConfig) -> Outcome:
    o = cfg.options
    kind = o["kind"]
    src = _Input(o["file"], o)
    lim = cfg.limits
    data: dict[str, Any] = {"kind": kind}

    if kind in ("kemeny", "slater"):
        e = src.election(lim)
        x = parse_ranking(src.get("order"))
        if kind == "kemeny":
            score, best = distance_to_election(x, e), solvers.kemeny_score(e, lim)
            ok = recognition.is_kemeny_consensus(e, x, lim)
        else:
            score, best = solvers.slater_score(x, e), solvers.slater_optimum(e, limits=lim)
            ok = recognition.is_slater_consensus(e, x, lim)
        data.update(order=format_ranking(x), score=score, optimum=best, answer=ok)
        lines = [f"consensus: {_yes_no(ok)}", f"score: {score}", f"optimum: {best}"]
        return Outcome(EXIT_YES if ok else EXIT_NO, lines, data)

    if kind in ("min-fas", "minimal-fas"):
        g = formats.parse_digraph(src.body)
        x = formats.parse_arc_set(src.get("set"))
        status = {"fas": recognition.is_fas(g, x),
                  "minimal": recognition.is_minimal_fas(g, x),
                  "minimum": recognition.is_minimum_fas(g, x, lim)}
        return _status_outcome(status, "minimum" if kind == "min-fas" else "minimal", data)

    if kind in ("min-vc", "minimal-vc"):
        g = formats.parse_undirected_graph(src.body)
        x = formats.parse_vertex_set(src.get("set"))
        status = {"cover": recognition.is_vertex_cover(g, x),
                  "minimal": recognition.is_minimal_vertex_cover(g, x),
                  "minimum": recognition.is_minimum_vertex_cover(g, x, lim)}
        return _status_outcome(status, "minimum" if kind == "min-vc" else "minimal", data)

    if kind in ("min-gnd", "min-gnd-prime"):
        g = formats.parse_undirected_graph(src.body)
        x = formats.parse_vertex_set(src.get("set"))
        ell = src.get_int("ell")
        test = recognition.is_minimum_gnd if kind == "min-gnd" else recognition.is_minimum_gnd_prime
        ok = test(g, ell, x, lim)
        data.update(ell=ell, answer=ok)
        return Outcome(EXIT_YES if ok else EXIT_NO, [f"minimum: {_yes_no(ok)}"], data)

    if kind in ("gnd", "gnd-prime"):
        g = formats.parse_undirected_graph(src.body)
        ell, k = src.get_int("ell"), src.get_int("limit", "k")
        w = recognition.gnd_witness(g, ell, k, kind == "gnd-prime", lim)
        return _witness_outcome(w, {**data, "ell": ell, "limit": k})

    k = src.get_int("limit", "k")
    raw = src.get("set")
    if kind in ("vc-deletion", "vc-restriction"):
        g = formats.parse_undirected_graph(src.body)
        x = formats.parse_vertex_set(raw)
        fn = recognition.vcr_deletion if kind == "vc-deletion" else recognition.vcr_restriction
    else:
        g = formats.parse_digraph(src.body)
        x = formats.parse_arc_set(raw)
        fn = recognition.fasr_deletion if kind == "fas-deletion" else recognition.fasr_restriction
    return _witness_outcome(fn(g, k, x, lim), {**data, "limit": k})


def _status_outcome(status: dict[str, bool], key: str, data: dict) -> Outcome:
    lines = [f"{name}: {_yes_no(v)}" for name, v in status.items()]
    data = {**data, **status, "answer": status[key]}
    return Outcome(EXIT_YES if status[key] else EXIT_NO, lines, data)


RECOGNIZE_KINDS = ("kemeny", "slater", "min-fas", "minimal-fas", "min-vc", "minimal-vc",
                   "min-gnd", "min-gnd-prime", "gnd", "gnd-prime", "vc-deletion",
                   "vc-restriction", "fas-deletion", "fas-restriction")


# ---------------------------------------------------------------------------
# manipulate / control

def _votes_outcome(votes, label: str, data: dict) -> Outcome:
    ok = votes is not None
    data = {**data, "answer": ok,
            label: None if votes is None else [format_ranking(v) for v in votes]}
    lines = [f"answer: {_yes_no(ok)}"]
    if ok:
        lines += [f"{label}: {format_ranking(v)}" for v in votes]
    return Outcome(EXIT_YES if ok else EXIT_NO, lines, data)


def cmd_manipulate(cfg: RunConfig) -> Outcome:
    o = cfg.options
    src = _Input(o["file"], o)
    e = src.election(cfg.limits)
    k = src.get_int("manipulators")
    rule = o["rule"]
    data: dict[str, Any] = {"rule": rule, "manipulators": k}
    if rule == "slater-winner":
        p = src.get("prefer").strip()
        data["prefer"] = p
        votes = strategic.slater_manipulation_to_winner(e, k, p, cfg.limits)
    elif rule == "borda":
        target = WeakOrder.parse(src.get("target"))
        data["target"] = str(target)
        votes = strategic.borda_manipulation_to_consensus(e, k, target, cfg.limits)
    else:
        target = parse_ranking(src.get("target"))
        data["target"] = format_ranking(target)
        votes = strategic.kemeny_manipulation_to_consensus(e, k, target, cfg.limits)
    return _votes_outcome(votes, "vote", data)


def cmd_control(cfg: RunConfig) -> Outcome:
    o = cfg.options
    src = _Input(o["file"], o)
    e = src.election(cfg.limits)
    k = src.get_int("limit", "k")
    target = parse_ranking(src.get("target"))
    action = o["action"]
    data: dict[str, Any] = {"action": action, "limit": k, "target": format_ranking(target)}
    if action == "cdc":
        rule = o["rule"] or "kemeny"
        data["rule"] = rule
        w = strategic.cdc_to_consensus(e, k, target, rule, cfg.limits)
        return _witness_outcome(w, data)
    if o.get("rule") not in (None, "kemeny"):
        raise DomainError(f"{action} is only available for the kemeny rule")
    if action == "cdv":
        return _votes_outcome(strategic.kemeny_cdv_to_consensus(e, k, target, cfg.limits),
                              "delete", data)
    if not o.get("pool"):
        raise DomainError("cav needs --pool FILE")
    pool = formats.parse_election(formats.split_directives(_read(o["pool"]))[0],
                                  cfg.limits.max_weight)
    return _votes_outcome(strategic.kemeny_cav_to_consensus(e, pool, k, target, cfg.limits),
                          "add", data)


# ---------------------------------------------------------------------------
# reduce

def _reject_note(kind: str) -> str:
    return f"# rejected: the input set is not a minimal {kind}; fixed no-instance follows\n"


def _reduce_text(name: str, src: _Input, pad: bool) -> str:
    if name == "vc2fas":
        g = formats.parse_undirected_graph(src.body)
        h, xs = reductions.vc_to_fas(g, formats.parse_vertex_set(src.get("set")))
        return formats.serialize_graph(h) + _directive_lines(set=formats.format_arc_set(xs))
    if name == "g2election":
        return formats.serialize_election(
            reductions.election_from_digraph(formats.parse_digraph(src.body)))
    if name == "fas2rec":
        g = formats.parse_digraph(src.body)
        image = reductions.fasr_to_kemeny_recognition(g, formats.parse_arc_set(src.get("set")))
        e, order = image
        head = _reject_note("fas") if isinstance(image, reductions.Rejected) else ""
        return head + formats.serialize_election(e) + _directive_lines(order=format_ranking(order))
    if name == "phi2phiprime":
        return formats.serialize_cnf(reductions.phi_to_phi_prime(formats.parse_cnf(src.body)))
    if name == "qsat2gnd":
        q = formats.parse_qsat2(src.body)
        if pad:
            q = reductions.pad_blocks(q)
        img = reductions.qsat2_to_gnd_prime(q)
        return formats.serialize_graph(img.graph) + _directive_lines(
            ell=img.ell, set=formats.format_names(img.x), limit=img.k)
    if name == "gnd2vcrr":
        g = formats.parse_undirected_graph(src.body)
        h, k, x = reductions.gnd_to_vcrr(g, src.get_int("limit", "k"), src.get_int("ell"))
        return formats.serialize_graph(h) + _directive_lines(
            limit=k, set=formats.format_names(sorted(x)))
    if name in ("vcrr2fasrr", "vcrd2fasrd"):
        g = formats.parse_undirected_graph(src.body)
        fn = reductions.vcrr_to_fasrr if name == "vcrr2fasrr" else reductions.vcrd_to_fasrd
        h, k, xs = fn(g, src.get_int("limit", "k"), formats.parse_vertex_set(src.get("set")))
        return formats.serialize_graph(h) + _directive_lines(
            limit=k, set=formats.format_arc_set(xs))
    if name == "fasrr2cdc":
        g = formats.parse_digraph(src.body)
        image = reductions.fasrr_to_kemeny_cdc(g, src.get_int("limit", "k"),
                                               formats.parse_arc_set(src.get("set")))
        e, k, order = image
        head = _reject_note("fas") if isinstance(image, reductions.Rejected) else ""
        return head + formats.serialize_election(e) + _directive_lines(
            limit=k, target=format_ranking(order))
    raise DomainError(f"unknown reduction {name!r}")


REDUCE_NAMES = ("vc2fas", "g2election", "fas2rec", "phi2phiprime", "qsat2gnd", "gnd2vcrr",
                "vcrr2fasrr", "vcrd2fasrd", "fasrr2cdc")


def cmd_reduce(cfg: RunConfig) -> Outcome:
    o = cfg.options
    text = _reduce_text(o["name"], _Input(o["input"], o), o["pad"])
    if o.get("output_file"):
        with open(o["output_file"], "w", encoding="utf-8") as fh:
            fh.write(text)
        lines = [f"wrote {o['output_file']}"]
    else:
        lines = text.splitlines()
    return Outcome(EXIT_YES, lines, {"name": o["name"], "output": text})


# ---------------------------------------------------------------------------
# verify

def cmd_verify(cfg: RunConfig) -> Outcome:
    o = cfg.options
    if o["trials"] < 0:
        raise DomainError("trials must be nonnegative")
    report = reductions.verify_reduction(o["name"], o["max_size"], o["trials"], cfg.seed,
                                         cfg.limits)
    return Outcome(EXIT_YES if report.ok else EXIT_NO, report.to_text().splitlines(),
                   report.to_dict())


COMMANDS: dict[str, Callable[[RunConfig], Outcome]] = {
    "consensus": cmd_consensus,
    "recognize": cmd_recognize,
    "manipulate": cmd_manipulate,
    "control": cmd_control,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
}


# ---------------------------------------------------------------------------
# Parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--max-candidates", type=int, default=None,
                        help="size limit for the subset dynamic program "
                             "(default from CONSENSUS_LAB_MAX_CANDIDATES, else 20)")

    p = argparse.ArgumentParser(prog="consensus-lab",
                                description="Exact consensus rankings, recognition, "
                                            "manipulation, control and reductions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("consensus", parents=[common], help="compute a consensus")
    s.add_argument("rule", choices=("kemeny", "slater", "borda"))
    s.add_argument("file")
    s.add_argument("--all", action="store_true",
                   help="require the complete consensus set (fails above the set limit)")

    s = sub.add_parser("recognize", parents=[common], help="decide a recognition problem")
    s.add_argument("kind", choices=RECOGNIZE_KINDS)
    s.add_argument("file")
    s.add_argument("--order", help="ranking such as 'a>b>c'")
    s.add_argument("--set", help="vertices 'u,v' or arcs 'a>b,c>d'")
    s.add_argument("--ell", type=int)
    s.add_argument("--limit", type=int, help="deletion limit k")

    s = sub.add_parser("manipulate", parents=[common], help="manipulation to a goal")
    s.add_argument("rule", choices=("kemeny", "borda", "slater-winner"))
    s.add_argument("file")
    s.add_argument("--manipulators", type=int)
    s.add_argument("--target", help="ranking, or for borda a weak order like 'a=b>c'")
    s.add_argument("--prefer", help="candidate to make a Slater winner")

    s = sub.add_parser("control", parents=[common], help="control to a target consensus")
    s.add_argument("action", choices=("cdc", "cdv", "cav"))
    s.add_argument("file")
    s.add_argument("--limit", type=int)
    s.add_argument("--target")
    s.add_argument("--pool", help="election file with the unregistered votes (cav)")
    s.add_argument("--rule", choices=("kemeny", "slater"), default=None)

    s = sub.add_parser("reduce", parents=[common], help="apply a reduction")
    s.add_argument("name", choices=REDUCE_NAMES)
    s.add_argument("input")
    s.add_argument("-o", "--output", dest="output_file")
    s.add_argument("--pad", action="store_true",
                   help="qsat2gnd: pad the smaller variable block with unused variables")
    s.add_argument("--set")
    s.add_argument("--limit", type=int)
    s.add_argument("--ell", type=int)

    s = sub.add_parser("verify", parents=[common], help="randomized check of a reduction")
    s.add_argument("name", help="reduction name, e.g. vc_to_fas or vc2fas")
    s.add_argument("--max-size", type=int, default=None)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    return p


def _config(ns: argparse.Namespace) -> RunConfig:
    limits = default_limits()
    if ns.max_candidates is not None:
        limits = limits.with_candidates(ns.max_candidates)
    opts = {k: v for k, v in vars(ns).items()
            if k not in ("command", "json", "max_candidates", "seed")}
    return RunConfig(ns.command, opts, limits, getattr(ns, "seed", 0),
                     "json" if ns.json else "text")


def run(argv: list[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_YES
    try:
        cfg = _config(ns)
        outcome = COMMANDS[cfg.command](cfg)
    except SizeLimitExceeded as exc:
        print(f"size limit: {exc}", file=err)
        return EXIT_LIMIT
    except InvariantBreach as exc:
        print(f"internal invariant breach: {exc}", file=err)
        return EXIT_INTERNAL
    except (FormatError, DomainError, PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001 - last-resort classification
        print(f"internal error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INTERNAL
    out.write(outcome.render(cfg.output))
    return outcome.code


def main() -> None:
    sys.exit(run())
