"""Manipulation and control with a target consensus (or winner) as goal.

All searches are exact. Witnesses are the first found in canonical order:
subsets by size and then lexicographically, vote tuples lexicographically.
A returned witness is always a tuple (possibly empty, which means "yes,
nothing to do"); ``None`` means no witness exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations
from math import comb, factorial
from typing import Iterable, Iterator, Literal, Sequence, Union

import numpy as np

from .config import Limits, resolve
from .core import (Election, Ranking, WeakOrder, check_ranking, majority_graph,
                   restrict_ranking)
from .errors import DomainError, SizeLimitExceeded
from .recognition import is_kemeny_consensus, is_slater_consensus, subsets_upto
from .solvers import borda_scores, slater_winners

Rule = Literal["kemeny", "slater"]


@dataclass(frozen=True)
class ManipulationInstance:
    """Nonmanipulative voters, a number of manipulators, and their goal: a
    ranking, a weak order (Borda) or a preferred candidate."""

    base: Election
    manipulators: int
    target: Union[Ranking, WeakOrder, str]


@dataclass(frozen=True)
class ControlInstance:
    election: Election
    limit: int
    target: Ranking
    pool: Election | None = None


def _recognizer(rule: Rule):
    if rule == "kemeny":
        return is_kemeny_consensus
    if rule == "slater":
        return is_slater_consensus
    raise DomainError(f"unknown rule {rule!r}")


def _check_count(n: int, what: str):
    if n < 0:
        raise DomainError(f"{what} must be nonnegative, got {n}")


def _vote_assignments(candidates: tuple[str, ...], k: int, limits: Limits,
                      what: str) -> Iterator[tuple[Ranking, ...]]:
    n = factorial(len(candidates))
    if comb(n + k - 1, k) > limits.max_combinations:
        raise SizeLimitExceeded(
            f"{what}: {comb(n + k - 1, k)} vote assignments exceeds the budget of "
            f"{limits.max_combinations}")
    return combinations_with_replacement(list(permutations(candidates)), k)


# ---------------------------------------------------------------------------
# Manipulation

def kemeny_manipulation_to_consensus(base: Election, manipulators: int, target: Sequence[str],
                                     limits: Limits | None = None) -> tuple[Ranking, ...] | None:
    """Can the manipulators make ``target`` a Kemeny consensus?

    Only one assignment is ever examined: every manipulator votes ``target``.
    If any assignment works this one does, because replacing a manipulator's
    vote by the target can only help the target (a consequence of the
    triangle inequality for Kendall tau; see
    :func:`verify_manipulator_replacement`).
    """
    _check_count(manipulators, "manipulators")
    target = check_ranking(target, base.candidates)
    votes = (target,) * manipulators
    if is_kemeny_consensus(base.with_votes(votes), target, limits):
        return votes
    return None


def _kendall_matrix(perms: np.ndarray) -> np.ndarray:
    """Pairwise Kendall tau between rankings given as position arrays."""
    m = perms.shape[1]
    iu, ju = np.triu_indices(m, 1)
    before = (perms[:, iu] < perms[:, ju]).astype(np.int64)
    return before @ (1 - before).T + (1 - before) @ before.T


def kemeny_manipulation_exhaustive(base: Election, manipulators: int, target: Sequence[str],
                                   limits: Limits | None = None) -> tuple[Ranking, ...] | None:
    """Search every joint manipulator vote for one making ``target`` a Kemeny
    consensus, scoring all ``m!`` rankings directly (no dynamic program).

    Intended as a cross-check of :func:`kemeny_manipulation_to_consensus`.
    """
    limits = resolve(limits)
    _check_count(manipulators, "manipulators")
    target = check_ranking(target, base.candidates)
    if base.m > limits.max_brute_force:
        raise SizeLimitExceeded(
            f"kemeny_manipulation_exhaustive: {base.m} candidates exceeds the limit of "
            f"{limits.max_brute_force}")
    orders = list(permutations(base.candidates))
    pos = np.array([[o.index(c) for c in base.candidates] for o in orders],
                   dtype=np.int64).reshape(len(orders), base.m)
    kt = _kendall_matrix(pos)
    row = {o: i for i, o in enumerate(orders)}
    dist = np.zeros(len(orders), dtype=np.int64)
    for count, vote in base.voters:
        dist += count * kt[:, row[vote]]
    t = row[target]
    for combo in _vote_assignments(base.candidates, manipulators, limits,
                                   "kemeny_manipulation_exhaustive"):
        total = dist + sum((kt[:, row[v]] for v in combo), np.zeros_like(dist))
        if total[t] == total.min():
            return tuple(combo)
    return None


def verify_manipulator_replacement(e: Election, mu: Sequence[str], x: Sequence[str],
                                   limits: Limits | None = None) -> bool:
    """Check that if ``x`` is a Kemeny consensus of ``e + mu`` then it is also
    one of ``e + x``. Expected to hold for every input."""
    mu = check_ranking(mu, e.candidates)
    x = check_ranking(x, e.candidates)
    if not is_kemeny_consensus(e.with_votes([mu]), x, limits):
        return True
    return is_kemeny_consensus(e.with_votes([x]), x, limits)


def _as_weak_order(target, candidates) -> WeakOrder:
    wo = target if isinstance(target, WeakOrder) else WeakOrder.from_ranking(target)
    if wo.candidates != frozenset(candidates):
        raise DomainError("target must cover exactly the election's candidates")
    return wo


def _matches(totals: np.ndarray, tiers: list[np.ndarray]) -> np.ndarray:
    """Rows of ``totals`` whose score order is exactly the tier structure."""
    ok = np.ones(totals.shape[:-1], dtype=bool)
    prev_min = None
    for t in tiers:
        block = totals[..., t]
        lo, hi = block.min(axis=-1), block.max(axis=-1)
        ok &= lo == hi
        if prev_min is not None:
            ok &= prev_min > hi
        prev_min = lo
    return ok


def borda_manipulation_to_consensus(base: Election, manipulators: int,
                                    target: Union[WeakOrder, Sequence[str]],
                                    limits: Limits | None = None) -> tuple[Ranking, ...] | None:
    """Joint manipulator votes making the Borda consensus equal ``target``.

    Exhaustive over all vote assignments; only the summed point vector of the
    manipulators matters, so assignments are grouped by that vector, keeping
    the lexicographically first assignment reaching each one. A strict
    ranking target means singleton tiers.
    """
    limits = resolve(limits)
    _check_count(manipulators, "manipulators")
    wo = _as_weak_order(target, base.candidates)
    cands = base.candidates
    m = len(cands)
    if m > limits.max_borda_candidates or manipulators > limits.max_manipulators:
        raise SizeLimitExceeded(
            f"borda_manipulation_to_consensus: m={m}, manipulators={manipulators} exceeds "
            f"the limits m <= {limits.max_borda_candidates}, "
            f"manipulators <= {limits.max_manipulators}")
    index = {c: i for i, c in enumerate(cands)}
    tiers = [np.array(sorted(index[c] for c in t)) for t in wo.tiers]
    scores = borda_scores(base)
    base_vec = np.array([scores[c] for c in cands], dtype=np.int64)
    if manipulators == 0:
        return () if _matches(base_vec[None, :], tiers)[0] else None

    orders = list(permutations(cands))
    points = np.array([[m - 1 - o.index(c) for c in cands] for o in orders], dtype=np.int64)
    radix = manipulators * (m - 1) + 1
    place = radix ** np.arange(m, dtype=np.int64)
    point_codes = points @ place

    # states: distinct partial sums, ordered by their first witness
    sums = np.zeros((1, m), dtype=np.int64)
    witness = np.zeros((1, 0), dtype=np.int64)
    for _ in range(manipulators - 1):
        codes = ((sums @ place)[:, None] + point_codes[None, :]).ravel()
        _, first = np.unique(codes, return_index=True)
        first.sort()
        src, perm = np.divmod(first, len(orders))
        sums = sums[src] + points[perm]
        witness = np.hstack([witness[src], perm[:, None]])

    chunk = max(1, 2_000_000 // (len(orders) * m))
    for start in range(0, len(sums), chunk):
        totals = base_vec + sums[start:start + chunk, None, :] + points[None, :, :]
        hit = np.flatnonzero(_matches(totals, tiers).ravel())
        if hit.size:
            src, perm = divmod(int(hit[0]), len(orders))
            picks = list(witness[start + src]) + [perm]
            return tuple(sorted(orders[i] for i in picks))
    return None


def slater_manipulation_to_winner(base: Election, manipulators: int, p: str,
                                  limits: Limits | None = None) -> tuple[Ranking, ...] | None:
    """Joint manipulator votes after which ``p`` heads some Slater consensus.

    Candidate weights of ``base`` are honoured. Assignments inducing the same
    majority graph are decided once.
    """
    limits = resolve(limits)
    _check_count(manipulators, "manipulators")
    if p not in base.candidates:
        raise DomainError(f"unknown candidate {p!r}")
    seen: dict[frozenset, bool] = {}
    for combo in _vote_assignments(base.candidates, manipulators, limits,
                                   "slater_manipulation_to_winner"):
        e = base.with_votes(combo)
        key = majority_graph(e).arcs
        if key not in seen:
            seen[key] = p in slater_winners(e, limits=limits)
        if seen[key]:
            return tuple(combo)
    return None


# ---------------------------------------------------------------------------
# Control

def _sub_multisets(groups: Sequence[tuple[int, Ranking]], r: int) -> Iterator[tuple[Ranking, ...]]:
    # groups sorted by ranking; yields sorted tuples in lexicographic order
    def rec(i, r):
        if r == 0:
            yield ()
            return
        if i == len(groups):
            return
        count, vote = groups[i]
        for j in range(min(count, r), -1, -1):
            for rest in rec(i + 1, r - j):
                yield (vote,) * j + rest
    yield from rec(0, r)


def _multisets_upto(groups, k, limits, what) -> Iterator[tuple[Ranking, ...]]:
    n = sum(c for c, _ in groups)
    total = sum(comb(n, r) for r in range(min(k, n) + 1))
    if total > limits.max_combinations:
        raise SizeLimitExceeded(f"{what}: search space exceeds the budget of "
                                f"{limits.max_combinations}")
    for r in range(min(k, n) + 1):
        yield from _sub_multisets(groups, r)


def cdc_to_consensus(e: Election, k: int, target: Sequence[str], rule: Rule = "kemeny",
                     limits: Limits | None = None) -> tuple[str, ...] | None:
    """Candidates ``D``, ``|D| <= k``, such that ``target`` restricted to the
    remaining candidates is a consensus of the restricted election."""
    limits = resolve(limits)
    _check_count(k, "limit")
    target = check_ranking(target, e.candidates)
    recognize = _recognizer(rule)
    for d in subsets_upto(e.candidates, k, limits, "cdc_to_consensus"):
        sub = e.without_candidates(d)
        if recognize(sub, restrict_ranking(target, sub.candidates), limits):
            return d
    return None


def kemeny_cdc_to_consensus(e: Election, k: int, target: Sequence[str],
                            limits: Limits | None = None) -> tuple[str, ...] | None:
    return cdc_to_consensus(e, k, target, "kemeny", limits)


def slater_cdc_to_consensus(e: Election, k: int, target: Sequence[str],
                            limits: Limits | None = None) -> tuple[str, ...] | None:
    return cdc_to_consensus(e, k, target, "slater", limits)


def kemeny_cdv_to_consensus(e: Election, k: int, target: Sequence[str],
                            limits: Limits | None = None) -> tuple[Ranking, ...] | None:
    """Voters to delete (at most ``k``) so that ``target`` becomes a Kemeny
    consensus. The witness lists one entry per deleted voter."""
    limits = resolve(limits)
    _check_count(k, "limit")
    target = check_ranking(target, e.candidates)
    for w in _multisets_upto(e.voters, k, limits, "kemeny_cdv_to_consensus"):
        if is_kemeny_consensus(e.without_votes(w), target, limits):
            return w
    return None


def kemeny_cav_to_consensus(e: Election, pool: Union[Election, Iterable], k: int,
                            target: Sequence[str],
                            limits: Limits | None = None) -> tuple[Ranking, ...] | None:
    """Unregistered voters to add from ``pool`` (at most ``k``; each pool vote
    can be used as often as its multiplicity) so ``target`` becomes a Kemeny
    consensus."""
    limits = resolve(limits)
    _check_count(k, "limit")
    target = check_ranking(target, e.candidates)
    if not isinstance(pool, Election):
        pool = Election(e.candidates, tuple(pool))
    if set(pool.candidates) != set(e.candidates):
        raise DomainError("pool votes must range over the election's candidates")
    for add in _multisets_upto(pool.voters, k, limits, "kemeny_cav_to_consensus"):
        if is_kemeny_consensus(e.with_votes(add), target, limits):
            return add
    return None
