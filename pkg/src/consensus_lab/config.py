"""Size limits for the exact searches.

Every exponential routine checks its input against a :class:`Limits`
instance before starting. Callers may pass their own; otherwise
:func:`default_limits` is used, which honours the environment variable
``CONSENSUS_LAB_MAX_CANDIDATES``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_MAX_CANDIDATES = "CONSENSUS_LAB_MAX_CANDIDATES"


@dataclass(frozen=True)
class Limits:
    """Upper bounds for the exact algorithms.

    Attributes:
        max_candidates: largest candidate (or vertex) count handed to the
            subset dynamic program, which is ``O(m 2^m)``.
        max_consensus_set: largest candidate count for which the complete set
            of optimal rankings is enumerated.
        max_brute_force: largest candidate count for the factorial oracle.
        max_weight: cap on unary candidate weights.
        max_combinations: budget on the number of subsets (or vote
            assignments) any single exhaustive search may visit.
        max_borda_candidates, max_manipulators: bounds for the exhaustive
            Borda manipulation search.
    """

    max_candidates: int = 20
    max_consensus_set: int = 10
    max_brute_force: int = 8
    max_weight: int = 10_000
    max_combinations: int = 5_000_000
    max_borda_candidates: int = 7
    max_manipulators: int = 3

    def __post_init__(self):
        for name in ("max_candidates", "max_consensus_set", "max_brute_force",
                     "max_weight", "max_combinations", "max_borda_candidates",
                     "max_manipulators"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def with_candidates(self, n: int) -> "Limits":
        return replace(self, max_candidates=n)


def default_limits() -> Limits:
    raw = os.environ.get(ENV_MAX_CANDIDATES)
    if not raw:
        return Limits()
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_CANDIDATES} must be an integer, got {raw!r}") from None
    return Limits(max_candidates=value)


def resolve(limits: Limits | None) -> Limits:
    return default_limits() if limits is None else limits
