"""Small hand-built elections used by the tests, demos and documentation."""

from __future__ import annotations

from .core import Election


def kemeny_example() -> Election:
    """Three voters over four candidates with a Kemeny optimum of 6 and three
    tied consensuses."""
    return Election("abcd", [("a", "b", "c", "d"), ("c", "a", "d", "b"), ("b", "c", "d", "a")])


def borda_example() -> Election:
    """Five voters where a single manipulator cannot reach ``a>b>c>d`` by
    voting it, but can with ``a>c>d>b``."""
    return Election("abcd", [(2, ("a", "b", "c", "d")), (2, ("b", "a", "c", "d")),
                             (1, ("b", "c", "a", "d"))])


def cdv_example() -> Election:
    """Deleting the voter furthest from ``a>c>b`` does not make it a consensus;
    deleting an ``a>b>c`` voter does."""
    return Election("abc", [(3, ("a", "b", "c")), ("a", "c", "b"), ("c", "b", "a")])


def cav_example() -> tuple[Election, Election]:
    """Registered voters and a pool of two unregistered ones. Adding the pool
    vote closest to ``a>c>b`` fails; adding ``c>b>a`` succeeds."""
    registered = Election("abc", [(2, ("a", "b", "c")), ("a", "c", "b")])
    pool = Election("abc", [("a", "b", "c"), ("c", "b", "a")])
    return registered, pool
