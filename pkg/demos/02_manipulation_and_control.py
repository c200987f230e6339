"""Manipulation and control of Kemeny and Borda outcomes.

Run: python3 demos/02_manipulation_and_control.py
"""
from consensus_lab.instances import (borda_example, cav_example, cdv_example,
                                     kemeny_example)
from consensus_lab.recognition import is_kemeny_consensus
from consensus_lab.solvers import borda_consensus
from consensus_lab.strategic import (borda_manipulation_to_consensus,
                                     kemeny_cav_to_consensus,
                                     kemeny_cdc_to_consensus,
                                     kemeny_cdv_to_consensus,
                                     kemeny_manipulation_exhaustive,
                                     kemeny_manipulation_to_consensus)


def show(r):
    return ">".join(r)


# Kemeny: if any manipulator votes can make x a consensus, then all of them
# voting x works too. Check it against the exhaustive search.
e, x = kemeny_example(), tuple("dcba")
for k in range(4):
    quick = kemeny_manipulation_to_consensus(e, k, x)
    slow = kemeny_manipulation_exhaustive(e, k, x)
    print(f"kemeny, {k} manipulators, target {show(x)}: "
          f"shortcut {quick is not None}, exhaustive {slow is not None}")

# Borda: the naive vote is not enough
b = borda_example()
target = tuple("abcd")
print("\nborda, voting the target gives", borda_consensus(b.with_votes([target])))
w = borda_manipulation_to_consensus(b, 1, target)
print("a working manipulator vote:", show(w[0]), "->", borda_consensus(b.with_votes(w)))

# Deleting voters: removing the vote most opposed to the target does not help
e, target = cdv_example(), tuple("acb")
print("\ndelete c>b>a ->", is_kemeny_consensus(e.without_votes([tuple("cba")]), target))
print("delete a>b>c ->", is_kemeny_consensus(e.without_votes([tuple("abc")]), target))
print("search finds:", [show(v) for v in kemeny_cdv_to_consensus(e, 1, target)])

# Adding voters: adding a vote close to the target does not help
registered, pool = cav_example()
print("\nadd a>b>c ->", is_kemeny_consensus(registered.with_votes([tuple("abc")]), target))
print("add c>b>a ->", is_kemeny_consensus(registered.with_votes([tuple("cba")]), target))
print("search finds:", [show(v) for v in kemeny_cav_to_consensus(registered, pool, 1, target)])

# Deleting candidates
e = kemeny_example()
for k in (1, 2):
    print(f"\ndelete up to {k} candidates so d>c>b>a wins:",
          kemeny_cdc_to_consensus(e, k, tuple("dcba")))
