"""Kemeny, Slater and Borda consensus on a small election.

Run: python3 demos/01_consensus_rankings.py
"""
from pathlib import Path

from consensus_lab.core import kendall_tau
from consensus_lab.formats import parse_election
from consensus_lab.solvers import (borda_consensus, borda_scores,
                                   brute_force_consensus_set,
                                   kemeny_consensus_set, slater_consensus_set)

DATA = Path(__file__).parent / "data"

e = parse_election((DATA / "three_voters.elec").read_text())
print("votes:")
for v in e.votes():
    print("  " + ">".join(v))

res = kemeny_consensus_set(e)
print(f"\nKemeny optimum {res.optimum}, {len(res.consensuses)} consensus rankings")
for c in res.consensuses:
    dists = [kendall_tau(c, v) for v in e.votes()]
    print(f"  {'>'.join(c)}  distances {dists}")

# the dynamic program and plain enumeration must agree
assert res == brute_force_consensus_set(e, "kemeny")

# the majority graph here is a 3-cycle on a,b,c with d beaten by all
sl = slater_consensus_set(e)
print(f"\nSlater optimum {sl.optimum}: " + ", ".join(">".join(c) for c in sl.consensuses))

print("\nBorda scores:", borda_scores(e))
print("Borda consensus:", borda_consensus(e))
