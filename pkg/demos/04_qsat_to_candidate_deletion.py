"""A two-level quantified formula turned into a candidate deletion question.

Run: python3 demos/04_qsat_to_candidate_deletion.py   (about ten seconds)
"""
from pathlib import Path

from consensus_lab.config import Limits
from consensus_lab.formats import parse_qsat2
from consensus_lab.recognition import is_minimum_gnd_prime
from consensus_lab.reductions import qsat2_to_kemeny_cdc, qsat2_truth
from consensus_lab.strategic import kemeny_cdc_to_consensus

DATA = Path(__file__).parent / "data"

q = parse_qsat2((DATA / "one_clause.qsat").read_text())
print("clauses:", q.formula.clauses, "outer:", q.exists_vars, "inner:", q.inner_vars)
print("formula true:", qsat2_truth(q))

chain = qsat2_to_kemeny_cdc(q)
gp = chain.gnd_prime
print(f"\ngraph stage: {len(gp.graph.vertices)} vertices, ell={gp.ell}, "
      f"X={sorted(gp.x)}")
print("X is not a minimum solution:", not is_minimum_gnd_prime(gp.graph, gp.ell, gp.x))

e, k, target = chain.cdc
print(f"\nelection stage: {e.m} candidates, {e.n_voters} voters, k={k}")
print("target:", ">".join(target))
# the election is larger than the default dynamic program bound
w = kemeny_cdc_to_consensus(e, k, target, Limits(max_candidates=24))
print("deleting candidates helps:", w is not None, "" if w is None else f"(delete {w})")
