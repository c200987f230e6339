"""From vertex covers to feedback arc sets to Kemeny recognition.

Run: python3 demos/03_feedback_arc_sets.py
"""
from consensus_lab.core import Digraph, UndirectedGraph, weighted_majority_graph
from consensus_lab.recognition import (is_kemeny_consensus, is_minimal_fas,
                                       is_minimum_fas, is_minimum_vertex_cover)
from consensus_lab.reductions import (election_from_digraph,
                                      fasr_to_kemeny_recognition,
                                      verify_reduction, vc_to_fas)

# a path u - v - w; {v} is a minimum cover, {u, w} only a minimal one
path = UndirectedGraph(("u", "v", "w"), frozenset({("u", "v"), ("v", "w")}))
for cover in ({"v"}, {"u", "w"}):
    h, arcs = vc_to_fas(path, cover)
    print(f"cover {sorted(cover)}: minimum cover {is_minimum_vertex_cover(path, cover)}, "
          f"image is minimum fas {is_minimum_fas(h, arcs)} "
          f"({len(h.vertices)} vertices, {len(h.arcs)} arcs)")

# a digraph becomes an election whose majority graph is the digraph, margin 2
g = Digraph(tuple("abcd"), frozenset({("a", "b"), ("b", "c"), ("c", "a"),
                                      ("c", "d"), ("d", "a")}))
e = election_from_digraph(g)
print(f"\n{e.n_voters} voters; majority graph margins:", weighted_majority_graph(e).arcs)

for x in ({("a", "b")}, {("c", "a"), ("d", "a")}):
    if not is_minimal_fas(g, x):
        continue
    _, order = fasr_to_kemeny_recognition(g, x)
    print(f"fas {sorted(x)}: minimum {is_minimum_fas(g, x)}, "
          f"order {'>'.join(order)} is Kemeny consensus {is_kemeny_consensus(e, order)}")

# randomized agreement check, as in `consensus-lab verify`
print()
print(verify_reduction("fasr_to_kemeny_recognition", trials=100, seed=1).to_text())
