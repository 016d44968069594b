#!/usr/bin/env python3
"""Planar bipartite graphs and (2,2)-rigidity, end to end.

A maximal planar bipartite graph on N vertices quadrangulates the sphere and
has exactly 2N - 4 edges. The demo grows random quadrangulations by vertex
splitting, checks that each one is (2,2)-rigid and stress-free, and watches
the verdicts degrade as edges are removed or added: deleting edges keeps
stress-freeness (subgraphs of planar graphs are planar), while adding any
chord to a maximal quadrangulation must create a self-stress.
"""

from balrig import BipartiteGraph, analyze, shift_graph, stress_space
from balrig.combinat import complete_edges
from balrig.exactla import TrialPolicy
from balrig.families import random_quadrangulation

policy = TrialPolicy(seed=2024)

print("=" * 64)
print("  Quadrangulations of the sphere vs the (2,2) rigidity matroid")
print("=" * 64)

for seed in range(4):
    g = random_quadrangulation(n_faces=10 + 2 * seed, seed=seed)
    rep = analyze(g, 2, 2, policy)
    print(
        f"\nN={g.n_vertices:>2}  E={g.n_edges:>2} (=2N-4: {g.n_edges == 2 * g.n_vertices - 4})"
        f"  rank={rep.rank}  rigid={rep.is_rigid}  stress-free={rep.is_stress_free}"
    )

    # removing an edge can only lose rigidity, never stress-freeness
    e = min(g.edges)
    sub = BipartiteGraph(g.a_size, g.b_size, g.edges - {e})
    sub_rep = analyze(sub, 2, 2, policy)
    print(f"  minus edge {e}: rigid={sub_rep.is_rigid} stress-free={sub_rep.is_stress_free}")

    # adding any absent pair overshoots the rank of the matroid
    absent = sorted(complete_edges(g.a_size, g.b_size) - g.edges)
    if absent:
        over = BipartiteGraph(g.a_size, g.b_size, g.edges | {absent[0]})
        over_rep = analyze(over, 2, 2, policy)
        stress = stress_space(over, 2, 2, policy)
        print(
            f"  plus edge {absent[0]}: stress space dimension {stress.dim} "
            f"(stress-free={over_rep.is_stress_free})"
        )

print()
print("The same verdicts can be read off the shifted graph: a quadrangulation")
print("never acquires the pair (3,3') under balanced shifting.")
g = random_quadrangulation(n_faces=12, seed=9)
shifted = shift_graph(g, policy=policy).graph
print(f"(3,3') in shifted edge set: {(3, 3) in shifted.edges}")
