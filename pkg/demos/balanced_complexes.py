#!/usr/bin/env python3
"""Balanced complexes: shifting, facet-ridge graphs, and the join bound.

The boundary of the 3-dimensional cross-polytope (the octahedron) is its own
balanced shifting, and its facet-ridge graph is the cube graph, which is
(1,2)-rigid. Gluing extra cross-polytope copies onto the central one produces
a balanced sphere whose facet-ridge graph is provably NOT (1,2)-rigid: some
pendant copy always violates the sparsity count. Finally, the facet-ridge
matrix M(K, l) certifies join avoidance of the shifted complex, with the
two-least-vertices complex sitting exactly on the boundary of that criterion.
"""

from balrig import (
    analyze,
    contains_join,
    f_vector,
    facet_ridge_graph,
    rows_independent_M,
    shift_complex,
)
from balrig.combinat import swap_sides
from balrig.exactla import TrialPolicy
from balrig.families import (
    cross_polytope_boundary,
    gamma_complex,
    glued_cross_polytopes,
    van_kampen_complex,
)

policy = TrialPolicy(seed=31)

octa = cross_polytope_boundary(3)
print(f"octahedron f-vector: {f_vector(octa)}")
print(f"fixed by balanced shifting: {shift_complex(octa, policy=policy).complex == octa}")

frg = facet_ridge_graph(octa)
rep = analyze(frg.graph, 1, 2, policy)
print(f"facet-ridge graph: {frg.graph.a_size}+{frg.graph.b_size} vertices, "
      f"{frg.graph.n_edges} edges, (1,2)-rigid: {rep.is_rigid}")

print()
print("Gluing four more copies onto the odd facets of the central octahedron:")
gcp = glued_cross_polytopes(3)
g = facet_ridge_graph(gcp.complex).graph
pend_sides = [facet_ridge_graph(gcp.complex).vertex_of[f][0] for f in gcp.pendant_facets[0]]
if pend_sides.count("A") > pend_sides.count("B"):
    g = swap_sides(g)
rep = analyze(g, 1, 2, policy)
print(f"  {len(gcp.complex.facets)} facets -> graph on {g.n_vertices} vertices, "
      f"{g.n_edges} edges")
print(f"  rank {rep.rank} vs max {rep.max_rank}: (1,2)-rigid: {rep.is_rigid}")

print()
print("Row independence of M(K,2) vs join containment of the shifted complex:")
for name, k in (
    ("octahedron", octa),
    ("three points * three points", van_kampen_complex(2, 1)),
    ("two-least-vertices complex", gamma_complex(2, [3, 3, 3])),
):
    m = rows_independent_M(k, 2, policy)
    shifted = shift_complex(k, policy=policy).complex
    join3 = contains_join(shifted, 3)
    print(f"  {name:<30} rows independent: {str(m.independent):<5} "
          f"shifted contains triple join: {join3}")
