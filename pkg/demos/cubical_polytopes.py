#!/usr/bin/env python3
"""Graphs of cubical polytopes and how few edges rigidity really needs.

The graph of a stacked cubical d-polytope is bipartite with equal sides but
sits below the edge count that (2, d-1)-rigidity demands. Adding the right
2^(d-1) - 2(d-1) edges inside a single facet lands exactly on the tight count
(d-1)|A| + 2|B| - 2(d-1), and the result is simultaneously rigid and
stress-free. The (1, d) story is combinatorial: the 3-cube plus its four long
diagonals is the complete 4x4 graph, and the hereditary sparsity counts alone
certify it.
"""

from balrig import analyze, laman_check
from balrig.exactla import TrialPolicy
from balrig.families import (
    augment_facet,
    cube_complex,
    laman_augmented_cube,
    stacked_cubical_augmented,
    stacked_cubical_graph,
)

policy = TrialPolicy(seed=7)

print("=" * 64)
print("  Stacked cubical polytopes, augmented inside one facet")
print("=" * 64)
for d in (3, 4):
    for t in (1, 2, 3):
        raw = stacked_cubical_graph(d, t, seed=t).graph
        g = stacked_cubical_augmented(d, t, seed=t)
        rep = analyze(g, 2, d - 1, policy)
        tight = (d - 1) * g.a_size + 2 * g.b_size - 2 * (d - 1)
        print(
            f"d={d} t={t}:  raw E={raw.n_edges:>3}  augmented E={g.n_edges:>3}"
            f"  tight count={tight:>3}  rigid={rep.is_rigid}  stress-free={rep.is_stress_free}"
        )

print()
print("In dimension 3 the augmentation adds nothing; from dimension 4 on it")
print("contributes the missing edges:")
for d in (3, 4, 5):
    added = augment_facet(cube_complex(d), 0, "two-vertex").added
    print(f"  d={d}: {len(added)} edges added (expected {2 ** (d - 1) - 2 * (d - 1)})")

print()
print("=" * 64)
print("  Sparsity-tight cubes: the (1, d) side")
print("=" * 64)
for d in (4, 5):
    g = laman_augmented_cube(d)
    lam = laman_check(g, 1, d)
    rep = analyze(g, 1, d, policy)
    print(
        f"d={d}: cube Q_{d - 1} plus {g.n_edges - (d - 1) * 2 ** (d - 2)} extra edges"
        f"  -> sparsity counts hold: {lam.holds}, rigid: {rep.is_rigid},"
        f" stress-free: {rep.is_stress_free}"
    )
