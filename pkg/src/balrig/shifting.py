"""Balanced shifting of bipartite graphs and balanced complexes.

The shifted object is the support of the greedy lexicographic basis of the
multigraded components of the Stanley-Reisner ring after a random block change
of coordinates. Concretely, for a graph G with a random invertible pair of
blocks (one per side): the (1,1)-component has the edge monomials
{x_p y_q : pq' an edge} as a basis, and the candidate monomial for the pair
ij' expands with coefficient theta_A[i][p] * theta_B[j][q] on the edge pq'.
Candidates are offered in the lexicographic order induced by the vertex
order; the pairs whose expansion is independent of all earlier ones form the
shifted edge set. Complexes work the same way color-set by color-set: the
candidate for one vertex per color in T expands over the faces with color
support T, with a product coefficient per color.

Edge and face counts are preserved deterministically (the candidate monomials
span as soon as the blocks are invertible); shiftedness of the output is a
generic fact and is asserted after every run, under the usual trial policy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .combinat import (
    BalancedComplex,
    BipartiteGraph,
    VertexOrder,
    all_faces,
    f_vector,
    faces_with_colorset,
    is_face,
)
from .errors import BalrigError, InputError
from .exactla import (
    DEFAULT_POLICY,
    GreedyBasis,
    PrimeField,
    TrialMeta,
    TrialPolicy,
    run_trials,
    sample_theta,
)


@dataclass(frozen=True)
class ShiftedGraph:
    graph: BipartiteGraph
    order: VertexOrder
    meta: TrialMeta


@dataclass(frozen=True)
class ShiftedComplex:
    complex: BalancedComplex
    order: VertexOrder
    meta: TrialMeta


def _shift_edges(
    g: BipartiteGraph, order: VertexOrder, fld: PrimeField, seed: int
) -> frozenset[tuple[int, int]]:
    basis_edges = g.edge_list()
    if not basis_edges:
        return frozenset()
    theta_a, theta_b = sample_theta(fld, seed, (g.a_size, g.b_size))
    p = fld.p
    candidates = sorted(
        ((i, j) for i in range(1, g.a_size + 1) for j in range(1, g.b_size + 1)),
        key=lambda e: order.lex_key((("A", e[0]), ("B", e[1]))),
    )
    greedy = GreedyBasis(fld, len(basis_edges))
    target = len(basis_edges)
    for i, j in candidates:
        row_a = theta_a[i - 1]
        row_b = theta_b[j - 1]
        expansion = [row_a[pp - 1] * row_b[qq - 1] % p for pp, qq in basis_edges]
        greedy.offer((i, j), expansion)
        if greedy.rank == target:
            break
    return frozenset(greedy.selected)


def shift_graph(
    g: BipartiteGraph,
    order: VertexOrder | None = None,
    policy: TrialPolicy = DEFAULT_POLICY,
) -> ShiftedGraph:
    """Balanced shifting of g with respect to the given vertex order.

    Defaults to the interleaved order. The result has the same number of
    edges, is balanced-shifted, and is reproducible from (seed, prime, order).
    """
    if order is None:
        order = VertexOrder.interleaved_graph(g.a_size, g.b_size)
    if not order.covers_graph(g):
        raise InputError("vertex order does not cover the graph's vertices")
    verdict, meta = run_trials(
        policy,
        lambda fld, seed: _shift_edges(g, order, fld, seed),
        poly_degree=2 * g.n_edges,
        what="shifted edge set",
    )
    shifted = BipartiteGraph(g.a_size, g.b_size, verdict)
    if shifted.n_edges != g.n_edges:
        raise BalrigError("shifting failed to preserve the edge count")
    if not check_shifted(shifted):
        raise BalrigError("shifting produced a non-shifted edge set")
    return ShiftedGraph(shifted, order, meta)


def _shift_faces(
    k: BalancedComplex, order: VertexOrder, fld: PrimeField, seed: int
) -> frozenset:
    blocks = sample_theta(fld, seed, k.color_sizes)
    p = fld.p
    selected: set = set()
    colors = range(1, k.n_colors + 1)
    for r in range(1, k.n_colors + 1):
        for t in itertools.combinations(colors, r):
            basis = sorted(faces_with_colorset(k, t), key=lambda f: sorted(f))
            if not basis:
                continue
            basis_by_color = [dict(f) for f in basis]
            candidates = sorted(
                itertools.product(
                    *[range(1, k.color_sizes[c - 1] + 1) for c in t]
                ),
                key=lambda pick: order.lex_key(zip(t, pick)),
            )
            greedy = GreedyBasis(fld, len(basis))
            for pick in candidates:
                expansion = []
                for face in basis_by_color:
                    coeff = 1
                    for c, v in zip(t, pick):
                        coeff = coeff * blocks[c - 1][v - 1][face[c] - 1] % p
                    expansion.append(coeff)
                greedy.offer(frozenset(zip(t, pick)), expansion)
                if greedy.rank == len(basis):
                    break
            if greedy.rank != len(basis):
                raise BalrigError(
                    "candidate monomials failed to span a color component"
                )
            selected.update(greedy.selected)
    return frozenset(selected)


def shift_complex(
    k: BalancedComplex,
    order: VertexOrder | None = None,
    policy: TrialPolicy = DEFAULT_POLICY,
) -> ShiftedComplex:
    """Balanced shifting of a complex, color set by color set.

    Defaults to the color-interleaved order, which is (l,...,l)-admissible for
    every l. Asserts that the selected supports form a complex with the same
    f-vector and that it is balanced-shifted.
    """
    if order is None:
        order = VertexOrder.interleaved_complex(k.color_sizes)
    expected = {
        (c, i) for c in range(1, k.n_colors + 1) for i in range(1, k.color_sizes[c - 1] + 1)
    }
    if set(order.sequence) != expected:
        raise InputError("vertex order does not cover the complex's palette")
    verdict, meta = run_trials(
        policy,
        lambda fld, seed: _shift_faces(k, order, fld, seed),
        poly_degree=2 * max(len(all_faces(k)), 1),
        what="shifted face set",
    )
    faces = set(verdict) | {frozenset()}
    for f in verdict:
        for v in f:
            if f - {v} not in faces:
                raise BalrigError("shifted supports are not closed under subsets")
    shifted = BalancedComplex.from_maximal_candidates(k.color_sizes, faces)
    if f_vector(shifted) != f_vector(k):
        raise BalrigError("shifting failed to preserve the f-vector")
    if not check_shifted(shifted):
        raise BalrigError("shifting produced a non-shifted complex")
    return ShiftedComplex(shifted, order, meta)


def check_shifted(obj: BipartiteGraph | BalancedComplex) -> bool:
    """Whether replacing any vertex of any face by a smaller same-side
    (same-color) vertex always yields a face."""
    if isinstance(obj, BipartiteGraph):
        edges = obj.edges
        return all(
            (p, q) in edges
            for i, j in edges
            for p in range(1, i + 1)
            for q in range(1, j + 1)
        )
    faces = all_faces(obj)
    for f in faces:
        for c, i in f:
            for smaller in range(1, i):
                if (f - {(c, i)}) | {(c, smaller)} not in faces:
                    return False
    return True


def contains_complete_bipartite(g: BipartiteGraph, r: int, s: int) -> bool:
    """Whether K_{r,s} (r on side A, s on side B) is a subgraph of g.

    For a balanced-shifted graph this reduces to one edge membership; in
    general it is a brute-force search over side subsets, fine at desk scale.
    """
    if r < 1 or s < 1:
        raise InputError("subgraph sides must be positive")
    if r > g.a_size or s > g.b_size:
        return False
    if check_shifted(g):
        return (r, s) in g.edges
    for asub in itertools.combinations(range(1, g.a_size + 1), r):
        for bsub in itertools.combinations(range(1, g.b_size + 1), s):
            if all((i, j) in g.edges for i in asub for j in bsub):
                return True
    return False


def contains_join(k: BalancedComplex, m: int) -> bool:
    """Whether the join of m points per color is a subcomplex of k.

    For a balanced-shifted complex this is a single facet membership (the
    m-th vertex of every color); in general all ways of picking m vertices
    per color are searched, with early abort.
    """
    if m < 1:
        raise InputError("join size must be positive")
    if any(size < m for size in k.color_sizes):
        return False
    colors = range(1, k.n_colors + 1)
    if check_shifted(k):
        return is_face(k, frozenset((c, m) for c in colors))
    choices = [
        list(itertools.combinations(range(1, k.color_sizes[c - 1] + 1), m))
        for c in colors
    ]
    for picks in itertools.product(*choices):
        if all(
            is_face(k, frozenset(zip(colors, combo)))
            for combo in itertools.product(*picks)
        ):
            return True
    return False
