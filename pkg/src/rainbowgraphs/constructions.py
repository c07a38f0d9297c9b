"""Generators for the extremal colorings that make the guarantee bounds sharp.

* balanced complete multipartite (Turan) graphs and their edge counts,
* ``build_gk``: the complete graph with n+k-1 colors and exactly k
  vertex-disjoint rainbow triangles (tight for the m+c triangle bound),
* ``build_hnk``: a rainbow balanced (k-2)-partite graph completed with one
  further color on all intra-part edges (tight for the rainbow-K_k bound),
* ``build_case2_figure``: the eight-vertex variant in which two intra-pair
  edges reuse cross colors incident to singleton parts instead of the
  monochromatic fill.

Every generator attaches machine-readable structure metadata (partitions,
triangle lists, join colors) so the recognizers can be tested against
ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .graphs import EdgeColoredGraph, GraphError
from .rainbow import count_rainbow_triangles, enumerate_rainbow_cliques

# Generators self-check their advertised structure up to this size; all
# desk-scale verification lives well below it.
_BUILD_CHECK_MAX_N = 32


@dataclass(frozen=True)
class TuranPartition:
    """Balanced part sizes: i parts of size p+1 and k-i of size p, p=n//k."""

    n: int
    k: int
    sizes: tuple[int, ...]

    @classmethod
    def balanced(cls, n: int, k: int) -> "TuranPartition":
        if k < 1:
            raise GraphError(f"part count k={k} must be at least 1")
        if k > n:
            raise GraphError(f"part count k={k} exceeds n={n}")
        p, i = divmod(n, k)
        return cls(n, k, (p + 1,) * i + (p,) * (k - i))

    def parts(self) -> tuple[tuple[int, ...], ...]:
        """Consecutive vertex ranges realizing the sizes."""
        out = []
        start = 0
        for size in self.sizes:
            out.append(tuple(range(start, start + size)))
            start += size
        return tuple(out)


@dataclass(frozen=True, eq=False)
class LabeledConstruction:
    """A generated graph together with its designated structure."""

    graph: EdgeColoredGraph
    name: str
    params: dict = field(default_factory=dict)
    structure: dict = field(default_factory=dict)

    def metadata(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "structure": dict(self.structure),
            "stats": {"n": self.graph.n, "m": self.graph.m, "c": self.graph.c},
        }


def turan_number(n: int, k: int) -> int:
    """Edge count of the balanced complete k-partite graph on n vertices.

    With n = p*k + i: C(k,2)*p^2 + i*(k-1)*p + C(i,2).
    """
    if k < 1:
        raise GraphError(f"part count k={k} must be at least 1")
    if k > n:
        raise GraphError(f"part count k={k} exceeds n={n}")
    p, i = divmod(n, k)
    return comb(k, 2) * p * p + i * (k - 1) * p + comb(i, 2)


def turan_diff(n: int, k: int) -> int:
    """turan_number(n+1, k) - turan_number(n, k), in closed form n - n//k."""
    if k < 1:
        raise GraphError(f"part count k={k} must be at least 1")
    if k > n:
        raise GraphError(f"part count k={k} exceeds n={n}")
    return n - n // k


def _part_lookup(partition: TuranPartition) -> list[int]:
    part_of = [0] * partition.n
    for idx, part in enumerate(partition.parts()):
        for v in part:
            part_of[v] = idx
    return part_of


def turan_graph(n: int, k: int, rainbow: bool = False) -> LabeledConstruction:
    """Balanced complete k-partite graph on n vertices.

    With ``rainbow`` every edge gets its own color 0..t-1 in lexicographic
    edge order; otherwise all edges share color 0.
    """
    partition = TuranPartition.balanced(n, k)
    part_of = _part_lookup(partition)
    edges = []
    color = 0
    for u in range(n):
        for v in range(u + 1, n):
            if part_of[u] != part_of[v]:
                edges.append((u, v, color if rainbow else 0))
                color += 1
    G = EdgeColoredGraph(n, edges)
    assert G.m == turan_number(n, k)
    return LabeledConstruction(
        graph=G,
        name="turan",
        params={"n": n, "parts": k, "rainbow": rainbow},
        structure={"sizes": list(partition.sizes),
                   "parts": [list(p) for p in partition.parts()]},
    )


def build_gk(n: int, k: int) -> LabeledConstruction:
    """Complete graph on n >= 3k vertices with n+k-1 colors and exactly k
    rainbow triangles, all vertex-disjoint.

    Start from a complete base on n-3k vertices where edge (u, v) with
    u < v is colored u.  Then k times: add three vertices forming a
    rainbow triangle on three fresh colors, and join them to everything
    older with one further fresh color (the join color is skipped when
    there is nothing older yet).  This keeps m + c = C(n+1,2) + k - 1.
    """
    if k < 0:
        raise GraphError(f"k={k} must be non-negative")
    if n < 1:
        raise GraphError(f"n={n} must be at least 1")
    if n < 3 * k:
        raise GraphError(f"n < 3k (n={n}, k={k})")
    base = n - 3 * k
    edges: list[tuple[int, int, int]] = []
    for u in range(base):
        for v in range(u + 1, base):
            edges.append((u, v, u))
    next_color = max(0, base - 1)
    triangles: list[tuple[int, int, int]] = []
    triangle_colors: list[tuple[int, int, int]] = []
    join_colors: list[int | None] = []
    for step in range(k):
        a = base + 3 * step
        cols = (next_color, next_color + 1, next_color + 2)
        next_color += 3
        edges.append((a, a + 1, cols[0]))
        edges.append((a, a + 2, cols[1]))
        edges.append((a + 1, a + 2, cols[2]))
        triangles.append((a, a + 1, a + 2))
        triangle_colors.append(cols)
        if a > 0:
            join = next_color
            next_color += 1
            for u in range(a):
                edges.append((u, a, join))
                edges.append((u, a + 1, join))
                edges.append((u, a + 2, join))
            join_colors.append(join)
        else:
            join_colors.append(None)
    G = EdgeColoredGraph(n, edges)
    assert G.m == comb(n, 2)
    assert G.c == n + k - 1 if n >= 1 else True
    if n <= _BUILD_CHECK_MAX_N:
        assert count_rainbow_triangles(G) == k
    return LabeledConstruction(
        graph=G,
        name="gk",
        params={"n": n, "k": k},
        structure={"base_size": base,
                   "triangles": [list(t) for t in triangles],
                   "triangle_colors": [list(t) for t in triangle_colors],
                   "join_colors": join_colors},
    )


def build_hnk(n: int, k: int) -> LabeledConstruction:
    """Complete graph carrying a rainbow balanced (k-2)-partite subgraph on
    colors 0..t-1 with every intra-part edge in one further color t.

    m + c = C(n,2) + t + 1, one below the threshold that forces a rainbow
    k-clique, and the graph contains none (checked on build for n <= 12).
    """
    if k < 4:
        raise GraphError(f"k={k} must be at least 4")
    if n < k:
        raise GraphError(f"n < k (n={n}, k={k})")
    q = k - 2
    partition = TuranPartition.balanced(n, q)
    part_of = _part_lookup(partition)
    edges = []
    color = 0
    for u in range(n):
        for v in range(u + 1, n):
            if part_of[u] != part_of[v]:
                edges.append((u, v, color))
                color += 1
    t = color
    assert t == turan_number(n, q)
    for u in range(n):
        for v in range(u + 1, n):
            if part_of[u] == part_of[v]:
                edges.append((u, v, t))
    G = EdgeColoredGraph(n, edges)
    assert G.m == comb(n, 2)
    assert G.c == t + 1
    if n <= 12:
        assert enumerate_rainbow_cliques(G, k, limit=1) == []
    return LabeledConstruction(
        graph=G,
        name="hnk",
        params={"n": n, "k": k},
        structure={"sizes": list(partition.sizes),
                   "parts": [list(p) for p in partition.parts()],
                   "mono_color": t,
                   "cross_edge_count": t},
    )


def build_case2_figure(n: int = 8, k: int = 7) -> LabeledConstruction:
    """The eight-vertex complete graph on parts 2,2,2,1,1 whose cross edges
    form a rainbow 5-partite subgraph, one intra-pair edge carries the
    single extra color, and the other two intra-pair edges reuse colors of
    cross edges joining their own pair to a singleton part, chosen so that
    every 7 vertices repeat a color.

    The exact reuse assignment is found by exhaustive search over the
    candidate colors and pinned to the lexicographically first one that
    leaves no rainbow 7-clique, so the output is canonical.
    """
    if (n, k) != (8, 7):
        raise GraphError(f"only the (n, k) = (8, 7) instance is defined, got ({n}, {k})")
    q = k - 2
    partition = TuranPartition.balanced(n, q)
    part_of = _part_lookup(partition)
    parts = partition.parts()
    pairs = [p for p in parts if len(p) == 2]
    singletons = [p[0] for p in parts if len(p) == 1]
    cross_colors: dict[tuple[int, int], int] = {}
    color = 0
    for u in range(n):
        for v in range(u + 1, n):
            if part_of[u] != part_of[v]:
                cross_colors[(u, v)] = color
                color += 1
    t = color
    assert t == turan_number(n, q)
    fresh = t
    candidates = {
        pair: sorted(cross_colors[(min(x, s), max(x, s))]
                     for x in pair for s in singletons)
        for pair in pairs
    }
    for fresh_idx in range(len(pairs)):
        others = [pair for idx, pair in enumerate(pairs) if idx != fresh_idx]
        choices = [(c0, c1) for c0 in candidates[others[0]] for c1 in candidates[others[1]]]
        for c0, c1 in choices:
            intra = {pairs[fresh_idx]: fresh, others[0]: c0, others[1]: c1}
            edges = [(u, v, col) for (u, v), col in cross_colors.items()]
            edges.extend((pair[0], pair[1], col) for pair, col in intra.items())
            G = EdgeColoredGraph(n, edges)
            if enumerate_rainbow_cliques(G, k, limit=1):
                continue
            assert G.c == t + 1
            return LabeledConstruction(
                graph=G,
                name="case2",
                params={"n": n, "k": k},
                structure={"sizes": list(partition.sizes),
                           "parts": [list(p) for p in parts],
                           "fresh_color": fresh,
                           "fresh_pair": list(pairs[fresh_idx]),
                           "reused_colors": {f"{p[0]},{p[1]}": c
                                             for p, c in intra.items()
                                             if c != fresh}},
            )
    raise AssertionError("no valid reuse assignment found for the (8,7) instance")
