"""Edge-colored and oriented graph data model.

Vertices are dense integers 0..n-1.  Edge colors are opaque non-negative
integer labels: equality is their only semantics, and contiguity is never
assumed (``canonicalize_colors`` produces the contiguous normal form when
one is wanted).  Graphs are immutable after construction; every mutating
operation returns a new value, so instances are safe to share across
parallel workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

# Size cap for plain statistics and I/O paths.
MAX_ANALYSIS_N = 4096
# Size cap for the O(n^3)-style enumeration paths (single-word bitsets).
MAX_ENUMERATION_N = 64

# Fixed palette for DOT export; color id maps to palette[id % len(palette)].
DOT_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
)


class GraphError(ValueError):
    """Invalid construction or violated precondition of a graph operation."""


class FormatError(ValueError):
    """Malformed edge-list or JSON input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Unordered pair (min, max) identifying an edge."""
    return (u, v) if u < v else (v, u)


class EdgeColoredGraph:
    """Simple undirected graph with a color on every edge.

    ``edges`` maps each pair (u, v) with u < v to its color id.  ``adj`` is
    a per-vertex neighborhood bitmask.
    """

    __slots__ = ("n", "edges", "adj", "colors")

    def __init__(self, n: int, colored_edges: Iterable[tuple[int, int, int]] = ()):
        if not isinstance(n, int) or not 0 <= n <= MAX_ANALYSIS_N:
            raise GraphError(
                f"vertex count {n!r} outside supported range 0..{MAX_ANALYSIS_N}")
        edges: dict[tuple[int, int], int] = {}
        adj = [0] * n
        for u, v, color in colored_edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if not isinstance(color, int) or color < 0:
                raise GraphError(
                    f"color {color!r} on edge ({u},{v}) is not a non-negative integer")
            key = (u, v) if u < v else (v, u)
            if key in edges:
                raise GraphError(f"duplicate edge pair {key}")
            edges[key] = color
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = edges
        self.adj = adj
        self.colors = frozenset(edges.values())

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def c(self) -> int:
        return len(self.colors)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def color_of(self, u: int, v: int) -> int:
        try:
            return self.edges[edge_key(u, v)]
        except KeyError:
            raise GraphError(f"edge ({u},{v}) not present") from None

    def sorted_edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, self.edges[(u, v)]) for (u, v) in sorted(self.edges)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, EdgeColoredGraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges.items())))

    def __repr__(self) -> str:
        return f"EdgeColoredGraph(n={self.n}, m={self.m}, c={self.c})"


def build(n: int, colored_edges: Iterable[tuple[int, int, int]]) -> EdgeColoredGraph:
    """Validate and build an edge-colored graph from (u, v, color) triples."""
    return EdgeColoredGraph(n, colored_edges)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degree d, color degree d^c, and saturated degree d^s.

    d^c(v) counts distinct colors among the edges at v; d^s(v) counts the
    colors whose every edge is incident to v, so c(G - v) = c(G) - d^s(v).
    """

    degree: tuple[int, ...]
    color_degree: tuple[int, ...]
    saturated_degree: tuple[int, ...]

    @property
    def degree_sum(self) -> int:
        return sum(self.degree)

    @property
    def color_degree_sum(self) -> int:
        return sum(self.color_degree)

    @property
    def saturated_degree_sum(self) -> int:
        return sum(self.saturated_degree)


class GraphStats(NamedTuple):
    m: int
    c: int
    profile: DegreeProfile


def stats(G: EdgeColoredGraph) -> GraphStats:
    """Edge count, color count, and the per-vertex degree profile.

    Saturated degrees come from per-color endpoint-support bookkeeping: a
    color contributes to d^s(v) iff the intersection of its edges' endpoint
    pairs still contains v, which avoids n recounts of c(G - v).
    """
    n = G.n
    incident: list[set[int]] = [set() for _ in range(n)]
    support: dict[int, int] = {}
    for (u, v), color in G.edges.items():
        incident[u].add(color)
        incident[v].add(color)
        pair_mask = (1 << u) | (1 << v)
        prev = support.get(color)
        support[color] = pair_mask if prev is None else prev & pair_mask
    saturated = [0] * n
    for mask in support.values():
        while mask:
            bit = mask & -mask
            saturated[bit.bit_length() - 1] += 1
            mask ^= bit
    profile = DegreeProfile(
        degree=tuple(G.adj[v].bit_count() for v in range(n)),
        color_degree=tuple(len(s) for s in incident),
        saturated_degree=tuple(saturated),
    )
    return GraphStats(G.m, G.c, profile)


def delete_vertex(G: EdgeColoredGraph, v: int) -> EdgeColoredGraph:
    """Remove vertex v; remaining vertices are compacted order-preservingly."""
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} does not exist (n={G.n})")
    out = []
    for (a, b), color in G.edges.items():
        if a == v or b == v:
            continue
        out.append((a - (a > v), b - (b > v), color))
    return EdgeColoredGraph(G.n - 1, out)


def delete_edge(G: EdgeColoredGraph, u: int, v: int) -> EdgeColoredGraph:
    """Remove the edge {u, v}; vertex numbering is unchanged."""
    key = edge_key(u, v)
    if key not in G.edges:
        raise GraphError(f"edge ({u},{v}) not present")
    return EdgeColoredGraph(
        G.n, ((a, b, c) for (a, b), c in G.edges.items() if (a, b) != key))


def canonicalize_colors(G: EdgeColoredGraph) -> EdgeColoredGraph:
    """Relabel colors to 0..c-1 in first-appearance order over sorted pairs.

    The color classes (edge sets per color) are unchanged as a set
    partition, so every statistic and every rainbow count is preserved.
    """
    mapping: dict[int, int] = {}
    out = []
    for (u, v) in sorted(G.edges):
        color = G.edges[(u, v)]
        if color not in mapping:
            mapping[color] = len(mapping)
        out.append((u, v, mapping[color]))
    return EdgeColoredGraph(G.n, out)


def is_complete(G: EdgeColoredGraph) -> bool:
    return G.m == G.n * (G.n - 1) // 2


class OrientedGraph:
    """Digraph with at most one arc per vertex pair (no loops, no digons)."""

    __slots__ = ("n", "arcs", "out_adj", "in_adj")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or not 0 <= n <= MAX_ANALYSIS_N:
            raise GraphError(
                f"vertex count {n!r} outside supported range 0..{MAX_ANALYSIS_N}")
        arc_set: set[tuple[int, int]] = set()
        out_adj = [0] * n
        in_adj = [0] * n
        for u, v in arcs:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u},{v}) outside vertex range 0..{n - 1}")
            if (u, v) in arc_set:
                raise GraphError(f"duplicate arc ({u},{v})")
            if (v, u) in arc_set:
                raise GraphError(f"digon between {u} and {v}")
            arc_set.add((u, v))
            out_adj[u] |= 1 << v
            in_adj[v] |= 1 << u
        self.n = n
        self.arcs = frozenset(arc_set)
        self.out_adj = out_adj
        self.in_adj = in_adj

    @property
    def a(self) -> int:
        return len(self.arcs)

    def out_mask(self, v: int) -> int:
        return self.out_adj[v]

    def in_degree(self, v: int) -> int:
        return self.in_adj[v].bit_count()

    def out_degree(self, v: int) -> int:
        return self.out_adj[v].bit_count()

    def __eq__(self, other) -> bool:
        return (isinstance(other, OrientedGraph)
                and self.n == other.n and self.arcs == other.arcs)

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"OrientedGraph(n={self.n}, a={self.a})"


# --------------------------------------------------------------------------
# Interchange formats.
#
# Colored edge-list text: first line "n m", then m lines "u v color" with
# u < v, whitespace-separated decimals.  Lines starting with '#' and blank
# lines are ignored.  Parsing is strict: wrong m, u >= n, u >= v, and
# duplicate pairs are hard errors.
#
# JSON form: {"n": int, "edges": [[u, v, color], ...]} with identical
# validation.
# --------------------------------------------------------------------------


def format_edgelist(G: EdgeColoredGraph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v} {c}" for u, v, c in G.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> EdgeColoredGraph:
    header: tuple[int, int] | None = None
    triples: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise FormatError("header must be 'n m'", lineno)
            try:
                n, m = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise FormatError("header must contain two integers", lineno) from None
            if n < 0 or m < 0:
                raise FormatError("header values must be non-negative", lineno)
            header = (n, m)
            continue
        n, m = header
        if len(triples) == m:
            raise FormatError(f"more than the declared m={m} edge lines", lineno)
        if len(tokens) != 3:
            raise FormatError("edge line must be 'u v color'", lineno)
        try:
            u, v, color = int(tokens[0]), int(tokens[1]), int(tokens[2])
        except ValueError:
            raise FormatError("edge line must contain three integers", lineno) from None
        if not 0 <= u < n or not 0 <= v < n:
            raise FormatError(f"vertex outside range 0..{n - 1}", lineno)
        if u >= v:
            raise FormatError("edges must satisfy u < v", lineno)
        if (u, v) in seen:
            raise FormatError(f"duplicate edge pair ({u},{v})", lineno)
        if color < 0:
            raise FormatError("color must be non-negative", lineno)
        seen.add((u, v))
        triples.append((u, v, color))
    if header is None:
        raise FormatError("empty input, expected 'n m' header")
    n, m = header
    if len(triples) != m:
        raise FormatError(f"declared m={m} edges but found {len(triples)}")
    return EdgeColoredGraph(n, triples)


def graph_to_json_obj(G: EdgeColoredGraph) -> dict:
    return {"n": G.n, "edges": [[u, v, c] for u, v, c in G.sorted_edges()]}


def graph_from_json_obj(obj) -> EdgeColoredGraph:
    if not isinstance(obj, dict) or set(obj) != {"n", "edges"}:
        raise FormatError("JSON graph must be an object with keys 'n' and 'edges'")
    n = obj["n"]
    if not isinstance(n, int):
        raise FormatError("'n' must be an integer")
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise FormatError("'edges' must be a list")
    triples: list[tuple[int, int, int]] = []
    for entry in edges:
        if (not isinstance(entry, list) or len(entry) != 3
                or not all(isinstance(x, int) for x in entry)):
            raise FormatError(f"edge entry {entry!r} must be [u, v, color]")
        u, v, color = entry
        if u >= v:
            raise FormatError(f"edge [{u},{v}] must satisfy u < v")
        triples.append((u, v, color))
    try:
        return EdgeColoredGraph(n, triples)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_json(G: EdgeColoredGraph) -> str:
    return json.dumps(graph_to_json_obj(G)) + "\n"


def parse_json(text: str) -> EdgeColoredGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno) from None
    return graph_from_json_obj(obj)


def parse_graph(text: str) -> EdgeColoredGraph:
    """Parse either format; JSON when the first non-space byte is '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_json(text)
    return parse_edgelist(text)


def format_dot(G: EdgeColoredGraph) -> str:
    """DOT export with the fixed palette cycle and color-id edge labels."""
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(G.n))
    for u, v, c in G.sorted_edges():
        hex_color = DOT_PALETTE[c % len(DOT_PALETTE)]
        lines.append(f'  {u} -- {v} [color="{hex_color}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
