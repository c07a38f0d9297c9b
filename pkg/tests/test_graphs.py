import random

import pytest

from rainbowgraphs.graphs import (
    EdgeColoredGraph,
    FormatError,
    GraphError,
    build,
    canonicalize_colors,
    delete_edge,
    delete_vertex,
    format_dot,
    format_edgelist,
    format_json,
    is_complete,
    parse_edgelist,
    parse_graph,
    parse_json,
    stats,
)
from rainbowgraphs.rainbow import count_rainbow_triangles

from _oracles import random_colored_graph


def rainbow_k3():
    return build(3, [(0, 1, 10), (1, 2, 11), (0, 2, 12)])


def mono_k3():
    return build(3, [(0, 1, 4), (1, 2, 4), (0, 2, 4)])


class TestBuild:
    def test_k3_three_labels(self):
        G = build(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])
        assert (G.m, G.c) == (3, 3)

    def test_empty(self):
        G = build(4, [])
        assert (G.m, G.c) == (0, 0)

    def test_duplicate_pair_rejected(self):
        with pytest.raises(GraphError, match=r"duplicate edge pair \(0, 1\)"):
            build(3, [(0, 1, 0), (0, 1, 1)])

    def test_duplicate_reversed_pair_rejected(self):
        with pytest.raises(GraphError, match="duplicate"):
            build(3, [(0, 1, 0), (1, 0, 1)])

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match="self-loop"):
            build(3, [(1, 1, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError, match="outside vertex range"):
            build(3, [(0, 3, 0)])

    def test_negative_color_rejected(self):
        with pytest.raises(GraphError, match="non-negative"):
            build(3, [(0, 1, -2)])

    def test_size_cap(self):
        with pytest.raises(GraphError, match="outside supported range"):
            EdgeColoredGraph(5000)


class TestStats:
    def test_rainbow_k3(self):
        m, c, prof = stats(rainbow_k3())
        assert (m, c) == (3, 3)
        assert prof.degree == (2, 2, 2)
        assert prof.color_degree == (2, 2, 2)
        assert prof.saturated_degree == (2, 2, 2)

    def test_mono_k3(self):
        m, c, prof = stats(mono_k3())
        assert (m, c) == (3, 1)
        assert prof.color_degree == (1, 1, 1)
        assert prof.saturated_degree == (0, 0, 0)

    def test_saturated_star(self):
        # One color spanning a star: only the hub loses it on deletion.
        G = build(4, [(0, 1, 7), (0, 2, 7), (0, 3, 7)])
        _, _, prof = stats(G)
        assert prof.saturated_degree == (1, 0, 0, 0)


class TestDeletion:
    def test_delete_vertex_triangle(self):
        G = delete_vertex(rainbow_k3(), 0)
        assert (G.n, G.m, G.c) == (2, 1, 1)

    def test_delete_edge_triangle(self):
        G = delete_edge(rainbow_k3(), 0, 1)
        assert (G.m, G.c) == (2, 2)

    def test_missing_vertex(self):
        with pytest.raises(GraphError, match="does not exist"):
            delete_vertex(rainbow_k3(), 3)

    def test_missing_edge(self):
        with pytest.raises(GraphError, match="not present"):
            delete_edge(build(3, [(0, 1, 0)]), 1, 2)

    def test_identities_random(self):
        # m(G-v) = m - d(v) and c(G-v) = c - d^s(v), cross-checked by
        # recounting on the mutated graph.
        rng = random.Random(7)
        for _ in range(300):
            n, triples = random_colored_graph(rng, n_max=10)
            G = build(n, triples)
            _, _, prof = stats(G)
            for v in range(n):
                H = delete_vertex(G, v)
                assert H.m == G.m - prof.degree[v]
                assert H.c == G.c - prof.saturated_degree[v]
                assert H.c == len({c for c in H.edges.values()})

    def test_renumbering_is_order_preserving(self):
        G = build(4, [(0, 1, 0), (1, 3, 1), (2, 3, 2)])
        H = delete_vertex(G, 1)
        assert sorted(H.edges) == [(1, 2)]
        assert H.edges[(1, 2)] == 2


class TestCanonicalize:
    def test_idempotent_and_relabels(self):
        G = build(3, [(0, 1, 7), (1, 2, 3), (0, 2, 9)])
        C = canonicalize_colors(G)
        assert sorted(C.edges.values()) == [0, 1, 2]
        assert canonicalize_colors(C) == C

    def test_color_permutation_invariant(self):
        rng = random.Random(11)
        for _ in range(100):
            n, triples = random_colored_graph(rng, n_max=8)
            G = build(n, triples)
            labels = sorted({c for _, _, c in triples})
            perm = labels[:]
            rng.shuffle(perm)
            mapping = dict(zip(labels, perm))
            H = build(n, [(u, v, mapping[c]) for u, v, c in triples])
            assert canonicalize_colors(G) == canonicalize_colors(H)

    def test_preserves_statistics(self):
        rng = random.Random(13)
        for _ in range(100):
            n, triples = random_colored_graph(rng, n_max=9)
            G = build(n, triples)
            C = canonicalize_colors(G)
            assert stats(G)[:2] == stats(C)[:2]
            assert stats(G).profile == stats(C).profile
            assert count_rainbow_triangles(G) == count_rainbow_triangles(C)


class TestInvariants:
    def test_degree_sums(self):
        rng = random.Random(17)
        for _ in range(300):
            n, triples = random_colored_graph(rng, n_max=12)
            G = build(n, triples)
            m, c, prof = stats(G)
            assert prof.degree_sum == 2 * m
            assert prof.color_degree_sum <= 2 * m
            assert prof.saturated_degree_sum <= 2 * c
            for v in range(n):
                if prof.degree[v] >= 1:
                    assert 1 <= prof.color_degree[v] <= prof.degree[v]
                assert prof.saturated_degree[v] <= prof.color_degree[v]


class TestFormats:
    def test_edgelist_roundtrip(self):
        G = rainbow_k3()
        assert parse_edgelist(format_edgelist(G)) == G

    def test_json_roundtrip(self):
        G = rainbow_k3()
        assert parse_json(format_json(G)) == G

    def test_comments_and_blanks_ignored(self):
        text = "# a comment\n\n3 1\n# another\n0 1 5\n"
        assert parse_edgelist(text).m == 1

    def test_wrong_edge_count_short(self):
        with pytest.raises(FormatError, match="declared m=2"):
            parse_edgelist("3 2\n0 1 0\n")

    def test_wrong_edge_count_long(self):
        with pytest.raises(FormatError, match="line 4"):
            parse_edgelist("3 1\n0 1 0\n# ok\n1 2 0\n")

    def test_vertex_out_of_range(self):
        with pytest.raises(FormatError, match="line 2"):
            parse_edgelist("3 1\n0 5 0\n")

    def test_u_ge_v_rejected(self):
        with pytest.raises(FormatError, match="u < v"):
            parse_edgelist("3 1\n1 0 0\n")

    def test_duplicate_rejected(self):
        with pytest.raises(FormatError, match="duplicate"):
            parse_edgelist("3 2\n0 1 0\n0 1 1\n")

    def test_bad_token(self):
        with pytest.raises(FormatError, match="line 2"):
            parse_edgelist("3 1\n0 x 0\n")

    def test_json_validation_matches(self):
        with pytest.raises(FormatError):
            parse_json('{"n": 3, "edges": [[1, 0, 0]]}')
        with pytest.raises(FormatError):
            parse_json('{"n": 3, "edges": [[0, 1, 0], [0, 1, 1]]}')

    def test_parse_graph_detects_format(self):
        G = rainbow_k3()
        assert parse_graph(format_edgelist(G)) == G
        assert parse_graph(format_json(G)) == G

    def test_dot_export(self):
        dot = format_dot(rainbow_k3())
        assert dot.startswith("graph G {")
        assert dot.count("--") == 3
        # three distinct palette entries for three distinct colors
        assert len({line.split('color="')[1].split('"')[0]
                    for line in dot.splitlines() if "--" in line}) == 3


def test_is_complete():
    assert is_complete(mono_k3())
    assert not is_complete(build(3, [(0, 1, 0)]))
    assert is_complete(build(1, []))
