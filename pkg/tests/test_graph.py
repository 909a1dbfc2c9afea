import random

import pytest

from online_ramsey import (
    BLUE,
    RED,
    ColoredGraph,
    DuplicateEdgeError,
    LoopEdgeError,
    UnsupportedTargetError,
    add_edge,
    clique,
    contains_target,
    creates_red_violation,
    cycle,
    explicit,
    longest_path_order,
    longest_path_vertices,
    matching,
    parse_target,
    path,
    star,
)
from online_ramsey.graph import has_cycle_with_length_in

from helpers import brute_longest_path_order, random_colored_graph


def pathgraph(colors, start=0):
    g = ColoredGraph.empty()
    for i, c in enumerate(colors):
        g = g.with_edge(start + i, start + i + 1, c)
    return g


def test_add_edge_basics():
    g = add_edge(ColoredGraph.empty(), 0, 1, RED)
    assert g.color_of(0, 1) is RED
    assert g.vertices == {0, 1}
    g2 = add_edge(g, 1, 2, BLUE)
    assert g2.color_of(0, 1) is RED and g2.color_of(1, 2) is BLUE
    # the original graph is untouched
    assert g.edge_count == 1


def test_add_edge_rejects_loop_and_recolor():
    g = add_edge(ColoredGraph.empty(), 0, 1, RED)
    with pytest.raises(DuplicateEdgeError):
        add_edge(g, 0, 1, BLUE)
    with pytest.raises(DuplicateEdgeError):
        add_edge(g, 1, 0, RED)
    with pytest.raises(LoopEdgeError):
        add_edge(g, 2, 2, RED)


def test_json_round_trip():
    g = add_edge(add_edge(ColoredGraph.empty(), 0, 1, RED), 1, 4, BLUE)
    doc = g.to_json()
    assert doc == {"vertices": 5, "edges": [[0, 1, "R"], [1, 4, "B"]]}
    g2 = ColoredGraph.from_json(doc)
    assert g2.color_of(0, 1) is RED and g2.color_of(1, 4) is BLUE
    assert g2.vertex_count == 5  # ids below the bound exist as isolated vertices


def test_contains_star():
    g = ColoredGraph.empty()
    for leaf in (1, 2, 3):
        g = g.with_edge(0, leaf, RED)
    assert contains_target(g, RED, star(3))
    assert not contains_target(g, BLUE, star(1))
    assert not contains_target(ColoredGraph.empty(), RED, star(1))


def test_contains_path_and_order_conventions():
    g = pathgraph([BLUE] * 4)  # blue P5
    assert contains_target(g, BLUE, path(5))
    assert not contains_target(g, BLUE, path(6))
    assert contains_target(g, BLUE, path(1))
    assert contains_target(g, RED, path(1))  # vertices exist
    assert not contains_target(ColoredGraph.empty(), RED, path(1))
    assert longest_path_order(ColoredGraph.empty(), RED) == 0
    assert longest_path_order(g, RED) == 1


def test_mixed_endgame_board_has_blue_p5():
    # blue v1v2, v1v3, v2v4, xv3; red v2v3, v3v4: contains a blue P5
    g = ColoredGraph.empty()
    for u, v in ((1, 2), (1, 3), (2, 4)):
        g = g.with_edge(u, v, BLUE)
    g = g.with_edge(5, 3, BLUE)  # x = 5
    g = g.with_edge(2, 3, RED).with_edge(3, 4, RED)
    assert contains_target(g, BLUE, path(5))
    assert not contains_target(g, RED, star(3))


def test_longest_path_on_cycles():
    tri = ColoredGraph(edges={(0, 1): BLUE, (1, 2): BLUE, (0, 2): BLUE})
    assert longest_path_order(tri, BLUE) == 3
    c6 = ColoredGraph(edges={(i, (i + 1) % 6): BLUE for i in range(6)})
    assert longest_path_order(c6, BLUE) == 6


def test_longest_path_matches_brute_force():
    rng = random.Random(42)
    for _ in range(1000):
        g = random_colored_graph(rng, max_vertices=10)
        for color in (RED, BLUE):
            assert longest_path_order(g, color) == brute_longest_path_order(g, color)


def test_longest_path_vertices_is_a_real_path():
    rng = random.Random(7)
    for _ in range(300):
        g = random_colored_graph(rng, max_vertices=9)
        seq = longest_path_vertices(g, BLUE)
        assert len(set(seq)) == len(seq)
        for a, b in zip(seq, seq[1:]):
            assert g.color_of(a, b) is BLUE


def test_contains_path_equivalent_to_order():
    rng = random.Random(3)
    for _ in range(200):
        g = random_colored_graph(rng, max_vertices=8)
        order = longest_path_order(g, BLUE)
        for n in range(1, 9):
            assert contains_target(g, BLUE, path(n)) == (order >= n)


def test_cycle_detection():
    c5 = ColoredGraph(edges={(i, (i + 1) % 5): RED for i in range(5)})
    assert contains_target(c5, RED, cycle(5))
    assert not contains_target(c5, RED, cycle(3))
    assert not contains_target(c5, RED, cycle(4))
    assert has_cycle_with_length_in(c5, RED, 3, 5)
    assert not has_cycle_with_length_in(c5, RED, 3, 4)
    assert not has_cycle_with_length_in(c5, BLUE, 3, 5)


def test_matching_and_clique():
    g = ColoredGraph(edges={(0, 1): RED, (2, 3): RED, (4, 5): RED, (1, 2): RED})
    assert contains_target(g, RED, matching(3))
    assert not contains_target(g, RED, matching(4))
    k4_edges = {(u, v): BLUE for u in range(4) for v in range(u + 1, 4)}
    k4 = ColoredGraph(edges=k4_edges)
    assert contains_target(k4, BLUE, clique(4))
    assert contains_target(k4, BLUE, clique(3))
    assert not contains_target(k4, BLUE, clique(5))
    assert not contains_target(k4, RED, clique(2))


def test_explicit_subgraph():
    # a triangle with a pendant, searched inside K4
    pattern = explicit([(0, 1), (1, 2), (0, 2), (2, 3)])
    k4 = ColoredGraph(edges={(u, v): BLUE for u in range(4) for v in range(u + 1, 4)})
    assert contains_target(k4, BLUE, pattern)
    tri = ColoredGraph(edges={(0, 1): BLUE, (1, 2): BLUE, (0, 2): BLUE})
    assert not contains_target(tri, BLUE, pattern)
    with pytest.raises(UnsupportedTargetError):
        explicit([(i, i + 1) for i in range(11)])


def test_parse_and_format_targets():
    for text, kind, size in [("S3", "star", 3), ("P7", "path", 7), ("C4", "cycle", 4),
                             ("K3", "clique", 3), ("M2", "matching", 2)]:
        t = parse_target(text)
        assert (t.kind, t.size) == (kind, size)
        assert t.format() == text
    with pytest.raises(UnsupportedTargetError):
        parse_target("Q3")
    with pytest.raises(UnsupportedTargetError):
        parse_target("P0")
    with pytest.raises(UnsupportedTargetError):
        parse_target("C2")


def test_creates_red_violation_star():
    g = ColoredGraph(edges={(0, 1): RED, (0, 2): RED})
    assert creates_red_violation(g, 0, 3, 10)  # third red edge at 0
    assert not creates_red_violation(g, 1, 2, 4)  # C3 needs 3 <= floor(4/2)=2: allowed
    assert creates_red_violation(g, 1, 2, 7)  # closes a C3, 3 <= floor(7/2)


def test_creates_red_violation_cycles_from_spec():
    p3 = pathgraph([RED, RED], start=1)  # red path 1-2-3
    assert creates_red_violation(p3, 1, 3, 7)
    p5 = pathgraph([RED] * 4, start=1)  # red path 1..5
    assert not creates_red_violation(p5, 1, 5, 8)  # C5 > floor(8/2)=4
    assert creates_red_violation(p5, 1, 5, 10)  # C5 <= 5
    assert not creates_red_violation(ColoredGraph.empty(), 0, 1, 2)


def test_creates_red_violation_matches_definition():
    rng = random.Random(11)
    for _ in range(400):
        g = random_colored_graph(rng, max_vertices=7, edge_prob=0.3)
        l = rng.randint(2, 9)
        pairs = [
            (u, v)
            for u in sorted(g.vertices)
            for v in sorted(g.vertices)
            if u < v and not g.has_edge(u, v)
        ]
        if not pairs:
            continue
        u, v = rng.choice(pairs)
        g2 = g.with_edge(u, v, RED)
        expected = contains_target(g2, RED, star(3)) or any(
            has_cycle_with_length_in(g2, RED, k, k) for k in range(3, l // 2 + 1)
        )
        assert creates_red_violation(g, u, v, l) == expected
