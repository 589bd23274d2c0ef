import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bfs_distances
from starcolor.generators import cycle, path, random_outerplanar, random_subcubic_outerplanar, random_tree, star
from starcolor.graph import (
    GraphError,
    Multigraph,
    NotOuterplanarError,
    ParseError,
    bfs_spanning_tree,
    block_decomposition,
    contract_edge,
    format_graph,
    outerplanar_embed,
    parse_graph,
)


def k4():
    return Multigraph(range(1, 5), [(u, v) for u in range(1, 5) for v in range(u + 1, 5)])


def to_nx(g):
    h = nx.MultiGraph()
    h.add_nodes_from(g.vertices())
    for e, u, v in g.edges():
        h.add_edge(u, v, key=e)
    return h


# -- Multigraph ---------------------------------------------------------


def test_edge_ids_stable_under_removal():
    g = Multigraph(edges=[(1, 2), (2, 3), (3, 1)])
    g.remove_edge(1)
    assert g.edge_ids() == [0, 2]
    assert g.add_edge(2, 3) == 3


def test_parallel_edges_and_no_loops():
    g = Multigraph(edges=[(1, 2), (1, 2)])
    assert g.degree(1) == 2 and not g.is_simple()
    with pytest.raises(GraphError):
        g.add_edge(3, 3)


def test_degree_matches_incidence():
    g = random_outerplanar(30, 4)
    for v in g.vertices():
        assert g.degree(v) == len(g.incident(v))
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.m


# -- BFS tree -------------------------------------------------------------


def test_bfs_path_levels():
    t = bfs_spanning_tree(path(3), 1)
    assert [t.level[v] for v in (1, 2, 3)] == [0, 1, 2]
    assert t.ordered_neighbors[2] == [1, 3]
    assert t.child_index[2] == 0 and t.child_index[3] == 1


def test_bfs_star_child_indices():
    t = bfs_spanning_tree(star(4), 1)
    assert sorted(t.child_index[v] for v in range(2, 6)) == [0, 1, 2, 3]
    assert all(t.level[v] == 1 for v in range(2, 6))


def test_bfs_parent_first_then_ascending():
    t = bfs_spanning_tree(random_outerplanar(25, 3), 1)
    for u, nbrs in t.ordered_neighbors.items():
        kids = nbrs if u == t.root else nbrs[1:]
        assert kids == sorted(kids)
        if u != t.root:
            assert nbrs[0] == t.parent(u)
            assert t.ordered_neighbors[nbrs[0]][t.child_index[u]] == u


def test_bfs_disconnected_names_vertex():
    g = Multigraph([1, 2, 3], [(1, 2)])
    with pytest.raises(GraphError, match="vertex 3"):
        bfs_spanning_tree(g, 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 40), st.integers(0, 10_000))
def test_bfs_levels_are_distances(n, seed):
    g = random_outerplanar(n, seed, p_pendant=0.2)
    adj = {v: g.neighbors(v) for v in g.vertices()}
    root = g.vertices()[seed % g.n]
    t = bfs_spanning_tree(g, root)
    assert t.level == bfs_distances(adj, root)
    assert t.level == nx.single_source_shortest_path_length(to_nx(g), root)
    assert len(t.tree_edges()) == g.n - 1


# -- blocks ---------------------------------------------------------------


def test_blocks_tree_all_bridges():
    g = random_tree(20, 4, 1)
    dec = block_decomposition(g)
    assert dec.bridges == frozenset(g.edge_ids())


def test_blocks_single_cycle():
    dec = block_decomposition(cycle(6))
    assert len(dec.blocks) == 1 and not dec.cutvertices


def test_blocks_bowtie():
    g = Multigraph(edges=[(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 1)])
    dec = block_decomposition(g)
    assert len(dec.blocks) == 2 and dec.cutvertices == {1}


def test_double_edge_is_a_block_not_a_bridge():
    dec = block_decomposition(Multigraph(edges=[(1, 2), (1, 2), (2, 3)]))
    assert dec.bridges == {2}


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 40), st.integers(0, 10_000))
def test_blocks_match_networkx(n, seed):
    g = random_outerplanar(n, seed, p_pendant=0.3)
    dec = block_decomposition(g)
    h = nx.Graph(to_nx(g))
    ours = sorted(sorted(vs) for vs in dec.block_vertices)
    theirs = sorted(sorted(c) for c in nx.biconnected_components(h))
    assert ours == theirs
    assert dec.cutvertices == set(nx.articulation_points(h))
    assert sorted(e for blk in dec.blocks for e in blk) == g.edge_ids()


# -- embeddings -------------------------------------------------------------


def test_c5_boundary():
    emb = outerplanar_embed(cycle(5))
    assert len(emb.boundary) == 5
    assert len(emb.faces()) == 2


def test_k4_refused():
    with pytest.raises(NotOuterplanarError):
        outerplanar_embed(k4())


def test_k23_refused():
    g = Multigraph(range(1, 6), [(u, v) for u in (1, 2) for v in (3, 4, 5)])
    with pytest.raises(NotOuterplanarError):
        outerplanar_embed(g)


def test_fan_faces():
    # hexagon with a fan of chords from vertex 1: four triangular inner faces
    g = cycle(6)
    for v in (3, 4, 5):
        g.add_edge(1, v)
    emb = outerplanar_embed(g)
    inner = emb.inner_faces()
    assert len(inner) == 4 and all(len(f) == 3 for f in inner)
    assert g.n - g.m + len(emb.faces()) == 2


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 60), st.integers(0, 10_000), st.booleans())
def test_generated_graphs_embed(n, seed, subcubic):
    g = random_subcubic_outerplanar(n, seed) if subcubic else random_outerplanar(n, seed, p_pendant=0.2)
    emb = outerplanar_embed(g)
    seen = {x for d in emb.boundary for x in (d[0], d[2])}
    assert seen == set(g.vertices()) or g.m == 0
    counts = {}
    for _, e, _ in emb.boundary:
        counts[e] = counts.get(e, 0) + 1
    # bridges are walked twice, edges on a cycle once, chords never
    dec = block_decomposition(g)
    for e in g.edge_ids():
        assert counts.get(e, 0) in ((2,) if e in dec.bridges else (0, 1))
    assert g.n - g.m + len(emb.faces()) == 2
    assert nx.check_planarity(nx.Graph(to_nx(g)))[0]


# -- contraction --------------------------------------------------------------


def test_contract_triangle_edge_gives_double_edge():
    h, mapping = contract_edge(cycle(3), 0)
    assert h.n == 2 and h.m == 2 and not h.is_simple()
    assert mapping[2] == 1


def test_contract_square_chord():
    g = cycle(4)
    chord = g.add_edge(1, 3)
    h, _ = contract_edge(g, chord)
    assert h.degree(1) == 4 and h.m == 4
    dec = block_decomposition(h)
    assert dec.cutvertices == {1} and len(dec.blocks) == 2


def test_contract_pendant():
    g = path(4)
    h, _ = contract_edge(g, 2)
    assert sum(h.degree(v) for v in h.vertices()) == sum(g.degree(v) for v in g.vertices()) - 2


def test_contract_keeps_ids():
    g = cycle(5)
    h, _ = contract_edge(g, 2)
    assert h.edge_ids() == [0, 1, 3, 4]
    with pytest.raises(GraphError):
        contract_edge(g, 99)


# -- text format --------------------------------------------------------------


def test_roundtrip():
    g = random_outerplanar(12, 5)
    assert parse_graph(format_graph(g)) == g


def test_parse_comments_and_errors():
    g = parse_graph("c hello\np edge 3 2\ne 1 2\ne 2 3\n")
    assert g.m == 2 and g.endpoints(1) == (2, 3)
    with pytest.raises(ParseError, match="line 3"):
        parse_graph("p edge 3 2\ne 1 2\ne 2 9\n")
    with pytest.raises(ParseError):
        parse_graph("p edge 3 3\ne 1 2\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_graph("p edge 2 1\nx 1 2\n")
