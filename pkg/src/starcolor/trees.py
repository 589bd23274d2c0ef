"""Star edge coloring of trees with floor(3*Delta/2) colors.

The tree is padded so every inner vertex has degree exactly Delta, the
root's edges get colors 1..Delta, and then each vertex ``u`` (level by
level) colors its child edges from its parent ``p``:

* children ``n_1 .. n_{ceil(Delta/2)-1}`` copy the colors of the parent's
  edges to ``n_j(p)`` with ``j = (t(u) + i) mod Delta``;
* children ``n_{Delta-1} .. n_{ceil(Delta/2)}`` take, in ascending order,
  the ``floor(Delta/2)`` colors missing at ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import GraphError, InternalContradiction, LeveledTree, Multigraph, bfs_spanning_tree
from .verify import EdgeColoring


@dataclass(frozen=True)
class PaddedTree:
    base: LeveledTree  # leveled tree of the padded graph
    virtual_edges: frozenset[int]
    target_degree: int


def tree_palette(delta: int) -> int:
    return 3 * delta // 2


def spider_lower_bound(delta: int) -> int:
    """Colors forced on the spider: ``Delta + ceil((Delta-1)/2)``.

    With the root edges colored 1..Delta, colors from that range can sit on
    at most Delta(Delta-1)/2 of the Delta(Delta-1) leaf edges, and each extra
    color covers at most Delta of them.
    """
    if delta < 2:
        raise ValueError("spider needs Delta >= 2")
    return delta + -(-(delta - 1) // 2)


def _check_tree(t: LeveledTree) -> None:
    g = t.graph
    if g.m != g.n - 1 or len(t.parent_edge) != g.m:
        raise GraphError("input is not a tree (it has a cycle)")


def pad_to_regular(t: LeveledTree) -> PaddedTree:
    """Add virtual leaves so the root and all inner vertices reach degree Delta.

    The root is padded even when it is a leaf of the input, since the first
    step reads all Delta of its edge colors.
    """
    _check_tree(t)
    g = t.graph
    delta = g.max_degree()
    h = g.copy()
    parent_edge = dict(t.parent_edge)
    level = dict(t.level)
    ordered = {v: list(ns) for v, ns in t.ordered_neighbors.items()}
    child_index = dict(t.child_index)
    virtual = set()
    fresh = max(g.vertices()) + 1
    for u in t.by_level():
        deg = g.degree(u)
        if deg < 2 and u != t.root:
            continue
        for _ in range(delta - deg):
            e = h.add_edge(u, fresh)
            virtual.add(e)
            parent_edge[fresh] = e
            level[fresh] = level[u] + 1
            child_index[fresh] = len(ordered[u])
            ordered[u].append(fresh)
            ordered[fresh] = [u]
            fresh += 1
    base = LeveledTree(h, t.root, parent_edge, level, ordered, child_index)
    return PaddedTree(base, frozenset(virtual), delta)


def _color_path(t: LeveledTree) -> EdgeColoring:
    g = t.graph
    start = min(v for v in g.vertices() if g.degree(v) == 1)
    colors = {}
    prev_edge, v, i = None, start, 0
    while True:
        nxt = [e for e in g.incident(v) if e != prev_edge]
        if not nxt:
            break
        e = nxt[0]
        colors[e] = i % 3 + 1
        i += 1
        prev_edge, v = e, g.other(e, v)
    return EdgeColoring(3, colors)


def color_tree(t: LeveledTree) -> EdgeColoring:
    """Star edge coloring of the tree ``t.graph`` with floor(3*Delta/2) colors."""
    _check_tree(t)
    g = t.graph
    if g.m == 0:
        raise GraphError("tree has no edges")
    delta = g.max_degree()
    if delta == 1:
        return EdgeColoring(1, {e: 1 for e in g.edge_ids()})
    if delta == 2:
        return _color_path(t)

    padded = pad_to_regular(t)
    pt = padded.base
    palette = tree_palette(delta)
    full = set(range(1, palette + 1))
    phi: dict[int, int] = {}
    at: dict[int, set[int]] = {v: set() for v in pt.graph.vertices()}

    def put(e: int, c: int) -> None:
        phi[e] = c
        for x in pt.graph.endpoints(e):
            at[x].add(c)

    root = pt.root
    for i in range(delta):
        put(pt.edge_to(root, i), i + 1)

    copied = (delta + 1) // 2 - 1
    fresh = delta // 2
    if copied + fresh != delta - 1:
        raise InternalContradiction("child edge counts do not add up to Delta - 1")
    for u in pt.by_level():
        if u == root or len(pt.ordered_neighbors[u]) == 1:
            continue
        p = pt.parent(u)
        if len(at[p]) != delta:
            raise InternalContradiction(f"parent {p} of {u} is not fully colored")
        tu = pt.child_index[u]
        for i in range(1, copied + 1):
            j = (tu + i) % delta
            if j == tu:
                raise InternalContradiction("copy step would reuse the parent edge color")
            put(pt.edge_to(u, i), phi[pt.edge_to(p, j)])
        free = sorted(full - at[p])
        if len(free) != fresh:
            raise InternalContradiction(f"expected {fresh} free colors at {p}, found {len(free)}")
        for i in range(1, fresh + 1):
            put(pt.edge_to(u, delta - i), free[i - 1])

    out = {e: phi[e] for e in g.edge_ids()}
    return EdgeColoring(palette, out)


def color_tree_graph(g: Multigraph, root: int | None = None) -> EdgeColoring:
    """Convenience wrapper: root defaults to the smallest max-degree vertex."""
    if root is None:
        dmax = g.max_degree()
        root = min(v for v in g.vertices() if g.degree(v) == dmax)
    return color_tree(bfs_spanning_tree(g, root))
