"""Star edge coloring of outerplanar graphs with floor(3*Delta/2) + 12 colors.

Layout of the palette (P = floor(3*Delta_T/2) for the BFS tree T):

    1..P          tree edges, via :func:`starcolor.trees.color_tree`
    P+1..P+3      horizontal edges on odd levels
    P+4..P+6      horizontal edges on even levels
    P+7..P+12     diagonal edges, two colors for each level class k mod 3
"""

from __future__ import annotations

from dataclasses import dataclass
from .graph import (
    GraphError,
    InternalContradiction,
    LeveledTree,
    Multigraph,
    OuterEmbedding,
    bfs_spanning_tree,
    outerplanar_embed,
)
from .trees import color_tree, tree_palette
from .verify import EdgeColoring, StarState, verify_star


@dataclass(frozen=True)
class SpanningDecomposition:
    tree: LeveledTree  # BFS tree of the tree-only subgraph, same root and levels
    horizontal: dict[int, frozenset[int]]
    diagonal: dict[int, frozenset[int]]


@dataclass(frozen=True)
class LevelGraph:
    level: int
    red_edges: frozenset[int]
    blue_edges: frozenset[int]
    vertices: frozenset[int]


@dataclass(frozen=True)
class OuterplanarResult:
    coloring: EdgeColoring
    reserved: int  # palette size before unused extra colors are dropped
    bound: int


def outerplanar_bound(delta: int) -> int:
    return tree_palette(delta) + 12


def _linear_forest(g: Multigraph, eids: frozenset[int]) -> bool:
    deg: dict[int, int] = {}
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in eids:
        u, v = g.endpoints(e)
        for x in (u, v):
            deg[x] = deg.get(x, 0) + 1
            if deg[x] > 2:
                return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _acyclic(g: Multigraph, eids: frozenset[int]) -> bool:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in eids:
        ru, rv = (find(x) for x in g.endpoints(e))
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def decompose(g: Multigraph, emb: OuterEmbedding | None, root: int) -> SpanningDecomposition:
    """BFS tree plus horizontal/diagonal classification of the other edges."""
    if emb is None:
        emb = outerplanar_embed(g)
    if emb.host is not g and emb.host != g:
        raise GraphError("embedding belongs to a different graph")
    if not g.is_simple():
        raise GraphError("outerplanar coloring expects a simple graph")
    full = bfs_spanning_tree(g, root)
    tree_ids = full.tree_edges()
    tree = bfs_spanning_tree(g.edge_subgraph(tree_ids, keep_vertices=True), root)
    horizontal: dict[int, set[int]] = {}
    diagonal: dict[int, set[int]] = {}
    for e, u, w in g.edges():
        if e in tree_ids:
            continue
        a, b = sorted((full.level[u], full.level[w]))
        if a == b:
            horizontal.setdefault(a, set()).add(e)
        elif b == a + 1:
            diagonal.setdefault(a, set()).add(e)
        else:
            raise InternalContradiction(f"edge {e} spans levels {a} and {b} of a BFS tree")
    hz = {k: frozenset(v) for k, v in sorted(horizontal.items())}
    dg = {k: frozenset(v) for k, v in sorted(diagonal.items())}
    for k, es in hz.items():
        if not _linear_forest(g, es):
            raise InternalContradiction(f"horizontal edges on level {k} are not a linear forest")
    dec = SpanningDecomposition(tree, hz, dg)
    _check_levels(g, dec)
    return dec


def level_graphs(dec: SpanningDecomposition) -> list[LevelGraph]:
    t = dec.tree
    out = []
    for k, blue in dec.diagonal.items():
        verts = frozenset(v for v, lv in t.level.items() if lv in (k, k + 1))
        red = frozenset(t.parent_edge[v] for v in verts if t.level[v] == k + 1)
        out.append(LevelGraph(k, red, blue, verts))
    return out


def _check_levels(g: Multigraph, dec: SpanningDecomposition) -> None:
    level = dec.tree.level
    for lg in level_graphs(dec):
        k = lg.level
        if not _acyclic(g, lg.red_edges | lg.blue_edges):
            raise InternalContradiction(f"level graph L_{k} has a cycle")
        blue_deg: dict[int, int] = {}
        for e in lg.blue_edges:
            for x in g.endpoints(e):
                blue_deg[x] = blue_deg.get(x, 0) + 1
        for x, d in blue_deg.items():
            cap = 2 if level[x] == k else 1
            if d > cap:
                raise InternalContradiction(f"vertex {x} has {d} blue edges in L_{k}")


def color_horizontal(dec: SpanningDecomposition, g: Multigraph, base: int) -> dict[int, int]:
    """Color each horizontal path 1,2,3,1,... from its smaller-id end.

    Odd levels use ``base+1..base+3``, even levels ``base+4..base+6``.
    """
    out: dict[int, int] = {}
    for k, es in dec.horizontal.items():
        offset = base + (1 if k % 2 else 4)
        adj: dict[int, list[int]] = {}
        for e in es:
            for x in g.endpoints(e):
                adj.setdefault(x, []).append(e)
        done: set[int] = set()
        ends = sorted(x for x, inc in adj.items() if len(inc) == 1)
        for start in ends:
            if adj[start][0] in done:
                continue
            v, prev, i = start, None, 0
            while True:
                nxt = [e for e in adj[v] if e != prev]
                if not nxt:
                    break
                e = nxt[0]
                out[e] = offset + i % 3
                done.add(e)
                i += 1
                prev, v = e, g.other(e, v)
    return out


def color_diagonal(dec: SpanningDecomposition, g: Multigraph, base: int, colored: dict[int, int]) -> dict[int, int]:
    """Two colors per level for the diagonal edges.

    Level ``k`` draws from ``base + 6 + 2*(k mod 3) + {1, 2}``.  Within a level the
    edges at vertices carrying two diagonals go first, then the rest, each
    taking the first palette color that creates no violation with what is
    already colored.  A level where this greedy pass gets stuck is redone
    by exhaustive search over its 2-colorings.
    """
    state = StarState(g, colored)
    out: dict[int, int] = {}
    level = dec.tree.level
    for k, es in dec.diagonal.items():
        pal = (base + 7 + 2 * (k % 3), base + 8 + 2 * (k % 3))
        at_top: dict[int, list[int]] = {}
        for e in es:
            for x in g.endpoints(e):
                if level[x] == k:
                    at_top.setdefault(x, []).append(e)
        first = [e for x in sorted(at_top) if len(at_top[x]) == 2 for e in sorted(at_top[x])]
        order = first + sorted(set(es) - set(first))
        placed = []
        stuck = False
        for e in order:
            for c in pal:
                if not state.conflicts(e, c):
                    state.assign(e, c)
                    placed.append(e)
                    break
            else:
                stuck = True
                break
        if stuck:
            for e in placed:
                state.unassign(e)
            if not _exhaustive_level(state, order, pal):
                raise InternalContradiction(f"no 2-coloring of the diagonal edges on level {k}")
        for e in order:
            out[e] = state.color[e]
    return out


def _exhaustive_level(state: StarState, order: list[int], pal: tuple[int, int]) -> bool:
    def go(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        for c in pal:
            if not state.conflicts(e, c):
                state.assign(e, c)
                if go(i + 1):
                    return True
                state.unassign(e)
        return False

    return go(0)


def color_outerplanar_full(g: Multigraph, root: int | None = None) -> OuterplanarResult:
    """Color ``g`` and report the reserved palette alongside the coloring."""
    if g.m == 0:
        return OuterplanarResult(EdgeColoring(0, {}), 0, outerplanar_bound(0))
    emb = outerplanar_embed(g)
    if root is None:
        dmax = g.max_degree()
        root = min(v for v in g.vertices() if g.degree(v) == dmax)
    dec = decompose(g, emb, root)
    tree_col = color_tree(dec.tree)
    base = tree_col.palette_size
    colors = dict(tree_col.assignment)
    colors.update(color_horizontal(dec, g, base))
    colors.update(color_diagonal(dec, g, base, colors))
    reserved = base + 12
    bound = outerplanar_bound(g.max_degree())
    if reserved > bound:
        raise InternalContradiction(f"reserved palette {reserved} exceeds bound {bound}")
    extras = sorted({c for c in colors.values() if c > base})
    remap = {c: base + i + 1 for i, c in enumerate(extras)}
    final = {e: remap.get(c, c) for e, c in colors.items()}
    col = EdgeColoring(base + len(extras), final)
    verdict = verify_star(g, col)
    if not verdict.ok:
        raise InternalContradiction(f"outerplanar coloring fails verification: {verdict.violations[:3]}")
    return OuterplanarResult(col, reserved, bound)


def color_outerplanar(g: Multigraph, root: int | None = None) -> EdgeColoring:
    """Star edge coloring of a connected simple outerplanar graph."""
    return color_outerplanar_full(g, root).coloring


__all__ = [
    "LevelGraph",
    "OuterplanarResult",
    "SpanningDecomposition",
    "color_diagonal",
    "color_horizontal",
    "color_outerplanar",
    "color_outerplanar_full",
    "decompose",
    "level_graphs",
    "outerplanar_bound",
]
