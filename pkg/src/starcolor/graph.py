"""Multigraph store, BFS spanning trees, blocks, outerplanar embeddings.

Edge ids are stable integers: deleting or contracting edges never renumbers
the survivors, so colorings computed on a derived graph can be carried back
to the graph they came from.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph input (bad edge, missing vertex, disconnected, ...)."""


class NotOuterplanarError(GraphError):
    """Raised by :func:`outerplanar_embed` with the offending block attached."""

    def __init__(self, message: str, block_vertices: Iterable[int] = ()):
        super().__init__(message)
        self.block_vertices = tuple(sorted(block_vertices))


class InternalContradiction(RuntimeError):
    """A property the construction guarantees did not hold.

    Either a bug, or (for the constructive colorers) evidence that an
    argument being implemented is incomplete.  Never caught silently.
    """


class Multigraph:
    """Undirected multigraph with stable integer edge ids.

    Parallel edges and pendant vertices are fine; self-loops are rejected.
    Treat instances as values once built: the transforming operations in
    this module return new graphs.
    """

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        self._ends: dict[int, tuple[int, int]] = {}
        self._inc: dict[int, list[int]] = {}
        self._next_id = 0
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    # -- construction -------------------------------------------------
    def add_vertex(self, v: int) -> None:
        self._inc.setdefault(v, [])

    def add_edge(self, u: int, v: int, eid: int | None = None) -> int:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if eid is None:
            eid = self._next_id
        elif eid in self._ends:
            raise GraphError(f"duplicate edge id {eid}")
        self._next_id = max(self._next_id, eid + 1)
        self.add_vertex(u)
        self.add_vertex(v)
        self._ends[eid] = (u, v)
        self._inc[u].append(eid)
        self._inc[v].append(eid)
        return eid

    def remove_edge(self, eid: int) -> None:
        u, v = self.endpoints(eid)
        del self._ends[eid]
        self._inc[u].remove(eid)
        self._inc[v].remove(eid)

    def copy(self) -> Multigraph:
        g = Multigraph()
        g._ends = dict(self._ends)
        g._inc = {v: list(es) for v, es in self._inc.items()}
        g._next_id = self._next_id
        return g

    # -- queries -------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self._inc)

    @property
    def m(self) -> int:
        return len(self._ends)

    @property
    def next_edge_id(self) -> int:
        return self._next_id

    def vertices(self) -> list[int]:
        return sorted(self._inc)

    def edge_ids(self) -> list[int]:
        return sorted(self._ends)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(eid, u, v)`` in edge-id order."""
        for e in sorted(self._ends):
            u, v = self._ends[e]
            yield e, u, v

    def has_vertex(self, v: int) -> bool:
        return v in self._inc

    def has_edge(self, eid: int) -> bool:
        return eid in self._ends

    def endpoints(self, eid: int) -> tuple[int, int]:
        try:
            return self._ends[eid]
        except KeyError:
            raise GraphError(f"unknown edge id {eid}") from None

    def other(self, eid: int, v: int) -> int:
        a, b = self.endpoints(eid)
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an endpoint of edge {eid}")

    def incident(self, v: int) -> tuple[int, ...]:
        return tuple(self._inc[v])

    def degree(self, v: int) -> int:
        return len(self._inc[v])

    def max_degree(self) -> int:
        return max((len(es) for es in self._inc.values()), default=0)

    def neighbors(self, v: int) -> list[int]:
        return sorted({self.other(e, v) for e in self._inc[v]})

    def edges_between(self, u: int, v: int) -> list[int]:
        return sorted(e for e in self._inc[u] if self.other(e, u) == v)

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self._ends.values():
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in self.vertices():
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for e in self._inc[x]:
                    y = self.other(e, x)
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def edge_subgraph(self, eids: Iterable[int], keep_vertices: bool = False) -> Multigraph:
        """Subgraph on the given edges (ids preserved)."""
        g = Multigraph(self.vertices() if keep_vertices else ())
        for e in sorted(eids):
            u, v = self.endpoints(e)
            g.add_edge(u, v, eid=e)
        g._next_id = max(g._next_id, self._next_id)
        return g

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return set(self._inc) == set(other._inc) and self._ends == other._ends


# ---------------------------------------------------------------------------
# BFS spanning tree
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LeveledTree:
    """Rooted spanning tree with BFS levels and ordered neighbor lists.

    ``ordered_neighbors[u][i]`` is the i-th neighbor of ``u`` in the tree;
    for a non-root vertex index 0 is its parent.  ``child_index[u] = i``
    iff ``u`` is the i-th neighbor of its parent.
    """

    graph: Multigraph
    root: int
    parent_edge: dict[int, int]
    level: dict[int, int]
    ordered_neighbors: dict[int, list[int]]
    child_index: dict[int, int]

    def parent(self, u: int) -> int:
        return self.graph.other(self.parent_edge[u], u)

    def edge_to(self, u: int, i: int) -> int:
        """Tree edge joining ``u`` and its i-th ordered neighbor."""
        w = self.ordered_neighbors[u][i]
        if u != self.root and i == 0:
            return self.parent_edge[u]
        return self.parent_edge[w]

    def tree_edges(self) -> set[int]:
        return set(self.parent_edge.values())

    def children(self, u: int) -> list[int]:
        nbrs = self.ordered_neighbors[u]
        return list(nbrs) if u == self.root else list(nbrs[1:])

    def by_level(self) -> list[int]:
        return sorted(self.level, key=lambda v: (self.level[v], v))


def bfs_spanning_tree(g: Multigraph, root: int) -> LeveledTree:
    """Breadth-first spanning tree of ``g``.

    Vertices are scanned in ascending id order, so each vertex's parent is
    its smallest-id neighbor on the previous level.  Among parallel edges
    the smallest id becomes the tree edge.
    """
    if not g.has_vertex(root):
        raise GraphError(f"root {root} is not a vertex")
    level = {root: 0}
    parent_edge: dict[int, int] = {}
    children: dict[int, list[int]] = {root: []}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        best: dict[int, int] = {}
        for e in g.incident(u):
            w = g.other(e, u)
            if w not in level and (w not in best or e < best[w]):
                best[w] = e
        for w in sorted(best):
            level[w] = level[u] + 1
            parent_edge[w] = best[w]
            children[u].append(w)
            children[w] = []
            queue.append(w)
    if len(level) != g.n:
        missing = min(v for v in g.vertices() if v not in level)
        raise GraphError(f"graph is disconnected: vertex {missing} unreachable from {root}")
    ordered: dict[int, list[int]] = {}
    child_index: dict[int, int] = {}
    for u, kids in children.items():
        head = [] if u == root else [g.other(parent_edge[u], u)]
        ordered[u] = head + kids
        offset = len(head)
        for i, w in enumerate(kids):
            child_index[w] = i + offset
    return LeveledTree(g, root, parent_edge, level, ordered, child_index)


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cutvertices: frozenset[int]
    bridges: frozenset[int]
    block_vertices: tuple[frozenset[int], ...]
    # cutvertex -> indices of the blocks containing it
    block_tree: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def block_of(self) -> dict[int, int]:
        return {e: i for i, blk in enumerate(self.blocks) for e in blk}


def block_decomposition(g: Multigraph) -> BlockDecomposition:
    """Biconnected components by iterative Hopcroft-Tarjan DFS.

    Parallel edges are treated as distinct, so a bundle of two or more
    parallel edges is a 2-cycle block rather than a bridge.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    edge_stack: list[int] = []
    raw_blocks: list[list[int]] = []
    clock = 0
    for s in g.vertices():
        if s in disc:
            continue
        disc[s] = low[s] = clock
        clock += 1
        stack = [(s, -1, iter(g.incident(s)))]
        while stack:
            v, pe, it = stack[-1]
            for e in it:
                if e == pe:
                    continue
                w = g.other(e, v)
                if w not in disc:
                    edge_stack.append(e)
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, iter(g.incident(w))))
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] >= disc[p]:
                        blk = []
                        while True:
                            f = edge_stack.pop()
                            blk.append(f)
                            if f == pe:
                                break
                        raw_blocks.append(blk)
    raw_blocks.sort(key=min)
    blocks = tuple(frozenset(b) for b in raw_blocks)
    bverts = tuple(frozenset(x for e in b for x in g.endpoints(e)) for b in blocks)
    membership: dict[int, list[int]] = {}
    for i, vs in enumerate(bverts):
        for v in vs:
            membership.setdefault(v, []).append(i)
    cut = frozenset(v for v, bs in membership.items() if len(bs) > 1)
    bridges = frozenset(next(iter(b)) for b in blocks if len(b) == 1)
    tree = {v: tuple(membership[v]) for v in sorted(cut)}
    return BlockDecomposition(blocks, cut, bridges, bverts, tree)


# ---------------------------------------------------------------------------
# Outerplanar embeddings
# ---------------------------------------------------------------------------

Dart = tuple[int, int, int]  # (tail, edge id, head)


@dataclass(frozen=True)
class OuterEmbedding:
    """Rotation system whose outer face passes through every vertex.

    Face tracing rule: entering vertex ``h`` along edge ``e``, leave along
    the edge that follows ``e`` cyclically in ``rotation[h]``.  ``boundary``
    is the outer face traced with that rule.
    """

    host: Multigraph
    rotation: dict[int, tuple[int, ...]]
    boundary: tuple[Dart, ...]

    def boundary_walk(self) -> tuple[int, ...]:
        return tuple(e for _, e, _ in self.boundary)

    def next_dart(self, dart: Dart) -> Dart:
        _, e, h = dart
        rot = self.rotation[h]
        f = rot[(rot.index(e) + 1) % len(rot)]
        return (h, f, self.host.other(f, h))

    def faces(self) -> list[tuple[Dart, ...]]:
        """All faces as dart cycles; the outer face comes first."""
        seen: set[tuple[int, int]] = set()
        faces = []
        starts = list(self.boundary[:1])
        for e, u, v in self.host.edges():
            starts += [(u, e, v), (v, e, u)]
        for start in starts:
            if (start[0], start[1]) in seen:
                continue
            face = []
            d = start
            while (d[0], d[1]) not in seen:
                seen.add((d[0], d[1]))
                face.append(d)
                d = self.next_dart(d)
            faces.append(tuple(face))
        return faces or [()]  # an edgeless graph still has its outer face

    def inner_faces(self) -> list[tuple[Dart, ...]]:
        return self.faces()[1:]


def _block_cycle_order(g: Multigraph, eids: frozenset[int], verts: frozenset[int]) -> list[int]:
    """Hamiltonian cycle of a 2-connected outerplanar block, or raise."""
    k = len(verts)
    if k == 2:
        return sorted(verts)
    pairs = {}
    for e in eids:
        u, v = g.endpoints(e)
        pairs.setdefault((min(u, v), max(u, v)), e)
    if len(pairs) > 2 * k - 3:
        raise NotOuterplanarError(f"block has {len(pairs)} distinct adjacencies on {k} vertices", verts)
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for u, v in pairs:
        adj[u].add(v)
        adj[v].add(u)

    def connected_without(a: int, b: int) -> bool:
        rest = [v for v in verts if v not in (a, b)]
        seen = {rest[0]}
        queue = [rest[0]]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y not in seen and y != a and y != b:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == len(rest)

    ring: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in pairs:
        if connected_without(u, v):
            ring[u].append(v)
            ring[v].append(u)
    if any(len(ns) != 2 for ns in ring.values()):
        raise NotOuterplanarError("block has no Hamiltonian outer boundary", verts)
    start = min(verts)
    order = [start]
    prev, cur = start, min(ring[start])
    while cur != start:
        order.append(cur)
        a, b = ring[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(order) != k:
        raise NotOuterplanarError("block has no Hamiltonian outer boundary", verts)
    pos = {v: i for i, v in enumerate(order)}
    chords = sorted(
        (min(pos[u], pos[v]), max(pos[u], pos[v]))
        for u, v in pairs
        if v not in ring[u]
    )
    # non-crossing check: intervals must nest or be disjoint
    open_stack: list[int] = []
    for i, j in sorted(chords, key=lambda c: (c[0], -c[1])):
        while open_stack and open_stack[-1] <= i:
            open_stack.pop()
        if open_stack and j > open_stack[-1]:
            raise NotOuterplanarError("chords of the outer cycle cross", verts)
        open_stack.append(j)
    return order


def outerplanar_embed(g: Multigraph) -> OuterEmbedding:
    """Embed a connected graph with every vertex on the outer face.

    Each block is drawn with its unique Hamiltonian cycle as boundary and
    its chords inside; blocks meeting at a cutvertex occupy consecutive
    sectors of that vertex's rotation.
    """
    if not g.is_connected():
        comps = g.components()
        raise GraphError(f"graph is disconnected: vertex {comps[1][0]} unreachable from {comps[0][0]}")
    if g.m == 0:
        return OuterEmbedding(g, {v: () for v in g.vertices()}, ())
    dec = block_decomposition(g)
    sectors: dict[int, list[int]] = {v: [] for v in g.vertices()}
    first_dart: Dart | None = None
    for eids, verts in zip(dec.blocks, dec.block_vertices):
        order = _block_cycle_order(g, eids, verts)
        k = len(order)
        pos = {v: i for i, v in enumerate(order)}
        local: dict[int, list[tuple[int, int, int]]] = {v: [] for v in verts}
        for e in eids:
            u, v = g.endpoints(e)
            for a, b in ((u, v), (v, u)):
                offset = (pos[b] - pos[a]) % k
                tie = e if pos[a] < pos[b] else -e
                local[a].append((offset, tie, e))
        for v in sorted(verts):
            sectors[v].extend(e for _, _, e in sorted(local[v]))
        if first_dart is None:
            a = order[0]
            e = min(local[a])[2]
            first_dart = (a, e, g.other(e, a))
    rotation = {v: tuple(es) for v, es in sectors.items()}
    emb = OuterEmbedding(g, rotation, ())
    assert first_dart is not None
    walk = [first_dart]
    d = emb.next_dart(first_dart)
    while d != first_dart:
        walk.append(d)
        d = emb.next_dart(d)
    emb = OuterEmbedding(g, rotation, tuple(walk))
    on_boundary = {x for d in walk for x in (d[0], d[2])}
    if on_boundary != set(g.vertices()):
        raise InternalContradiction("outer walk misses vertices")
    if g.n - g.m + len(emb.faces()) != 2:
        raise InternalContradiction("rotation system is not planar")
    return emb


# ---------------------------------------------------------------------------
# Contraction
# ---------------------------------------------------------------------------


def contract_edge(g: Multigraph, eid: int) -> tuple[Multigraph, dict[int, int]]:
    """Merge the endpoints of ``eid`` into the smaller one.

    Parallel edges survive as parallel edges; edges that would become loops
    (``eid`` and its parallel copies) are deleted.
    """
    u, v = g.endpoints(eid)
    keep, gone = min(u, v), max(u, v)
    mapping = {x: x for x in g.vertices()}
    mapping[gone] = keep
    h = Multigraph(x for x in g.vertices() if x != gone)
    for e, a, b in g.edges():
        a, b = mapping[a], mapping[b]
        if a != b:
            h.add_edge(a, b, eid=e)
    h._next_id = max(h._next_id, g.next_edge_id)
    return h, mapping


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_graph(text: str) -> Multigraph:
    """Parse ``p edge n m`` / ``e u v`` text; edge ids follow file order."""
    g: Multigraph | None = None
    expected = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if g is not None:
                raise ParseError(lineno, "duplicate header")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(lineno, "header must be 'p edge <n> <m>'")
            try:
                n, expected = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(lineno, "non-integer in header") from None
            g = Multigraph(range(1, n + 1))
        elif tag == "e":
            if g is None:
                raise ParseError(lineno, "edge before header")
            if len(parts) != 3:
                raise ParseError(lineno, "edge line must be 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "non-integer vertex id") from None
            if not (g.has_vertex(u) and g.has_vertex(v)):
                raise ParseError(lineno, f"vertex out of range 1..{g.n}")
            try:
                g.add_edge(u, v)
            except GraphError as exc:
                raise ParseError(lineno, str(exc)) from None
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if g is None:
        raise ParseError(0, "missing 'p edge' header")
    if g.m != expected:
        raise ParseError(0, f"header announces {expected} edges, found {g.m}")
    return g


def format_graph(g: Multigraph) -> str:
    """Write ``g`` in the text format; vertices must be 1..n, ids 0..m-1."""
    if g.vertices() != list(range(1, g.n + 1)):
        raise GraphError("vertex ids must be exactly 1..n to serialise")
    if g.edge_ids() != list(range(g.m)):
        raise GraphError("edge ids must be exactly 0..m-1 to serialise")
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u} {v}" for _, u, v in g.edges()]
    return "\n".join(lines) + "\n"
