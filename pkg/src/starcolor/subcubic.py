"""Star edge coloring of subcubic outerplanar graphs with 5 colors.

Pipeline: cut the graph at nontrivial bridges (both ends of degree >= 2);
each remaining part is either a star or a 2-connected core with pendant
edges.  A core's outer cycle gets colors 1..4 from the light cactus
obtained by contracting its chords (after adding virtual chords until no
inner face has two nonadjacent 2-vertices); chords and pendants get 5.
Parts are glued back along the bridges by permuting their palettes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations

from .cactus import LightCactus, cactus_embedding, color_light_cactus, is_light_cactus
from .graph import (
    GraphError,
    InternalContradiction,
    Multigraph,
    block_decomposition,
    outerplanar_embed,
)
from .trees import color_tree_graph
from .verify import EdgeColoring, check_proper, verify_star

CHORD_COLOR = 5


@dataclass(frozen=True)
class Part:
    vertices: frozenset[int]  # vertices of the component, bridge far ends excluded
    edges: frozenset[int]
    bridges: frozenset[int]  # nontrivial bridges, kept as pendant copies


@dataclass(frozen=True)
class BridgeSplit:
    parts: tuple[Part, ...]
    # bridge id -> the two parts holding a copy of it
    links: dict[int, tuple[int, int]]


@dataclass(frozen=True)
class ChordPlan:
    graph: Multigraph  # core plus virtual chords (pendants removed)
    outer_cycle: tuple[int, ...]
    cycle_edges: tuple[int, ...]  # cycle_edges[i] joins outer_cycle[i] and outer_cycle[i+1]
    real_chords: frozenset[int]
    virtual_chords: frozenset[int]
    pendants: frozenset[int]
    is_c3: bool

    @property
    def chords(self) -> frozenset[int]:
        return self.real_chords | self.virtual_chords


def _check_input(g: Multigraph) -> None:
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    if not g.is_simple():
        raise GraphError("subcubic coloring expects a simple graph")
    if g.max_degree() > 3:
        raise GraphError(f"maximum degree {g.max_degree()} exceeds 3")
    outerplanar_embed(g)


def split_nontrivial_bridges(g: Multigraph) -> BridgeSplit:
    """Parts of ``g`` between nontrivial bridges, each keeping its bridges."""
    dec = block_decomposition(g)
    cut = sorted(
        e for e in dec.bridges if all(g.degree(x) >= 2 for x in g.endpoints(e))
    )
    rest = g.copy()
    for e in cut:
        rest.remove_edge(e)
    comp_of: dict[int, int] = {}
    comps = rest.components()
    for i, vs in enumerate(comps):
        for v in vs:
            comp_of[v] = i
    edges: list[set[int]] = [set() for _ in comps]
    bridges: list[set[int]] = [set() for _ in comps]
    for e, u, _ in rest.edges():
        edges[comp_of[u]].add(e)
    links = {}
    for e in cut:
        u, v = g.endpoints(e)
        a, b = comp_of[u], comp_of[v]
        for i in (a, b):
            edges[i].add(e)
            bridges[i].add(e)
        links[e] = (a, b)
    parts = tuple(
        Part(frozenset(vs), frozenset(es), frozenset(bs)) for vs, es, bs in zip(comps, edges, bridges)
    )
    return BridgeSplit(parts, links)


def _core(g: Multigraph, eids: frozenset[int]) -> tuple[Multigraph, frozenset[int]]:
    """Split a cyclic part into its 2-connected core and its pendant edges."""
    h = g.edge_subgraph(eids)
    pendants = frozenset(e for e in eids if min(h.degree(x) for x in h.endpoints(e)) == 1)
    core = h.edge_subgraph(eids - pendants)
    dec = block_decomposition(core)
    if len(dec.blocks) != 1 or core.m < 3:
        raise InternalContradiction("bridge-free part is not a 2-connected core with pendants")
    return core, pendants


def maximize_chords(core: Multigraph, pendants: frozenset[int] = frozenset()) -> ChordPlan:
    """Join nonadjacent 2-vertices sharing an inner face until none remain.

    Each round adds the lexicographically least eligible pair over all inner
    faces, then splits that face.
    """
    emb = outerplanar_embed(core)
    walk = emb.boundary
    cycle = tuple(d[0] for d in walk)
    cycle_edges = tuple(d[1] for d in walk)
    if len(set(cycle)) != len(cycle) or len(cycle) != core.n:
        raise InternalContradiction("outer boundary of the core is not a Hamiltonian cycle")
    real = frozenset(core.edge_ids()) - frozenset(cycle_edges)
    gp = core.copy()
    if core.n == 3:
        return ChordPlan(gp, cycle, cycle_edges, real, frozenset(), pendants, True)
    faces = [[d[0] for d in f] for f in emb.inner_faces()]
    virtual = set()
    while True:
        best = None
        for fi, f in enumerate(faces):
            twos = sorted(v for v in f if gp.degree(v) == 2)
            for i, a in enumerate(twos):
                for b in twos[i + 1 :]:
                    if gp.edges_between(a, b):
                        continue
                    if best is None or (a, b) < best[0]:
                        best = ((a, b), fi)
        if best is None:
            break
        (a, b), fi = best
        virtual.add(gp.add_edge(a, b))
        f = faces.pop(fi)
        i, j = sorted((f.index(a), f.index(b)))
        faces += [f[i : j + 1], f[j:] + f[: i + 1]]
    for f in faces:
        twos = [v for v in f if gp.degree(v) == 2]
        if len(twos) > 2 or (len(twos) == 2 and not gp.edges_between(*twos)):
            raise InternalContradiction(f"face {f} keeps nonadjacent 2-vertices after maximization")
    return ChordPlan(gp, cycle, cycle_edges, real, frozenset(virtual), pendants, False)


def contract_to_cactus(plan: ChordPlan) -> tuple[LightCactus, dict[int, int]]:
    """Contract every chord; the outer cycle becomes the cactus boundary.

    Returns the cactus and the vertex map (original -> merged vertex).
    Cycle edges keep their ids.
    """
    if plan.is_c3:
        raise ValueError("the triangle is handled directly")
    rep = {v: v for v in plan.outer_cycle}
    for e in sorted(plan.chords):
        u, v = plan.graph.endpoints(e)
        if rep[u] != u or rep[v] != v:
            raise InternalContradiction("chords do not form a matching")
        rep[u] = rep[v] = min(u, v)
    host = Multigraph(sorted(set(rep.values())))
    k = len(plan.outer_cycle)
    walk = []
    for i, e in enumerate(plan.cycle_edges):
        a, b = rep[plan.outer_cycle[i]], rep[plan.outer_cycle[(i + 1) % k]]
        host.add_edge(a, b, eid=e)
        walk.append((a, e, b))
    emb = cactus_embedding(host, walk)
    w = is_light_cactus(emb)
    if w is not None:
        raise InternalContradiction(f"contracted graph is not a light cactus ({w})")
    return LightCactus(emb, block_decomposition(host)), rep


def _color_core(plan: ChordPlan) -> dict[int, int]:
    if plan.is_c3:
        col = {e: i + 1 for i, e in enumerate(plan.cycle_edges)}
    else:
        lc, _ = contract_to_cactus(plan)
        col = dict(color_light_cactus(lc).assignment)
    for e in plan.real_chords | plan.pendants:
        col[e] = CHORD_COLOR
    return col


def _check_color5(g: Multigraph, col: dict[int, int]) -> None:
    for e, c in col.items():
        if c != CHORD_COLOR:
            continue
        around = [col[f] for x in g.endpoints(e) for f in g.incident(x) if f != e and f in col]
        if len(set(around)) != len(around):
            raise InternalContradiction(f"edge {e} of color 5 sees a repeated color")


def _color_part(g: Multigraph, part: Part) -> dict[int, int]:
    h = g.edge_subgraph(part.edges)
    if h.is_forest():
        return dict(color_tree_graph(h).assignment)
    core, pendants = _core(g, part.edges)
    plan = maximize_chords(core, pendants)
    col = _color_core(plan)
    _check_color5(h, col)
    return col


def _merge_permutation(
    parent_at: set[int], bridge_color: int, child_bridge: int, child_at: set[int]
) -> dict[int, int]:
    others = [c for c in range(1, 6) if c != child_bridge]
    targets = [c for c in range(1, 6) if c != bridge_color]
    for perm in permutations(targets):
        sigma = dict(zip(others, perm))
        sigma[child_bridge] = bridge_color
        if not {sigma[c] for c in child_at} & parent_at:
            return sigma
    raise InternalContradiction("no palette permutation separates the colors at a bridge")


def color_subcubic(g: Multigraph) -> EdgeColoring:
    """Star edge coloring of a connected subcubic outerplanar graph, <= 5 colors."""
    _check_input(g)
    if g.m == 0:
        return EdgeColoring(0, {})
    if g.is_forest():
        return color_tree_graph(g)
    split = split_nontrivial_bridges(g)
    cols = [_color_part(g, p) for p in split.parts]
    by_part: dict[int, list[int]] = {}
    for e, (a, b) in split.links.items():
        by_part.setdefault(a, []).append(e)
        by_part.setdefault(b, []).append(e)
    final: dict[int, int] = dict(cols[0])
    seen = {0}
    queue = deque([0])
    while queue:
        p = queue.popleft()
        for e in sorted(by_part.get(p, [])):
            a, b = split.links[e]
            q = b if a == p else a
            if q in seen:
                continue
            seen.add(q)
            u = next(x for x in g.endpoints(e) if x in split.parts[p].vertices)
            v = g.other(e, u)
            parent_at = {final[f] for f in g.incident(u) if f != e}
            child_at = {cols[q][f] for f in g.incident(v) if f != e}
            sigma = _merge_permutation(parent_at, final[e], cols[q][e], child_at)
            for f, c in cols[q].items():
                final[f] = sigma[c]
            queue.append(q)
    if len(seen) != len(split.parts):
        raise InternalContradiction("bridge-split parts are not connected by bridges")
    used = max(final.values())
    col = EdgeColoring(max(used, 1), final)
    if check_proper(g, col):
        raise InternalContradiction("subcubic coloring is improper")
    verdict = verify_star(g, col)
    if not verdict.ok:
        raise InternalContradiction(f"subcubic coloring fails verification: {verdict.violations[:3]}")
    return col


__all__ = [
    "BridgeSplit",
    "ChordPlan",
    "Part",
    "color_subcubic",
    "contract_to_cactus",
    "maximize_chords",
    "split_nontrivial_bridges",
]
