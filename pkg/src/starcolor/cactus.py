"""Light cacti and their boundary-star 4-edge-coloring.

A light cactus is a cactus multigraph whose vertices have degree 2 or 4,
whose cutvertices are exactly the degree-4 vertices, and whose cycles each
carry at most two degree-2 vertices (adjacent ones, if two).  In an
outerplanar embedding the outer walk passes every edge exactly once, so the
embedding is fully described by that walk; the recursion below works on
walks directly.

Walk conventions: a dart is ``(tail, edge, head)``.  At a cutvertex ``v``
of the chosen block ``M`` the walk reads ``m_in, t_a, ..., t_b, m_out``:
``m_in``/``m_out`` are the edges of ``M`` at ``v``, ``t_a``/``t_b`` the
tentacles, and the stretch from ``t_a`` to ``t_b`` is the rest of the
cactus hanging at ``v``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import count
from typing import Iterator

from .graph import (
    BlockDecomposition,
    Dart,
    InternalContradiction,
    Multigraph,
    OuterEmbedding,
    block_decomposition,
    outerplanar_embed,
)
from .verify import EdgeColoring, check_proper, verify_boundary_star


@dataclass(frozen=True)
class LightCactus:
    emb: OuterEmbedding
    blocks: BlockDecomposition


@dataclass(frozen=True)
class Witness:
    rule: str
    items: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.rule}: {', '.join(map(str, self.items))}"


@dataclass(frozen=True)
class CactusPlan:
    block: int
    cutvertices: tuple[int, ...]
    tentacles: dict[int, tuple[int, int]]


class NotLightCactus(ValueError):
    def __init__(self, witness: Witness):
        super().__init__(f"not a light cactus ({witness})")
        self.witness = witness


# ---------------------------------------------------------------------------
# Recognition
# ---------------------------------------------------------------------------


def _is_cycle_block(g: Multigraph, eids: frozenset[int], verts: frozenset[int]) -> bool:
    if len(eids) != len(verts) or len(eids) < 2:
        return False
    deg = {v: 0 for v in verts}
    for e in eids:
        for x in g.endpoints(e):
            deg[x] += 1
    return all(d == 2 for d in deg.values())


def is_light_cactus(emb: OuterEmbedding) -> Witness | None:
    """``None`` if the embedded graph is a light cactus, else the broken rule."""
    g = emb.host
    if not g.is_connected():
        return Witness("disconnected", tuple(c[0] for c in g.components()))
    bad = [v for v in g.vertices() if g.degree(v) not in (2, 4)]
    if bad:
        return Witness("degree-not-2-or-4", tuple(bad))
    dec = block_decomposition(g)
    for i, (eids, verts) in enumerate(zip(dec.blocks, dec.block_vertices)):
        if len(eids) > 1 and not _is_cycle_block(g, eids, verts):
            return Witness("block-not-a-cycle", tuple(sorted(verts)))
    wrong = sorted(v for v in g.vertices() if (g.degree(v) == 4) != (v in dec.cutvertices))
    if wrong:
        return Witness("cutvertex-degree-mismatch", tuple(wrong))
    for eids, verts in zip(dec.blocks, dec.block_vertices):
        twos = sorted(v for v in verts if g.degree(v) == 2)
        if len(twos) > 2:
            return Witness("too-many-degree-2-on-cycle", tuple(twos))
        if len(twos) == 2:
            a, b = twos
            if not any(set(g.endpoints(e)) == {a, b} for e in eids):
                return Witness("degree-2-vertices-not-adjacent", tuple(twos))
    edges = [d[1] for d in emb.boundary]
    if sorted(edges) != g.edge_ids():
        return Witness("outer-walk-not-simple", tuple(sorted(set(g.edge_ids()) - set(edges))))
    return None


def light_cactus(emb: OuterEmbedding) -> LightCactus:
    w = is_light_cactus(emb)
    if w is not None:
        raise NotLightCactus(w)
    return LightCactus(emb, block_decomposition(emb.host))


def cactus_embedding(host: Multigraph, walk: list[Dart]) -> OuterEmbedding:
    """Embedding of a cactus whose outer walk (each edge once) is given.

    Each visit of the walk to ``v`` contributes the pair (incoming edge,
    outgoing edge) to the rotation at ``v``, in walk order.
    """
    n = len(walk)
    rot: dict[int, list[int]] = {v: [] for v in host.vertices()}
    for i in range(n):
        d_in, d_out = walk[i - 1], walk[i]
        if d_in[2] != d_out[0]:
            raise InternalContradiction("walk is not closed")
        rot[d_out[0]] += [d_in[1], d_out[1]]
    emb = OuterEmbedding(host, {v: tuple(es) for v, es in rot.items()}, tuple(walk))
    if host.n - host.m + len(emb.faces()) != 2:
        raise InternalContradiction("walk does not describe a planar embedding")
    return emb


# ---------------------------------------------------------------------------
# Coloring
# ---------------------------------------------------------------------------


def _base_coloring(walk: list[Dart]) -> dict[int, int]:
    """Lexicographically least proper 4-coloring with a star outer walk.

    Only used for cacti with at most one cutvertex (at most six edges).
    """
    edges = sorted({d[1] for d in walk})
    ends = {d[1]: (d[0], d[2]) for d in walk}
    pos: dict[int, list[int]] = {}
    for i, d in enumerate(walk):
        pos.setdefault(d[1], []).append(i)
    n = len(walk)
    col: dict[int, int] = {}

    def windows_ok(e: int) -> bool:
        for p in pos[e]:
            for s in range(p - 3, p + 1):
                es = [walk[(s + j) % n][1] for j in range(4)]
                if len(set(es)) < 4 or any(x not in col for x in es):
                    continue
                a, b, c, d = (col[x] for x in es)
                if a == c and b == d:
                    return False
        return True

    def go(i: int) -> bool:
        if i == len(edges):
            return True
        e = edges[i]
        used = {col[f] for f in col if set(ends[f]) & set(ends[e])}
        for c in range(1, 5):
            if c in used:
                continue
            col[e] = c
            if (n < 4 or windows_ok(e)) and go(i + 1):
                return True
            del col[e]
        return False

    if not go(0):
        raise InternalContradiction("small light cactus has no boundary-star 4-coloring")
    return col


def _visits(walk: list[Dart]) -> dict[int, list[int]]:
    """Vertex -> indices ``i`` such that the walk enters it with dart ``i``."""
    out: dict[int, list[int]] = {}
    for i, d in enumerate(walk):
        out.setdefault(d[2], []).append(i)
    return out


def _walk_graph(walk: list[Dart]) -> Multigraph:
    g = Multigraph()
    for t, e, h in walk:
        g.add_edge(t, h, eid=e)
    return g


def _check_local(lm_walk: list[tuple[int, bool]], col: dict[int, int]) -> None:
    """The two local properties required of the block-plus-tentacles coloring.

    ``lm_walk`` is the cyclic walk around ``M`` with each tentacle once,
    entries ``(edge, is_tentacle)``.
    """
    n = len(lm_walk)
    cs = [col[e] for e, _ in lm_walk]
    for i in range(n):
        window = {cs[(i + j) % n] for j in range(4)}
        if len(window) < 3:
            raise InternalContradiction("four consecutive edges around M use fewer than 3 colors")
    for i, (_, tent) in enumerate(lm_walk):
        if not tent:
            continue
        for step in (1, -1):
            trio = {cs[(i + step * j) % n] for j in range(3)}
            if len(trio) < 3:
                raise InternalContradiction("three consecutive edges from a tentacle repeat a color")


class _Fresh:
    def __init__(self, walk: list[Dart]):
        self.vertex = count(max(max(d[0], d[2]) for d in walk) + 1)
        self.edge = count(max(d[1] for d in walk) + 1)


def _choose_block(g: Multigraph, dec: BlockDecomposition) -> int:
    best, best_count = -1, -1
    for i, verts in enumerate(dec.block_vertices):
        cnt = len(verts & dec.cutvertices)
        if cnt > best_count:
            best, best_count = i, cnt
    return best


def _odd_pair(g: Multigraph, mdarts: list[Dart], cut: frozenset[int]) -> int:
    """Index in ``mdarts`` of the edge ``uv`` between the chosen cutvertex pair.

    ``u`` must be adjacent to a degree-2 vertex of ``M`` when ``M`` has one;
    among admissible pairs the lexicographically least ``(u, v)`` wins.
    """
    L = len(mdarts)
    has_two = any(d[0] not in cut for d in mdarts)
    best = None
    for j, (a, _, b) in enumerate(mdarts):
        if a not in cut or b not in cut:
            continue
        for u, v in ((a, b), (b, a)):
            if has_two:
                # the other M-edge at u
                k = (j - 1) % L if u == a else (j + 1) % L
                w = mdarts[k][0] if u == a else mdarts[k][2]
                if w in cut:
                    continue
            if best is None or (u, v) < best[0]:
                best = ((u, v), j)
    if best is None:
        raise InternalContradiction("odd block has no admissible pair of adjacent cutvertices")
    return best[1]


def _color_walk(walk: list[Dart], fresh: _Fresh) -> dict[int, int]:
    visits = _visits(walk)
    cut = frozenset(v for v, vs in visits.items() if len(vs) == 2)
    if len(cut) <= 1:
        return _base_coloring(walk)

    g = _walk_graph(walk)
    dec = block_decomposition(g)
    bi = _choose_block(g, dec)
    mset = dec.blocks[bi]
    mcut = dec.block_vertices[bi] & cut
    n = len(walk)
    midx = [i for i, d in enumerate(walk) if d[1] in mset]
    mdarts = [walk[i] for i in midx]
    L = len(mdarts)

    # tentacle stretches: between consecutive M darts around each cutvertex
    hang: dict[int, tuple[int, int]] = {}  # v -> (walk index of m_in, of m_out)
    for j in range(L):
        i_in, i_out = midx[j], midx[(j + 1) % L]
        v = walk[i_in][2]
        if v != walk[i_out][0]:
            raise InternalContradiction("M edges are not consecutive around the walk")
        if v in mcut:
            hang[v] = (i_in, i_out)
        elif (i_in + 1) % n != i_out:
            raise InternalContradiction(f"non-cutvertex {v} of M has a detour")

    col: dict[int, int] = {}
    ta: dict[int, int] = {}
    tb: dict[int, int] = {}
    for v, (i_in, i_out) in hang.items():
        ta[v] = walk[(i_in + 1) % n][1]
        tb[v] = walk[(i_out - 1) % n][1]
    tent_blocks = {v: {dec.block_of()[ta[v]], dec.block_of()[tb[v]]} for v in hang}
    if any(len(bs) != 1 for bs in tent_blocks.values()):
        raise InternalContradiction("tentacles of a cutvertex lie in different blocks")

    if L % 2 == 0:
        for j, d in enumerate(mdarts):
            col[d[1]] = 1 + j % 2
        for v in hang:
            col[ta[v]] = 3
            col[tb[v]] = 4
    else:
        j = _odd_pair(g, mdarts, mcut)
        a, e_uv, b = mdarts[j]
        col[e_uv] = 3
        # walk away from v starting at u, alternating 1, 2
        u_is_tail = _is_u_tail(g, mdarts, j, mcut)
        if u_is_tail:
            u, v = a, b
            seq = [(j - s) % L for s in range(1, L)]
        else:
            u, v = b, a
            seq = [(j + s) % L for s in range(1, L)]
        for s, k in enumerate(seq):
            col[mdarts[k][1]] = 1 + s % 2
        # 4 sits next to the 1-edge at u
        one_is_in_at_u = u_is_tail  # u = tail of uv: m_in(u) is the other M edge, colored 1
        for x in hang:
            if one_is_in_at_u:
                col[ta[x]], col[tb[x]] = 4, 3
            else:
                col[ta[x]], col[tb[x]] = 3, 4
        three_u = ta[u] if col[ta[u]] == 3 else tb[u]
        three_v = ta[v] if col[ta[v]] == 3 else tb[v]
        four_v = tb[v] if three_v == ta[v] else ta[v]
        deg2 = [x for x in dec.block_vertices[bi] if x not in cut]
        if L == 3 and deg2:
            col[three_u] = 2
            col[four_v] = 1
            col[three_v] = 4
        else:
            col[three_u] = 2
            col[three_v] = 1

    lm_walk: list[tuple[int, bool]] = []
    for j in range(L):
        i_in = midx[j]
        lm_walk.append((walk[i_in][1], False))
        x = walk[i_in][2]
        if x in hang:
            lm_walk += [(ta[x], True), (tb[x], True)]
    _check_local(lm_walk, col)
    for x in hang:
        at_x = {col[walk[hang[x][0]][1]], col[walk[hang[x][1]][1]], col[ta[x]], col[tb[x]]}
        if len(at_x) != 4:
            raise InternalContradiction(f"coloring of M is improper at cutvertex {x}")

    for x, (i_in, i_out) in sorted(hang.items()):
        stretch = []
        i = (i_in + 1) % n
        while i != i_out:
            stretch.append(walk[i])
            i = (i + 1) % n
        ux, ex, fx = next(fresh.vertex), next(fresh.edge), next(fresh.edge)
        sub = stretch + [(x, ex, ux), (ux, fx, x)]
        sub_col = _color_walk(sub, fresh)
        target = {
            sub_col[ta[x]]: col[ta[x]],
            sub_col[tb[x]]: col[tb[x]],
            sub_col[ex]: col[walk[i_out][1]],
            sub_col[fx]: col[walk[i_in][1]],
        }
        if len(target) != 4 or len(set(target.values())) != 4:
            raise InternalContradiction(f"no color permutation matches the block at {x}")
        for _, e, _ in stretch:
            col[e] = target[sub_col[e]]
    return col


def _is_u_tail(g: Multigraph, mdarts: list[Dart], j: int, cut: frozenset[int]) -> bool:
    """Whether the chosen ``u`` is the tail of dart ``j`` (the ``uv`` edge)."""
    a, _, b = mdarts[j]
    L = len(mdarts)
    has_two = any(d[0] not in cut for d in mdarts)
    cands = []
    for u, v, tail in ((a, b, True), (b, a, False)):
        if has_two:
            k = (j - 1) % L if tail else (j + 1) % L
            w = mdarts[k][0] if tail else mdarts[k][2]
            if w in cut:
                continue
        cands.append(((u, v), tail))
    return min(cands)[1]


def color_light_cactus(lc: LightCactus) -> EdgeColoring:
    """Proper 4-edge-coloring with no 2-colored 4-path along the outer walk."""
    walk = list(lc.emb.boundary)
    col = _color_walk(walk, _Fresh(walk)) if walk else {}
    out = EdgeColoring(4, col)
    g = lc.emb.host
    if check_proper(g, out) or verify_boundary_star(lc.emb, out):
        raise InternalContradiction("light cactus coloring fails its boundary check")
    return out


def plan(lc: LightCactus) -> CactusPlan | None:
    """The block the recursion would split at, or ``None`` for base cases."""
    walk = list(lc.emb.boundary)
    visits = _visits(walk)
    cut = frozenset(v for v, vs in visits.items() if len(vs) == 2)
    if len(cut) <= 1:
        return None
    dec = lc.blocks
    bi = _choose_block(lc.emb.host, dec)
    mset = dec.blocks[bi]
    n = len(walk)
    tents = {}
    for v in sorted(dec.block_vertices[bi] & cut):
        i_in = next(i for i in visits[v] if walk[i][1] in mset)
        i_out = (i_in + 1) % n
        j = i_out
        while walk[j][1] not in mset:
            j = (j + 1) % n
        tents[v] = (walk[i_out][1], walk[(j - 1) % n][1])
    return CactusPlan(bi, tuple(sorted(tents)), tents)


# ---------------------------------------------------------------------------
# Random instances
# ---------------------------------------------------------------------------


def _cycle_edges(vs: list[int]) -> Iterator[tuple[int, int]]:
    for i in range(len(vs)):
        yield vs[i], vs[(i + 1) % len(vs)]


def random_light_cactus(blocks: int, seed: int, max_len: int = 6) -> LightCactus:
    """Seeded light cactus with ``blocks`` cycle blocks (2-cycles allowed).

    New cycles hang at degree-2 vertices.  Each cycle keeps at most two
    adjacent degree-2 vertices; its other vertices are queued and must
    receive a block of their own, which the block budget always allows.
    """
    if blocks < 1:
        raise ValueError("need at least one block")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    pending: list[int] = []
    free2: list[int] = []
    nxt = count(1)
    left = blocks

    def make_cycle(anchor: int | None) -> None:
        nonlocal left
        left -= 1
        # at most `room` new vertices may become pending cutvertices
        room = left - len(pending)
        k_new_max = max_len - (anchor is not None)
        size_new = rng.randint(1 if anchor is not None else 2, max(1 if anchor is not None else 2, k_new_max))
        new = [next(nxt) for _ in range(size_new)]
        vs = ([anchor] if anchor is not None else []) + new
        # choose how many new vertices stay at degree 2 (0..2, adjacent)
        stay_max = min(2, len(new))
        stay = rng.randint(0, stay_max)
        while len(new) - stay > room and stay < stay_max:
            stay += 1
        if len(new) - stay > room:
            # trim the cycle so the budget is respected
            new = new[: stay + room]
            vs = ([anchor] if anchor is not None else []) + new
        if len(vs) < 2:
            new.append(next(nxt))
            vs.append(new[-1])
            stay = min(stay + 1, 2)
        # with an anchor, new[-1] and new[0] are not adjacent, so no wrap-around
        start = rng.randrange(len(new)) if anchor is None else rng.randrange(len(new) - stay + 1)
        keep = {new[(start + i) % len(new)] for i in range(stay)}
        edges.extend(_cycle_edges(vs))
        for x in new:
            (free2 if x in keep else pending).append(x)

    make_cycle(None)
    while left > 0:
        if pending:
            x = pending.pop(rng.randrange(len(pending)))
        else:
            x = free2.pop(rng.randrange(len(free2)))
        make_cycle(x)
    if pending:
        raise InternalContradiction("block budget exhausted with pending cutvertices")
    labels = list(range(1, len({v for e in edges for v in e}) + 1))
    rng.shuffle(labels)
    relabel = {}
    g = Multigraph()
    for u, v in edges:
        for x in (u, v):
            if x not in relabel:
                relabel[x] = labels[len(relabel)]
        g.add_edge(relabel[u], relabel[v])
    return light_cactus(outerplanar_embed(g))
