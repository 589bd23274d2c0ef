"""Independent reference implementations used only by the tests.

Nothing here imports the checking code under test: violations are found by
enumerating vertex sequences directly, the star chromatic index by trying
every assignment of ``k`` colors.
"""

from __future__ import annotations

from collections import deque
from itertools import product

import numpy as np


def naive_improper(edges: dict[int, tuple[int, int]], col: dict[int, int]) -> set[frozenset[int]]:
    out = set()
    ids = sorted(edges)
    for i, e in enumerate(ids):
        for f in ids[i + 1 :]:
            if set(edges[e]) & set(edges[f]) and col[e] == col[f]:
                out.add(frozenset((e, f)))
    return out


def alternating_walks(edges: dict[int, tuple[int, int]]) -> list[tuple[int, int, int, int]]:
    """Edge sequences (in walk order) of all 4-edge paths and 4-cycles."""
    between: dict[tuple[int, int], list[int]] = {}
    verts = set()
    for e, (u, v) in edges.items():
        between.setdefault((u, v), []).append(e)
        between.setdefault((v, u), []).append(e)
        verts |= {u, v}
    seqs = set()
    for w, x, y, z, t in product(sorted(verts), repeat=5):
        if len({w, x, y, z}) < 4 or t in (x, y, z):
            continue
        legs = [between.get(p, []) for p in ((w, x), (x, y), (y, z), (z, t))]
        for es in product(*legs):
            if len(set(es)) == 4:
                seqs.add(es)
    return sorted(seqs)


def naive_bichromatic(edges: dict[int, tuple[int, int]], col: dict[int, int]) -> set[tuple[str, frozenset[int]]]:
    found = set()
    for es in alternating_walks(edges):
        a, b, c, d = (col[e] for e in es)
        if a == c and b == d and a != b:
            u0 = set(edges[es[0]]) - set(edges[es[1]])
            u3 = set(edges[es[3]]) - set(edges[es[2]])
            kind = "cycle" if u0 and u0 == u3 else "path"
            found.add((kind, frozenset(es)))
    return found


def naive_is_star(edges: dict[int, tuple[int, int]], col: dict[int, int]) -> bool:
    return not naive_improper(edges, col) and not naive_bichromatic(edges, col)


def _constraints(edges: dict[int, tuple[int, int]]):
    ids = sorted(edges)
    idx = {e: i for i, e in enumerate(ids)}
    pairs = [
        (idx[e], idx[f])
        for i, e in enumerate(ids)
        for f in ids[i + 1 :]
        if set(edges[e]) & set(edges[f])
    ]
    quads = [tuple(idx[e] for e in es) for es in alternating_walks(edges)]
    return len(ids), pairs, quads


def brute_force_colorable(edges: dict[int, tuple[int, int]], k: int, chunk: int = 1 << 18) -> bool:
    """Try all ``k**m`` assignments (first edge pinned to color 0)."""
    m, pairs, quads = _constraints(edges)
    if m == 0:
        return True
    total = k ** (m - 1)
    powers = k ** np.arange(m - 2, -1, -1, dtype=np.int64) if m > 1 else np.zeros(0, dtype=np.int64)
    for start in range(0, total, chunk):
        codes = np.arange(start, min(total, start + chunk), dtype=np.int64)
        cols = np.zeros((len(codes), m), dtype=np.int8)
        if m > 1:
            cols[:, 1:] = (codes[:, None] // powers[None, :]) % k
        ok = np.ones(len(codes), dtype=bool)
        for i, j in pairs:
            ok &= cols[:, i] != cols[:, j]
        for a, b, c, d in quads:
            ok &= ~((cols[:, a] == cols[:, c]) & (cols[:, b] == cols[:, d]))
        if ok.any():
            return True
    return False


def brute_force_index(edges: dict[int, tuple[int, int]]) -> int:
    if not edges:
        return 0
    k = 1
    while not brute_force_colorable(edges, k):
        k += 1
    return k


def bfs_distances(adj: dict[int, list[int]], root: int) -> dict[int, int]:
    dist = {root: 0}
    q = deque([root])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def proper_colorings_of_cycle(n: int, k: int):
    """All proper k-colorings of C_n as tuples (edge i joins i and i+1)."""
    for cs in product(range(1, k + 1), repeat=n):
        if all(cs[i] != cs[(i + 1) % n] for i in range(n)):
            yield cs

