"""Deterministic instance generators.

Every generator labels vertices ``1..n`` and assigns edge ids in creation
order, so the output can be written in the graph text format unchanged.
Random families take an explicit seed and use a private ``random.Random``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Multigraph

FAMILIES = (
    "spider",
    "c5_pendants",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "random_tree",
    "random_outerplanar",
    "random_subcubic_outerplanar",
    "random_light_cactus",
)


def spider(delta: int) -> Multigraph:
    """Root 1 of degree Delta, each neighbor carrying Delta-1 leaves."""
    if delta < 2:
        raise ValueError("spider requires Delta >= 2")
    g = Multigraph([1])
    arms = list(range(2, delta + 2))
    for a in arms:
        g.add_edge(1, a)
    nxt = delta + 2
    for a in arms:
        for _ in range(delta - 1):
            g.add_edge(a, nxt)
            nxt += 1
    return g


def c5_pendants() -> Multigraph:
    """5-cycle 1..5 with a pendant edge ``i -- i+5`` at every cycle vertex."""
    g = cycle(5)
    for i in range(1, 6):
        g.add_edge(i, i + 5)
    return g


def path(n: int) -> Multigraph:
    """Path on ``n`` vertices."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Multigraph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Multigraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Multigraph(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])


def star(n: int) -> Multigraph:
    """``K_{1,n}`` with center 1."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Multigraph(range(1, n + 2), [(1, i) for i in range(2, n + 2)])


def complete_bipartite(a: int, b: int) -> Multigraph:
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs a, b >= 1")
    left = range(1, a + 1)
    right = range(a + 1, a + b + 1)
    return Multigraph(range(1, a + b + 1), [(u, v) for u in left for v in right])


def random_tree(n: int, max_degree: int, seed: int) -> Multigraph:
    """Random recursive tree whose degrees never exceed ``max_degree``."""
    if n < 1:
        raise ValueError("random_tree needs n >= 1")
    if max_degree < 1 or (max_degree == 1 and n > 2):
        raise ValueError("degree cap too small for n")
    rng = random.Random(seed)
    g = Multigraph([1])
    open_vs = [1]
    for v in range(2, n + 1):
        u = rng.choice(open_vs)
        g.add_edge(u, v)
        if g.degree(u) >= max_degree:
            open_vs.remove(u)
        if max_degree > 1:
            open_vs.append(v)
    return g


@dataclass
class _Builder:
    rng: random.Random
    cap: int | None
    g: Multigraph = field(default_factory=Multigraph)

    def room(self, v: int, need: int = 1) -> bool:
        return self.cap is None or self.g.degree(v) + need <= self.cap


def _split_polygon(poly: list[int], rng: random.Random, p_chord: float, b: _Builder) -> None:
    """Add non-crossing chords to ``poly`` by recursive splitting."""
    stack = [poly]
    while stack:
        cur = stack.pop()
        k = len(cur)
        if k < 4 or rng.random() >= p_chord:
            continue
        cands = [(i, j) for i in range(k) for j in range(i + 2, k) if not (i == 0 and j == k - 1)]
        cands = [(i, j) for i, j in cands if b.room(cur[i]) and b.room(cur[j])]
        if not cands:
            continue
        i, j = rng.choice(cands)
        b.g.add_edge(cur[i], cur[j])
        stack.append(cur[i : j + 1])
        stack.append(cur[j:] + cur[: i + 1])


def _random_outerplanar(n: int, seed: int, cap: int | None, p_chord: float, p_pendant: float) -> Multigraph:
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    b = _Builder(rng, cap)
    g = b.g
    g.add_vertex(1)
    pendants = sum(rng.random() < p_pendant for _ in range(n - 1)) if n > 2 else 0
    core = n - pendants
    nxt = 2
    while nxt <= core:
        left = core - nxt + 1
        if g.m == 0 and left >= 2:
            size = rng.randint(3, min(left + 1, 10))
            anchor = 1
        else:
            size = 1 if left < 2 or rng.random() < 0.35 else rng.randint(3, min(left + 1, 10))
            anchors = [v for v in g.vertices() if b.room(v, 1 if size == 1 else 2)]
            if not anchors:
                size = 1
                anchors = [v for v in g.vertices() if b.room(v)]
            anchor = rng.choice(anchors)
        if size == 1:
            g.add_edge(anchor, nxt)
            nxt += 1
            continue
        poly = [anchor] + list(range(nxt, nxt + size - 1))
        nxt += size - 1
        rng.shuffle(poly)
        for i in range(size):
            g.add_edge(poly[i], poly[(i + 1) % size])
        _split_polygon(poly, rng, p_chord, b)
    while nxt <= n:
        # every outerplanar graph has a vertex of degree <= 2, so this is never empty
        anchors = [v for v in g.vertices() if b.room(v)]
        g.add_edge(rng.choice(anchors), nxt)
        nxt += 1
    return g


def random_outerplanar(n: int, seed: int, p_chord: float = 0.6, p_pendant: float = 0.0) -> Multigraph:
    """Connected simple outerplanar graph on ``n`` vertices.

    Blocks (polygons with random non-crossing chords, or single edges) are
    hung at random existing vertices.
    """
    return _random_outerplanar(n, seed, None, p_chord, p_pendant)


def random_subcubic_outerplanar(n: int, seed: int, p_chord: float = 0.6, p_pendant: float = 0.2) -> Multigraph:
    """As :func:`random_outerplanar` but with maximum degree at most 3."""
    g = _random_outerplanar(n, seed, 3, p_chord, p_pendant)
    assert g.max_degree() <= 3
    return g


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")


def generate(recipe: GenSpec) -> Multigraph:
    """Build the graph described by ``recipe`` (light cacti return their host)."""
    p = recipe.params
    f = recipe.family
    if f == "spider":
        return spider(p["delta"])
    if f == "c5_pendants":
        return c5_pendants()
    if f == "path":
        return path(p["n"])
    if f == "cycle":
        return cycle(p["n"])
    if f == "star":
        return star(p["n"])
    if f == "complete_bipartite":
        return complete_bipartite(p["a"], p["b"])
    if f == "random_tree":
        return random_tree(p["n"], p.get("delta", 4), recipe.seed)
    if f == "random_outerplanar":
        return random_outerplanar(p["n"], recipe.seed)
    if f == "random_subcubic_outerplanar":
        return random_subcubic_outerplanar(p["n"], recipe.seed)
    from .cactus import random_light_cactus

    return random_light_cactus(p["blocks"], recipe.seed).emb.host
