"""Star edge coloring checks.

A coloring is a star edge coloring when it is proper and no path or cycle
with four edges alternates between just two colors.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graph import GraphError, Multigraph, OuterEmbedding, ParseError

IMPROPER = "improper-pair"
PATH4 = "bichromatic-4-path"
CYCLE4 = "bichromatic-4-cycle"


@dataclass(frozen=True)
class EdgeColoring:
    """Edge id -> color in ``1..palette_size`` (may be partial)."""

    palette_size: int
    assignment: Mapping[int, int]

    def __post_init__(self):
        if self.palette_size < 0:
            raise ValueError("palette size must be non-negative")
        bad = sorted(e for e, c in self.assignment.items() if not 1 <= c <= self.palette_size)
        if bad:
            raise ValueError(f"colors outside 1..{self.palette_size} on edges {bad}")
        object.__setattr__(self, "assignment", dict(self.assignment))

    def __getitem__(self, e: int) -> int:
        return self.assignment[e]

    def __len__(self) -> int:
        return len(self.assignment)

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def missing(self, g: Multigraph) -> list[int]:
        return [e for e in g.edge_ids() if e not in self.assignment]

    def restricted(self, eids: Iterable[int]) -> EdgeColoring:
        keep = set(eids)
        return EdgeColoring(self.palette_size, {e: c for e, c in self.assignment.items() if e in keep})


@dataclass(frozen=True, order=True)
class Violation:
    kind: str
    edges: tuple[int, ...]

    def __str__(self) -> str:
        return f"V {self.kind} " + " ".join(map(str, self.edges))


@dataclass(frozen=True)
class Verdict:
    uncolored: tuple[int, ...]
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.uncolored and not self.violations

    def __bool__(self) -> bool:
        return self.ok


class PartialColoringError(ValueError):
    def __init__(self, missing: list[int]):
        super().__init__(f"uncolored edges: {missing}")
        self.missing = missing


def _canonical_path(edges: list[int]) -> tuple[int, ...]:
    return min(tuple(edges), tuple(reversed(edges)))


def _canonical_cycle(edges: list[int]) -> tuple[int, ...]:
    n = len(edges)
    best = None
    for seq in (edges, list(reversed(edges))):
        for r in range(n):
            cand = tuple(seq[r:] + seq[:r])
            if best is None or cand < best:
                best = cand
    return best


def check_proper(g: Multigraph, col: EdgeColoring) -> list[Violation]:
    """Every pair of same-colored edges sharing an endpoint."""
    missing = col.missing(g)
    if missing:
        raise PartialColoringError(missing)
    found = set()
    for v in g.vertices():
        groups: dict[int, list[int]] = defaultdict(list)
        for e in g.incident(v):
            groups[col[e]].append(e)
        for es in groups.values():
            es.sort()
            for i in range(len(es)):
                for j in range(i + 1, len(es)):
                    found.add((es[i], es[j]))
    return [Violation(IMPROPER, pair) for pair in sorted(found)]


def _color_maps(g: Multigraph, col: Mapping[int, int]) -> dict[int, dict[int, int]]:
    at: dict[int, dict[int, int]] = {}
    for v in g.vertices():
        at[v] = {col[e]: e for e in g.incident(v) if e in col}
    return at


def find_bichromatic(g: Multigraph, col: EdgeColoring) -> list[Violation]:
    """All 2-colored 4-paths and 4-cycles of a proper coloring.

    Each witness is found from its second edge ``xy``: the third edge
    ``yz`` fixes the other color, and properness leaves at most one
    candidate for the first and fourth edges.  Runs in O(m * Delta).
    """
    if check_proper(g, col):
        raise ValueError("find_bichromatic requires a proper coloring")
    at = _color_maps(g, col.assignment)
    found: dict[tuple[int, ...], Violation] = {}
    for e2, a, b in g.edges():
        c2 = col[e2]
        for x, y in ((a, b), (b, a)):
            for c3, e3 in at[y].items():
                if c3 == c2:
                    continue
                e1 = at[x].get(c3)
                if e1 is None or e1 == e3:
                    continue
                z = g.other(e3, y)
                e4 = at[z].get(c2)
                if e4 is None:
                    continue
                w = g.other(e1, x)
                t = g.other(e4, z)
                if w == t:
                    key = _canonical_cycle([e1, e2, e3, e4])
                    found.setdefault(key, Violation(CYCLE4, key))
                else:
                    key = _canonical_path([e1, e2, e3, e4])
                    found.setdefault(key, Violation(PATH4, key))
    return sorted(found.values(), key=lambda v: (v.kind, sorted(v.edges), v.edges))


def verify_star(g: Multigraph, col: EdgeColoring) -> Verdict:
    missing = col.missing(g)
    if missing:
        return Verdict(tuple(missing), ())
    improper = check_proper(g, col)
    if improper:
        return Verdict((), tuple(improper))
    return Verdict((), tuple(find_bichromatic(g, col)))


def verify_boundary_star(emb: OuterEmbedding, col: EdgeColoring) -> list[Violation]:
    """Bichromatic windows of four distinct edges along the outer walk."""
    walk = emb.boundary
    n = len(walk)
    found: dict[tuple[int, ...], Violation] = {}
    if n < 4:
        return []
    for i in range(n):
        window = [walk[(i + j) % n] for j in range(4)]
        es = [d[1] for d in window]
        if len(set(es)) < 4:
            continue
        cs = [col[e] for e in es]
        if cs[0] == cs[2] and cs[1] == cs[3] and cs[0] != cs[1]:
            if window[0][0] == window[3][2]:
                key = _canonical_cycle(es)
                found.setdefault(key, Violation(CYCLE4, key))
            else:
                key = _canonical_path(es)
                found.setdefault(key, Violation(PATH4, key))
    return sorted(found.values(), key=lambda v: (v.kind, sorted(v.edges), v.edges))


class StarState:
    """Mutable partial coloring with an O(Delta^2) conflict test per edge.

    Used by search procedures that extend a coloring one edge at a time:
    ``conflicts(e, c)`` answers whether coloring ``e`` with ``c`` would
    create an improper pair or a 2-colored 4-path/4-cycle through ``e``
    among the edges colored so far.
    """

    def __init__(self, g: Multigraph, initial: Mapping[int, int] | None = None):
        self.g = g
        self.color: dict[int, int] = {}
        self.at: dict[int, dict[int, int]] = {v: {} for v in g.vertices()}
        for e, c in (initial or {}).items():
            self.assign(e, c)

    def assign(self, e: int, c: int) -> None:
        u, v = self.g.endpoints(e)
        self.color[e] = c
        self.at[u][c] = e
        self.at[v][c] = e

    def unassign(self, e: int) -> None:
        c = self.color.pop(e)
        u, v = self.g.endpoints(e)
        del self.at[u][c]
        del self.at[v][c]

    def conflicts(self, e: int, c: int) -> bool:
        g, at = self.g, self.at
        x, y = g.endpoints(e)
        if c in at[x] or c in at[y]:
            return True
        for p, q in ((x, y), (y, x)):
            # e in second position: w-p =a, p-q =c, q-z =a, z-t =c
            for a, e3 in at[q].items():
                e1 = at[p].get(a)
                if e1 is not None and e1 != e3 and c in at[g.other(e3, q)]:
                    return True
            # e in last position: p is the shared end with the third edge
            for a, e3 in at[p].items():
                y2 = g.other(e3, p)
                e2 = at[y2].get(c)
                if e2 is None:
                    continue
                e1 = at[g.other(e2, y2)].get(a)
                if e1 is not None and e1 != e3:
                    return True
        return False


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

_REPORT_TAGS = {"palette", "bound", "colors-used", "reserved", "UNSAT", "LIMIT"}


def parse_coloring(text: str) -> EdgeColoring:
    """Parse ``s <palette>`` / ``a <edge-id> <color>`` lines."""
    palette = None
    assignment: dict[int, int] = {}
    where: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c" or parts[0] in _REPORT_TAGS or parts[0].startswith("k="):
            continue
        tag = parts[0]
        try:
            if tag == "s" and len(parts) == 2:
                if palette is not None:
                    raise ParseError(lineno, "duplicate palette line")
                palette = int(parts[1])
            elif tag == "a" and len(parts) == 3:
                e, c = int(parts[1]), int(parts[2])
                if e in assignment:
                    raise ParseError(lineno, f"edge {e} assigned twice")
                assignment[e] = c
                where[e] = lineno
            else:
                raise ParseError(lineno, f"malformed line {raw.strip()!r}")
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(lineno, "non-integer field") from None
    if palette is None:
        raise ParseError(0, "missing 's <palette_size>' line")
    for e, c in assignment.items():
        if not 1 <= c <= palette:
            raise ParseError(where[e], f"color {c} of edge {e} outside 1..{palette}")
    try:
        return EdgeColoring(palette, assignment)
    except ValueError as exc:
        raise ParseError(0, str(exc)) from None


def format_coloring(col: EdgeColoring) -> str:
    lines = [f"s {col.palette_size}"]
    lines += [f"a {e} {c}" for e, c in sorted(col.assignment.items())]
    return "\n".join(lines) + "\n"


def check_edge_ids(g: Multigraph, col: EdgeColoring) -> None:
    extra = sorted(e for e in col.assignment if not g.has_edge(e))
    if extra:
        raise GraphError(f"coloring mentions unknown edge ids {extra}")
