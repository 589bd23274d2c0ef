"""Exact star chromatic index by backtracking search.

The search colors edges in a fixed order, pruning any extension that makes
an improper pair or a 2-colored 4-path/4-cycle among the colored edges.
Since such witnesses persist under further extension, the pruning is sound
and the search is complete.  A color may be opened only as one more than
the largest color used so far, which removes palette permutations.
"""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal

from .graph import Multigraph
from .verify import EdgeColoring, StarState

SAT, UNSAT, LIMIT = "sat", "unsat", "limit"


@dataclass(frozen=True)
class SolverConfig:
    edge_order: Literal["bfs", "input", "random"] = "bfs"
    symmetry_breaking: bool = True
    node_limit: int | None = None
    time_limit: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.edge_order not in ("bfs", "input", "random"):
            raise ValueError(f"unknown edge order {self.edge_order!r}")


@dataclass(frozen=True)
class SolveResult:
    status: str
    k: int
    coloring: EdgeColoring | None = None
    nodes: int = 0

    @property
    def sat(self) -> bool:
        return self.status == SAT


class LimitExceeded(RuntimeError):
    """Search budget ran out; the index lies in ``[lower, upper]``."""

    def __init__(self, lower: int, upper: int, nodes: int):
        super().__init__(f"limit exceeded: star chromatic index in [{lower}, {upper}]")
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


def edge_order(g: Multigraph, cfg: SolverConfig) -> list[int]:
    """Edges in the order the search assigns them.

    ``bfs``: breadth-first from the smallest-id vertex of maximum degree,
    emitting each vertex's uncolored incident edges when it is dequeued.
    """
    if cfg.edge_order == "input":
        return g.edge_ids()
    rng = random.Random(cfg.seed)
    order: list[int] = []
    placed: set[int] = set()
    seen: set[int] = set()
    verts = g.vertices()
    if cfg.edge_order == "random":
        rng.shuffle(verts)
    dmax = g.max_degree()
    starts = [v for v in verts if g.degree(v) == dmax] + verts
    if cfg.edge_order == "bfs":
        starts = sorted(v for v in verts if g.degree(v) == dmax) + verts
    for s in starts:
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            inc = sorted(g.incident(u))
            if cfg.edge_order == "random":
                rng.shuffle(inc)
            for e in inc:
                if e not in placed:
                    placed.add(e)
                    order.append(e)
                w = g.other(e, u)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


class _Budget:
    def __init__(self, cfg: SolverConfig):
        self.node_limit = cfg.node_limit
        self.deadline = None if cfg.time_limit is None else time.monotonic() + cfg.time_limit
        self.nodes = 0

    def tick(self) -> bool:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            return False
        if self.deadline is not None and self.nodes % 512 == 0 and time.monotonic() > self.deadline:
            return False
        return True


class _OutOfBudget(Exception):
    pass


def star_colorable(g: Multigraph, k: int, cfg: SolverConfig | None = None) -> SolveResult:
    """Decide whether ``g`` has a star edge coloring with ``k`` colors."""
    cfg = cfg or SolverConfig()
    if k < 1:
        raise ValueError("k must be positive")
    order = edge_order(g, cfg)
    state = StarState(g)
    budget = _Budget(cfg)
    m = len(order)

    def search(i: int, top: int) -> bool:
        if i == m:
            return True
        if not budget.tick():
            raise _OutOfBudget
        e = order[i]
        limit = min(k, top + 1) if cfg.symmetry_breaking else k
        for c in range(1, limit + 1):
            if state.conflicts(e, c):
                continue
            state.assign(e, c)
            if search(i + 1, max(top, c)):
                return True
            state.unassign(e)
        return False

    try:
        found = search(0, 0)
    except _OutOfBudget:
        return SolveResult(LIMIT, k, None, budget.nodes)
    if not found:
        return SolveResult(UNSAT, k, None, budget.nodes)
    return SolveResult(SAT, k, EdgeColoring(k, dict(state.color)), budget.nodes)


def star_chromatic_index(
    g: Multigraph,
    cfg: SolverConfig | None = None,
    on_unsat: Callable[[SolveResult], None] | None = None,
    max_colors: int | None = None,
) -> tuple[int, EdgeColoring]:
    """Smallest ``k`` admitting a star edge coloring, with a witness.

    Ascends from the lower bound ``max_degree(g)``.  ``on_unsat`` sees each
    refuted ``k``.  Raises :class:`LimitExceeded` when the budget runs out
    and :class:`ValueError` when ``max_colors`` is exceeded without success.
    """
    cfg = cfg or SolverConfig()
    if g.m == 0:
        return 0, EdgeColoring(0, {})
    k = max(1, g.max_degree())
    nodes = 0
    while True:
        if max_colors is not None and k > max_colors:
            raise ValueError(f"no star edge coloring with at most {max_colors} colors")
        res = star_colorable(g, k, cfg)
        nodes += res.nodes
        if res.status == SAT:
            assert res.coloring is not None
            return k, res.coloring
        if res.status == LIMIT:
            raise LimitExceeded(k, g.m, nodes)
        if on_unsat is not None:
            on_unsat(res)
        k += 1


def conjecture_bound(delta: int) -> int:
    return 3 * delta // 2 + 1


@dataclass(frozen=True)
class ScanRow:
    index: int
    n: int
    m: int
    delta: int
    chi: int | None
    slack: int | None


@dataclass
class ScanReport:
    rows: list[ScanRow] = field(default_factory=list)
    skipped: int = 0

    @property
    def solved(self) -> list[ScanRow]:
        return [r for r in self.rows if r.chi is not None]

    @property
    def min_slack(self) -> int | None:
        slacks = [r.slack for r in self.solved]
        return min(slacks) if slacks else None

    @property
    def counterexamples(self) -> list[ScanRow]:
        return [r for r in self.solved if r.slack < 0]


def scan_conjecture(
    graphs: Iterable[Multigraph],
    cfg: SolverConfig | None = None,
    solver: Callable[[Multigraph, SolverConfig], tuple[int, EdgeColoring]] | None = None,
) -> ScanReport:
    """Exact index versus ``floor(3*Delta/2) + 1`` over a sample.

    Instances whose solve hits the budget are skipped and counted.
    """
    cfg = cfg or SolverConfig()
    solve = solver or star_chromatic_index
    report = ScanReport()
    for i, g in enumerate(graphs):
        delta = g.max_degree()
        try:
            chi, _ = solve(g, cfg)
        except LimitExceeded:
            report.skipped += 1
            report.rows.append(ScanRow(i, g.n, g.m, delta, None, None))
            continue
        report.rows.append(ScanRow(i, g.n, g.m, delta, chi, conjecture_bound(delta) - chi))
    return report
