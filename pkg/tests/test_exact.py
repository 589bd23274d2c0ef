import pytest

from starcolor.exact import (
    LIMIT,
    SAT,
    UNSAT,
    LimitExceeded,
    SolverConfig,
    conjecture_bound,
    edge_order,
    scan_conjecture,
    star_chromatic_index,
    star_colorable,
)
from starcolor.generators import c5_pendants, complete_bipartite, cycle, path, random_outerplanar, spider, star
from starcolor.graph import Multigraph
from starcolor.verify import EdgeColoring, verify_star


def test_c5_decisions():
    assert star_colorable(cycle(5), 3).status == UNSAT
    res = star_colorable(cycle(5), 4)
    assert res.status == SAT and verify_star(cycle(5), res.coloring).ok


def test_single_edge():
    res = star_colorable(path(2), 1)
    assert res.sat and res.coloring.assignment == {0: 1}


def test_k33():
    g = complete_bipartite(3, 3)
    assert star_colorable(g, 5).status == UNSAT
    assert star_colorable(g, 6).sat


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_star_index_equals_degree(n):
    k, c = star_chromatic_index(star(n))
    assert k == n and verify_star(star(n), c).ok


def test_spider3_and_gadget():
    assert star_chromatic_index(spider(3))[0] == 4
    assert star_chromatic_index(c5_pendants())[0] == 5


def test_edgeless():
    assert star_chromatic_index(Multigraph([1])) == (0, EdgeColoring(0, {}))


def test_unsat_callback_sees_each_level():
    seen = []
    star_chromatic_index(cycle(5), on_unsat=lambda r: seen.append(r.k))
    assert seen == [2, 3]


def test_limit_is_not_unsat():
    res = star_colorable(spider(4), 5, SolverConfig(node_limit=50))
    assert res.status == LIMIT
    with pytest.raises(LimitExceeded) as info:
        star_chromatic_index(spider(4), SolverConfig(node_limit=50))
    # k=4 is refuted inside the budget, k=5 is not
    assert info.value.lower == 5 and info.value.upper == 16


def test_max_colors():
    with pytest.raises(ValueError):
        star_chromatic_index(cycle(5), max_colors=3)


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(node_limit=0)
    with pytest.raises(ValueError):
        SolverConfig(edge_order="dfs")


@pytest.mark.parametrize("order", ["bfs", "input", "random"])
def test_edge_orders_are_permutations(order):
    g = random_outerplanar(15, 2)
    assert sorted(edge_order(g, SolverConfig(edge_order=order, seed=3))) == g.edge_ids()


@pytest.mark.parametrize("order", ["bfs", "input", "random"])
@pytest.mark.parametrize("sym", [True, False])
def test_settings_do_not_change_answer(order, sym):
    cfg = SolverConfig(edge_order=order, symmetry_breaking=sym, seed=1)
    for g, k in ((cycle(5), 4), (spider(3), 4), (path(6), 3)):
        got, c = star_chromatic_index(g, cfg)
        assert got == k and verify_star(g, c).ok


def test_monotone_and_deterministic():
    for seed in range(15):
        g = random_outerplanar(6, seed)
        k, c = star_chromatic_index(g)
        for extra in range(3):
            assert star_colorable(g, k + extra).sat
        assert star_chromatic_index(g) == (k, c)


def test_scan_rows_and_slack():
    report = scan_conjecture([c5_pendants(), path(6)])
    assert [(r.chi, r.slack) for r in report.rows] == [(5, 0), (3, 1)]
    assert report.min_slack == 0 and not report.counterexamples
    assert conjecture_bound(3) == 5


def test_scan_counts_skips():
    report = scan_conjecture([spider(4)], SolverConfig(node_limit=20))
    assert report.skipped == 1 and report.min_slack is None
