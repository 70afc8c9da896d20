"""
Tests for the exact solver, brute-force enumeration and the vertex-weight scan
"""
import threading

import pytest

from common.errors import ContractError, SolverRefusal
from modules.graph_core import TripartiteParams, verify
from modules.oracle import PROVEN_OPTIMA, gamma
from modules.solver import (
    SolveConfig,
    brute_force,
    optimum_vertex_weight_scan,
    solve_exact,
    w_weight_bound,
)
from modules.solver.lemma_scan import NOT_APPLICABLE, OK, VIOLATION
from modules.solver.search import branch_order

CONFIGS = [
    SolveConfig(symmetry_pruning=True, bound_pruning=True),
    pytest.param(SolveConfig(symmetry_pruning=True, bound_pruning=False), marks=pytest.mark.slow),
    pytest.param(SolveConfig(symmetry_pruning=False, bound_pruning=True), marks=pytest.mark.slow),
    pytest.param(SolveConfig(symmetry_pruning=False, bound_pruning=False), marks=pytest.mark.slow),
]


def small_triples(max_edges):
    triples = []
    for m in range(1, max_edges + 1):
        for n in range(m, max_edges + 1):
            for p in range(n, max_edges + 1):
                if m * n + m * p + n * p <= max_edges:
                    triples.append((m, n, p))
    return triples


def _check(report):
    assert report.exhausted
    certificate = verify(report.certificate)
    assert certificate.is_sedf
    assert certificate.weight == report.optimum


@pytest.mark.parametrize("sizes,optimum", [
    ((1, 1, 1), 1),
    ((1, 1, 2), 3),
    ((1, 1, 3), 3),
    ((1, 2, 2), 4),
    ((2, 2, 2), 4),
    ((1, 3, 4), 7),
    ((2, 2, 4), 4),
])
def test_known_optima(sizes, optimum):
    report = solve_exact(TripartiteParams(*sizes))
    _check(report)
    assert report.optimum == optimum


def test_k22p_smallest_instance_beats_its_closed_form():
    report = solve_exact(TripartiteParams(2, 2, 5))
    _check(report)
    assert report.optimum == 6
    assert gamma(TripartiteParams(2, 2, 5)).value == 8
    assert report.nodes_explored > 0


@pytest.mark.parametrize("sizes,optimum", sorted(PROVEN_OPTIMA.items()))
def test_proven_optima_are_what_the_solver_finds(sizes, optimum):
    report = solve_exact(TripartiteParams(*sizes))
    _check(report)
    assert report.optimum == optimum
    result = gamma(TripartiteParams(*sizes))
    assert result.is_disputed and result.best_known == optimum < result.value


def test_brute_force_confirms_k133():
    assert brute_force(TripartiteParams(1, 3, 3)) == 3


def test_solver_matches_closed_forms_up_to_twenty_edges():
    for sizes in small_triples(20):
        params = TripartiteParams(*sizes)
        report = solve_exact(params)
        _check(report)
        result = gamma(params)
        if result.is_conflict:
            assert report.optimum in result.values(), sizes
        else:
            assert report.optimum == result.best_known, sizes


@pytest.mark.parametrize("config", CONFIGS)
def test_solver_matches_brute_force(config):
    for sizes in small_triples(16):
        params = TripartiteParams(*sizes)
        assert solve_exact(params, config).optimum == brute_force(params), sizes


@pytest.mark.slow
def test_brute_force_k233():
    params = TripartiteParams(2, 3, 3)
    assert brute_force(params) == 5
    assert solve_exact(params).optimum == 5


def test_brute_force_triangle_and_refusal():
    assert brute_force(TripartiteParams(1, 1, 1)) == 1
    with pytest.raises(SolverRefusal):
        brute_force(TripartiteParams(3, 3, 3))


def test_refusal_over_the_edge_cap():
    with pytest.raises(SolverRefusal) as info:
        solve_exact(TripartiteParams(5, 6, 11))
    assert info.value.exit_code == 3
    with pytest.raises(SolverRefusal):
        solve_exact(TripartiteParams(2, 2, 2), SolveConfig(max_edges=11))


def test_certificate_follows_caller_order():
    report = solve_exact(TripartiteParams(2, 1, 1))
    assert report.certificate.params.sizes == (2, 1, 1)
    _check(report)
    assert report.optimum == 3


def test_parallel_search_agrees():
    params = TripartiteParams(2, 2, 4)
    sequential = solve_exact(params, SolveConfig(parallel_width=0))
    parallel = solve_exact(params, SolveConfig(parallel_width=3))
    _check(parallel)
    assert parallel.optimum == sequential.optimum == 4


def test_cancelled_search_is_not_exhausted():
    cancel = threading.Event()
    cancel.set()
    report = solve_exact(TripartiteParams(1, 2, 3), cancel_event=cancel)
    assert not report.exhausted
    assert verify(report.certificate).is_sedf
    with pytest.raises(ContractError):
        optimum_vertex_weight_scan(report)


def test_branch_order_visits_every_edge_once():
    params = TripartiteParams(2, 3, 4)
    edges = [edge for edge, _, _ in branch_order(params)]
    assert sorted(edges) == list(range(params.edge_count))


def test_config_from_settings_ignores_missing_overrides():
    from common.settings import LabSettings
    config = SolveConfig.from_settings(LabSettings(solver_max_edges=30), max_edges=None, parallel_width=2)
    assert config.max_edges == 30
    assert config.parallel_width == 2


def test_w_weight_bounds_by_parity_class():
    assert w_weight_bound(2, 2, 4) == w_weight_bound(3, 3, 5)
    assert w_weight_bound(2, 2, 2).parity_class == "eee/ooo"
    assert w_weight_bound(2, 2, 5).bound == 0
    assert w_weight_bound(1, 1, 2).bound == 0
    assert w_weight_bound(1, 2, 4).bound == -1
    assert w_weight_bound(3, 4, 4).bound == -1
    assert w_weight_bound(2, 3, 5).bound == -1
    assert w_weight_bound(1, 2, 3).parity_class == "oeo/eoo"
    # the strict hypotheses only fail when the sizes are not sorted
    assert w_weight_bound(3, 2, 4) is None
    for sizes in small_triples(40):
        assert w_weight_bound(*sizes) is not None


def test_vertex_weight_scan_on_optima():
    for sizes in small_triples(14):
        report = solve_exact(TripartiteParams(*sizes))
        scan = optimum_vertex_weight_scan(report)
        assert scan.status in (OK, VIOLATION, NOT_APPLICABLE)
        assert set(scan.minima) == {"U", "V", "W"}
        if scan.bound is None:
            assert scan.status == NOT_APPLICABLE
    scan = optimum_vertex_weight_scan(solve_exact(TripartiteParams(2, 2, 4)))
    assert scan.bound.parity_class == "eee/ooo"
    assert scan.to_dict()["w_bound"] == 0
