"""
Tests for the command line, the sweep harness and file storage
"""
import csv
import json

import pytest

from common.errors import InputError, LabelingParseError
from common.settings import LabSettings
from main import main
from modules.graph_core import EdgeLabeling, TripartiteParams
from modules.oracle import gamma
from services.data_service import DataService
from views.sweep import (
    CONFLICT,
    DISPUTED,
    GAP,
    MISMATCH,
    OK,
    SKIPPED,
    UNCOVERED,
    classify,
    parse_range,
    run_sweep,
    summarize,
    sweep_row,
    triples_up_to,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# gamma

def test_gamma_exception_value(capsys):
    code, out, _ = run(capsys, "gamma", "2", "3", "5")
    assert code == 0
    assert out.strip() == "5 [S.K235]"


def test_gamma_conflict_exits_two(capsys):
    code, out, _ = run(capsys, "gamma", "1", "1", "2")
    assert code == 2
    assert out.startswith("conflict:")
    assert "= 3" in out and "= 5" in out


def test_gamma_json(capsys):
    code, out, _ = run(capsys, "gamma", "3", "3", "7", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["value"] == 7
    assert data["tags"] == ["MAIN.B"]


def test_gamma_and_solve_reports(capsys, tmp_path):
    gamma_path = tmp_path / "gamma.json"
    code, _, _ = run(capsys, "gamma", "1", "1", "2", "--report", str(gamma_path))
    assert code == 2
    data = json.loads(gamma_path.read_text(encoding="utf-8"))
    assert sorted(entry["value"] for entry in data["conflict"]) == [3, 5]

    solve_path = tmp_path / "solve.json"
    code, out, _ = run(capsys, "solve", "1", "1", "3", "--report", str(solve_path))
    assert code == 0
    assert out.startswith("optimum 3 (proven)")
    data = json.loads(solve_path.read_text(encoding="utf-8"))
    assert data["optimum"] == 3
    assert data["certificate"]["m"] == 1


def test_gamma_reports_the_searched_optimum(capsys):
    code, out, _ = run(capsys, "gamma", "2", "2", "5")
    assert code == 0
    assert out.splitlines() == ["8 [S.K22p]", "exhaustive search proves 6"]

    code, out, _ = run(capsys, "gamma", "2", "2", "5", "--json")
    data = json.loads(out)
    assert (data["value"], data["proven_optimum"]) == (8, 6)


def test_gamma_rejects_zero(capsys):
    code, _, err = run(capsys, "gamma", "0", "1", "1")
    assert code == 5
    assert err.startswith("error:")


# construct and verify

def test_construct_then_verify(capsys, tmp_path):
    path = tmp_path / "c.json"
    code, out, _ = run(capsys, "construct", "2", "2", "4", "--out", str(path))
    assert code == 0
    assert out.splitlines()[0] == "weight 4, MAIN.A"
    stored = json.loads(path.read_text(encoding="utf-8"))
    assert stored["case_tag"] == "MAIN.A"
    assert stored["claimed_gamma"] == 4

    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert out.strip() == "SEDF, weight 4"


def test_construct_k1np(capsys):
    code, out, _ = run(capsys, "construct", "1", "3", "6")
    assert code == 0
    assert out.strip() == "weight 9, S.K1np.4"


def test_construct_show_plan(capsys):
    code, out, _ = run(capsys, "construct", "3", "4", "8", "--show-plan")
    assert code == 0
    assert out.startswith("MAIN.E2 plan for K(3,4,8)")


CASE_EXAMPLES = [
    ((2, 2, 4), 4, "MAIN.A"),
    ((3, 3, 7), 7, "MAIN.B"),
    ((3, 5, 10), 13, "MAIN.C1"),
    ((3, 3, 6), 9, "MAIN.C2"),
    ((2, 6, 9), 12, "MAIN.D1"),
    ((2, 4, 7), 10, "MAIN.D2"),
    ((5, 6, 12), 14, "MAIN.E1"),
    ((3, 4, 8), 8, "MAIN.E2"),
    ((2, 5, 8), 10, "MAIN.F1"),
    ((2, 3, 6), 6, "MAIN.F2"),
    ((3, 4, 9), 9, "MAIN.G1"),
    ((3, 6, 11), 11, "MAIN.G2"),
    ((4, 5, 9), 11, "MAIN.H1"),
    ((2, 3, 7), 5, "MAIN.H2"),
    ((1, 1, 3), 3, "S.K1np.1"),
    ((1, 2, 4), 4, "S.K1np.2"),
    ((1, 4, 7), 9, "S.K1np.3"),
    ((1, 3, 6), 9, "S.K1np.4"),
]


@pytest.mark.parametrize("sizes,weight,case_id", CASE_EXAMPLES)
def test_construct_every_case_then_verify(capsys, tmp_path, sizes, weight, case_id):
    path = tmp_path / "c.json"
    code, out, _ = run(capsys, "construct", *map(str, sizes), "--out", str(path))
    assert code == 0
    assert out.splitlines()[0] == f"weight {weight}, {case_id}"
    assert json.loads(path.read_text(encoding="utf-8"))["claimed_gamma"] == weight

    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert out.strip() == f"SEDF, weight {weight}"


def test_construct_k22p_notes_the_searched_optimum(capsys):
    code, out, _ = run(capsys, "construct", "2", "2", "5")
    assert code == 0
    assert out.strip() == "weight 8, S.K22p (not minimum: exhaustive search proves 6)"


def test_construct_quota_gap_exits_three(capsys):
    code, out, err = run(capsys, "construct", "6", "7", "13")
    assert code == 3
    assert out == ""
    assert "not realizable" in err


def test_construct_below_boundary_exits_three(capsys):
    code, out, err = run(capsys, "construct", "2", "3", "4")
    assert code == 3
    assert out == ""
    assert "no published construction" in err
    assert "(p < m+n)" in err


def test_verify_all_negative_triangle(capsys, tmp_path):
    path = tmp_path / "neg.json"
    DataService().save_labeling(EdgeLabeling.all_negative(TripartiteParams(1, 1, 1)), path)
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert out.splitlines()[0] == "NOT SEDF, 3 violations"


def test_verify_truncated_file_exits_five(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"m": 1, "n": 1, "p": 1, "uv": [[1', encoding="utf-8")
    code, _, err = run(capsys, "verify", str(path))
    assert code == 5
    assert "not valid JSON" in err


def test_verify_missing_file_exits_five(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", str(tmp_path / "absent.json"))
    assert code == 5


def test_verify_json_includes_sidecar(capsys, tmp_path):
    path = tmp_path / "c.json"
    run(capsys, "construct", "1", "2", "4", "--out", str(path))
    code, out, _ = run(capsys, "verify", str(path), "--json")
    data = json.loads(out)
    assert code == 0
    assert data["is_sedf"] is True
    assert data["weight"] == 4
    assert data["case_tag"] == "S.K1np.2"


# solve

def test_solve_small_instance(capsys):
    code, out, _ = run(capsys, "solve", "1", "1", "2")
    assert code == 0
    assert out.splitlines()[0] == "optimum 3 (proven)"


def test_solve_json_and_scan(capsys, tmp_path):
    path = tmp_path / "opt.json"
    code, out, _ = run(capsys, "solve", "2", "2", "2", "--json", "--scan", "--out", str(path), "--threads", "2")
    data = json.loads(out)
    assert code == 0
    assert data["optimum"] == 4
    assert data["exhausted"] is True
    assert data["vertex_weight_scan"]["parity_class"] == "eee/ooo"
    labeling, sidecar = DataService().load_labeling(path)
    assert labeling.weight == 4
    assert sidecar == {"claimed_gamma": 4}


def test_solve_refuses_large_instance(capsys):
    code, _, err = run(capsys, "solve", "5", "6", "11")
    assert code == 3
    assert "cap" in err


def test_solve_max_edges_flag(capsys):
    code, _, _ = run(capsys, "solve", "2", "2", "2", "--max-edges", "10")
    assert code == 3


def test_environment_overrides_solver_cap():
    settings = LabSettings.load(config_path="/nonexistent/settings.json", environ={"SEDN_MAX_EDGES": "12"})
    assert settings.solver_max_edges == 12
    settings = LabSettings.load(config_path="/nonexistent/settings.json", environ={"SEDN_MAX_EDGES": "many"})
    assert settings.solver_max_edges == 26


def test_settings_file_is_read(tmp_path):
    path = tmp_path / "settings.json"
    path.write_text(json.dumps({"solver_max_edges": 18, "colour": "blue"}), encoding="utf-8")
    settings = LabSettings.load(config_path=path, environ={})
    assert settings.solver_max_edges == 18
    assert settings.brute_force_max_edges == 22


# sweep

def test_sweep_to_stdout(capsys):
    code, out, _ = run(capsys, "sweep", "--max-sum", "6")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "# sedn-lab v1"
    assert lines[1] == "m,n,p,gamma,construct,solver,status"
    assert "1,1,2,conflict(3|5),5,,CONFLICT" in lines
    assert lines[-1].startswith("# 7 rows:")


def test_sweep_with_solver_to_csv(capsys, tmp_path):
    path = tmp_path / "sweep.csv"
    code, _, _ = run(capsys, "sweep", "--range", "m=1..1,n=1..2,p=msum..msum+1",
                     "--with-solver", "--csv", str(path))
    assert code == 0
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "# sedn-lab v1"
    header, *rows = csv.reader(lines[1:])
    assert header == ["m", "n", "p", "gamma", "construct", "solver", "status"]
    assert ["1", "1", "2", "conflict(3|5)", "5", "3", "CONFLICT"] in rows
    assert all(row[6] in (OK, CONFLICT) for row in rows)


def test_sweep_with_solver_up_to_eight(capsys):
    code, out, _ = run(capsys, "sweep", "--max-sum", "8", "--with-solver")
    assert code == 0
    lines = out.splitlines()
    rows = lines[2:-1]
    assert len(rows) == 16
    flagged = [row for row in rows if not row.endswith(",OK")]
    assert flagged == [
        "1,1,2,conflict(3|5),5,3,CONFLICT",
        "1,3,3,5,,3,DISPUTED",
        "1,3,4,conflict(7|9),9,7,CONFLICT",
    ]
    assert "1,1,1,1,,1,OK" in rows
    assert "2,2,4,4,4,4,OK" in rows
    assert "2,3,3,5,,5,OK" in rows
    assert lines[-1] == "# 16 rows: OK 13, CONFLICT 2, DISPUTED 1, GAP 0, MISMATCH 0, UNCOVERED 0, SKIPPED 0"


def test_sweep_pdf(capsys, tmp_path):
    pdf = tmp_path / "sweep.pdf"
    code, _, _ = run(capsys, "sweep", "--max-sum", "5", "--pdf", str(pdf))
    assert code == 0
    assert pdf.read_bytes().startswith(b"%PDF")


def test_conjecture_command(capsys, tmp_path):
    pdf = tmp_path / "conjecture.pdf"
    code, out, _ = run(capsys, "conjecture", "--max-sum", "12", "--pdf", str(pdf))
    assert code == 0
    assert "1 1 4: TIGHT, slack 0 (expected family)" in out
    assert "2 2 3: TIGHT, slack 0" in out
    assert "2 2 5:" not in out
    assert pdf.exists()


def test_parse_range_expressions():
    triples = parse_range("m=1..2,n=m..m+1,p=msum..msum+1")
    assert triples == [(1, 1, 2), (1, 1, 3), (1, 2, 3), (1, 2, 4), (2, 2, 4), (2, 2, 5), (2, 3, 5), (2, 3, 6)]
    assert parse_range("m=2..1,n=1..2,p=1..2") == []


@pytest.mark.parametrize("spec", ["m=1..2,n=1..2", "m=1..2,n=p..2,p=1..3", "m=1-2,n=1..2,p=1..2", "q=1..2"])
def test_parse_range_errors(spec):
    with pytest.raises(InputError):
        parse_range(spec)


def test_triples_up_to():
    assert triples_up_to(3) == [(1, 1, 1)]
    assert len(triples_up_to(6)) == 7
    assert triples_up_to(2) == []


def test_classify_rules():
    agreed = gamma(TripartiteParams(2, 2, 4))
    conflict = gamma(TripartiteParams(1, 1, 2))
    assert classify(None, None, False, None, False, False) == UNCOVERED
    assert classify(agreed, 4, False, 4, True, False) == OK
    assert classify(agreed, 6, False, None, False, False) == MISMATCH
    assert classify(agreed, 4, False, 2, True, False) == MISMATCH
    assert classify(agreed, None, True, None, False, False) == MISMATCH
    assert classify(conflict, 5, False, 3, True, False) == CONFLICT
    assert classify(conflict, 5, False, 1, True, False) == MISMATCH
    small = gamma(TripartiteParams(2, 3, 4))
    assert classify(small, None, False, None, True, True) == SKIPPED
    disputed = gamma(TripartiteParams(1, 3, 3))
    assert classify(disputed, None, False, 3, True, False) == DISPUTED
    assert classify(disputed, None, False, None, False, False) == DISPUTED
    assert classify(disputed, None, False, 5, True, False) == MISMATCH
    gap = gamma(TripartiteParams(6, 7, 13))
    assert classify(gap, None, False, None, False, False, construct_gap=True) == GAP


def test_sweep_rows_keep_order_with_workers():
    triples = triples_up_to(7)
    sequential = run_sweep(triples)
    pooled = run_sweep(triples, workers=2)
    assert pooled == sequential
    assert [(r.m, r.n, r.p) for r in pooled] == triples
    assert "MISMATCH 0" in summarize(pooled)


def test_sweep_row_skips_refused_solver():
    from modules.solver import SolveConfig
    row = sweep_row((2, 3, 4), with_solver=True, solver_config=SolveConfig(max_edges=5))
    assert row.status == SKIPPED
    assert row.construct_weight is None


def test_load_labeling_schema_error(tmp_path):
    path = tmp_path / "wrong.json"
    path.write_text(json.dumps({"m": 1, "n": 1, "p": 1}), encoding="utf-8")
    with pytest.raises(LabelingParseError):
        DataService().load_labeling(path)


def test_labeling_file_round_trip(tmp_path):
    labeling = EdgeLabeling.all_positive(TripartiteParams(1, 2, 3)).with_sign(4, -1)
    path = DataService().save_labeling(labeling, tmp_path / "nested" / "f.json", case_tag="S.K1np.3")
    loaded, sidecar = DataService().load_labeling(path)
    assert loaded == labeling
    assert sidecar == {"case_tag": "S.K1np.3"}
    assert not (tmp_path / "nested" / "f.json.tmp").exists()
