"""
Tests for the closed-form oracle: golden values, case dispatch, conflicts and the conjecture audit
"""
from itertools import permutations

import pytest

from common.errors import GammaConflictError, InputError, InternalError
from modules.graph_core.models.params import TripartiteParams
from modules.oracle import CaseTag, Region, canonicalize, gamma, in_tight_family, xu_bound
from modules.oracle.formulas import applicable_cases, evaluate, exact_div
from views.sweep import conjecture_rows

# (m, n, p) -> (value, case that must be among the tags)
GOLDEN = [
    ((1, 1, 1), 1, "S.K111"),
    ((2, 3, 5), 5, "S.K235"),
    ((2, 2, 2), 4, "T11.A2"),
    ((2, 4, 6), 6, "T11.A1"),
    ((3, 3, 3), 5, "T11.B1"),
    ((3, 3, 5), 7, "T11.B2"),
    ((2, 2, 3), 6, "T11.C1"),
    ((3, 3, 4), 7, "T11.C2"),
    ((1, 2, 3), 5, "T11.D1"),
    ((2, 3, 4), 6, "T11.D2"),
    ((1, 2, 2), 4, "T11.E1"),
    ((2, 3, 3), 5, "T11.E2"),
    ((2, 2, 4), 4, "MAIN.A"),
    ((3, 3, 7), 7, "MAIN.B"),
    ((3, 5, 8), 13, "MAIN.C1"),
    ((3, 3, 6), 9, "MAIN.C2"),
    ((2, 6, 9), 12, "MAIN.D1"),
    ((2, 4, 7), 10, "MAIN.D2"),
    ((5, 6, 12), 14, "MAIN.E1"),
    ((3, 4, 8), 8, "MAIN.E2"),
    ((2, 5, 8), 10, "MAIN.F1"),
    ((2, 3, 6), 6, "MAIN.F2"),
    ((3, 4, 9), 9, "MAIN.G1"),
    ((3, 4, 7), 9, "MAIN.G1"),
    ((3, 6, 11), 11, "MAIN.G2"),
    ((4, 5, 9), 11, "MAIN.H1"),
    ((2, 3, 7), 5, "MAIN.H2"),
    ((1, 1, 3), 3, "S.K1np.1"),
    ((1, 2, 4), 4, "S.K1np.2"),
    ((1, 4, 7), 9, "S.K1np.3"),
    ((1, 3, 6), 9, "S.K1np.4"),
    ((2, 2, 5), 8, "S.K22p"),
    ((2, 2, 7), 8, "S.K22p"),
]


@pytest.mark.parametrize("sizes,value,case_id", GOLDEN)
def test_golden_values(sizes, value, case_id):
    result = gamma(TripartiteParams(*sizes))
    assert not result.is_conflict
    assert result.value == value
    assert CaseTag(case_id) in result.tags


def test_enough_golden_rows_and_every_case_touched():
    assert len(GOLDEN) >= 22
    touched = {case_id for _, _, case_id in GOLDEN}
    assert {"S.K111", "S.K235", "S.K22p"} <= touched
    assert all(f"MAIN.{c}" in touched for c in ("A", "B"))
    assert all(f"T11.{c}{k}" in touched for c in "ABCDE" for k in (1, 2))


@pytest.mark.parametrize("sizes,values", [
    ((1, 1, 2), (3, 5)),
    ((1, 3, 4), (7, 9)),
    ((1, 4, 5), (7, 9)),
    ((3, 6, 9), (11, 13)),
])
def test_boundary_conflicts_carry_both_values(sizes, values):
    result = gamma(TripartiteParams(*sizes))
    assert result.is_conflict
    assert result.value is None
    assert tuple(result.values()) == values
    assert len(result.conflict) == 2
    assert result.marker() == f"conflict({values[0]}|{values[1]})"
    with pytest.raises(GammaConflictError) as info:
        xu_bound(TripartiteParams(*sizes))
    assert info.value.exit_code == 2


def test_overlap_where_forms_agree_reports_both_tags():
    result = gamma(TripartiteParams(2, 2, 4))
    assert result.value == 4
    assert {str(t) for t in result.tags} == {"T11.A1", "MAIN.A"}


def test_every_triple_is_covered_with_at_most_two_tags():
    for m in range(1, 31):
        for n in range(m, 31):
            for p in range(n, 31):
                cases = applicable_cases(m, n, p)
                assert 1 <= len(cases) <= 2, (m, n, p, cases)
                if len(cases) == 2:
                    assert p == m + n


def test_formula_evaluation_is_exact():
    for m in range(1, 8):
        for n in range(m, 10):
            for p in range(n, 20):
                for case_id in applicable_cases(m, n, p):
                    branch = evaluate(case_id, m, n, p)
                    assert isinstance(branch.value, int)


def test_exact_div_refuses_remainders():
    assert exact_div(10, 2) == 5
    with pytest.raises(InternalError):
        exact_div(7, 2)


def test_permutation_invariance():
    for m in range(1, 13):
        for n in range(m, 13):
            for p in range(n, 13):
                reference = gamma(TripartiteParams(m, n, p))
                for order in permutations((m, n, p)):
                    result = gamma(TripartiteParams(*order))
                    assert result.values() == reference.values()
                    assert result.tags == reference.tags
                    assert result.params.as_tuple() == order


def test_canonicalize_remembers_order():
    canonical = canonicalize((5, 2, 3))
    assert canonical.params.sizes == (2, 3, 5)
    assert canonical.order == (1, 2, 0)
    assert canonical.original.sizes == (5, 2, 3)


def test_case_tags():
    assert CaseTag("MAIN.E2").region is Region.MAIN
    assert CaseTag("T11.C1").region is Region.T11
    assert CaseTag("S.K1np.3").region is Region.SPECIAL
    with pytest.raises(InputError):
        CaseTag("MAIN.Z")


def test_gamma_json_shape():
    data = gamma(TripartiteParams(3, 3, 7)).to_dict()
    assert data["value"] == 7
    assert data["tags"] == ["MAIN.B"]


def test_tight_family():
    for n in (1, 3, 5, 7):
        bound = xu_bound(TripartiteParams(1, n, n + 3))
        assert bound.tight
        assert in_tight_family(TripartiteParams(n + 3, 1, n))
    assert not in_tight_family(TripartiteParams(1, 2, 5))


def test_conjecture_audit_up_to_thirty():
    rows = conjecture_rows(30)
    assert not [r for r in rows if r.status == "EXCEEDS"]
    assert not [r for r in rows if r.status == "UNCOVERED"]
    # every family member is tight; these three small triples are tight as well
    findings = {(r.m, r.n, r.p) for r in rows if r.finding}
    assert findings == {(1, 2, 2), (1, 2, 3), (2, 2, 3)}
    family = [r for r in rows if r.expected_tight]
    assert family and all(r.status == "TIGHT" for r in family)


def test_every_branch_has_the_parity_of_the_edge_count():
    for m in range(1, 12):
        for n in range(m, 14):
            for p in range(n, 30):
                edges = m * n + m * p + n * p
                for case_id in applicable_cases(m, n, p):
                    assert (evaluate(case_id, m, n, p).value - edges) % 2 == 0, (m, n, p, case_id)


def test_xu_bound_examples():
    bound = xu_bound(TripartiteParams(1, 3, 6))
    assert (bound.gamma, bound.bound, bound.tight) == (9, 9, True)
    bound = xu_bound(TripartiteParams(2, 2, 4))
    assert (bound.gamma, bound.bound, bound.tight) == (4, 7, False)
    assert bound.slack == 3
    bound = xu_bound(TripartiteParams(1, 5, 8))
    assert (bound.gamma, bound.bound, bound.tight) == (13, 13, True)


def test_searched_optimum_below_the_closed_form():
    result = gamma(TripartiteParams(5, 2, 2))
    assert result.value == 8
    assert result.is_disputed
    assert result.proven_optimum == 6
    assert result.best_known == 6
    assert result.to_dict()["proven_optimum"] == 6
    bound = xu_bound(TripartiteParams(2, 2, 5))
    assert (bound.gamma, bound.bound, bound.tight) == (6, 8, False)

    result = gamma(TripartiteParams(1, 3, 3))
    assert (result.value, result.best_known) == (5, 3)

    result = gamma(TripartiteParams(2, 2, 7))
    assert not result.is_disputed
    assert result.best_known == result.value == 8
    assert "proven_optimum" not in result.to_dict()


def test_value_for_picks_one_branch():
    result = gamma(TripartiteParams(1, 1, 2))
    assert result.value_for(CaseTag("T11.C2")) == 3
    assert result.value_for(CaseTag("S.K1np.4")) == 5
    assert result.value_for(CaseTag("MAIN.A")) is None
