"""
Quota plans for every explicitly constructed case.

Each builder lists vertex classes as (name, part, size, quota); a class
written first in its part takes the lowest indices, so the single
exceptional vertex u* or w* is always index 0.
"""
import logging

from common.errors import ConstructionError, NoConstructionError, QuotaGapError
from modules.constructor.models.quota_plan import QuotaPlan, VertexClass, merge_forced
from modules.graph_core.models.params import U, V, W
from modules.oracle import formulas
from modules.oracle.case_tags import CaseTag
from modules.oracle.dispatch import canonicalize
from modules.oracle.formulas import exact_div

logger = logging.getLogger(__name__)

_reported = set()


def _classes(specs):
    next_index = [0, 0, 0]
    classes = []
    for name, part, size, quota in specs:
        start = next_index[part]
        classes.append(VertexClass(name, part, tuple(range(start, start + size)), quota))
        next_index[part] += size
    return tuple(classes)


def derive_forced(plan_params, classes):
    """
    Class pairs that must be joined by negative edges only.

    With exact quotas every vertex of a class has the same weight, and an
    edge xy satisfies f[xy] = f(x) + f(y) - f(xy) >= 1 only if it is negative
    when f(x) + f(y) is 0 or 1. A sum below 0 can never be dominated.
    """
    def weight(c):
        return plan_params.degree(c.part) - 2 * c.quota

    forced = []
    for i, a in enumerate(classes):
        for b in classes[i + 1:]:
            if a.part == b.part or not a.size or not b.size:
                continue
            total = weight(a) + weight(b)
            if total < 0:
                raise ConstructionError(
                    f"classes {a.name} and {b.name} of {plan_params} have weights summing to {total}")
            if total <= 1:
                forced.append((a.name, b.name) if a.part < b.part else (b.name, a.name))
    return forced


def _plan(params, case_id, specs, explicit_forced=(), published=(), notes=()):
    classes = _classes(specs)
    derived = derive_forced(params, classes)
    forced = merge_forced(explicit_forced, derived)
    extra = [pair for pair in forced if pair not in explicit_forced and pair[::-1] not in explicit_forced]
    if extra:
        logger.debug("[PLAN] %s %s: forced blocks added from vertex weights: %s", case_id, params, extra)
    plan = QuotaPlan(params, CaseTag(case_id), classes, forced, tuple(published), tuple(notes))
    try:
        return plan.validate()
    except QuotaGapError as e:
        logger.warning("[PLAN] %s", e)
        raise


def _main_a(m, n, p, params):
    return _plan(params, "MAIN.A", [
        ("U", U, m, exact_div(n + p - 2, 2)),
        ("V", V, n, exact_div(m + p - 2, 2)),
        ("W", W, p, exact_div(m + n, 2)),
    ], published=[("2*N_UV", m * n - m - n)])


def _main_b(m, n, p, params):
    return _plan(params, "MAIN.B", [
        ("U", U, m, exact_div(n + p - 2, 2)),
        ("V", V, n, exact_div(m + p - 2, 2)),
        ("w*", W, 1, exact_div(m + n - 2, 2)),
        ("W", W, p - 1, exact_div(m + n, 2)),
    ], published=[("2*N_UV", m * n - m - n + 1)])


def _main_c_d(m, n, p, params, case_id):
    """Cases C and D: U and V of weight 3, W of weight 0, one u* of weight 5 in C1 and D2."""
    u_quota = exact_div(n + p - 3, 2)
    v_spec = ("V", V, n, exact_div(m + p - 3, 2))
    w_spec = ("W", W, p, exact_div(m + n, 2))
    if case_id not in ("MAIN.C1", "MAIN.D2"):
        return _plan(params, case_id, [("U", U, m, u_quota), v_spec, w_spec],
                     published=[("2*N_UV", m * n - exact_div(3 * m + 3 * n, 2))])

    published = [("2*N_UV", m * n - 1 - exact_div(3 * m + 3 * n, 2))]
    try:
        return _plan(params, case_id, [
            ("u*", U, 1, exact_div(n + p - 5, 2)),
            ("U", U, m - 1, u_quota),
            v_spec,
            w_spec,
        ], published=published)
    except ConstructionError as e:
        if published[0][1] >= 0:
            raise
        # u* would need a negative number of UV edges; a W vertex of weight 2 adds the same weight.
        note = f"u* gives 2*N_UV = {published[0][1]}; using w* of weight 2 instead"
        logger.warning("[PLAN] %s %s: %s (%s)", case_id, params, note, e)
        return _plan(params, case_id, [
            ("U", U, m, u_quota),
            v_spec,
            ("w*", W, 1, exact_div(m + n - 2, 2)),
            ("W", W, p - 1, exact_div(m + n, 2)),
        ], notes=[note])


# |V1| and |W1| for cases E-H; |V2| and |W2| are the rest of the part.
_SPLITS = {
    "MAIN.E1": (lambda m, n, p: (n - m - 1) // 2, lambda p: p // 2),
    "MAIN.E2": (lambda m, n, p: (n - m + 1) // 2, lambda p: p // 2),
    "MAIN.F1": (lambda m, n, p: (n - m - 1) // 2, lambda p: p // 2),
    "MAIN.F2": (lambda m, n, p: (n - m + 1) // 2, lambda p: p // 2),
    "MAIN.G1": (lambda m, n, p: (n - m - 1) // 2, lambda p: (p + 1) // 2),
    "MAIN.G2": (lambda m, n, p: (n - m + 1) // 2, lambda p: (p + 1) // 2),
    "MAIN.H1": (lambda m, n, p: (n - m + 1) // 2, lambda p: (p - 1) // 2),
    "MAIN.H2": (lambda m, n, p: (n - m + 1) // 2, lambda p: (p + 1) // 2),
}


_PUBLISHED_E_TO_H = {
    "MAIN.E1": [("2*N_UV", lambda m, n: m * n - n - exact_div(3 * m + 1, 2))],
    "MAIN.E2": [("2*N_UV", lambda m, n: m * n - n - exact_div(3 * m - 1, 2))],
    "MAIN.F1": [("2*N_UV", lambda m, n: m * n - m - exact_div(3 * n + 1, 2)),
                ("2*N_UV (prose)", lambda m, n: m * n - n - exact_div(3 * n + 1, 2))],
    "MAIN.F2": [("2*N_UV", lambda m, n: m * n - m - exact_div(3 * n - 1, 2)),
                ("2*N_UV (prose)", lambda m, n: m * n - n - exact_div(3 * n + 1, 2))],
    "MAIN.G1": [("2*N_UV", lambda m, n: m * n - m - exact_div(3 * n + 2, 2))],
    "MAIN.G2": [("2*N_UV", lambda m, n: m * n - m - exact_div(3 * n, 2))],
    "MAIN.H1": [("2*N_UV", lambda m, n: m * n - n - exact_div(3 * m - 2, 2))],
    "MAIN.H2": [("2*N_UV", lambda m, n: m * n - n - exact_div(3 * m, 2))],
}


def _published_e_to_h(case_id, m, n):
    """Displayed 2*N_UV expressions of one case, evaluated only for that case."""
    return [(label, expression(m, n)) for label, expression in _PUBLISHED_E_TO_H[case_id]]


def _main_e_to_h(m, n, p, params, case_id):
    """
    Cases E-H split V into V1, V2 and W into W1 (weight -1), W2 (weight +1).

    E and H: U weight 2, V1 weight 1, V2 weight 3.
    F and G: U weight 1, V1 weight 2, V2 weight 4.

    U x W1 is forced negative (2 - 1 <= 1). In H2 that block outgrows the
    derived N_UW when 2n < 3m, and validate() reports a QuotaGapError.
    """
    v1_size, w1_size = _SPLITS[case_id]
    v1, w1 = v1_size(m, n, p), w1_size(p)
    if case_id[5] in "EH":
        u_quota = exact_div(n + p - 2, 2)
        v1_quota, v2_quota = exact_div(m + p - 1, 2), exact_div(m + p - 3, 2)
    else:
        u_quota = exact_div(n + p - 1, 2)
        v1_quota, v2_quota = exact_div(m + p - 2, 2), exact_div(m + p - 4, 2)
    return _plan(params, case_id, [
        ("U", U, m, u_quota),
        ("V1", V, v1, v1_quota),
        ("V2", V, n - v1, v2_quota),
        ("W1", W, w1, exact_div(m + n + 1, 2)),
        ("W2", W, p - w1, exact_div(m + n - 1, 2)),
    ], explicit_forced=[("V1", "W1")], published=_published_e_to_h(case_id, m, n))


def _k1np(m, n, p, params, case_id):
    if case_id == "S.K1np.1":
        specs = [
            ("U", U, 1, exact_div(n + p - 2, 2)),
            ("V", V, n, exact_div(p - 1, 2)),
            ("w*", W, 1, exact_div(n - 1, 2)),
            ("W", W, p - 1, exact_div(n + 1, 2)),
        ]
        published = [("2*N_UV", m * n - m - n + 1)]
    elif case_id == "S.K1np.2":
        specs = [
            ("U", U, 1, exact_div(n + p - 2, 2)),
            ("V1", V, n // 2, exact_div(p, 2)),
            ("V2", V, n // 2, exact_div(p - 2, 2)),
            ("W1", W, p // 2, exact_div(n + 2, 2)),
            ("W2", W, (p - 2) // 2, exact_div(n, 2)),
            ("W3", W, 1, exact_div(n - 2, 2)),
        ]
        published = [("2*N_UV", m * n - n - exact_div(3 * m - 3, 2))]
    elif case_id == "S.K1np.3":
        specs = [
            ("U", U, 1, exact_div(n + p - 1, 2)),
            ("V1", V, n // 2, exact_div(p - 1, 2)),
            ("V2", V, n // 2, exact_div(p - 3, 2)),
            ("W1", W, (p - n - 1) // 2, exact_div(n + 2, 2)),
            ("W2", W, (p + n + 1) // 2, exact_div(n, 2)),
        ]
        published = [("2*N_UV", m * n - m - n + 1)]
    else:
        specs = [
            ("U", U, 1, exact_div(n + p - 3, 2)),
            ("V", V, n, exact_div(p - 2, 2)),
            ("W1", W, p - (n + 3) // 2, exact_div(n + 1, 2)),
            ("W2", W, (n + 3) // 2, exact_div(n - 1, 2)),
        ]
        published = [("2*N_UV", exact_div(2 * m * n - 3 * m - 2 * n + 3, 2))]
    return _plan(params, case_id, specs, published=published)


def _k22p(p, params):
    half = exact_div(p - 1, 2)
    return _plan(params, "S.K22p", [
        ("U", U, 2, half),
        ("V", V, 2, half),
        ("W1", W, half, 2),
        ("W2", W, half, 2),
        ("W3", W, 1, 0),
    ], explicit_forced=[("U", "W1"), ("V", "W2")])


def _report_discrepancies(plan):
    for label, value, derived in plan.uv_total_discrepancies():
        key = (str(plan.case), label)
        log = logger.warning if key not in _reported else logger.debug
        _reported.add(key)
        log("[PLAN] %s %s: %s printed as %d, derived %d from the quotas",
            plan.case, plan.params, label, value, derived)


def quota_plan(params):
    """Quota plan of the construction covering the canonical form of params."""
    canonical = canonicalize(params).params
    m, n, p = canonical.sizes
    if formulas.exception_case(m, n, p) == "S.K111":
        raise NoConstructionError(f"no published construction for {canonical} (p < m+n)")
    if m == 1 and p >= n + 1:
        plan = _k1np(m, n, p, canonical, formulas.k1np_case(n, p))
    elif formulas.is_k22p(m, n, p):
        plan = _k22p(p, canonical)
    elif formulas.main_applies(m, n, p):
        case_id = formulas.main_case(m, n, p)
        if case_id == "MAIN.A":
            plan = _main_a(m, n, p, canonical)
        elif case_id == "MAIN.B":
            plan = _main_b(m, n, p, canonical)
        elif case_id[5] in "CD":
            plan = _main_c_d(m, n, p, canonical, case_id)
        else:
            plan = _main_e_to_h(m, n, p, canonical, case_id)
    elif p < m + n:
        raise NoConstructionError(f"no published construction for {canonical} (p < m+n)")
    else:
        raise NoConstructionError(f"no published construction for {canonical}")
    _report_discrepancies(plan)
    return plan
