"""
Sweep and conjecture harness: one row per canonical triple, computed
sequentially or on a process pool, always returned in canonical order.
"""
import logging
import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from common.errors import (
    CertificateMismatchError,
    ConstructionError,
    InputError,
    NoConstructionError,
    QuotaGapError,
    SolverRefusal,
    UncoveredError,
)
from modules.constructor.construct import construct
from modules.graph_core.models.params import TripartiteParams
from modules.oracle.dispatch import gamma, in_tight_family
from modules.solver.search import solve_exact

logger = logging.getLogger(__name__)

CSV_VERSION = "sedn-lab v1"
CSV_HEADER = ("m", "n", "p", "gamma", "construct", "solver", "status")

OK, CONFLICT, MISMATCH, UNCOVERED, SKIPPED = "OK", "CONFLICT", "MISMATCH", "UNCOVERED", "SKIPPED"
# DISPUTED: exhaustive search has proven an optimum below the closed form.
# GAP: the case's quotas cannot be realized, so the row has no construction.
DISPUTED, GAP = "DISPUTED", "GAP"
STATUSES = (OK, CONFLICT, DISPUTED, GAP, MISMATCH, UNCOVERED, SKIPPED)


@dataclass(frozen=True)
class SweepRow:
    m: int
    n: int
    p: int
    gamma_formula: str
    construct_weight: Optional[int]
    solver_optimum: Optional[int]
    status: str
    note: str = ""

    def csv_fields(self):
        def cell(value):
            return "" if value is None else str(value)
        return [self.m, self.n, self.p, self.gamma_formula,
                cell(self.construct_weight), cell(self.solver_optimum), self.status]


# range parsing

_BOUND = re.compile(r"^\s*(?:(msum|m|n|\d+))\s*(?:([+-])\s*(\d+))?\s*$")


def _bound_value(text, env):
    match = _BOUND.match(text)
    if not match:
        raise InputError(f"cannot read range bound {text!r}")
    token, sign, offset = match.groups()
    if token.isdigit():
        value = int(token)
    elif token in env:
        value = env[token]
    else:
        raise InputError(f"range bound {text!r} uses {token} before it is defined")
    if sign:
        value = value + int(offset) if sign == "+" else value - int(offset)
    return value


def parse_range(spec):
    """
    Triples described by 'm=LO..HI,n=LO..HI,p=LO..HI'.

    Bounds are integers or m, n, msum (= m+n) with an optional +k / -k;
    only canonical triples m <= n <= p with positive sizes are kept.
    """
    parts = {}
    for item in spec.split(","):
        key, sep, span = item.partition("=")
        key = key.strip()
        if not sep or key not in ("m", "n", "p") or ".." not in span:
            raise InputError(f"range item {item!r} should look like m=LO..HI")
        if key in parts:
            raise InputError(f"range gives {key} twice")
        parts[key] = span.split("..", 1)
    missing = [k for k in ("m", "n", "p") if k not in parts]
    if missing:
        raise InputError(f"range is missing {', '.join(missing)}")

    triples = []
    m_lo, m_hi = (_bound_value(x, {}) for x in parts["m"])
    for m in range(max(1, m_lo), m_hi + 1):
        n_lo, n_hi = (_bound_value(x, {"m": m}) for x in parts["n"])
        for n in range(max(1, n_lo, m), n_hi + 1):
            env = {"m": m, "n": n, "msum": m + n}
            p_lo, p_hi = (_bound_value(x, env) for x in parts["p"])
            for p in range(max(1, p_lo, n), p_hi + 1):
                triples.append((m, n, p))
    return sorted(set(triples))


def triples_up_to(max_sum):
    """Canonical triples with m+n+p <= max_sum, in lexicographic order."""
    return [(m, n, p)
            for m in range(1, max_sum + 1)
            for n in range(m, max_sum + 1)
            for p in range(n, max_sum - m - n + 1)]


# rows

def classify(result, construct_weight, construct_failed, solver_optimum, solver_requested, solver_refused,
             construct_gap=False):
    if result is None:
        return UNCOVERED
    if construct_failed:
        return MISMATCH
    accepted = set(result.values())
    if construct_weight is not None and construct_weight not in accepted:
        return MISMATCH
    solver_accepted = {result.proven_optimum} if result.is_disputed else accepted
    if solver_optimum is not None and solver_optimum not in solver_accepted:
        return MISMATCH
    if result.is_conflict:
        return CONFLICT
    if result.is_disputed:
        return DISPUTED
    if construct_gap:
        return GAP
    if solver_requested and solver_refused and construct_weight is None:
        return SKIPPED
    return OK


def sweep_row(triple, with_solver=False, solver_config=None):
    """Compute one SweepRow; safe to run in a worker process."""
    params = TripartiteParams(*triple)
    notes = []
    try:
        result = gamma(params)
        marker = result.marker()
    except UncoveredError as e:
        result, marker = None, "uncovered"
        notes.append(str(e))

    construct_weight, construct_failed, gap = None, False, False
    try:
        labeling, tag = construct(params)
        construct_weight = labeling.weight
    except QuotaGapError as e:
        gap = True
        notes.append(str(e))
    except NoConstructionError:
        pass
    except (ConstructionError, CertificateMismatchError) as e:
        construct_failed = True
        notes.append(str(e))
        logger.error("[SWEEP] %s: construction failed: %s", params, e)

    solver_optimum, refused = None, False
    if with_solver:
        try:
            solver_optimum = solve_exact(params, solver_config).optimum
        except SolverRefusal:
            refused = True

    status = classify(result, construct_weight, construct_failed, solver_optimum, with_solver, refused, gap)
    if status == MISMATCH:
        logger.warning("[SWEEP] %s: MISMATCH gamma=%s construct=%s solver=%s",
                       params, marker, construct_weight, solver_optimum)
    return SweepRow(*triple, marker, construct_weight, solver_optimum, status, "; ".join(notes))


def _sweep_row_args(args):
    return sweep_row(*args)


def run_sweep(triples, with_solver=False, solver_config=None, workers=0):
    """Rows for every triple, in the order given."""
    jobs = [(t, with_solver, solver_config) for t in triples]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_row_args, jobs, chunksize=max(1, len(jobs) // (workers * 4))))
    else:
        rows = [_sweep_row_args(job) for job in jobs]
    logger.info("[SWEEP] %d rows: %s", len(rows), summarize(rows))
    return rows


def summarize(rows):
    counts = Counter(row.status for row in rows)
    return ", ".join(f"{status} {counts.get(status, 0)}" for status in STATUSES)


# conjecture audit

@dataclass(frozen=True)
class ConjectureRow:
    m: int
    n: int
    p: int
    gamma_value: Optional[int]
    bound: int
    status: str
    expected_tight: bool
    searched: bool = False

    @property
    def slack(self):
        return None if self.gamma_value is None else self.bound - self.gamma_value

    @property
    def finding(self):
        """Tight rows outside the expected family, or family rows that are not tight"""
        if self.status == "EXCEEDS":
            return True
        if self.status in ("TIGHT", "SLACK"):
            return (self.status == "TIGHT") != self.expected_tight
        return False

    def fields(self):
        return [self.m, self.n, self.p, "" if self.gamma_value is None else self.gamma_value,
                self.bound, "" if self.slack is None else self.slack, self.status,
                "yes" if self.expected_tight else "", "search" if self.searched else "closed form"]


CONJECTURE_HEADER = ("m", "n", "p", "gamma", "bound", "slack", "status", "family", "source")


def conjecture_rows(max_sum):
    rows = []
    for triple in triples_up_to(max_sum):
        params = TripartiteParams(*triple)
        bound = params.vertex_count - 1
        try:
            result = gamma(params)
        except UncoveredError:
            rows.append(ConjectureRow(*triple, None, bound, "UNCOVERED", in_tight_family(params)))
            continue
        if result.is_conflict:
            rows.append(ConjectureRow(*triple, None, bound, "CONFLICT", in_tight_family(params)))
            continue
        value = result.best_known
        status = "EXCEEDS" if value > bound else "TIGHT" if value == bound else "SLACK"
        row = ConjectureRow(*triple, value, bound, status, in_tight_family(params), result.is_disputed)
        if row.finding:
            logger.warning("[CONJECTURE] %s: gamma %d, bound %d, status %s (family: %s)",
                           params, value, bound, status, row.expected_tight)
        rows.append(row)
    return rows
