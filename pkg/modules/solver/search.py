"""
Exact minimum-weight SEDF by depth-first branch and bound.

Edges are decided one vertex star at a time: for each u its UV row then its
UW row, then each v's VW row. A node is cut when

  * a decided edge can no longer reach f[e] >= 1, with every undecided
    edge counted as +1 (negative counts only grow along a branch);
  * the weight bound cannot beat the incumbent. Every edge xz needs
    f(x) + f(z) >= 0 at the end, so x can carry at most
    (deg(x) + min_z f(z)) / 2 negative edges, f(z) taken optimistically;
  * the negative counts inside a part can no longer be non-increasing in
    vertex index. Permuting the vertices of one part is an automorphism,
    so some optimum always has that shape.
"""
import logging
import math
import threading
import time
from concurrent.futures import ThreadPoolExecutor

from common.errors import (
    CertificateMismatchError,
    ConstructionError,
    InternalError,
    NoConstructionError,
    SolverRefusal,
)
from modules.constructor.construct import construct
from modules.constructor.plans import quota_plan
from modules.graph_core.models.labeling import EdgeLabeling
from modules.graph_core.models.params import U, V, W, Vertex
from modules.graph_core.verifier import verify
from modules.oracle.dispatch import canonicalize
from modules.solver.models.solve_report import SolveConfig, SolveReport

logger = logging.getLogger(__name__)


class _Cancelled(Exception):
    pass


class SharedIncumbent:
    """Best labeling found so far; the weight only ever decreases."""

    def __init__(self, weight, flags):
        self._lock = threading.Lock()
        self.weight = weight
        self.flags = list(flags)

    def offer(self, weight, flags):
        with self._lock:
            if weight < self.weight:
                self.weight = weight
                self.flags = list(flags)
                return True
            return False


def branch_order(params):
    """Edge ids in branching order together with their global endpoints."""
    order = []
    for u in range(params.m):
        for part in (V, W):
            for j in range(params.part_size(part)):
                order.append((Vertex(U, u), Vertex(part, j)))
    for v in range(params.n):
        for j in range(params.p):
            order.append((Vertex(V, v), Vertex(W, j)))
    return [(params.edge_id(a, b), params.global_index(a), params.global_index(b)) for a, b in order]


class _Search:
    """One depth-first search over a shared branching order."""

    def __init__(self, params, config, incumbent, targets, cancel_event):
        self.params = params
        self.config = config
        self.incumbent = incumbent
        self.cancel_event = cancel_event
        self.edges = branch_order(params)
        self.edge_total = len(self.edges)

        size = params.vertex_count
        self.part = [params.vertex_at(x).part for x in range(size)]
        self.deg = [params.degree(self.part[x]) for x in range(size)]
        self.neg = [0] * size
        self.undecided = list(self.deg)
        self.sign = [0] * self.edge_total
        self.negatives = 0
        self.targets = list(targets)

        self.incident = [[] for _ in range(size)]
        for position, (_, a, b) in enumerate(self.edges):
            self.incident[a].append(position)
            self.incident[b].append(position)
        offsets = params.part_offsets
        self.members = [list(range(offsets[k], offsets[k] + params.part_size(k))) for k in (U, V, W)]
        self.prev_same = [x - 1 if x > offsets[self.part[x]] else -1 for x in range(size)]
        self.next_same = [x + 1 if x + 1 < offsets[self.part[x]] + params.part_size(self.part[x]) else -1
                          for x in range(size)]

        self.nodes_explored = 0
        self.pruned_symmetry = 0
        self.pruned_bound = 0
        self.pruned_feasibility = 0

    # state changes

    def _apply(self, position, value):
        _, a, b = self.edges[position]
        self.sign[position] = value
        self.undecided[a] -= 1
        self.undecided[b] -= 1
        if value < 0:
            self.neg[a] += 1
            self.neg[b] += 1
            self.negatives += 1

    def _undo(self, position):
        _, a, b = self.edges[position]
        if self.sign[position] < 0:
            self.neg[a] -= 1
            self.neg[b] -= 1
            self.negatives -= 1
        self.sign[position] = 0
        self.undecided[a] += 1
        self.undecided[b] += 1

    # checks

    def _closed_sums_ok(self, position):
        _, a, b = self.edges[position]
        deg, neg, sign = self.deg, self.neg, self.sign
        if sign[position] > 0:
            return deg[a] + deg[b] - 2 * neg[a] - 2 * neg[b] - 1 >= 1
        for x in (a, b):
            rx = deg[x] - 2 * neg[x]
            for q in self.incident[x]:
                if sign[q]:
                    _, s, t = self.edges[q]
                    z = t if s == x else s
                    if rx + deg[z] - 2 * neg[z] - sign[q] < 1:
                        return False
        return True

    def _symmetric_ok(self, position):
        _, a, b = self.edges[position]
        neg, undecided = self.neg, self.undecided
        for x in (a, b):
            before, after = self.prev_same[x], self.next_same[x]
            if before >= 0 and neg[x] > neg[before] + undecided[before]:
                return False
            if after >= 0 and neg[after] > neg[x] + undecided[x]:
                return False
        return True

    def lower_bound(self, depth):
        """Lowest reachable weight below this node, or None if no SEDF is reachable."""
        deg, neg, undecided = self.deg, self.neg, self.undecided
        part_min = [min(deg[x] - 2 * neg[x] for x in group) for group in self.members]
        capacity = 0
        for k, group in enumerate(self.members):
            other = min(part_min[j] for j in (U, V, W) if j != k)
            for x in group:
                room = (deg[x] + other) // 2 - neg[x]
                if room < 0:
                    return None
                capacity += min(undecided[x], room)
        extra = min(self.edge_total - depth, capacity // 2)
        return self.edge_total - 2 * (self.negatives + extra)

    # search

    def _order(self, position):
        _, a, b = self.edges[position]
        if self.neg[a] < self.targets[a] and self.neg[b] < self.targets[b]:
            return (-1, 1)
        return (1, -1)

    def _leaf(self):
        weight = self.edge_total - 2 * self.negatives
        if weight < self.incumbent.weight:
            flags = [False] * self.edge_total
            for position, (edge, _, _) in enumerate(self.edges):
                flags[edge] = self.sign[position] < 0
            if self.incumbent.offer(weight, flags):
                logger.debug("[SOLVE] %s: incumbent improved to %d after %d nodes",
                             self.params, weight, self.nodes_explored)

    def try_assign(self, position, value):
        """Apply a sign and run the cheap checks; the caller undoes it either way."""
        self._apply(position, value)
        if not self._closed_sums_ok(position):
            self.pruned_feasibility += 1
            return False
        if self.config.symmetry_pruning and not self._symmetric_ok(position):
            self.pruned_symmetry += 1
            return False
        return True

    def dfs(self, depth):
        if self.cancel_event is not None and self.cancel_event.is_set():
            raise _Cancelled()
        self.nodes_explored += 1
        if depth == self.edge_total:
            self._leaf()
            return
        if self.config.bound_pruning:
            bound = self.lower_bound(depth)
            if bound is None:
                self.pruned_feasibility += 1
                return
            if bound >= self.incumbent.weight:
                self.pruned_bound += 1
                return
        for value in self._order(depth):
            if self.try_assign(depth, value):
                self.dfs(depth + 1)
            self._undo(depth)

    def prefixes(self, depth_limit, prefix=None, out=None):
        """Sign prefixes of length depth_limit that survive the cheap checks."""
        prefix = [] if prefix is None else prefix
        out = [] if out is None else out
        depth = len(prefix)
        if depth == depth_limit:
            out.append(tuple(prefix))
            return out
        for value in self._order(depth):
            if self.try_assign(depth, value):
                prefix.append(value)
                self.prefixes(depth_limit, prefix, out)
                prefix.pop()
            self._undo(depth)
        return out

    def run_from(self, prefix):
        for depth, value in enumerate(prefix):
            self._apply(depth, value)
        self.dfs(len(prefix))
        return self


def _initial_incumbent(params):
    try:
        labeling, tag = construct(params)
        logger.debug("[SOLVE] %s: incumbent %d from %s", params, labeling.weight, tag)
        return labeling
    except (NoConstructionError, ConstructionError, CertificateMismatchError) as e:
        logger.debug("[SOLVE] %s: no construction (%s); starting from all +1", params, e)
        return EdgeLabeling.all_positive(params)


def _value_targets(params):
    """Per-vertex negative-count targets that decide which sign is tried first."""
    try:
        return [int(q) for q in quota_plan(params).quota_array]
    except (NoConstructionError, ConstructionError):
        return [(params.degree(params.vertex_at(x).part) - 1) // 2 for x in range(params.vertex_count)]


def solve_exact(params, config=None, cancel_event=None):
    """
    Exact signed edge domination number with an optimal certificate.

    Refuses instances over config.max_edges. exhausted is False only when
    cancel_event was set before the search finished.
    """
    config = config or SolveConfig.from_settings()
    canonical = canonicalize(params)
    cparams = canonical.params
    if cparams.edge_count > config.max_edges:
        raise SolverRefusal(
            f"{canonical.original} has {cparams.edge_count} edges, over the solver cap of {config.max_edges}")

    started = time.perf_counter()
    start_labeling = _initial_incumbent(cparams)
    incumbent = SharedIncumbent(start_labeling.weight, start_labeling.negative_flags().tolist())
    targets = _value_targets(cparams)

    searches = []
    exhausted = True
    try:
        if config.parallel_width > 0:
            searches = _parallel(cparams, config, incumbent, targets, cancel_event)
        else:
            search = _Search(cparams, config, incumbent, targets, cancel_event)
            searches.append(search)
            search.dfs(0)
    except _Cancelled:
        exhausted = False
        logger.info("[SOLVE] %s: cancelled; best so far %d", canonical.original, incumbent.weight)

    certificate = EdgeLabeling.from_negative_flags(cparams, incumbent.flags)
    report = verify(certificate)
    if not report.is_sedf or report.weight != incumbent.weight:
        raise InternalError(f"solver certificate for {cparams} failed verification")

    elapsed = time.perf_counter() - started
    result = SolveReport(
        optimum=incumbent.weight,
        certificate=canonical.to_original(certificate),
        nodes_explored=sum(s.nodes_explored for s in searches),
        pruned_symmetry=sum(s.pruned_symmetry for s in searches),
        pruned_bound=sum(s.pruned_bound for s in searches),
        pruned_feasibility=sum(s.pruned_feasibility for s in searches),
        exhausted=exhausted,
        elapsed_seconds=elapsed,
        initial_incumbent=start_labeling.weight,
    )
    logger.info("[SOLVE] %s: optimum %d (start %d), %d nodes in %.2fs",
                canonical.original, result.optimum, result.initial_incumbent, result.nodes_explored, elapsed)
    return result


def _parallel(params, config, incumbent, targets, cancel_event):
    """Split the tree at a shallow depth and search the subtrees on a thread pool."""
    splitter = _Search(params, config, incumbent, targets, cancel_event)
    depth = min(splitter.edge_total, max(1, math.ceil(math.log2(config.parallel_width * 4))))
    prefixes = splitter.prefixes(depth)
    logger.debug("[SOLVE] %s: %d subtrees at depth %d on %d threads",
                 params, len(prefixes), depth, config.parallel_width)

    def work(prefix):
        return _Search(params, config, incumbent, targets, cancel_event).run_from(prefix)

    searches = [splitter]
    with ThreadPoolExecutor(max_workers=config.parallel_width) as pool:
        for search in pool.map(work, prefixes):
            searches.append(search)
    return searches
