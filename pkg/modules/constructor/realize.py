"""
Turn a quota plan into a labeling with exactly the planned negative edges
at every vertex.

Order of work: forced blocks, then the UV block up to the derived N_UV,
then (U ∪ V) x W. Both greedy phases repeatedly take the free edge whose
endpoints have the largest combined remaining deficit, ties going to the
lowest vertex indices. A phase that stalls is redone from its starting
point as a maximum flow over the free edges.
"""
import logging

import networkx as nx
import numpy as np

from common.errors import ConstructionError
from modules.graph_core.models.labeling import EdgeLabeling
from modules.graph_core.models.params import PART_NAMES, U, V, W, Vertex

logger = logging.getLogger(__name__)


class _Board:
    """Mutable negative-edge matrix over global vertex indices."""

    def __init__(self, plan):
        self.plan = plan
        self.params = plan.params
        size = self.params.vertex_count
        offsets = self.params.part_offsets
        self.part_of = np.repeat([U, V, W], self.params.sizes)
        self.slices = [slice(offsets[k], offsets[k] + self.params.sizes[k]) for k in (U, V, W)]
        self.negative = np.zeros((size, size), dtype=bool)
        self.quota = plan.quota_array.copy()

    def deficits(self):
        return self.quota - self.negative.sum(axis=1)

    def place(self, x, y):
        self.negative[x, y] = self.negative[y, x] = True

    def residual(self):
        deficits = self.deficits()
        return {str(self.params.vertex_at(i)): int(d) for i, d in enumerate(deficits) if d}

    def check_no_excess(self, stage):
        if (self.deficits() < 0).any():
            raise ConstructionError(f"{self.plan.case} {self.params}: quota exceeded after {stage}",
                                    self.residual())

    def block(self, a, b):
        return self.negative[self.slices[a], self.slices[b]]

    def to_labeling(self):
        return EdgeLabeling.from_matrices(self.params, *(
            np.where(self.block(a, b), -1, 1) for a, b in ((U, V), (U, W), (V, W))))


def _global(plan, vertex_class):
    return [plan.params.global_index(Vertex(vertex_class.part, i)) for i in vertex_class.indices]


def _place_forced(board):
    plan = board.plan
    for a, b in plan.forced_blocks:
        for x in _global(plan, plan.class_named(a)):
            for y in _global(plan, plan.class_named(b)):
                board.place(x, y)
    board.check_no_excess("forced blocks")


def _greedy(board, rows, cols, limit=None):
    """Negate free edges between rows and cols by largest combined deficit; returns the count placed."""
    placed = 0
    rows, cols = np.asarray(rows), np.asarray(cols)
    while limit is None or placed < limit:
        deficits = board.deficits()
        dr, dc = deficits[rows], deficits[cols]
        free = ~board.negative[np.ix_(rows, cols)] & (dr[:, None] > 0) & (dc[None, :] > 0)
        if not free.any():
            break
        score = np.where(free, dr[:, None] + dc[None, :], -1)
        # argmax returns the first maximum in row-major order: lowest row, then lowest column.
        r, c = np.unravel_index(int(score.argmax()), score.shape)
        board.place(int(rows[r]), int(cols[c]))
        placed += 1
    return placed


def _flow_fill(board, left, right, total=None):
    """
    Negate free left/right edges by maximum flow within the remaining deficits.

    Without total every deficit on both sides must be filled; with total
    exactly that many edges are placed. Returns False if impossible.
    """
    deficits = board.deficits()
    graph = nx.DiGraph()
    needed = 0
    for x in left:
        if deficits[x] > 0:
            graph.add_edge("source", ("x", x), capacity=int(deficits[x]))
            needed += int(deficits[x])
            for y in right:
                if deficits[y] > 0 and not board.negative[x, y]:
                    graph.add_edge(("x", x), ("y", y), capacity=1)
    for y in right:
        if deficits[y] > 0:
            graph.add_edge(("y", y), "sink", capacity=int(deficits[y]))
    if total is None:
        if needed != int(deficits[right].sum()):
            return False
        target = needed
    else:
        target = total
    if target == 0:
        return True
    if "sink" not in graph or "source" not in graph:
        return False
    graph.add_edge("origin", "source", capacity=target)
    value, flow = nx.maximum_flow(graph, "origin", "sink")
    if value < target:
        return False
    for node, targets in flow.items():
        if not isinstance(node, tuple) or node[0] != "x":
            continue
        for target_node, amount in targets.items():
            if target_node != "sink" and amount:
                board.place(node[1], target_node[1])
    return True


def realize(plan):
    """
    Labeling whose negative edges meet every quota of the plan exactly.

    Forced blocks are fully negative and every other edge is +1 unless a
    greedy or repair step chose it. Raises ConstructionError carrying the
    residual deficits when the quotas cannot be met.
    """
    board = _Board(plan)
    params = plan.params
    _place_forced(board)

    n_uv = plan.block_totals[0]
    already = int(board.block(U, V).sum())
    if already > n_uv:
        raise ConstructionError(f"{plan.case} {params}: forced UV edges exceed N_UV = {n_uv}")
    u_idx = np.arange(board.slices[U].start, board.slices[U].stop)
    v_idx = np.arange(board.slices[V].start, board.slices[V].stop)
    w_idx = np.arange(board.slices[W].start, board.slices[W].stop)
    forced_only = board.negative.copy()
    placed = _greedy(board, u_idx, v_idx, limit=n_uv - already)
    if placed < n_uv - already:
        logger.info("[REALIZE] %s %s: greedy UV phase stalled at %d of %d; repairing with max flow",
                    plan.case, params, already + placed, n_uv)
        board.negative = forced_only
        if not _flow_fill(board, u_idx, v_idx, total=n_uv - already):
            raise ConstructionError(
                f"{plan.case} {params}: UV phase stalled at {already + placed} of {n_uv}", board.residual())
    board.check_no_excess("UV phase")

    snapshot = board.negative.copy()
    uv_side = np.concatenate([u_idx, v_idx])
    _greedy(board, uv_side, w_idx)
    board.check_no_excess("W phase")

    if board.deficits().any():
        logger.info("[REALIZE] %s %s: greedy W phase left deficits %s; repairing with max flow",
                    plan.case, params, board.residual())
        board.negative = snapshot
        if not _flow_fill(board, uv_side, w_idx):
            raise ConstructionError(f"{plan.case} {params}: quotas are not realizable", board.residual())

    if (board.deficits() != 0).any():
        raise ConstructionError(f"{plan.case} {params}: realized counts differ from quotas", board.residual())

    labeling = board.to_labeling()
    logger.debug("[REALIZE] %s %s: weight %d, blocks %s", plan.case, params, labeling.weight,
                 {f"{PART_NAMES[a]}{PART_NAMES[b]}": int(board.block(a, b).sum())
                  for a, b in ((U, V), (U, W), (V, W))})
    return labeling
