"""
Closed-neighbourhood sums and the SEDF check.

For an edge e = xy the closed neighbourhood N[e] is e plus every edge sharing
an endpoint with it, and

    f[xy] = deg(x) + deg(y) - 2*neg(x) - 2*neg(y) - f(xy) = f(x) + f(y) - f(xy)

where neg(x) counts the negative edges at x and f(x) is the vertex weight.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx
import numpy as np

from common.errors import InputError, InternalError
from modules.graph_core.models.labeling import EdgeLabeling
from modules.graph_core.models.params import BLOCKS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerifyReport:
    is_sedf: bool
    weight: int
    min_closed_sum: int
    violations: tuple = field(default_factory=tuple)

    def to_dict(self):
        return {
            "is_sedf": self.is_sedf,
            "weight": self.weight,
            "min_closed_sum": self.min_closed_sum,
            "violations": [[edge, value] for edge, value in self.violations],
        }


@lru_cache(maxsize=32)
def multipartite_graph(params):
    """networkx K_{m,n,p} whose node labels are the global vertex indices"""
    return nx.complete_multipartite_graph(params.m, params.n, params.p)


def _check_labeling(labeling):
    if not isinstance(labeling, EdgeLabeling):
        raise InputError(f"expected an EdgeLabeling, got {type(labeling).__name__}")
    return labeling


def closed_sum_by_degrees(labeling, edge):
    params = labeling.params
    a, b = params.endpoints(edge)
    neg = labeling.negative_counts()
    return (params.degree(a.part) + params.degree(b.part)
            - 2 * int(neg[params.global_index(a)]) - 2 * int(neg[params.global_index(b)])
            - labeling.sign(edge))


def closed_sum_by_summation(labeling, edge):
    """f[e] summed edge by edge over N[e] in the networkx graph"""
    params = labeling.params
    graph = multipartite_graph(params)
    a, b = params.endpoints(edge)
    ga, gb = params.global_index(a), params.global_index(b)

    def f(x, y):
        return labeling.sign(params.edge_id(params.vertex_at(x), params.vertex_at(y)))

    total = f(ga, gb)
    for z in graph[ga]:
        if z != gb:
            total += f(ga, z)
    for z in graph[gb]:
        if z != ga:
            total += f(gb, z)
    return total


def closed_neighborhood_sum(labeling, edge):
    """f[e] for one edge, cross-checked against direct summation."""
    _check_labeling(labeling)
    labeling.params.check_edge(edge)
    by_degrees = closed_sum_by_degrees(labeling, edge)
    by_summation = closed_sum_by_summation(labeling, edge)
    if by_degrees != by_summation:
        raise InternalError(
            f"closed sum of edge {edge} in {labeling.params}: "
            f"degree form {by_degrees} != summation {by_summation}")
    return by_degrees


def closed_sums(labeling):
    """Vector of f[e] over all edge ids."""
    _check_labeling(labeling)
    params = labeling.params
    vertex_weight = labeling.vertex_weight_array()
    offsets = params.part_offsets
    parts = []
    for k, (a, b) in enumerate(BLOCKS):
        fa = vertex_weight[offsets[a]:offsets[a] + params.sizes[a]]
        fb = vertex_weight[offsets[b]:offsets[b] + params.sizes[b]]
        parts.append((fa[:, None] + fb[None, :] - labeling.matrix(k)).ravel())
    return np.concatenate(parts).astype(np.int64)


def verify(labeling):
    """Check f[e] >= 1 on every edge and report each edge that fails."""
    sums = closed_sums(labeling)
    failing = np.flatnonzero(sums < 1)
    violations = tuple((int(e), int(sums[e])) for e in failing)
    min_sum = int(sums.min()) if sums.size else 0
    report = VerifyReport(
        is_sedf=not violations,
        weight=labeling.weight,
        min_closed_sum=min_sum,
        violations=violations,
    )
    if violations:
        logger.debug("[VERIFY] %s: %d violations, min f[e] = %d",
                     labeling.params, len(violations), min_sum)
    return report


def vertex_weights(labeling):
    """Map every vertex to f(x), the sum of labels on its edges."""
    _check_labeling(labeling)
    params = labeling.params
    weights = labeling.vertex_weight_array()
    return {vertex: int(weights[params.global_index(vertex)]) for vertex in params.vertices()}
