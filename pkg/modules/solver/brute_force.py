import logging

import numpy as np

from common.errors import SolverRefusal
from common.settings import get_settings

logger = logging.getLogger(__name__)

CHUNK_BITS = 16


def brute_force(params, cap=None):
    """
    Minimum SEDF weight by enumerating all 2^|E| labelings.

    No pruning and no symmetry; labelings are scored in numpy chunks of
    2^16 with bit k of the chunk index meaning edge k is negative.
    """
    cap = get_settings().brute_force_max_edges if cap is None else cap
    edges = params.edge_count
    if edges > cap:
        raise SolverRefusal(f"{params} has {edges} edges, over the brute-force cap of {cap}")

    ends = [params.endpoints(e) for e in range(edges)]
    first = np.array([params.global_index(a) for a, _ in ends])
    second = np.array([params.global_index(b) for _, b in ends])
    incidence = np.zeros((edges, params.vertex_count), dtype=np.int32)
    incidence[np.arange(edges), first] = 1
    incidence[np.arange(edges), second] = 1
    degrees = incidence.sum(axis=0)
    shifts = np.arange(edges, dtype=np.int64)

    best = edges
    total = 1 << edges
    chunk = 1 << CHUNK_BITS
    for start in range(0, total, chunk):
        ids = np.arange(start, min(total, start + chunk), dtype=np.int64)
        negative = ((ids[:, None] >> shifts) & 1).astype(np.int32)
        vertex_weight = degrees - 2 * (negative @ incidence)
        closed = vertex_weight[:, first] + vertex_weight[:, second] - (1 - 2 * negative)
        valid = (closed >= 1).all(axis=1)
        if valid.any():
            weights = edges - 2 * negative[valid].sum(axis=1)
            best = min(best, int(weights.min()))
    logger.debug("[BRUTE] %s: minimum %d over %d labelings", params, best, total)
    return best
