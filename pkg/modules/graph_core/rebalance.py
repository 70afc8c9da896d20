import logging

from common.errors import ContractError, InputError, InternalError
from modules.graph_core.models.params import Vertex
from modules.graph_core.verifier import verify

logger = logging.getLogger(__name__)


def _negatives_at(labeling, vertex):
    params = labeling.params
    return int(labeling.negative_counts()[params.global_index(vertex)])


def rebalance(labeling, a, b):
    """
    Move negative edges between two vertices of the same part until their
    negative counts differ by at most one.

    Each swap picks the lowest-index common neighbour z with f(az) = -1 and
    f(bz) = +1 (taking a as the heavier vertex) and exchanges the two signs.
    The weight is unchanged and the result is still an SEDF.
    """
    params = labeling.params
    params.check_vertex(a)
    params.check_vertex(b)
    if a.part != b.part:
        raise InputError(f"{a} and {b} are in different parts")
    if a == b:
        raise InputError(f"rebalance needs two distinct vertices, got {a} twice")
    if not verify(labeling).is_sedf:
        raise ContractError(f"rebalance requires an SEDF; labeling of {params} is not one")

    if _negatives_at(labeling, a) < _negatives_at(labeling, b):
        a, b = b, a

    swaps = 0
    result = labeling
    while _negatives_at(result, a) - _negatives_at(result, b) >= 2:
        for z in params.vertices():
            if z.part == a.part:
                continue
            az, bz = params.edge_id(a, z), params.edge_id(b, z)
            if result.sign(az) == -1 and result.sign(bz) == 1:
                result = result.with_sign(az, 1).with_sign(bz, -1)
                swaps += 1
                break
        else:
            raise InternalError(f"no swap available between {a} and {b}")

    if swaps:
        logger.debug("[REBALANCE] %s: %d swaps between %s and %s", params, swaps, a, b)
        if not verify(result).is_sedf:
            raise InternalError(f"rebalance of {a},{b} in {params} broke the SEDF property")
    return result


def rebalance_all(labeling):
    """Rebalance every part until all same-part negative counts differ by at most one."""
    params = labeling.params
    result = labeling
    for part in range(3):
        size = params.part_size(part)
        if size < 2:
            continue
        offset = params.part_offsets[part]
        while True:
            counts = result.negative_counts()[offset:offset + size]
            hi, lo = int(counts.argmax()), int(counts.argmin())
            if counts[hi] - counts[lo] <= 1:
                break
            result = rebalance(result, Vertex(part, hi), Vertex(part, lo))
    return result
