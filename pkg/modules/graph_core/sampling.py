import numpy as np

from modules.graph_core.models.labeling import EdgeLabeling
from modules.graph_core.verifier import closed_sums


def random_labeling(params, rng, negative_probability=0.5):
    flags = rng.random(params.edge_count) < negative_probability
    return EdgeLabeling.from_negative_flags(params, flags)


def random_sedf(params, rng, max_negatives=None):
    """
    Hill-climb from the all-positive labeling: visit the edges in random
    order and negate each one whenever the result stays an SEDF.
    """
    flags = np.zeros(params.edge_count, dtype=bool)
    labeling = EdgeLabeling.all_positive(params)
    accepted = 0
    for edge in rng.permutation(params.edge_count):
        if max_negatives is not None and accepted >= max_negatives:
            break
        flags[edge] = True
        candidate = EdgeLabeling.from_negative_flags(params, flags)
        if closed_sums(candidate).min() >= 1:
            labeling = candidate
            accepted += 1
        else:
            flags[edge] = False
    return labeling
