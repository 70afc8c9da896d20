"""
Graph core - K(m,n,p) parameters, edge labelings and the SEDF verifier
"""
from modules.graph_core.models.labeling import EdgeLabeling
from modules.graph_core.models.params import TripartiteParams, Vertex, U, V, W
from modules.graph_core.rebalance import rebalance, rebalance_all
from modules.graph_core.verifier import (
    VerifyReport,
    closed_neighborhood_sum,
    closed_sums,
    verify,
    vertex_weights,
)
