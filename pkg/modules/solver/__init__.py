"""
Solver - exact branch and bound, brute-force enumeration and vertex-weight scans
"""
from modules.solver.brute_force import brute_force
from modules.solver.lemma_scan import VertexWeightScan, optimum_vertex_weight_scan, w_weight_bound
from modules.solver.models.solve_report import SolveConfig, SolveReport
from modules.solver.search import solve_exact
