"""
Solver data models
"""
