"""
Graph core data models
"""
