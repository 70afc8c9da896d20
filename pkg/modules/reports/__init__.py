"""
Reports - PDF export of sweep and conjecture tables
"""
