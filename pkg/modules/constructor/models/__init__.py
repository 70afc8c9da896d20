"""
Constructor data models
"""
