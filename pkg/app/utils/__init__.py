"""
Utility modules for MersenneDiophantine
"""
