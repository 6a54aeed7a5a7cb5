"""
MersenneDiophantine - closed-form solver for M_p^x + (M_q+1)^y = (lz)^2 over Mersenne primes.
"""

__version__ = "1.0.0"
