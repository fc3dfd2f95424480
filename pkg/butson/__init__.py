"""
Exact verification, spectra and conjecture testing for Butson-Hadamard matrices
"""

__version__ = "0.1.0"
