"""Numerical and exact verification of explicit Eisenstein series formulas on Gamma_0(N)."""

__version__ = "0.1.0"
