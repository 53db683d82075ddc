"""Exact computations for spaces of nilpotent tuples in SU(2) and the F2 algebra behind them."""

__version__ = "0.1.0"
