"""Quartic sums toolkit: elliptic-curve solutions of (k+5) and (k+3) biquadratic equations."""

__version__ = "0.1.0"
