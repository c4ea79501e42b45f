"""Exact evaluation of integer sequences in time polynomial in input plus output size."""

__version__ = "0.1.0"
