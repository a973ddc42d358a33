"""Exact combinatorics of circle pre-laminations and their leaf spaces."""

__version__ = "0.1.0"
