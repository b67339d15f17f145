"""Exact enumeration of ordered labeled trees by the size of their
maximal decreasing subtree, with brute-force oracles for every count."""

__version__ = "0.1.0"
