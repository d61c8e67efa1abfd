"""Exact chromatic quasisymmetric and circular LLT polynomial toolkit."""

__version__ = "0.1.0"
