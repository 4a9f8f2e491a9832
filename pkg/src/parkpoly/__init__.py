"""Exact volumes, face counts and lattice-point counts for x-parking function
polytopes and their relatives."""

__version__ = "0.1.0"
