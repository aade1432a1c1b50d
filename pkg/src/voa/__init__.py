"""Exact symbolic calculus for the rank-d free-boson vertex algebra, its
sign-involution orbifold, and their modules, plus a machine-checked
identity catalog with a suite runner."""

__version__ = "0.1.0"
