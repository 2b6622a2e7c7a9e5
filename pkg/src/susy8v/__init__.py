"""Exact tau-functions of the supersymmetric eight-vertex model and related Painleve VI data."""

__version__ = "0.1.0"
