"""Minimum separating circles over a preprocessed planar point set."""

from ._circsep import GeometryError, QueryResult, Tree

__all__ = ["GeometryError", "QueryResult", "Tree"]
