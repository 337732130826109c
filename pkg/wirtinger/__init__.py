"""Wirtinger numbers of knot and link diagrams."""

__version__ = "1.0.0"
