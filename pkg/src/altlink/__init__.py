"""Kauffman states and knot Floer top filtration levels of alternative links."""

__version__ = "0.1.0"
