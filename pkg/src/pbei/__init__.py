"""Parity binomial edge ideals: bases and decompositions from graph combinatorics."""

from .graph import Graph, NotConnected, analyze_components, enumerate_disconnectors, parity_reachable
from .poly import GF2, GF3, QQ, CoefficientField, Polynomial, TermOrder

__version__ = "0.1.0"

__all__ = [
    "GF2",
    "GF3",
    "QQ",
    "CoefficientField",
    "Graph",
    "NotConnected",
    "Polynomial",
    "TermOrder",
    "analyze_components",
    "enumerate_disconnectors",
    "parity_reachable",
]
