"""Certified spectral radii and degree-based bounds for uniform hypergraphs."""

from hyperspec.bounds import BoundReport, full_report
from hyperspec.core import Hypergraph, build_hypergraph, degree_profile
from hyperspec.generators import blow_up, complete_uniform, fixture, hyperstar, two_heart_graph
from hyperspec.tensorops import brute_force_oracle, signless_laplacian_radius, spectral_radius

__all__ = [
    "BoundReport",
    "Hypergraph",
    "blow_up",
    "brute_force_oracle",
    "build_hypergraph",
    "complete_uniform",
    "degree_profile",
    "fixture",
    "full_report",
    "hyperstar",
    "signless_laplacian_radius",
    "spectral_radius",
    "two_heart_graph",
]
