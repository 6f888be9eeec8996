"""Convex hulls of numbers representable in complex base p*exp(2*pi*i/n) with real digits."""
from .geometry import Polygon, ToleranceConfig, canonical_equal, contains_point, extremal_points, hull_oracle
from .hull import BaseSpec, BinaryWord, build_P, closed_form_polygon, closed_form_vertices, conv_lambda, generate_X, translate_hull
from .ifs import cloud, hutchinson_step, nonconvexity_witness
from .numsys import Alphabet, farkas_decompose, is_convex_lambda

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BaseSpec",
    "BinaryWord",
    "Polygon",
    "ToleranceConfig",
    "build_P",
    "canonical_equal",
    "closed_form_polygon",
    "closed_form_vertices",
    "cloud",
    "contains_point",
    "conv_lambda",
    "extremal_points",
    "farkas_decompose",
    "generate_X",
    "hull_oracle",
    "hutchinson_step",
    "is_convex_lambda",
    "nonconvexity_witness",
    "translate_hull",
]
