"""Exact bounds on the order of d-regular induced subgraphs of strongly regular graphs."""

from srgbounds.surd import QuadraticSurd, SurdSum, decide_sign, surd_compare, surd_floor, surd_frac

__version__ = "0.1.0"
