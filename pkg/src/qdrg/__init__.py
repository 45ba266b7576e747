"""Exact feasibility and structure checks for Q-polynomial distance-regular graphs
whose minimal eigenvalue is -k/2."""
from fractions import Fraction as Rational

from .errors import QDRGError
from .params import ArrayAnalysis, IntersectionArray, validate

__all__ = ["ArrayAnalysis", "IntersectionArray", "QDRGError", "Rational", "validate"]
__version__ = "0.1.0"
