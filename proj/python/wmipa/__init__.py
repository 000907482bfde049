"""Exact weighted model integration: brute force, WMI-PA and SA-WMI-PA."""

from fractions import Fraction

from ._wmi import (
    CapExceeded,
    NonPolynomialWeight,
    ParseError,
    Problem,
    UnboundedRegion,
    generate,
    skeleton,
)
from ._wmi import det_query as _det_query
from ._wmi import solve as _solve

__all__ = [
    "CapExceeded",
    "NonPolynomialWeight",
    "ParseError",
    "Problem",
    "UnboundedRegion",
    "det_query",
    "generate",
    "load",
    "skeleton",
    "solve",
]


def load(path):
    """Parse a problem file."""
    with open(path, encoding="utf-8") as f:
        return Problem.parse(f.read())


def solve(problem, algo="sa", log=False, cache=False):
    """Solve a Problem (or problem text). The value is a Fraction."""
    if isinstance(problem, str):
        problem = Problem.parse(problem)
    result = _solve(problem, algo, log, cache)
    result["value"] = Fraction(result["value"])
    return result


def det_query(model_json, query):
    """Probability of `query` under a DET model given as JSON text."""
    return Fraction(_det_query(model_json, query))
