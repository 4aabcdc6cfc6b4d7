"""Exact analysis of mixed polynomials: Newton boundary combinatorics,
non-degeneracy and local tameness probes, limit tangents along arcs, and
Milnor-fibration zeta functions."""

from . import arcs, constructors, degeneracy, lattice, newton, zeta
from .arcs import Arc, af_test_arc, expand_arc, limit_tangent, parse_arc
from .constructors import PullbackSpec, corpus, join, pullback_cyclic
from .degeneracy import (
    criticality_residual,
    falsify_nondegeneracy,
    local_tameness_check,
    tameness_witness_polys,
)
from .poly import GaussianRational, GradientPair, MixedMonomial, MixedPoly, parse_poly
from .zeta import chi_torus, expand_zeta, polar_reduction, zeta_function

__all__ = [
    "Arc",
    "GaussianRational",
    "GradientPair",
    "MixedMonomial",
    "MixedPoly",
    "PullbackSpec",
    "af_test_arc",
    "arcs",
    "chi_torus",
    "constructors",
    "corpus",
    "criticality_residual",
    "degeneracy",
    "expand_arc",
    "expand_zeta",
    "falsify_nondegeneracy",
    "join",
    "lattice",
    "limit_tangent",
    "local_tameness_check",
    "newton",
    "parse_arc",
    "parse_poly",
    "polar_reduction",
    "pullback_cyclic",
    "tameness_witness_polys",
    "zeta",
    "zeta_function",
]

__version__ = "0.1.0"
