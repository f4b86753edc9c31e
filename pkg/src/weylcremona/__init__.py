"""Birational Weyl group actions, tau cocycles and the dynamics they generate.

Modules:
    rootdata    generalized Cartan matrices, reflections, orientation matrices
    symfield    exact polynomials and rational functions over Z
    birep       the birational action of W(A) on Q(alpha; f)
    taucocycle  tau functions and the cocycle phi_w(lambda)
    latticedyn  translations, evolution formulas, orbits, dP_II
    flows       differential systems, RK4, continuum limit
"""

__version__ = "0.1.0"

from .birep import GroupWord, Representation, apply_word, parse_word, verify_coxeter_relations
from .rootdata import (
    CartanMatrix,
    cartan_affine_A,
    cartan_finite_A,
    cyclic_orientation,
    symbolic_skew_orientation,
    validate_cartan,
    validate_orientation,
)
from .symfield import RF, Poly, PoleError, rf_eq

__all__ = [
    "__version__",
    "CartanMatrix",
    "GroupWord",
    "PoleError",
    "Poly",
    "RF",
    "Representation",
    "apply_word",
    "cartan_affine_A",
    "cartan_finite_A",
    "cyclic_orientation",
    "parse_word",
    "rf_eq",
    "symbolic_skew_orientation",
    "validate_cartan",
    "validate_orientation",
    "verify_coxeter_relations",
]
