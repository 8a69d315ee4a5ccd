"""Toy-scale elliptic-curve discrete-log workbench.

Builds small curves and domain parameters, derives key pairs, recovers
private keys by brute-force linear walk (and by baby-step giant-step as a
cross-check) and counts every group operation exactly.
"""

from ._kernels import BACKEND
from .curve import INFINITY, AffinePoint, CurveParams, point_add, point_neg, scalar_mul, scalar_mul_naive
from .dlp import AttackResult, bsgs, linear_walk, verify_solution
from .field import FieldElement, PrimeModulus
from .keys import KeyPair, derive_public, keygen
from .params import DomainParams, build_domain_params, count_points, curve_search, validate_params

__all__ = [
    "BACKEND",
    "INFINITY",
    "AffinePoint",
    "AttackResult",
    "CurveParams",
    "DomainParams",
    "FieldElement",
    "KeyPair",
    "PrimeModulus",
    "build_domain_params",
    "bsgs",
    "count_points",
    "curve_search",
    "derive_public",
    "keygen",
    "linear_walk",
    "point_add",
    "point_neg",
    "scalar_mul",
    "scalar_mul_naive",
    "validate_params",
    "verify_solution",
]
