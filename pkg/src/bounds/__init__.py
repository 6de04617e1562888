from __future__ import annotations

"""
Unboundedness certificates, Farkas witnesses and the solution radius R.
"""

from src.bounds.certificates import (
    FarkasWitness,
    UnboundedCertificate,
    check_linear_decrease,
    farkas_witness,
    unboundedness_ray,
)
from src.bounds.radius import RadiusBound, SubspaceBound, lifting_norm_bound, radius_R, subspace_norm_bound

__all__ = [
    "FarkasWitness",
    "RadiusBound",
    "SubspaceBound",
    "UnboundedCertificate",
    "check_linear_decrease",
    "farkas_witness",
    "lifting_norm_bound",
    "radius_R",
    "subspace_norm_bound",
]
