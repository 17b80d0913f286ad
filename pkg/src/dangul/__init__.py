"""Bijections between oriented planar maps and mobiles, and the counting of
d-angulations of girth d."""
from .map_core import PlanarMap, RootSpec, girth, canonical_code, rooted_code
from .orientation import WeightedBiorientation, ConstraintSpec, class_of, dual, undual
from .canonical_orient import ddm_orient, pseudo_ddm_orient, is_non_separated
from .mobiles import Mobile, excess, is_d_branching, is_pd_branching
from .bijections import (phi_plus, phi_minus, phi_zero, phi_plus_inverse,
                         phi_minus_inverse, phi_zero_inverse, partial_closure)
from .counting import TruncatedSeries, F_d, F_d_prime, M_pd, F_pd_prime

__all__ = [
    "PlanarMap", "RootSpec", "girth", "canonical_code", "rooted_code",
    "WeightedBiorientation", "ConstraintSpec", "class_of", "dual", "undual",
    "ddm_orient", "pseudo_ddm_orient", "is_non_separated",
    "Mobile", "excess", "is_d_branching", "is_pd_branching",
    "phi_plus", "phi_minus", "phi_zero", "phi_plus_inverse", "phi_minus_inverse",
    "phi_zero_inverse", "partial_closure",
    "TruncatedSeries", "F_d", "F_d_prime", "M_pd", "F_pd_prime",
]

__version__ = "0.1.0"
