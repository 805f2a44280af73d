"""Exact-rational toolkit for the fundamental cone of projective-plane
LDPC codes: plane construction, minimal pseudo-codewords, pseudo-weights
and their lower bounds, LP decoding experiments."""

from .cone import (PseudoCodeword, TypeVector, active_rank, cone_constraints,
                   is_member, is_minimal, is_stopping_set, mod2_reduce,
                   support, type_of)
from .fields import Field, field_new
from .plane import (ParityCheck, Plane, arc_check, build_plane, gf2_rank,
                    incidence_matrix, min_weight_codewords, verify_axioms)
from .rays import RaySet, enumerate_rays, histogram, support_guided_rays
from .weights import awgnc_pw, bec_pw, bsc_pw, conjectured_wp, pw_from_type

__version__ = "0.1.0"

__all__ = [
    "Field", "field_new", "Plane", "ParityCheck", "build_plane",
    "incidence_matrix", "verify_axioms", "gf2_rank", "min_weight_codewords",
    "arc_check", "PseudoCodeword", "TypeVector", "cone_constraints",
    "is_member", "is_minimal", "active_rank", "type_of", "support",
    "is_stopping_set", "mod2_reduce", "awgnc_pw", "bsc_pw", "bec_pw",
    "pw_from_type", "conjectured_wp", "RaySet", "enumerate_rays",
    "support_guided_rays", "histogram",
]
