"""Exact dimensions of linear systems of surfaces in P^3 through at
most eight general fat points, with an interpolation-rank oracle."""

from .cremona import (CremonaStep, corollary_monotone, cremona_curve,
                      cremona_divisor, cremona_point, vdim_change)
from .curves import (NegativeCurveRecord, enumerate_minus_one,
                     is_minus_one_curve, negative_curves,
                     speciality_lower_bound)
from .dimension import (DimReport, ReductionStep, claim_c1_identity,
                        full_dim, standard_dim, theorem_terms)
from .oracle import (ConditionMatrix, OracleConfig, oracle_dim_p2,
                     oracle_dim_p3, oracle_dim_quadric, rank_mod_p)
from .plane import (PlaneReduction, p2_cremona, p2_is_standard,
                    p2_nonspecial_facts, p2_normalize, p2_standardize)
from .quadric import (RestrictionResult, quadric_to_plane,
                      restrict_to_quadric, restrict_with_image,
                      restricted_nonspecial_check)
from .standard import (StandardDecomposition, decompose, empty_three,
                       is_standard, standard_class)
from .sweep import (SweepRow, compare_systems, enumerate_systems,
                    mismatches, random_systems)
from .systems import (CurveClassP3, PlaneSystem, QuadricSystem, SystemP3,
                      binom, normalize, pair, vdim_p2, vdim_p3, vdim_quadric)

__version__ = "0.1.0"
