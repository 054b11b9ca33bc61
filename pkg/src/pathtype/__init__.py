"""Cohen-Macaulay type of edge-weighted r-path ideals of r-path suspensions."""

from .cmtype import TypeReport, cm_type, cm_type_r1_weighted, decomposition_report
from .covers import (WeightedCover, cover_ideal, enumerate_minimal_covers,
                     enumerate_p_minimal_covers, gamma, h_values, is_cover,
                     is_minimal_cover, p_criterion_leq, p_leq)
from .errors import ConsistencyError, InputError, WeightConditionError
from .graph import (SuspendedGraph, WeightedGraph, enumerate_r_paths, suspend,
                    truncate_suspension, validate_weight_condition)
from .monomial import (IrreducibleIdeal, Monomial, MonomialIdeal, contains,
                       ideal_contains_ideal, ideal_intersect, ideal_sum,
                       irreducible_decompose, is_artinian, minimalize)
from .pathideal import frobenius_power_ideal, path_exponents, project, weighted_path_ideal

__version__ = "0.1.0"
