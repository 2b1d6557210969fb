"""Exact invariants of plane curve singularities.

The package computes, over Q or a prime field, the branch decomposition
of a reduced plane curve germ, its blow-up resolution, the value
semigroup with delta invariant and conductor, the motivic local zeta
series with its generalized Poincare series, and for curves over finite
fields the factorization of the global zeta function into the zeta
function of the smooth model and local singularity factors.  All
arithmetic is exact: rationals, finite field tables and Laurent
polynomials in the Lefschetz class L.
"""

from .bivar import BivarPoly
from .branches import BranchParam, puiseux_branches
from .curves import CurveGerm, GlobalCurve
from .errors import (BadDenominator, BudgetExceeded, CurveInvError,
                     CurveSyntaxError, DegenerateReduction,
                     ExactDivisionFailure, FieldMismatch, InconsistentCounts,
                     IndexMismatch, InvalidGerm, NonStabilized,
                     NotTotallyRational, SmallFieldAmbiguity, WildFailure,
                     ZeroPolynomial)
from .fields import GF, QQ
from .motivic import MotClass, MotSeries, RationalSeries, evaluate_motclass
from .resolution import (ResolutionProcess, good_reduction_scan, resolve_germ,
                         same_process)
from .semigroup import (ValueSemigroup, delta_invariant,
                        reduction_semigroup_scan, semigroup_membership,
                        value_semigroup)
from .zetaglobal import (FactorizationReport, PointCounts, WeilZeta,
                         closed_point_tallies, count_points, divisor_zeta,
                         unit_index, verify_global_factorization,
                         weil_zeta_smooth)
from .zetalocal import (LocalZeta, OracleCounts, ValueIdealTable,
                        brute_force_ideal_counts, counting_specialization,
                        fiber_class, ideal_class, local_zeta, poincare_series)

__version__ = "0.1.0"

__all__ = [
    "BivarPoly", "BranchParam", "puiseux_branches",
    "CurveGerm", "GlobalCurve",
    "GF", "QQ",
    "MotClass", "MotSeries", "RationalSeries", "evaluate_motclass",
    "ResolutionProcess", "resolve_germ", "same_process",
    "good_reduction_scan",
    "ValueSemigroup", "delta_invariant", "value_semigroup",
    "semigroup_membership", "reduction_semigroup_scan",
    "LocalZeta", "OracleCounts", "ValueIdealTable",
    "local_zeta", "poincare_series", "counting_specialization",
    "fiber_class", "ideal_class", "brute_force_ideal_counts",
    "PointCounts", "WeilZeta", "FactorizationReport",
    "count_points", "weil_zeta_smooth", "closed_point_tallies",
    "divisor_zeta", "unit_index", "verify_global_factorization",
    "CurveInvError", "CurveSyntaxError", "ZeroPolynomial", "InvalidGerm",
    "FieldMismatch", "BadDenominator", "DegenerateReduction",
    "NotTotallyRational", "WildFailure", "NonStabilized",
    "SmallFieldAmbiguity", "BudgetExceeded", "InconsistentCounts",
    "IndexMismatch", "ExactDivisionFailure",
]
