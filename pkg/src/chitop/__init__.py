"""Exact topological Euler characteristics of affine, quotient and weighted projective loci.

Also ships integer bound constants for those characteristics and a Betti-number
ledger for runs of threefold MMP steps.
"""

from .bounds import (
    BoundKey, bound_A, bound_B, bound_D, bound_Dprime, bound_L, bound_M, bound_N, bound_Phi,
    bound_PhiBar, bound_Psi, bound_Theta,
)
from .catalog import CatalogEntry, catalog_entry, catalog_rows, catalog_weight_bound
from .errors import ChitopError, GroebnerBudgetExceeded, PreconditionError, ProblemParseError, ResourceBudgetExceeded
from .eulerchar import AffineLocus, ConstructibleExpr, EulerConfig, chi_affine, chi_constructible, union_chi
from .exactmath import MultiPoly, poly_ring
from .groebner import IdealBasis, groebner_basis
from .mmp import BettiVector, Interval, StepRecord, ThreefoldState, apply_step, validate_run
from .polyparse import parse_poly, parse_problem
from .resultant import common_zero_count, distinct_root_count
from .wps import (
    CyclicQuotientLocus, WeightedLocus, WeightedSpace, chi_cyclic_quotient, chi_quotient_average, chi_wps,
    compare_reference, exceptional_divisor_chi,
)

__version__ = "0.1.0"
