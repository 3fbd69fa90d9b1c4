"""Exact evaluation of full-history recurrences with arithmetic-geometric weights.

The sequence ``x_{n+1} = sum_{k=0..n} (a + k d) r**k x_{n-k}`` with given
``x_0`` reduces to a second-order linear recurrence; this package evaluates
it five independent ways in exact rational arithmetic and cross-checks them.
"""
from .analysis import ErratumFinding, Verdict, empirical_ratio, erratum_report, ratio_limit
from .catalog import CatalogEntry, catalog_get, catalog_names, classical_values
from .engines import (
    ENGINES,
    EngineReport,
    cross_check,
    eval_binet,
    eval_convolution,
    eval_genfunc,
    eval_linear,
    eval_matrix,
    eval_matrix_at,
)
from .numerics import Quad, format_rat, parse_rat, quad_extract_rat, quad_mul, quad_pow
from .periodic import PeriodicParams, empirical_growth, eval_periodic
from .progressions import (
    ProgressionSpec,
    agp_sum,
    agp_sum_limit,
    agp_term,
    arith_sum,
    arith_term,
    gap_sum,
    gap_term,
    geo_limit,
    geo_sum,
    geo_term,
    rec1_term,
    rec2_term,
)
from .reducer import (
    AgpParams,
    EigenStructure,
    RootClass,
    SecondOrder,
    discriminant,
    eigenvalues,
    identify,
    identify_family,
    reduce,
)

__version__ = "0.1.0"
