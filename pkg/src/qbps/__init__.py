"""Exact combinatorics of quasi-BPS windows for symmetric quivers.

Everything is exact rational arithmetic: window polytopes and membership,
minimal scalings, the weight-decomposition algorithm, summand-label
enumeration and ordering, and numeric structure reports.
"""

from .bps import (
    SummandLabel,
    boundary_witnesses,
    compare_summands,
    dd_generators,
    decompose_weight,
    from_summand,
    is_good_weight,
    magic_generators,
    to_summand,
)
from .generic import GenericReal, format_generic, parse_generic
from .lattice import (
    Cocharacter,
    GenericWeight,
    Weight,
    WeightMultiset,
    block_cocharacter,
    n_lambda,
    rep_weights,
    rho,
    sigma,
    tau,
    tau_sigma,
    theta_weights,
)
from .quiver import (
    AssumptionFlags,
    DimensionVector,
    Quiver,
    USpec,
    alpha,
    alpha_min,
    assumption_flags,
    double,
    frame,
    is_symmetric,
    triple,
    very_symmetric_companion,
)
from .sod import (
    SodReport,
    framed_summands,
    knorrer_shift_check,
    preprojective_summands,
    unframed_summands,
)
from .structure import dim_P, gorenstein_flags, serre_report, support_gate
from .zonotope import Facet, Zonotope, contains, facets, on_boundary, r_invariant

__version__ = "0.1.0"
