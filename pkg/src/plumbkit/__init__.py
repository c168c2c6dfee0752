"""Exact invariants of plumbed three-manifolds and Lefschetz fibrations."""

from .dinv import DInvariantTable, char_square, d_invariant, d_table
from .errors import InputSyntaxError, PreconditionError, SearchBudgetExceeded
from .graph import (
    ValidationReport,
    WeightedGraph,
    blow_down_leaf,
    canonical_form,
    components,
    parse_graph,
    validate,
)
from .hf_rank import RankResult, hfhat_rank, rank_recursion_triple
from .knots import SymmetricLaurent, hfp_rank_zero_surgery, torus_knot_alexander
from .lattice import (
    HomologySummary,
    IntersectionForm,
    SpinCClass,
    enumerate_spinc,
    formal_degree,
    homology_summary,
    intersection_form,
    is_positive_definite,
)
from .tables import hfp_rank, orientation_reverse

__version__ = "0.1.0"
