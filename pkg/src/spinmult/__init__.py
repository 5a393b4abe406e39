"""Exact weight multiplicities of the spin module of a Levi subalgebra of sl(n)."""
from .errors import OracleTooLargeError, ValidationError
from .rootsys import (
    Composition,
    LeviContext,
    Partition,
    Weight,
    build_context,
    canonical_blocks,
    dominance_leq,
    dual_partition,
    normalize_weight,
    parse_partition,
    parse_weight,
)
from .oracle import (
    RootSubset,
    brute_multiplicity,
    enumerate_weight_counts,
    in_weyl_orbit_of_rho,
    is_saturated,
    mu_of_subset,
)
from .levi import LeviQuery, clear_memo, memo_stats, mult_levi
from .cartan import (
    SpinPartition,
    SpinTableau,
    is_spin_tableau,
    lift_partition,
    markings,
    mu_of_partition,
    n_lambda_inductive,
    n_lambda_tableaux,
    n_tau,
    p_partitions,
    partition_of_dominant_weight,
    rho_shift_mult,
    spin_partitions,
    spin_tableaux,
    split_n_lambda,
)
from .twoblock import (
    MarginPair,
    RowTableau,
    count_margin_matrices,
    margin_matrices,
    margins_of_weight,
    matrix_to_tableau,
    mu_of_margins,
    row_tableaux,
    tableau_to_matrix,
    vanishing_test,
)
from .kernels import BACKEND

__version__ = "0.1.0"
