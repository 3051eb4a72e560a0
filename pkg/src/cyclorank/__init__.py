"""Rank criteria and density experiments for class groups of Kummer extensions.

For a prime N = 1 (mod p) and the field obtained by adjoining a p-th root of
unity and a p-th root of N, this package computes: the splitting data of N in
the Eisenstein integers (p = 3), the exact 3-rank by several cross-checkable
criteria, the power-residue product invariants behind the general-p bounds,
and large-scale density scans with convergence reporting.
"""

__version__ = "0.1.0"

from .eisenstein import (
    EisensteinInt,
    GerthMatrix,
    QuadRep,
    SplitData,
    cubic_symbol,
    eis_norm,
    gerth_matrix,
    hilbert_pi_unit_criterion,
    represent_4n,
    represent_4n_bruteforce,
    split_prime,
    star_condition,
)
from .errors import DomainError, TruthTableError
from .invariants import (
    AlphaCount,
    InvariantRecord,
    MuBound,
    UnitProduct,
    alpha_count,
    invariant_record,
    m_class,
    m_i_class,
    mu_count,
    unit_product,
)
from .modmath import (
    ModulusContext,
    PowerClass,
    factorial_mod,
    find_order_p_element,
    is_9th_power,
    mod_pow,
    power_class,
)
from .primes import TargetClass, classify_target, is_prime, primes_in_class
from .rank import RankReport, bounds, odd_twist_count, rank3, rank3_methods
from .reporting import emit, render
from .scan import ScanSummary, scan_alpha, scan_rank3
from .validation import TruthRow, ValidationReport, ingest_truth

__all__ = [
    "AlphaCount",
    "DomainError",
    "EisensteinInt",
    "GerthMatrix",
    "InvariantRecord",
    "ModulusContext",
    "MuBound",
    "PowerClass",
    "QuadRep",
    "RankReport",
    "ScanSummary",
    "SplitData",
    "TargetClass",
    "TruthRow",
    "TruthTableError",
    "UnitProduct",
    "ValidationReport",
    "alpha_count",
    "bounds",
    "classify_target",
    "cubic_symbol",
    "eis_norm",
    "emit",
    "factorial_mod",
    "find_order_p_element",
    "gerth_matrix",
    "hilbert_pi_unit_criterion",
    "ingest_truth",
    "invariant_record",
    "is_9th_power",
    "is_prime",
    "m_class",
    "m_i_class",
    "mod_pow",
    "mu_count",
    "odd_twist_count",
    "power_class",
    "primes_in_class",
    "rank3",
    "rank3_methods",
    "render",
    "represent_4n",
    "represent_4n_bruteforce",
    "scan_alpha",
    "scan_rank3",
    "split_prime",
    "star_condition",
    "unit_product",
]
