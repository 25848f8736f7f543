"""Exact rational upper bounds for local learning coefficients.

Library layout:

* :mod:`llcbounds.counting` -- the budget-constrained counting rule
  (problem tuples, the three-case bound, multiplicity);
* :mod:`llcbounds.oracle` -- brute-force linear-programming verifier;
* :mod:`llcbounds.ledger` -- per-depth candidate values of the underlying
  blow-up walk and their minimum;
* :mod:`llcbounds.networks` -- three-layer network specializations
  (both singular points, reduced-rank regression, crossover scans,
  admissibility and independence witnesses);
* :mod:`llcbounds.cli` -- the ``llcbounds`` command-line front end.

All results are exact :class:`fractions.Fraction` values.
"""

from .counting import (
    BoundResult,
    CaseTag,
    ProblemSpec,
    Shelf,
    ShelfSequence,
    compute_bound,
    compute_K,
    compute_L,
    compute_n_star,
    insert_empty_shelf,
    validate_spec,
)
from .ledger import ChartCandidate, LedgerMin, chart_candidates, ledger_min
from .networks import (
    ActivationSupport,
    AdmissibilityReport,
    ComparisonRecord,
    CrossoverScan,
    NetworkBound,
    NetworkShape,
    VandermondeWitness,
    binom,
    bound_P1,
    bound_P2,
    bound_reduced_rank,
    case_of_reduced_rank,
    check_weight_admissibility,
    compare_P1_P2,
    crossover_threshold,
    shelves_P1,
    shelves_P2,
    vandermonde_witness,
)
from .oracle import (
    AllocationInstance,
    make_instance,
    oracle_bound,
    oracle_max_purchase,
    oracle_multiplicity,
)
from .rational import decimal_str, format_rational, parse_rational

__version__ = "0.1.0"

__all__ = [
    "ActivationSupport",
    "AdmissibilityReport",
    "AllocationInstance",
    "BoundResult",
    "CaseTag",
    "ChartCandidate",
    "ComparisonRecord",
    "CrossoverScan",
    "LedgerMin",
    "NetworkBound",
    "NetworkShape",
    "ProblemSpec",
    "Shelf",
    "ShelfSequence",
    "VandermondeWitness",
    "binom",
    "bound_P1",
    "bound_P2",
    "bound_reduced_rank",
    "case_of_reduced_rank",
    "chart_candidates",
    "check_weight_admissibility",
    "compare_P1_P2",
    "compute_K",
    "compute_L",
    "compute_bound",
    "compute_n_star",
    "crossover_threshold",
    "decimal_str",
    "format_rational",
    "insert_empty_shelf",
    "ledger_min",
    "make_instance",
    "oracle_bound",
    "oracle_max_purchase",
    "oracle_multiplicity",
    "parse_rational",
    "shelves_P1",
    "shelves_P2",
    "validate_spec",
    "vandermonde_witness",
]
