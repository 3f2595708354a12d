"""Algorithmes : mineurs, réduction de Cauchon, suites lacunaires, reconnaissance, oracle."""

from .minors import (
    MinorCounter,
    count_minors,
    determinant,
    cofactor_determinant,
    submatrix,
    minor,
    all_minor_specs,
    initial_minor_specs,
    final_minor_specs,
    final_spec_at,
    antidiagonal_reflect,
    reflect_spec,
    gasca_pena_tp_test,
    gasca_pena_initial_test,
)
from .reduction import (
    ReductionStep,
    ReductionTrace,
    CellAssignment,
    cauchon_reduce,
    is_cauchon_matrix,
    is_nonnegative_cauchon_matrix,
    classify,
    restore,
    t_values_for,
    representative,
    random_positive_rational,
    random_cell_matrix,
    tp_t_formula_check,
    tp_product_formula_check,
)
from .enumeration import (
    DiagramCensus,
    enumerate_diagrams,
    count_diagrams,
    random_diagram,
    census,
    diagram_complement_count_check,
)
from .lacunary import (
    ExtensionCase,
    is_lacunary,
    lacunary_lemma_step,
    lacunary_from,
    all_lacunary_from,
)
from .recognition import (
    build_scheme,
    scheme_from_sequences,
    membership_test,
    product_identity_check,
    cell_of,
)
from .oracle import (
    is_tnn_bruteforce,
    is_tp_bruteforce,
    zero_pattern,
    realized_zero_patterns,
)
from .benchmark import BenchmarkResult, run_benchmark

__all__ = [
    # Mineurs
    "MinorCounter",
    "count_minors",
    "determinant",
    "cofactor_determinant",
    "submatrix",
    "minor",
    "all_minor_specs",
    "initial_minor_specs",
    "final_minor_specs",
    "final_spec_at",
    "antidiagonal_reflect",
    "reflect_spec",
    "gasca_pena_tp_test",
    "gasca_pena_initial_test",
    # Réduction
    "ReductionStep",
    "ReductionTrace",
    "CellAssignment",
    "cauchon_reduce",
    "is_cauchon_matrix",
    "is_nonnegative_cauchon_matrix",
    "classify",
    "restore",
    "t_values_for",
    "representative",
    "random_positive_rational",
    "random_cell_matrix",
    "tp_t_formula_check",
    "tp_product_formula_check",
    # Diagrammes
    "DiagramCensus",
    "enumerate_diagrams",
    "count_diagrams",
    "random_diagram",
    "census",
    "diagram_complement_count_check",
    # Suites lacunaires
    "ExtensionCase",
    "is_lacunary",
    "lacunary_lemma_step",
    "lacunary_from",
    "all_lacunary_from",
    # Reconnaissance
    "build_scheme",
    "scheme_from_sequences",
    "membership_test",
    "product_identity_check",
    "cell_of",
    # Oracle
    "is_tnn_bruteforce",
    "is_tp_bruteforce",
    "zero_pattern",
    "realized_zero_patterns",
    # Banc d'essai
    "BenchmarkResult",
    "run_benchmark",
]
