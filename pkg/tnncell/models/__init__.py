"""Modèles de données de tnncell."""

from .errors import TnnError, DomainError, CapacityError, InconsistencyError
from .matrix import (
    Rational,
    GridIndex,
    Matrix,
    rational_normalize,
    parse_rational,
    format_rational,
    lex_successor,
    interior_boxes,
    reduction_steps,
    grid_boxes,
)
from .minor_spec import MinorSpec
from .diagram import CauchonDiagram, is_cauchon
from .pattern import ZeroPattern
from .scheme import (
    Expectation,
    LacunarySequence,
    CellMinorScheme,
    BoxResult,
    MembershipReport,
)

__all__ = [
    # Erreurs
    "TnnError",
    "DomainError",
    "CapacityError",
    "InconsistencyError",
    # Exact
    "Rational",
    "GridIndex",
    "Matrix",
    "rational_normalize",
    "parse_rational",
    "format_rational",
    "lex_successor",
    "interior_boxes",
    "reduction_steps",
    "grid_boxes",
    # Mineurs et diagrammes
    "MinorSpec",
    "CauchonDiagram",
    "is_cauchon",
    "ZeroPattern",
    # Schémas
    "Expectation",
    "LacunarySequence",
    "CellMinorScheme",
    "BoxResult",
    "MembershipReport",
]
