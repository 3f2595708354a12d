"""Oracle par force brute : évaluation de tous les mineurs.

Le nombre de mineurs d'une matrice m×p est C(m+p, m) − 1 ; l'oracle est
réservé aux petites formes (garde sur m+p).
"""

from fractions import Fraction
from typing import Iterator, Optional

from .. import get_logger
from ..models.errors import CapacityError
from ..models.matrix import Matrix
from ..models.minor_spec import MinorSpec
from ..models.pattern import ZeroPattern
from ..utils.settings import get_settings
from .enumeration import enumerate_diagrams
from .minors import all_minor_specs, minor
from .reduction import representative

logger = get_logger("analysis.oracle")


def _check_capacity(M: Matrix, max_dimension_sum: Optional[int]) -> None:
    limit = get_settings().max_oracle_dimension_sum if max_dimension_sum is None else max_dimension_sum
    if M.rows + M.cols > limit:
        raise CapacityError(
            f"Oracle tous-mineurs limité à m+p ≤ {limit} (reçu {M.rows}x{M.cols})"
        )


def _sweep(M: Matrix, max_dimension_sum: Optional[int]) -> Iterator[tuple[MinorSpec, Fraction]]:
    _check_capacity(M, max_dimension_sum)
    for spec in all_minor_specs(M.rows, M.cols, max_dimension_sum):
        yield spec, minor(M, spec)


def is_tnn_bruteforce(M: Matrix, max_dimension_sum: Optional[int] = None) -> bool:
    """Vrai si tous les mineurs de M sont ≥ 0."""
    for spec, value in _sweep(M, max_dimension_sum):
        if value < 0:
            logger.debug(f"Mineur {spec} = {value} < 0")
            return False
    return True


def is_tp_bruteforce(M: Matrix, max_dimension_sum: Optional[int] = None) -> bool:
    """Vrai si tous les mineurs de M sont > 0."""
    return all(value > 0 for _, value in _sweep(M, max_dimension_sum))


def zero_pattern(M: Matrix, max_dimension_sum: Optional[int] = None) -> ZeroPattern:
    """Évalue tous les mineurs et relève ceux qui s'annulent."""
    vanishing = []
    total = 0
    for spec, value in _sweep(M, max_dimension_sum):
        total += 1
        if value == 0:
            vanishing.append(spec)
    return ZeroPattern(M.rows, M.cols, tuple(vanishing), total)


def realized_zero_patterns(m: int, p: int) -> dict[str, frozenset[MinorSpec]]:
    """
    Motif d'annulation du représentant de chaque diagramme m×p.

    Returns:
        Dictionnaire empreinte du diagramme -> ensemble des mineurs nuls
    """
    patterns = {
        C.fingerprint(): zero_pattern(representative(C)).as_set()
        for C in enumerate_diagrams(m, p)
    }
    logger.info(
        f"{len(patterns)} diagrammes {m}x{p}, "
        f"{len(set(patterns.values()))} motifs d'annulation distincts"
    )
    return patterns
