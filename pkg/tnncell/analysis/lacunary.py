"""Suites lacunaires relativement à un diagramme de Cauchon.

Une suite ((i_0,α_0), …, (i_t,α_t)) est lacunaire pour C si :
  1. t ≥ 0 ;
  2. les cases (i_1,α_1), …, (i_t,α_t) sont blanches ;
  3. i_0 < … < i_t et α_0 < … < α_t ;
  4. toute case strictement au sud-est de (i_t,α_t) est noire ;
  5. pour chaque s < t, les cases i_s < i < i_{s+1} sont noires soit pour
     α > α_s, soit pour α_0 ≤ α < α_{s+1} ;
  6. pour chaque s < t, les cases α_s < α < α_{s+1} sont noires soit pour
     i > i_s, soit pour i < i_{s+1}.

La case de départ peut être noire ou blanche.
"""

from enum import Enum
from typing import Iterable, Optional

from .. import get_logger
from ..models.diagram import CauchonDiagram
from ..models.errors import CapacityError, DomainError
from ..models.matrix import GridIndex
from ..models.scheme import LacunarySequence
from ..utils.settings import get_settings

logger = get_logger("analysis.lacunary")


class ExtensionCase(Enum):
    """Branche utilisée pour prolonger une suite."""

    COLUMNS_BLACK = 1  # Les α premières colonnes sous la ligne i sont noires
    ROWS_BLACK = 2     # Les i premières lignes à droite de la colonne α sont noires
    MIXED = 3


def _check_box(C: CauchonDiagram, box: tuple[int, int]) -> GridIndex:
    if (
        not isinstance(box, (tuple, list))
        or len(box) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in box)
    ):
        raise DomainError(f"Point invalide {box!r} : deux entiers attendus")
    i, a = box
    if not (1 <= i <= C.rows and 1 <= a <= C.cols):
        raise DomainError(f"Case {(i, a)} hors du diagramme {C.rows}x{C.cols}")
    return GridIndex(i, a)


def is_lacunary(C: CauchonDiagram, seq: Iterable[tuple[int, int]] | LacunarySequence) -> bool:
    """
    Vérifie les six conditions d'une suite lacunaire pour C.

    Raises:
        DomainError: si un point est hors du diagramme
    """
    points = list(seq.points if isinstance(seq, LacunarySequence) else seq)
    points = [_check_box(C, pt) for pt in points]
    m, p = C.shape

    # 1. t ≥ 0
    if not points:
        return False
    t = len(points) - 1

    # 2. Points après le premier blancs
    if any(C.is_black(*pt) for pt in points[1:]):
        return False

    # 3. Croissance stricte
    for (i0, a0), (i1, a1) in zip(points, points[1:]):
        if not (i0 < i1 and a0 < a1):
            return False

    # 4. Sud-est du dernier point entièrement noir
    i_t, a_t = points[t]
    if not C.region_black(range(i_t + 1, m + 1), range(a_t + 1, p + 1)):
        return False

    a_0 = points[0].col
    for s in range(t):
        (i_s, a_s), (i_n, a_n) = points[s], points[s + 1]
        between_rows = range(i_s + 1, i_n)
        # 5.
        if not (
            C.region_black(between_rows, range(a_s + 1, p + 1))
            or C.region_black(between_rows, range(a_0, a_n))
        ):
            return False
        # 6.
        between_cols = range(a_s + 1, a_n)
        if not (
            C.region_black(range(i_s + 1, m + 1), between_cols)
            or C.region_black(range(1, i_n), between_cols)
        ):
            return False

    return True


def _first(values: Iterable[int], what: str) -> int:
    found = next(iter(values), None)
    if found is None:
        raise DomainError(f"Aucun indice trouvé pour {what}")
    return found


def lacunary_lemma_step(
    C: CauchonDiagram, i: int, a: int
) -> Optional[tuple[GridIndex, ExtensionCase]]:
    """
    Un pas de prolongement depuis (i,α).

    Returns:
        (case suivante, branche utilisée), ou None si le sous-diagramme
        C_{i,α} (lignes > i, colonnes > α) est entièrement noir ou vide
    """
    m, p = C.shape
    if C.region_black(range(i + 1, m + 1), range(a + 1, p + 1)):
        return None

    if C.region_black(range(i + 1, m + 1), range(1, a + 1)):
        # Première colonne non noire sous la ligne i
        gamma = _first(
            (c for c in range(1, p + 1) if not C.region_black(range(i + 1, m + 1), [c])),
            "la colonne non noire",
        )
        l = _first((k for k in range(i + 1, m + 1) if C.is_white(k, gamma)), "la ligne")
        return GridIndex(l, gamma), ExtensionCase.COLUMNS_BLACK

    if C.region_black(range(1, i + 1), range(a + 1, p + 1)):
        # Première ligne non noire à droite de la colonne α
        l = _first(
            (r for r in range(1, m + 1) if not C.region_black([r], range(a + 1, p + 1))),
            "la ligne non noire",
        )
        gamma = _first((e for e in range(a + 1, p + 1) if C.is_white(l, e)), "la colonne")
        return GridIndex(l, gamma), ExtensionCase.ROWS_BLACK

    gamma = _first(
        (e for e in range(a + 1, p + 1) if not C.region_black(range(1, i + 1), [e])),
        "la colonne",
    )
    l = _first((s for s in range(i + 1, m + 1) if C.is_white(s, gamma)), "la ligne")
    return GridIndex(l, gamma), ExtensionCase.MIXED


def lacunary_from(C: CauchonDiagram, j: int, beta: int) -> LacunarySequence:
    """
    Construit une suite lacunaire partant de (j,β) par prolongements successifs.

    Chaque pas augmente strictement la ligne et la colonne, donc la
    construction termine.
    """
    current = _check_box(C, (j, beta))
    points = [current]
    while True:
        step = lacunary_lemma_step(C, *current)
        if step is None:
            break
        current, case = step
        logger.debug(f"Prolongement vers {current} (cas {case.value})")
        points.append(current)
    return LacunarySequence(tuple(points))


def all_lacunary_from(
    C: CauchonDiagram,
    j: int,
    beta: int,
    max_cells: Optional[int] = None,
) -> list[LacunarySequence]:
    """
    Toutes les suites lacunaires partant de (j,β) (recherche exhaustive).

    Les chaînes croissantes de cases blanches sont parcourues en profondeur
    puis filtrées par `is_lacunary`. Ordre : lexicographique sur les points.

    Raises:
        CapacityError: si m·p dépasse la garde
    """
    start = _check_box(C, (j, beta))
    limit = get_settings().max_lacunary_cells if max_cells is None else max_cells
    if C.rows * C.cols > limit:
        raise CapacityError(
            f"Recherche exhaustive limitée à {limit} cases (diagramme {C.rows}x{C.cols})"
        )

    found: list[LacunarySequence] = []

    def _extend(chain: list[GridIndex]) -> None:
        if is_lacunary(C, chain):
            found.append(LacunarySequence(tuple(chain)))
        last_i, last_a = chain[-1]
        for i in range(last_i + 1, C.rows + 1):
            for a in range(last_a + 1, C.cols + 1):
                if C.is_white(i, a):
                    chain.append(GridIndex(i, a))
                    _extend(chain)
                    chain.pop()

    _extend([start])
    return sorted(found, key=lambda seq: seq.points)
