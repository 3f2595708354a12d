"""Énumération exhaustive des diagrammes de Cauchon et statistiques de recensement.

La condition de Cauchon se vérifie case par case en parcourant la grille
ligne par ligne : une case peut être noire tant que sa ligne n'a pas encore
de case blanche à gauche, ou que sa colonne n'a pas encore de case blanche
au-dessus.
"""

from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .. import get_logger
from ..models.diagram import CauchonDiagram
from ..models.errors import CapacityError, DomainError
from ..models.matrix import GridIndex
from ..utils.settings import get_settings
from .minors import determinant
from .reduction import representative

logger = get_logger("analysis.enumeration")


def _check_capacity(m: int, p: int, max_cells: Optional[int]) -> None:
    if m < 1 or p < 1:
        raise DomainError(f"Dimensions invalides: {m}x{p}")
    limit = get_settings().max_enumeration_cells if max_cells is None else max_cells
    if m * p > limit:
        raise CapacityError(
            f"Énumération limitée à {limit} cases (demandé {m}x{p} = {m * p}); "
            "voir TNN_MAX_CELLS"
        )


def enumerate_diagrams(
    m: int,
    p: int,
    max_cells: Optional[int] = None,
) -> Iterator[CauchonDiagram]:
    """
    Énumère chaque diagramme de Cauchon m×p exactement une fois.

    L'ordre est celui des empreintes croissantes (blanc avant noir, ligne
    par ligne).

    Raises:
        CapacityError: si m·p dépasse la garde
    """
    _check_capacity(m, p, max_cells)

    boxes = [GridIndex(i, a) for i in range(1, m + 1) for a in range(1, p + 1)]
    row_white = [False] * (m + 1)
    col_white = [False] * (p + 1)
    black: list[GridIndex] = []

    def _walk(k: int) -> Iterator[CauchonDiagram]:
        if k == len(boxes):
            yield CauchonDiagram(m, p, frozenset(black))
            return
        i, a = boxes[k]

        # Case blanche
        saved = (row_white[i], col_white[a])
        row_white[i] = col_white[a] = True
        yield from _walk(k + 1)
        row_white[i], col_white[a] = saved

        # Case noire
        if not row_white[i] or not col_white[a]:
            black.append(boxes[k])
            yield from _walk(k + 1)
            black.pop()

    yield from _walk(0)


def count_diagrams(m: int, p: int, max_cells: Optional[int] = None) -> int:
    """Nombre de diagrammes de Cauchon m×p (= nombre de cellules tnn non vides)."""
    return sum(1 for _ in enumerate_diagrams(m, p, max_cells))


def random_diagram(
    m: int,
    p: int,
    rng: np.random.Generator,
    black_probability: float = 0.5,
) -> CauchonDiagram:
    """
    Tire un diagramme de Cauchon valide case par case (loi non uniforme).

    Utilisable pour des formes trop grandes pour l'énumération.
    """
    if m < 1 or p < 1:
        raise DomainError(f"Dimensions invalides: {m}x{p}")
    row_white = [False] * (m + 1)
    col_white = [False] * (p + 1)
    black = []
    for i in range(1, m + 1):
        for a in range(1, p + 1):
            allowed = not row_white[i] or not col_white[a]
            if allowed and rng.random() < black_probability:
                black.append(GridIndex(i, a))
            else:
                row_white[i] = col_white[a] = True
    return CauchonDiagram(m, p, frozenset(black))


@dataclass
class DiagramCensus:
    """Recensement des diagrammes (et donc des cellules tnn non vides) m×p."""

    m: int
    p: int
    total: int = 0
    det_vanishing: Optional[int] = None
    per_diagram: Optional[list[tuple[str, Optional[bool]]]] = field(default=None, repr=False)

    def to_dict(self) -> dict:
        data: dict = {"total": self.total}
        if self.det_vanishing is not None:
            data["detVanishing"] = self.det_vanishing
        if self.per_diagram is not None:
            data["perDiagram"] = [
                {"fingerprint": fp, "detVanishes": flag} for fp, flag in self.per_diagram
            ]
        return data


def census(
    m: int,
    p: int,
    det_stats: bool = False,
    per_diagram: bool = False,
    max_cells: Optional[int] = None,
) -> DiagramCensus:
    """
    Compte les diagrammes m×p et, pour m = p, ceux dont la cellule contient le déterminant.

    Le motif d'annulation étant constant sur une cellule, le représentant
    (t = 1 sur les cases blanches) suffit pour décider si det = 0.

    Raises:
        DomainError: statistique du déterminant demandée pour m ≠ p
        CapacityError: garde d'énumération dépassée
    """
    if det_stats and m != p:
        raise DomainError(f"La statistique du déterminant exige une matrice carrée (reçu {m}x{p})")

    result = DiagramCensus(m, p)
    if det_stats:
        result.det_vanishing = 0
    if per_diagram:
        result.per_diagram = []

    for diagram in enumerate_diagrams(m, p, max_cells):
        result.total += 1
        flag = None
        if det_stats:
            flag = determinant(representative(diagram).entries) == 0
            if flag:
                result.det_vanishing += 1
        if per_diagram:
            result.per_diagram.append((diagram.fingerprint(), flag))

    logger.info(
        f"Recensement {m}x{p}: {result.total} diagrammes"
        + (f", {result.det_vanishing} contiennent le déterminant" if det_stats else "")
    )
    return result


def diagram_complement_count_check(m: int, p: int, max_cells: Optional[int] = None) -> bool:
    """Vrai si le nombre de cellules non vides dépasse m^p."""
    return count_diagrams(m, p, max_cells) > m ** p
