"""Reconnaissance d'une cellule tnn par m·p mineurs.

Pour un diagramme C, on fixe une suite lacunaire par case (j,β) et on note
Δ^C_{j,β} le mineur associé. Une matrice M est tnn et appartient à S⁰_C si
et seulement si Δ^C_{j,β}(M) = 0 sur les cases noires et Δ^C_{j,β}(M) > 0
sur les cases blanches.
"""

from fractions import Fraction
from typing import Mapping, Optional

from .. import get_logger
from ..models.diagram import CauchonDiagram
from ..models.errors import DomainError, InconsistencyError
from ..models.matrix import GridIndex, Matrix, grid_boxes
from ..models.scheme import (
    BoxResult,
    CellMinorScheme,
    Expectation,
    LacunarySequence,
    MembershipReport,
)
from .lacunary import is_lacunary, lacunary_from
from .minors import minor
from .reduction import classify

logger = get_logger("analysis.recognition")


def build_scheme(C: CauchonDiagram) -> CellMinorScheme:
    """Schéma par défaut : la suite construite par `lacunary_from` pour chaque case."""
    per_box = {box: lacunary_from(C, *box) for box in grid_boxes(C.rows, C.cols)}
    return CellMinorScheme(C, per_box)


def scheme_from_sequences(
    C: CauchonDiagram,
    per_box: Mapping[tuple[int, int], LacunarySequence],
) -> CellMinorScheme:
    """
    Schéma à partir de suites choisies case par case.

    Les cases absentes reçoivent la suite par défaut.

    Raises:
        DomainError: si une suite n'est pas lacunaire pour C
    """
    chosen: dict[GridIndex, LacunarySequence] = {}
    for box, seq in per_box.items():
        box = GridIndex(*box)
        if not is_lacunary(C, seq):
            raise DomainError(f"La suite {seq} n'est pas lacunaire pour le diagramme (case {box})")
        chosen[box] = seq
    for box in grid_boxes(C.rows, C.cols):
        if box not in chosen:
            chosen[box] = lacunary_from(C, *box)
    return CellMinorScheme(C, chosen)


def membership_test(M: Matrix, scheme: CellMinorScheme) -> MembershipReport:
    """
    Teste l'appartenance de M à la cellule du schéma avec exactement m·p mineurs.

    Raises:
        DomainError: si la forme de M ne correspond pas au diagramme
    """
    C = scheme.diagram
    if M.shape != C.shape:
        raise DomainError(
            f"Forme de la matrice {M.rows}x{M.cols} différente du diagramme {C.rows}x{C.cols}"
        )

    results = []
    for box in scheme.boxes():
        spec = scheme.spec(box)
        expected = Expectation.ZERO if C.is_black(*box) else Expectation.POSITIVE
        results.append(BoxResult(box, spec, minor(M, spec), expected))

    report = MembershipReport(C, tuple(results))
    if not report.verdict:
        first = report.failures[0]
        logger.info(
            f"Échec du test d'appartenance en {first.box}: "
            f"{first.spec} = {first.value} (attendu {first.expected.value})"
        )
    return report


def product_identity_check(M: Matrix, C: CauchonDiagram, seq: LacunarySequence) -> bool:
    """
    Vérifie Δ(M) = t_{i_0,α_0} ⋯ t_{i_t,α_t} le long d'une suite lacunaire.

    L'identité n'est établie que si M est tnn de diagramme C, ou si les
    signes du schéma de C sont respectés par M.

    Raises:
        DomainError: si aucune des deux hypothèses n'est satisfaite ou si la
            suite n'est pas lacunaire pour C
    """
    if M.shape != C.shape:
        raise DomainError(f"Forme {M.rows}x{M.cols} incompatible avec le diagramme {C.rows}x{C.cols}")
    if not is_lacunary(C, seq):
        raise DomainError(f"La suite {seq} n'est pas lacunaire pour le diagramme")

    assignment = classify(M)
    in_cell = assignment.is_tnn and assignment.diagram == C
    if not in_cell and not membership_test(M, build_scheme(C)).verdict:
        raise DomainError("L'identité produit exige M dans la cellule du diagramme")

    product = Fraction(1)
    for i, a in seq.points:
        product *= assignment.t_matrix[i, a]
    return minor(M, seq.spec) == product


def cell_of(M: Matrix) -> Optional[CauchonDiagram]:
    """
    Cellule de M si M est tnn, None sinon.

    La réduction donne le diagramme candidat, confirmé ensuite par le test
    des m·p mineurs.

    Raises:
        InconsistencyError: si les deux chemins ne concordent pas
    """
    assignment = classify(M)
    if not assignment.is_tnn:
        return None

    report = membership_test(M, build_scheme(assignment.diagram))
    if not report.verdict:
        message = (
            "Incohérence interne : la réduction classe la matrice dans une cellule "
            f"que le test des mineurs rejette ({len(report.failures)} case(s) en défaut)"
        )
        logger.error(message)
        raise InconsistencyError(message)
    return assignment.diagram

