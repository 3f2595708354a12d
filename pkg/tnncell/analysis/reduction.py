"""Algorithme de réduction de Cauchon (dérivations effaçantes).

Le pas r = (j,β) parcourt E° de (m,p) jusqu'à (1,2) dans l'ordre
lexicographique décroissant, en partant de M^{(m+1,p)} = M. Au pas r, si
le pivot x_{j,β} est non nul, les entrées (i,α) avec i < j et α < β
reçoivent x_{i,α} − x_{i,β} · x_{j,β}⁻¹ · x_{j,α} ; sinon la matrice est
recopiée. La matrice finale M̃ = M^{(1,2)} loge les t_{i,α}.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .. import get_logger
from ..models.diagram import CauchonDiagram, is_cauchon
from ..models.errors import DomainError
from ..models.matrix import GridIndex, Matrix, format_rational, grid_boxes, reduction_steps
from ..models.minor_spec import MinorSpec
from .minors import final_spec_at, gasca_pena_tp_test, minor

logger = get_logger("analysis.reduction")


@dataclass(frozen=True)
class ReductionStep:
    """Un pas de la réduction : la case r et son pivot x^{(r⁺)}_{j,β}."""

    box: GridIndex
    pivot: Fraction

    @property
    def is_noop(self) -> bool:
        return self.pivot == 0


@dataclass
class ReductionTrace:
    """Trace complète d'une réduction de Cauchon."""

    input: Matrix
    steps: list[ReductionStep]
    t_matrix: Matrix
    # M^{(r)} pour chaque pas, seulement si demandé
    intermediates: Optional[dict[GridIndex, Matrix]] = field(default=None, repr=False)

    def t(self, i: int, a: int) -> Fraction:
        """Valeur t_{i,α}."""
        return self.t_matrix[i, a]


@dataclass(frozen=True)
class CellAssignment:
    """Résultat de la classification d'une matrice."""

    t_matrix: Matrix
    is_tnn: bool
    diagram: Optional[CauchonDiagram] = None

    def to_dict(self) -> dict:
        return {
            "tnn": self.is_tnn,
            "diagram": self.diagram.to_lines() if self.diagram else None,
            "tMatrix": [[format_rational(v) for v in row] for row in self.t_matrix.entries],
        }


def _apply_step(x: list[list[Fraction]], j: int, beta: int, sign: int) -> Fraction:
    """
    Applique (sign = -1) ou inverse (sign = +1) le pas (j,β) sur la copie de travail.

    Les facteurs x_{i,β}, x_{j,β} et x_{j,α} ne sont pas modifiés par le
    pas, ce qui rend l'inversion exacte.
    """
    pivot = x[j - 1][beta - 1]
    if pivot == 0:
        return pivot
    row_j = x[j - 1]
    for i in range(j - 1):
        factor = x[i][beta - 1]
        if factor == 0:
            continue
        coeff = factor / pivot
        row_i = x[i]
        for a in range(beta - 1):
            if row_j[a] != 0:
                row_i[a] += sign * coeff * row_j[a]
    return pivot


def cauchon_reduce(M: Matrix, keep_intermediates: bool = False) -> ReductionTrace:
    """
    Exécute la réduction de Cauchon.

    Args:
        M: Matrice m×p
        keep_intermediates: Conserver les matrices M^{(r)} (coûteux en mémoire)

    Returns:
        ReductionTrace avec les pivots et M̃ = (t_{i,α})
    """
    x = M.to_lists()
    steps = []
    intermediates = {} if keep_intermediates else None

    for r in reduction_steps(M.rows, M.cols):
        pivot = _apply_step(x, r.row, r.col, sign=-1)
        steps.append(ReductionStep(r, pivot))
        if intermediates is not None:
            intermediates[r] = Matrix.from_lists(x)

    return ReductionTrace(
        input=M,
        steps=steps,
        t_matrix=Matrix.from_lists(x),
        intermediates=intermediates,
    )


def is_cauchon_matrix(M: Matrix) -> bool:
    """Vrai si l'ensemble des zéros de M forme un diagramme de Cauchon."""
    return is_cauchon(M.rows, M.cols, M.zero_set())


def is_nonnegative_cauchon_matrix(T: Matrix) -> bool:
    """Entrées ≥ 0 et ensemble des zéros valide au sens de Cauchon."""
    return T.is_nonnegative() and is_cauchon_matrix(T)


def classify(M: Matrix) -> CellAssignment:
    """
    Décide si M est tnn et, le cas échéant, calcule sa cellule π(M).

    M est tnn si et seulement si M̃ est une matrice de Cauchon positive ;
    son diagramme est alors l'ensemble des zéros de M̃.
    """
    T = cauchon_reduce(M).t_matrix
    if not is_nonnegative_cauchon_matrix(T):
        logger.debug("M̃ n'est pas une matrice de Cauchon positive : M n'est pas tnn")
        return CellAssignment(t_matrix=T, is_tnn=False)

    diagram = CauchonDiagram(M.rows, M.cols, T.zero_set())
    return CellAssignment(t_matrix=T, is_tnn=True, diagram=diagram)


def restore(T: Matrix) -> Matrix:
    """
    Inverse de la réduction : reconstruit M telle que cauchon_reduce(M).t_matrix = T.

    Les pas sont rejoués de (1,2) vers (m,p) avec
    x^{(r⁺)}_{i,α} = x^{(r)}_{i,α} + x^{(r)}_{i,β} · pivot⁻¹ · x^{(r)}_{j,α}.

    Raises:
        DomainError: si T n'est pas une matrice de Cauchon positive
    """
    if not is_nonnegative_cauchon_matrix(T):
        raise DomainError(
            "La restauration exige une matrice de Cauchon positive "
            "(zéros formant un diagramme de Cauchon, autres entrées > 0)"
        )
    x = T.to_lists()
    for r in reversed(reduction_steps(T.rows, T.cols)):
        _apply_step(x, r.row, r.col, sign=+1)
    return Matrix.from_lists(x)


def t_values_for(C: CauchonDiagram, values=None) -> Matrix:
    """
    Matrice T nulle sur les cases noires de C.

    Args:
        C: Diagramme de Cauchon
        values: fonction (i, α) -> valeur positive pour les cases blanches (défaut: 1)
    """
    def entry(i: int, a: int):
        if C.is_black(i, a):
            return 0
        return 1 if values is None else values(i, a)

    return Matrix.from_function(C.rows, C.cols, entry)


def representative(C: CauchonDiagram) -> Matrix:
    """Représentant de la cellule S⁰_C : restauration de t = 0 (noir), t = 1 (blanc)."""
    return restore(t_values_for(C))


def random_positive_rational(rng: np.random.Generator, max_value: int = 9) -> Fraction:
    """Rationnel n/d avec 1 ≤ n, d ≤ max_value."""
    n, d = rng.integers(1, max_value + 1, size=2)
    return Fraction(int(n), int(d))


def random_cell_matrix(
    C: CauchonDiagram,
    rng: np.random.Generator,
    max_value: int = 9,
) -> Matrix:
    """Représentant de S⁰_C avec des t aléatoires n/d sur les cases blanches."""
    return restore(t_values_for(C, lambda i, a: random_positive_rational(rng, max_value)))


def _check_tp(M: Matrix) -> None:
    if not gasca_pena_tp_test(M):
        raise DomainError("La formule des t n'est établie que pour une matrice totalement positive")


def _final_minor_value(M: Matrix, i: int, a: int, r: int) -> Fraction:
    """[i..i+r | α..α+r](M), valant 1 pour r < 0."""
    if r < 0:
        return Fraction(1)
    return minor(M, MinorSpec(tuple(range(i, i + r + 1)), tuple(range(a, a + r + 1))))


def tp_t_formula_check(M: Matrix) -> bool:
    """
    Vérifie t_{i,α} · [i+1..i+r | α+1..α+r] = [i..i+r | α..α+r] pour M totalement positive.

    r = min(m−i, p−α) ; l'égalité est vérifiée sans division.

    Raises:
        DomainError: si M n'est pas totalement positive
    """
    _check_tp(M)
    trace = cauchon_reduce(M)
    m, p = M.shape
    for i, a in grid_boxes(m, p):
        r = min(m - i, p - a)
        outer = _final_minor_value(M, i, a, r)
        inner = _final_minor_value(M, i + 1, a + 1, r - 1)
        if trace.t(i, a) * inner != outer:
            logger.warning(f"Formule des t en défaut en ({i},{a})")
            return False
    return True


def tp_product_formula_check(M: Matrix) -> bool:
    """
    Vérifie que chaque mineur final vaut t_{i,α} t_{i+1,α+1} ⋯ t_{i+r,α+r} (M totalement positive).

    Raises:
        DomainError: si M n'est pas totalement positive
    """
    _check_tp(M)
    trace = cauchon_reduce(M)
    m, p = M.shape
    for i, a in grid_boxes(m, p):
        spec = final_spec_at(i, a, m, p)
        product = Fraction(1)
        for k in range(spec.size):
            product *= trace.t(i + k, a + k)
        if minor(M, spec) != product:
            return False
    return True
