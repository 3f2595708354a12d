"""Évaluation exacte des mineurs, mineurs initiaux et finaux, réflexion antidiagonale.

Les déterminants sont calculés par élimination de Bareiss (sans fraction)
sur des entiers après avoir chassé les dénominateurs ligne par ligne. Le
développement par cofacteurs est conservé comme oracle pour n ≤ 5.
"""

import math
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .. import get_logger
from ..models.errors import CapacityError, DomainError
from ..models.matrix import Matrix
from ..models.minor_spec import MinorSpec
from ..utils.settings import get_settings

logger = get_logger("analysis.minors")


@dataclass
class MinorCounter:
    """Compteur d'évaluations de déterminants (instrumentation du nombre de mineurs)."""

    count: int = 0


# Compteurs actifs (imbriquables), propres à chaque thread
_local = threading.local()


def _active_counters() -> list[MinorCounter]:
    counters = getattr(_local, "counters", None)
    if counters is None:
        counters = _local.counters = []
    return counters


@contextmanager
def count_minors() -> Iterator[MinorCounter]:
    """
    Compte les appels à `minor` effectués dans le bloc.

    Exemple:
        >>> with count_minors() as counter:
        ...     minor(M, spec)
        >>> counter.count
        1
    """
    counter = MinorCounter()
    _active_counters().append(counter)
    try:
        yield counter
    finally:
        _active_counters().remove(counter)


def _bareiss_int(a: list[list[int]]) -> int:
    """Déterminant d'une matrice carrée d'entiers (modifiée sur place)."""
    n = len(a)
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Division exacte garantie par l'identité de Sylvester
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // previous
        previous = pivot
    return sign * a[n - 1][n - 1]


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """
    Déterminant exact d'une matrice carrée de rationnels.

    Chaque ligne est multipliée par le ppcm de ses dénominateurs, puis
    l'élimination de Bareiss travaille sur des entiers.
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in rows):
        raise DomainError("Déterminant d'une matrice non carrée")

    scale = 1
    int_rows = []
    for row in rows:
        lcm = math.lcm(*(v.denominator for v in row))
        scale *= lcm
        int_rows.append([v.numerator * (lcm // v.denominator) for v in row])
    return Fraction(_bareiss_int(int_rows), scale)


def cofactor_determinant(
    rows: Sequence[Sequence[Fraction]], max_size: Optional[int] = None
) -> Fraction:
    """
    Déterminant par développement de Laplace selon la première ligne.

    Sert d'oracle lent pour `determinant`.

    Raises:
        CapacityError: si la taille dépasse max_size
    """
    if max_size is None:
        max_size = get_settings().cofactor_max_size
    n = len(rows)
    if n > max_size:
        raise CapacityError(f"Développement par cofacteurs limité à {max_size}x{max_size} (reçu {n})")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        sub = [row[:j] + row[j + 1:] for row in (list(r) for r in rows[1:])]
        term = rows[0][j] * cofactor_determinant(sub, max_size)
        total += term if j % 2 == 0 else -term
    return total


def submatrix(M: Matrix, spec: MinorSpec) -> list[list[Fraction]]:
    """Sous-matrice (lignes I, colonnes J)."""
    if not spec.fits(M.rows, M.cols):
        raise DomainError(f"Mineur {spec} hors d'une matrice {M.rows}x{M.cols}")
    return [[M.entries[i - 1][a - 1] for a in spec.cols] for i in spec.rows]


def minor(M: Matrix, spec: MinorSpec) -> Fraction:
    """
    Valeur exacte du mineur [I|J](M).

    Raises:
        DomainError: si un indice sort de la matrice
    """
    for counter in _active_counters():
        counter.count += 1
    return determinant(submatrix(M, spec))


def _check_shape(m: int, p: int) -> None:
    if m < 1 or p < 1:
        raise DomainError(f"Dimensions invalides: {m}x{p}")


def all_minor_specs(m: int, p: int, max_dimension_sum: Optional[int] = None) -> list[MinorSpec]:
    """
    Tous les mineurs d'une matrice m×p, par taille puis ordre lexicographique.

    Il y en a C(m+p, m) − 1, soit C(2m, m) − 1 pour une matrice carrée.

    Raises:
        CapacityError: si m + p dépasse max_oracle_dimension_sum
    """
    _check_shape(m, p)
    limit = get_settings().max_oracle_dimension_sum if max_dimension_sum is None else max_dimension_sum
    if m + p > limit:
        raise CapacityError(
            f"Énumération de tous les mineurs limitée à m+p ≤ {limit} (reçu {m}x{p})"
        )
    specs = [
        MinorSpec(rows, cols)
        for k in range(1, min(m, p) + 1)
        for rows in combinations(range(1, m + 1), k)
        for cols in combinations(range(1, p + 1), k)
    ]
    return sorted(specs, key=MinorSpec.sort_key)


def initial_minor_specs(m: int, p: int) -> list[MinorSpec]:
    """
    Les m·p mineurs initiaux : I et J consécutifs avec 1 ∈ I ∪ J.

    Chacun est déterminé par son entrée en bas à droite.
    """
    _check_shape(m, p)
    specs = []
    for i in range(1, m + 1):
        for a in range(1, p + 1):
            k = min(i, a)
            specs.append(
                MinorSpec(tuple(range(i - k + 1, i + 1)), tuple(range(a - k + 1, a + 1)))
            )
    return sorted(specs, key=MinorSpec.sort_key)


def final_minor_specs(m: int, p: int) -> list[MinorSpec]:
    """
    Les m·p mineurs finaux : I et J consécutifs avec m ∈ I ou p ∈ J.

    Chacun est déterminé par son entrée en haut à gauche.
    """
    _check_shape(m, p)
    specs = []
    for i in range(1, m + 1):
        for a in range(1, p + 1):
            specs.append(final_spec_at(i, a, m, p))
    return sorted(specs, key=MinorSpec.sort_key)


def final_spec_at(i: int, a: int, m: int, p: int) -> MinorSpec:
    """Mineur final de coin haut-gauche (i,α) : [i..i+r | α..α+r], r = min(m−i, p−α)."""
    r = min(m - i, p - a)
    return MinorSpec(tuple(range(i, i + r + 1)), tuple(range(a, a + r + 1)))


def antidiagonal_reflect(M: Matrix) -> Matrix:
    """Réflexion antidiagonale : (M^ρ)_{ij} = a_{m+1−j, p+1−i}, matrice p×m."""
    m, p = M.shape
    return Matrix(
        p,
        m,
        tuple(
            tuple(M.entries[m - j][p - i] for j in range(1, m + 1))
            for i in range(1, p + 1)
        ),
    )


def reflect_spec(spec: MinorSpec, m: int, p: int) -> MinorSpec:
    """
    Traduit un mineur de M^ρ en mineur de M (M de forme m×p).

    [I|J](M^ρ) = [m+1−J | p+1−I](M).
    """
    return MinorSpec(
        tuple(sorted(m + 1 - a for a in spec.cols)),
        tuple(sorted(p + 1 - i for i in spec.rows)),
    )


def gasca_pena_tp_test(M: Matrix) -> bool:
    """Vrai si chacun des m·p mineurs finaux de M est strictement positif (M totalement positive)."""
    for spec in final_minor_specs(M.rows, M.cols):
        value = minor(M, spec)
        if value <= 0:
            logger.debug(f"Mineur final {spec} = {value} : pas totalement positive")
            return False
    return True


def gasca_pena_initial_test(M: Matrix) -> bool:
    """Forme d'origine du critère : les m·p mineurs initiaux sont strictement positifs."""
    return all(minor(M, spec) > 0 for spec in initial_minor_specs(M.rows, M.cols))
