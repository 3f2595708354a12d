"""Rationnels exacts, indices de grille et matrice dense.

Toutes les valeurs sont immuables après construction. Les indices du
domaine sont 1-based ; la traduction vers le stockage 0-based est interne.
"""

from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from .errors import DomainError

Rational = Fraction


def rational_normalize(n: int, d: int) -> Fraction:
    """
    Construit un rationnel sous forme canonique.

    Le signe est porté par le numérateur et pgcd(|n|, d) = 1.

    Raises:
        DomainError: si le dénominateur est nul
    """
    if d == 0:
        raise DomainError(f"Dénominateur nul: {n}/{d}")
    return Fraction(int(n), int(d))


def parse_rational(value) -> Fraction:
    """
    Convertit une entrée (entier, chaîne décimale, "p/q", Decimal) en rationnel exact.

    Les décimales sont converties par puissances de dix, jamais via un
    flottant binaire.
    """
    if isinstance(value, bool):
        raise DomainError(f"Valeur booléenne refusée: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise DomainError(f"Valeur non finie: {value}")
        return Fraction(value)
    if isinstance(value, float):
        # Seul le front-end JSON peut en produire ; on repasse par le texte
        return parse_rational(repr(value))
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            try:
                return rational_normalize(int(num), int(den))
            except ValueError as e:
                raise DomainError(f"Rationnel invalide: {value!r}") from e
        try:
            return parse_rational(Decimal(text))
        except InvalidOperation as e:
            raise DomainError(f"Nombre invalide: {value!r}") from e
    raise DomainError(f"Type d'entrée non supporté: {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Rend un rationnel sous la forme "p/q"."""
    return f"{value.numerator}/{value.denominator}"


class GridIndex(NamedTuple):
    """Position (i, α) dans une grille, 1-based ; l'ordre des tuples est l'ordre lexicographique."""

    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


def lex_successor(r: GridIndex | tuple[int, int], m: int, p: int) -> GridIndex:
    """
    Retourne (j,β)⁺, le plus petit élément de E strictement après (j,β).

    (j,β)⁺ = (j,β+1) si β < p, (j+1,1) en fin de ligne j < m, et la
    sentinelle (m+1,p) après (m,p).

    Raises:
        DomainError: si r n'appartient pas à E° = [1,m]×[1,p] \\ {(1,1)}
    """
    j, beta = r
    if not (1 <= j <= m and 1 <= beta <= p) or (j, beta) == (1, 1):
        raise DomainError(f"{tuple(r)} n'appartient pas à E° pour une grille {m}x{p}")
    if beta < p:
        return GridIndex(j, beta + 1)
    if j < m:
        return GridIndex(j + 1, 1)
    return GridIndex(m + 1, p)


def interior_boxes(m: int, p: int) -> list[GridIndex]:
    """Éléments de E° dans l'ordre lexicographique croissant."""
    return [
        GridIndex(i, a)
        for i in range(1, m + 1)
        for a in range(1, p + 1)
        if (i, a) != (1, 1)
    ]


def reduction_steps(m: int, p: int) -> list[GridIndex]:
    """Étapes de la réduction de Cauchon : la chaîne des (·)⁺ sur E°, de (m,p) vers le bas."""
    if m * p < 2:
        return []
    sentinel = GridIndex(m + 1, p)
    chain = [GridIndex(1, 2) if p > 1 else GridIndex(2, 1)]
    while True:
        nxt = lex_successor(chain[-1], m, p)
        if nxt == sentinel:
            break
        chain.append(nxt)
    return list(reversed(chain))


def grid_boxes(m: int, p: int) -> Iterator[GridIndex]:
    """Toutes les cases de la grille, ligne par ligne."""
    for i in range(1, m + 1):
        for a in range(1, p + 1):
            yield GridIndex(i, a)


@dataclass(frozen=True)
class Matrix:
    """Matrice dense m×p de rationnels exacts ; l'entrée (i,α) loge x_{i,α}."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DomainError(f"Dimensions invalides: {self.rows}x{self.cols}")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DomainError(
                f"Les données ne correspondent pas à la forme {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(cls, data: Iterable[Iterable]) -> "Matrix":
        """Crée une matrice depuis une liste de lignes (valeurs converties exactement)."""
        rows = tuple(tuple(parse_rational(v) for v in row) for row in data)
        if not rows:
            raise DomainError("Matrice vide")
        return cls(len(rows), len(rows[0]), rows)

    @classmethod
    def zeros(cls, m: int, p: int) -> "Matrix":
        """Matrice nulle m×p."""
        return cls(m, p, tuple(tuple(Fraction(0) for _ in range(p)) for _ in range(m)))

    @classmethod
    def from_function(cls, m: int, p: int, fn) -> "Matrix":
        """Crée une matrice dont l'entrée (i,α) vaut fn(i, α) (indices 1-based)."""
        return cls(
            m,
            p,
            tuple(
                tuple(parse_rational(fn(i, a)) for a in range(1, p + 1))
                for i in range(1, m + 1)
            ),
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, a = index
        if not (1 <= i <= self.rows and 1 <= a <= self.cols):
            raise DomainError(f"Indice {tuple(index)} hors de la grille {self.rows}x{self.cols}")
        return self.entries[i - 1][a - 1]

    def to_lists(self) -> list[list[Fraction]]:
        """Copie modifiable (0-based) des entrées."""
        return [list(row) for row in self.entries]

    @classmethod
    def from_lists(cls, data: list[list[Fraction]]) -> "Matrix":
        """Fige une copie de travail (déjà en rationnels)."""
        return cls(len(data), len(data[0]), tuple(tuple(row) for row in data))

    def zero_set(self) -> frozenset[GridIndex]:
        """Positions des entrées nulles."""
        return frozenset(box for box in grid_boxes(self.rows, self.cols) if self[box] == 0)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for row in self.entries for v in row)

    def to_dict(self) -> dict:
        """Convertit en document de fichier matrice (entiers ou "p/q")."""
        return {
            "rows": self.rows,
            "cols": self.cols,
            "data": [
                [v.numerator if v.denominator == 1 else format_rational(v) for v in row]
                for row in self.entries
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Matrix":
        """Crée depuis un document {"rows", "cols", "data"}."""
        matrix = cls.from_rows(data["data"])
        if matrix.shape != (data["rows"], data["cols"]):
            raise DomainError(
                f"Les données ({matrix.rows}x{matrix.cols}) ne correspondent pas "
                f"à rows/cols ({data['rows']}x{data['cols']})"
            )
        return matrix

    def __str__(self) -> str:
        cells = [[str(v) for v in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)
