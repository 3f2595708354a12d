"""Modèles pour les suites lacunaires, les schémas de mineurs et les rapports.

Ces structures sont produites par `analysis.lacunary` et
`analysis.recognition` et sérialisées par la CLI.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .diagram import CauchonDiagram
from .errors import DomainError
from .matrix import GridIndex, format_rational, grid_boxes
from .minor_spec import MinorSpec


class Expectation(Enum):
    """Signe attendu pour le mineur d'une case."""

    ZERO = "zero"          # Case noire
    POSITIVE = "positive"  # Case blanche


@dataclass(frozen=True)
class LacunarySequence:
    """Suite ((i_0,α_0), …, (i_t,α_t)) strictement croissante en lignes et colonnes.

    La blancheur des points (condition 2) dépend du diagramme hôte et se
    vérifie avec `analysis.lacunary.is_lacunary`.
    """

    points: tuple[GridIndex, ...]

    def __post_init__(self):
        pts = tuple(GridIndex(*pt) for pt in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise DomainError("Une suite lacunaire contient au moins un point")
        for (i0, a0), (i1, a1) in zip(pts, pts[1:]):
            if not (i0 < i1 and a0 < a1):
                raise DomainError(f"Suite non strictement croissante: {self}")

    @property
    def start(self) -> GridIndex:
        return self.points[0]

    @property
    def length(self) -> int:
        """t + 1."""
        return len(self.points)

    @property
    def spec(self) -> MinorSpec:
        """Le mineur Δ = [i_0…i_t | α_0…α_t]."""
        return MinorSpec(
            tuple(pt.row for pt in self.points),
            tuple(pt.col for pt in self.points),
        )

    def to_list(self) -> list[list[int]]:
        return [[pt.row, pt.col] for pt in self.points]

    @classmethod
    def from_list(cls, data: Iterable[Iterable[int]]) -> "LacunarySequence":
        return cls(tuple(GridIndex(*pt) for pt in data))

    def __str__(self) -> str:
        return "(" + ",".join(str(pt) for pt in self.points) + ")"


@dataclass(frozen=True)
class CellMinorScheme:
    """Schéma de m·p mineurs d'une cellule : une suite lacunaire par case."""

    diagram: CauchonDiagram
    per_box: dict[GridIndex, LacunarySequence] = field(hash=False)

    def __post_init__(self):
        expected = set(grid_boxes(self.diagram.rows, self.diagram.cols))
        if set(self.per_box) != expected:
            raise DomainError(
                f"Le schéma doit couvrir exactement les {len(expected)} cases du diagramme"
            )
        for box, seq in self.per_box.items():
            if seq.start != box:
                raise DomainError(f"La suite de la case {box} commence en {seq.start}")

    def spec(self, box: tuple[int, int]) -> MinorSpec:
        return self.per_box[GridIndex(*box)].spec

    def boxes(self) -> list[GridIndex]:
        """Cases dans l'ordre ligne par ligne."""
        return sorted(self.per_box)

    def to_dict(self) -> dict:
        """Format du fichier schéma."""
        return {
            "diagram": self.diagram.to_lines(),
            "boxes": [
                {
                    "box": [box.row, box.col],
                    "sequence": self.per_box[box].to_list(),
                    "minor": self.per_box[box].spec.label(),
                }
                for box in self.boxes()
            ],
        }


@dataclass(frozen=True)
class BoxResult:
    """Évaluation du mineur Δ^C_{j,β} pour une case."""

    box: GridIndex
    spec: MinorSpec
    value: Fraction
    expected: Expectation

    @property
    def passed(self) -> bool:
        if self.expected is Expectation.ZERO:
            return self.value == 0
        return self.value > 0

    def to_dict(self) -> dict:
        return {
            "box": [self.box.row, self.box.col],
            "minor": self.spec.label(),
            "value": format_rational(self.value),
            "expected": self.expected.value,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class MembershipReport:
    """Résultat du test d'appartenance à une cellule."""

    diagram: CauchonDiagram
    per_box: tuple[BoxResult, ...]

    @property
    def verdict(self) -> bool:
        return all(r.passed for r in self.per_box)

    @property
    def failures(self) -> list[BoxResult]:
        return [r for r in self.per_box if not r.passed]

    def to_dict(self) -> dict:
        return {
            "diagram": self.diagram.to_lines(),
            "boxes": [r.to_dict() for r in self.per_box],
            "verdict": self.verdict,
            "minorsEvaluated": len(self.per_box),
        }
