"""Modèle pour les diagrammes de Cauchon.

Un diagramme m×p est identifié à l'ensemble des coordonnées de ses cases
noires. Condition de Cauchon : si une case est noire, alors toutes les
cases strictement à sa gauche sont noires, ou toutes les cases strictement
au-dessus sont noires.
"""

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .matrix import GridIndex, grid_boxes

BLACK_CHAR = "#"
WHITE_CHAR = "."


def _check_range(m: int, p: int, black: Iterable[tuple[int, int]]) -> frozenset[GridIndex]:
    if m < 1 or p < 1:
        raise DomainError(f"Dimensions invalides: {m}x{p}")
    boxes = frozenset(GridIndex(*box) for box in black)
    for i, a in boxes:
        if not (1 <= i <= m and 1 <= a <= p):
            raise DomainError(f"Case {(i, a)} hors de la grille {m}x{p}")
    return boxes


def is_cauchon(m: int, p: int, black: Iterable[tuple[int, int]]) -> bool:
    """
    Vérifie la condition de Cauchon pour chaque case noire.

    Les ensembles vides (première ligne, première colonne) satisfont la
    condition par vacuité.

    Raises:
        DomainError: si une case est hors de la grille
    """
    boxes = _check_range(m, p, black)
    for i, a in boxes:
        left_black = all((i, b) in boxes for b in range(1, a))
        above_black = all((k, a) in boxes for k in range(1, i))
        if not (left_black or above_black):
            return False
    return True


@dataclass(frozen=True)
class CauchonDiagram:
    """Diagramme de Cauchon m×p (ensemble des cases noires)."""

    rows: int
    cols: int
    black: frozenset[GridIndex]

    def __post_init__(self):
        boxes = _check_range(self.rows, self.cols, self.black)
        object.__setattr__(self, "black", boxes)
        if not is_cauchon(self.rows, self.cols, boxes):
            raise DomainError(
                "La condition de Cauchon n'est pas satisfaite:\n" + self.to_ascii()
            )

    @classmethod
    def all_white(cls, m: int, p: int) -> "CauchonDiagram":
        return cls(m, p, frozenset())

    @classmethod
    def all_black(cls, m: int, p: int) -> "CauchonDiagram":
        return cls(m, p, frozenset(grid_boxes(m, p)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_black(self, i: int, a: int) -> bool:
        return (i, a) in self.black

    def is_white(self, i: int, a: int) -> bool:
        return (i, a) not in self.black

    def region_black(self, rows: Iterable[int], cols: Iterable[int]) -> bool:
        """Vrai si toutes les cases de rows × cols sont noires (vrai si la région est vide)."""
        cols = list(cols)
        return all((i, a) in self.black for i in rows for a in cols)

    def fingerprint(self) -> str:
        """Chaîne de bits big-endian ligne par ligne (1 = noir)."""
        return "".join(
            "1" if box in self.black else "0" for box in grid_boxes(self.rows, self.cols)
        )

    @classmethod
    def from_fingerprint(cls, m: int, p: int, bits: str) -> "CauchonDiagram":
        if len(bits) != m * p or set(bits) - {"0", "1"}:
            raise DomainError(f"Empreinte invalide pour {m}x{p}: {bits!r}")
        boxes = [box for box, bit in zip(grid_boxes(m, p), bits) if bit == "1"]
        return cls(m, p, frozenset(boxes))

    def to_lines(self) -> list[str]:
        return [
            "".join(
                BLACK_CHAR if (i, a) in self.black else WHITE_CHAR
                for a in range(1, self.cols + 1)
            )
            for i in range(1, self.rows + 1)
        ]

    def to_ascii(self) -> str:
        """Format ASCII : une ligne par rangée, '#' noir, '.' blanc, fin de ligne finale."""
        return "".join(line + "\n" for line in self.to_lines())

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "CauchonDiagram":
        """
        Lit un diagramme depuis ses lignes ASCII.

        Raises:
            DomainError: caractère inconnu, lignes inégales ou condition de Cauchon violée
        """
        if isinstance(lines, str):
            raise DomainError("Liste de lignes attendue, pas une chaîne unique")
        lines = list(lines)
        for line in lines:
            if not isinstance(line, str):
                raise DomainError(f"Ligne de diagramme invalide {line!r} : chaîne attendue")
        rows = [line.rstrip("\r\n") for line in lines]
        rows = [r for r in rows if r != ""]
        if not rows:
            raise DomainError("Diagramme vide")
        width = len(rows[0])
        black = []
        for i, line in enumerate(rows, start=1):
            if len(line) != width:
                raise DomainError(f"Ligne {i} de longueur {len(line)} au lieu de {width}")
            for a, char in enumerate(line, start=1):
                if char == BLACK_CHAR:
                    black.append((i, a))
                elif char != WHITE_CHAR:
                    raise DomainError(f"Caractère inattendu {char!r} ligne {i}")
        return cls(len(rows), width, frozenset(GridIndex(*b) for b in black))

    @classmethod
    def from_ascii(cls, text: str) -> "CauchonDiagram":
        return cls.from_lines(text.splitlines())

    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "diagram": self.to_lines(),
            "fingerprint": self.fingerprint(),
        }

    def __str__(self) -> str:
        return self.to_ascii()
