"""Motif d'annulation des mineurs d'une matrice."""

from dataclasses import dataclass

from .minor_spec import MinorSpec


@dataclass(frozen=True)
class ZeroPattern:
    """Ensemble des mineurs nuls d'une matrice m×p, dans l'ordre canonique."""

    m: int
    p: int
    vanishing: tuple[MinorSpec, ...]
    total_minors: int

    def as_set(self) -> frozenset[MinorSpec]:
        return frozenset(self.vanishing)

    def __contains__(self, spec: MinorSpec) -> bool:
        return spec in self.vanishing

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "p": self.p,
            "vanishing": [spec.label() for spec in self.vanishing],
            "totalMinors": self.total_minors,
        }
