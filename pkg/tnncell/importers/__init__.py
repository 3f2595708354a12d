"""Importers pour les fichiers matrice, diagramme et schéma."""

from pathlib import Path
from typing import Optional

from .base import BaseImporter, ImportResult
from .matrix_file import MatrixImporter
from .diagram_file import DiagramImporter
from .scheme_file import SchemeImporter

__all__ = [
    "BaseImporter",
    "ImportResult",
    "MatrixImporter",
    "DiagramImporter",
    "SchemeImporter",
    "get_importer",
]


def get_importer(file_path: str | Path, kind: Optional[str] = None) -> BaseImporter:
    """
    Retourne l'importer approprié.

    Args:
        file_path: Chemin du fichier
        kind: "matrix", "diagram" ou "scheme" (défaut: déduit de l'extension)
    """
    importers = {
        "matrix": MatrixImporter,
        "diagram": DiagramImporter,
        "scheme": SchemeImporter,
    }
    if kind is not None:
        if kind not in importers:
            raise ValueError(f"Type de fichier inconnu: {kind}")
        return importers[kind]()

    ext = Path(file_path).suffix.lower()
    by_extension = {
        ".json": MatrixImporter,
        ".txt": DiagramImporter,
        ".diag": DiagramImporter,
    }
    return by_extension.get(ext, MatrixImporter)()
