"""Importer pour les fichiers matrice JSON."""

import json
from decimal import Decimal
from pathlib import Path

from .base import BaseImporter, ImportResult
from ..models.errors import TnnError
from ..models.matrix import Matrix


class MatrixImporter(BaseImporter):
    """Lit {"rows": m, "cols": p, "data": [[...], ...]}.

    Les entrées sont des entiers, des décimales (converties exactement) ou
    des chaînes "p/q".
    """

    kind = "matrix"

    def import_file(self, file_path: Path, **options) -> ImportResult:
        if isinstance(file_path, str):
            file_path = Path(file_path)

        valid, error = self.validate_file(file_path)
        if not valid:
            return ImportResult(success=False, error=error)

        try:
            # parse_float=Decimal : aucune décimale ne passe par un flottant binaire
            document = json.loads(self.read_text(file_path), parse_float=Decimal)
        except (json.JSONDecodeError, UnicodeDecodeError) as e:
            return ImportResult(success=False, error=f"JSON invalide: {e}")

        return self.from_document(document, self.get_file_metadata(file_path))

    def from_document(self, document, metadata: dict | None = None) -> ImportResult:
        """Convertit un document déjà décodé."""
        if not isinstance(document, dict):
            return ImportResult(success=False, error="Le fichier matrice doit être un objet JSON")
        missing = [key for key in ("rows", "cols", "data") if key not in document]
        if missing:
            return ImportResult(success=False, error=f"Clés manquantes: {', '.join(missing)}")

        warnings = []
        extra = sorted(set(document) - {"rows", "cols", "data"})
        if extra:
            warnings.append(f"Clés ignorées: {', '.join(extra)}")

        try:
            matrix = Matrix.from_dict(document)
        except (TnnError, TypeError, ValueError) as e:
            return ImportResult(success=False, error=str(e))

        return ImportResult(
            success=True,
            payload=matrix,
            warnings=warnings,
            metadata=metadata or {},
        )
