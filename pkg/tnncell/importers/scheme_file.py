"""Importer pour les fichiers schéma JSON.

Format : {"diagram": [lignes ASCII], "boxes": [{"box": [j, β],
"sequence": [[i0, a0], ...]}, ...]}. Les cases absentes reçoivent la suite
par défaut ; chaque suite fournie doit être lacunaire.
"""

import json
from pathlib import Path

from .base import BaseImporter, ImportResult
from ..analysis.recognition import scheme_from_sequences
from ..models.diagram import CauchonDiagram
from ..models.errors import TnnError
from ..models.matrix import GridIndex
from ..models.scheme import LacunarySequence


class SchemeImporter(BaseImporter):
    """Lit un schéma de mineurs et le valide contre son diagramme."""

    kind = "scheme"

    def import_file(self, file_path: Path, **options) -> ImportResult:
        if isinstance(file_path, str):
            file_path = Path(file_path)

        valid, error = self.validate_file(file_path)
        if not valid:
            return ImportResult(success=False, error=error)

        try:
            document = json.loads(self.read_text(file_path))
            diagram = CauchonDiagram.from_lines(document["diagram"])
            per_box = {}
            for entry in document.get("boxes", []):
                box = GridIndex(*entry["box"])
                if box in per_box:
                    return ImportResult(success=False, error=f"Case {box} définie deux fois")
                per_box[box] = LacunarySequence.from_list(entry["sequence"])
            scheme = scheme_from_sequences(diagram, per_box)
        except (
            TnnError,
            json.JSONDecodeError,
            KeyError,
            TypeError,
            AttributeError,
            ValueError,
            UnicodeDecodeError,
        ) as e:
            return ImportResult(success=False, error=f"Schéma invalide: {e}")

        warnings = []
        defaulted = diagram.rows * diagram.cols - len(per_box)
        if defaulted:
            warnings.append(f"{defaulted} case(s) sans suite : suite par défaut utilisée")
        return ImportResult(
            success=True,
            payload=scheme,
            warnings=warnings,
            metadata=self.get_file_metadata(file_path),
        )
