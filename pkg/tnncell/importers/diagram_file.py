"""Importer pour les diagrammes de Cauchon ('#' noir, '.' blanc)."""

import json
from pathlib import Path

from .base import BaseImporter, ImportResult
from ..models.diagram import CauchonDiagram
from ..models.errors import TnnError


class DiagramImporter(BaseImporter):
    """Lit un diagramme ASCII, ou un JSON {"diagram": [lignes]}."""

    kind = "diagram"

    def import_file(self, file_path: Path, **options) -> ImportResult:
        if isinstance(file_path, str):
            file_path = Path(file_path)

        valid, error = self.validate_file(file_path)
        if not valid:
            return ImportResult(success=False, error=error)

        try:
            text = self.read_text(file_path)
            if file_path.suffix.lower() == ".json":
                lines = json.loads(text)["diagram"]
            else:
                lines = text.splitlines()
            diagram = CauchonDiagram.from_lines(lines)
        except (
            TnnError,
            json.JSONDecodeError,
            KeyError,
            TypeError,
            AttributeError,
            ValueError,
            UnicodeDecodeError,
        ) as e:
            return ImportResult(success=False, error=f"Diagramme invalide: {e}")

        metadata = self.get_file_metadata(file_path)
        metadata["shape"] = [diagram.rows, diagram.cols]
        return ImportResult(success=True, payload=diagram, metadata=metadata)
