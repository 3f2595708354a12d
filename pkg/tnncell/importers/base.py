"""Interface de base pour les importers de fichiers d'entrée."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Optional


@dataclass
class ImportResult:
    """Résultat d'un import."""

    success: bool
    payload: Optional[Any] = None
    error: Optional[str] = None
    warnings: list[str] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)


class BaseImporter(ABC):
    """Classe de base pour tous les importers.

    Un importer ne lève jamais d'exception sur une entrée invalide : il
    renvoie un ImportResult en échec avec un message.
    """

    kind: str = ""

    @abstractmethod
    def import_file(self, file_path: Path, **options) -> ImportResult:
        """
        Lit un fichier et retourne l'objet du domaine correspondant.

        Args:
            file_path: Chemin du fichier à lire
            **options: Options spécifiques à l'importer

        Returns:
            ImportResult avec l'objet lu ou une erreur
        """
        pass

    def validate_file(self, file_path: Path) -> tuple[bool, str]:
        """
        Valide qu'un fichier peut être lu.

        Returns:
            Tuple (valide, message_erreur)
        """
        if not file_path.exists():
            return False, f"Le fichier n'existe pas: {file_path}"
        if not file_path.is_file():
            return False, f"Ce n'est pas un fichier: {file_path}"
        return True, ""

    def read_text(self, file_path: Path) -> str:
        return file_path.read_text(encoding="utf-8")

    def get_file_metadata(self, file_path: Path) -> dict:
        """Extrait les métadonnées de base d'un fichier."""
        stat = file_path.stat()
        return {
            "original_path": str(file_path),
            "file_size": stat.st_size,
            "modified": datetime.fromtimestamp(stat.st_mtime).isoformat(),
            "extension": file_path.suffix.lower(),
            "kind": self.kind,
        }
