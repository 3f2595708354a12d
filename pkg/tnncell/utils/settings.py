"""Gestion des paramètres de la bibliothèque.

Les paramètres (gardes de taille, format de sortie, tirages aléatoires)
sont stockés dans un fichier JSON du dossier utilisateur. La variable
d'environnement TNN_MAX_CELLS remplace les gardes sur le nombre de cases,
pas la garde m + p de l'oracle.
"""

import json
import os
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from .. import get_logger

logger = get_logger("utils.settings")

MAX_CELLS_ENV = "TNN_MAX_CELLS"
HOME_ENV = "TNNCELL_HOME"


def settings_dir() -> Path:
    """Dossier de configuration (~/.tnncell, ou $TNNCELL_HOME)."""
    override = os.environ.get(HOME_ENV)
    return Path(override) if override else Path.home() / ".tnncell"


def settings_file() -> Path:
    return settings_dir() / "settings.json"


@dataclass
class AppSettings:
    """Paramètres de la bibliothèque."""

    # Gardes de capacité
    max_enumeration_cells: int = 30   # m·p maximal pour l'énumération des diagrammes
    max_lacunary_cells: int = 25      # m·p maximal pour la recherche exhaustive de suites
    max_oracle_dimension_sum: int = 16  # m+p maximal pour l'oracle tous-mineurs
    cofactor_max_size: int = 5        # taille maximale du déterminant par cofacteurs

    # Représentants aléatoires
    random_t_max: int = 9

    # Sortie
    default_format: str = "json"  # "json", "text"
    bench_trials: int = 3

    def to_dict(self) -> dict:
        """Convertit en dictionnaire."""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "AppSettings":
        """Crée depuis un dictionnaire."""
        # Filtrer les clés inconnues
        valid_keys = {f.name for f in cls.__dataclass_fields__.values()}
        filtered = {k: v for k, v in data.items() if k in valid_keys}
        return cls(**filtered)

    def apply_environment(self) -> "AppSettings":
        """Applique TNN_MAX_CELLS aux gardes sur le nombre de cases."""
        raw = os.environ.get(MAX_CELLS_ENV)
        if raw is None:
            return self
        try:
            value = int(raw)
        except ValueError:
            logger.warning(f"{MAX_CELLS_ENV} ignoré (entier attendu): {raw!r}")
            return self
        if value < 1:
            logger.warning(f"{MAX_CELLS_ENV} ignoré (doit être positif): {value}")
            return self
        self.max_enumeration_cells = value
        self.max_lacunary_cells = value
        logger.info(f"Gardes de capacité remplacées par {MAX_CELLS_ENV}={value}")
        return self


class SettingsManager:
    """Gestionnaire des paramètres (singleton)."""

    _instance: Optional["SettingsManager"] = None
    _settings: Optional[AppSettings] = None

    def __new__(cls):
        """Singleton pattern."""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if self._settings is None:
            self._settings = self._load()

    def _load(self) -> AppSettings:
        """Charge les paramètres depuis le fichier."""
        path = settings_file()
        settings = AppSettings()
        if path.exists():
            try:
                data = json.loads(path.read_text(encoding="utf-8"))
                settings = AppSettings.from_dict(data)
                logger.info(f"Paramètres chargés: {path}")
            except Exception as e:
                logger.warning(f"Erreur lors du chargement des paramètres: {e}")
        return settings.apply_environment()

    def save(self):
        """Sauvegarde les paramètres dans le fichier."""
        path = settings_file()
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(
                json.dumps(self._settings.to_dict(), indent=2, ensure_ascii=False),
                encoding="utf-8",
            )
            logger.debug(f"Paramètres sauvegardés: {path}")
        except Exception as e:
            logger.error(f"Erreur lors de la sauvegarde des paramètres: {e}")

    def reload(self) -> AppSettings:
        """Relit le fichier et l'environnement."""
        self._settings = self._load()
        return self._settings

    @property
    def settings(self) -> AppSettings:
        """Retourne les paramètres."""
        return self._settings


# Instance globale
_settings_manager: Optional[SettingsManager] = None


def get_settings_manager() -> SettingsManager:
    """Retourne le gestionnaire de paramètres (singleton)."""
    global _settings_manager
    if _settings_manager is None:
        _settings_manager = SettingsManager()
    return _settings_manager


def get_settings() -> AppSettings:
    """Raccourci pour obtenir les paramètres."""
    return get_settings_manager().settings


def reset_settings():
    """Oublie l'instance courante (la prochaine lecture relit fichier et environnement)."""
    global _settings_manager
    _settings_manager = None
    SettingsManager._instance = None
    SettingsManager._settings = None
