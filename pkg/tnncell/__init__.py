"""
tnncell - Reconnaissance des cellules totalement positives

Décide, avec exactement m·p mineurs, si une matrice rationnelle est
totalement positive (tnn) et à quelle cellule tnn elle appartient.
"""

import logging
import sys
from datetime import datetime
from pathlib import Path

__version__ = "0.1.0"
__author__ = "tnncell Team"


def setup_logging(log_dir: Path | None = None, level: int = logging.WARNING) -> logging.Logger:
    """
    Configure le système de logging de la bibliothèque.

    Args:
        log_dir: Répertoire pour les fichiers de log (None = console seulement)
        level: Niveau de log (défaut: WARNING, stdout reste réservé aux résultats)

    Returns:
        Logger principal de la bibliothèque
    """
    logger = logging.getLogger("tnncell")
    logger.setLevel(level)

    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    # Éviter les handlers dupliqués ; sys.stderr a pu être remplacé depuis
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(level)
            if type(handler) is logging.StreamHandler:
                handler.stream = sys.stderr
    else:
        # Handler console (stderr)
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

    has_file = any(isinstance(h, logging.FileHandler) for h in logger.handlers)
    if log_dir is not None and not has_file:
        log_dir.mkdir(parents=True, exist_ok=True)
        log_file = log_dir / f"tnncell_{datetime.now().strftime('%Y%m%d')}.log"

        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
        logger.info(f"Logging initialisé - fichier: {log_file}")

    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Obtient un logger enfant pour un module spécifique.

    Args:
        name: Nom du module (ex: "analysis.reduction")

    Returns:
        Logger pour le module
    """
    return logging.getLogger(f"tnncell.{name}")
