"""Exceptions de la bibliothèque."""


class TnnError(Exception):
    """Erreur de base de tnncell."""


class DomainError(TnnError, ValueError):
    """Entrée hors domaine : indice, forme ou précondition invalide."""


class CapacityError(TnnError, RuntimeError):
    """Garde de taille dépassée (énumération ou oracle exhaustif)."""


class InconsistencyError(TnnError, RuntimeError):
    """Les chemins réduction et reconnaissance ne sont pas d'accord."""
