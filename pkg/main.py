#!/usr/bin/env python3
"""
tnncell - Reconnaissance des cellules totalement positives

Point d'entrée principal de la ligne de commande.
"""

import sys


def main():
    """Lance la ligne de commande tnncell."""
    # Initialiser le logging (stderr, stdout reste réservé aux résultats)
    from tnncell import setup_logging
    setup_logging()

    from tnncell.cli import run_cli
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
