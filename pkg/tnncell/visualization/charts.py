"""Génération de graphiques pour le banc d'essai."""

import io
from typing import Optional

from ..analysis.benchmark import BenchmarkResult


def benchmark_bar_chart(
    result: BenchmarkResult,
    width: int = 900,
    height: int = 400,
    colors: tuple[str, str] = ("#3498db", "#e74c3c"),
    title: Optional[str] = None,
) -> Optional[bytes]:
    """
    Histogramme des mineurs évalués et des temps, schéma contre oracle.

    Args:
        result: Résultats de `run_benchmark`
        width: Largeur de l'image
        height: Hauteur de l'image
        colors: Couleurs (schéma, oracle)
        title: Titre du graphique

    Returns:
        Image PNG en bytes, ou None si matplotlib est absent
    """
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        return None

    labels = ["Schéma m·p", "Tous les mineurs"]
    counts = [result.scheme_minors, result.oracle_minors]
    seconds = [
        float(result.table["scheme_seconds"].mean()),
        float(result.table["oracle_seconds"].mean()),
    ]

    fig, (ax_count, ax_time) = plt.subplots(1, 2, figsize=(width / 100, height / 100))

    bars = ax_count.bar(labels, counts, color=list(colors))
    ax_count.set_ylabel("Déterminants évalués")
    ax_count.set_yscale("log")
    for bar, count in zip(bars, counts):
        ax_count.text(
            bar.get_x() + bar.get_width() / 2,
            bar.get_height(),
            str(count),
            ha="center",
            va="bottom",
        )

    ax_time.bar(labels, seconds, color=list(colors))
    ax_time.set_ylabel("Temps moyen par essai (s)")

    fig.suptitle(title or f"Matrices {result.n}x{result.n}, {result.trials} essai(s), x{result.speedup:.1f}")
    plt.tight_layout()

    buf = io.BytesIO()
    plt.savefig(buf, format="png", dpi=100, bbox_inches="tight")
    plt.close(fig)
    buf.seek(0)

    return buf.read()
