"""Comparaison du test à m·p mineurs et de l'oracle tous-mineurs.

Chaque essai tire un diagramme n×n et un représentant aléatoire de sa
cellule, puis mesure le temps et le nombre de déterminants évalués par
chacun des deux chemins.
"""

import time
from dataclasses import dataclass, field
from math import comb
from typing import Optional

import numpy as np
import pandas as pd

from .. import get_logger
from ..models.errors import DomainError, InconsistencyError
from ..utils.settings import get_settings
from ..utils.system import SystemInfo, get_system_info
from .enumeration import random_diagram
from .minors import count_minors
from .oracle import zero_pattern
from .recognition import build_scheme, membership_test
from .reduction import random_cell_matrix

logger = get_logger("analysis.benchmark")

COLUMNS = [
    "trial",
    "diagram",
    "scheme_minors",
    "oracle_minors",
    "scheme_seconds",
    "oracle_seconds",
    "verdict",
]


@dataclass
class BenchmarkResult:
    """Résultats d'un banc d'essai n×n."""

    n: int
    trials: int
    seed: int
    table: pd.DataFrame
    system: SystemInfo = field(default_factory=get_system_info)

    @property
    def scheme_minors(self) -> int:
        return int(self.table["scheme_minors"].iloc[0])

    @property
    def oracle_minors(self) -> int:
        return int(self.table["oracle_minors"].iloc[0])

    @property
    def speedup(self) -> float:
        """Rapport des temps totaux oracle / schéma."""
        scheme_time = float(self.table["scheme_seconds"].sum())
        if scheme_time == 0:
            return float("inf")
        return float(self.table["oracle_seconds"].sum()) / scheme_time

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "schemeMinors": self.scheme_minors,
            "oracleMinors": self.oracle_minors,
            "expectedSchemeMinors": self.n * self.n,
            "expectedOracleMinors": comb(2 * self.n, self.n) - 1,
            "schemeSeconds": float(self.table["scheme_seconds"].sum()),
            "oracleSeconds": float(self.table["oracle_seconds"].sum()),
            "speedup": self.speedup,
            "system": self.system.to_dict(),
        }


def run_benchmark(n: int, trials: Optional[int] = None, seed: int = 0) -> BenchmarkResult:
    """
    Exécute le banc d'essai.

    Args:
        n: Taille des matrices carrées
        trials: Nombre de représentants tirés (défaut: paramètre bench_trials)
        seed: Graine du générateur numpy

    Raises:
        DomainError: si n < 1 ou trials < 1
        CapacityError: si l'oracle refuse la taille
    """
    settings = get_settings()
    trials = settings.bench_trials if trials is None else trials
    if n < 1:
        raise DomainError(f"Taille invalide: {n}")
    if trials < 1:
        raise DomainError(f"Nombre d'essais invalide: {trials}")

    rng = np.random.default_rng(seed)
    rows = []
    for trial in range(1, trials + 1):
        C = random_diagram(n, n, rng)
        M = random_cell_matrix(C, rng, settings.random_t_max)
        scheme = build_scheme(C)

        with count_minors() as scheme_counter:
            start = time.perf_counter()
            report = membership_test(M, scheme)
            scheme_seconds = time.perf_counter() - start

        with count_minors() as oracle_counter:
            start = time.perf_counter()
            zero_pattern(M)
            oracle_seconds = time.perf_counter() - start

        if not report.verdict:
            raise InconsistencyError(f"Le représentant de l'essai {trial} échoue au test de sa cellule")

        logger.debug(
            f"Essai {trial}: {scheme_counter.count} mineurs en {scheme_seconds:.4f}s, "
            f"oracle {oracle_counter.count} mineurs en {oracle_seconds:.4f}s"
        )
        rows.append(
            {
                "trial": trial,
                "diagram": C.fingerprint(),
                "scheme_minors": scheme_counter.count,
                "oracle_minors": oracle_counter.count,
                "scheme_seconds": scheme_seconds,
                "oracle_seconds": oracle_seconds,
                "verdict": report.verdict,
            }
        )

    result = BenchmarkResult(n, trials, seed, pd.DataFrame(rows, columns=COLUMNS))
    logger.info(
        f"Banc {n}x{n}: {result.scheme_minors} vs {result.oracle_minors} mineurs, "
        f"accélération x{result.speedup:.1f}"
    )
    return result
