"""Graphiques des résultats du banc d'essai."""

from .charts import benchmark_bar_chart

__all__ = ["benchmark_bar_chart"]
