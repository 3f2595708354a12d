"""Fixtures partagées."""

import json

import numpy as np
import pytest

from tnncell.models import CauchonDiagram, Matrix
from tnncell.utils.settings import HOME_ENV, MAX_CELLS_ENV, reset_settings

# Matrice 3×3 tnn dont la cellule a pour diagramme '..#', '##.', '...'
WORKED_ROWS = [[16, 5, 0], [12, 6, 3], [4, 2, 1]]
WORKED_DIAGRAM = ["..#", "##.", "..."]


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: vérifications exhaustives longues (4x4, n=8)")


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Chaque test lit ses paramètres dans un dossier vierge."""
    monkeypatch.setenv(HOME_ENV, str(tmp_path / "home"))
    monkeypatch.delenv(MAX_CELLS_ENV, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def worked_matrix() -> Matrix:
    return Matrix.from_rows(WORKED_ROWS)


@pytest.fixture
def worked_diagram() -> CauchonDiagram:
    return CauchonDiagram.from_lines(WORKED_DIAGRAM)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def write_matrix(tmp_path):
    """Écrit un fichier matrice JSON et retourne son chemin."""

    def _write(rows, name="matrix.json"):
        path = tmp_path / name
        path.write_text(
            json.dumps({"rows": len(rows), "cols": len(rows[0]), "data": rows}),
            encoding="utf-8",
        )
        return path

    return _write


@pytest.fixture
def write_diagram(tmp_path):
    """Écrit un diagramme ASCII et retourne son chemin."""

    def _write(lines, name="diagram.txt"):
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return _write
