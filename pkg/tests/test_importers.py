"""Tests des importers de fichiers."""

import json
from fractions import Fraction

import pytest

from tnncell.importers import (
    DiagramImporter,
    MatrixImporter,
    SchemeImporter,
    get_importer,
)
from tnncell.models import CauchonDiagram


class TestMatrixImporter:
    def test_mixed_entries(self, tmp_path):
        path = tmp_path / "m.json"
        path.write_text('{"rows": 1, "cols": 3, "data": [[1, "2/6", 0.1]]}', encoding="utf-8")
        result = MatrixImporter().import_file(path)
        assert result.success
        assert result.payload.entries[0] == (Fraction(1), Fraction(1, 3), Fraction(1, 10))
        assert result.metadata["kind"] == "matrix"

    def test_missing_file(self, tmp_path):
        result = MatrixImporter().import_file(tmp_path / "absent.json")
        assert not result.success
        assert "n'existe pas" in result.error

    @pytest.mark.parametrize(
        "content",
        [
            "{not json",
            "[1, 2]",
            '{"rows": 2, "cols": 2}',
            '{"rows": 2, "cols": 2, "data": [[1, 2], [3]]}',
            '{"rows": 1, "cols": 2, "data": [[1, "1/0"]]}',
            '{"rows": 3, "cols": 2, "data": [[1, 2], [3, 4]]}',
        ],
    )
    def test_invalid(self, tmp_path, content):
        path = tmp_path / "m.json"
        path.write_text(content, encoding="utf-8")
        result = MatrixImporter().import_file(path)
        assert not result.success
        assert result.error

    def test_extra_keys_warn(self, tmp_path):
        path = tmp_path / "m.json"
        path.write_text('{"rows": 1, "cols": 1, "data": [[1]], "name": "x"}', encoding="utf-8")
        result = MatrixImporter().import_file(path)
        assert result.success
        assert result.warnings


class TestDiagramImporter:
    def test_ascii(self, write_diagram, worked_diagram):
        result = DiagramImporter().import_file(write_diagram(["..#", "##.", "..."]))
        assert result.success
        assert result.payload == worked_diagram
        assert result.metadata["shape"] == [3, 3]

    def test_json(self, tmp_path, worked_diagram):
        path = tmp_path / "d.json"
        path.write_text(json.dumps({"diagram": ["..#", "##.", "..."]}), encoding="utf-8")
        assert DiagramImporter().import_file(path).payload == worked_diagram

    def test_violation(self, write_diagram):
        result = DiagramImporter().import_file(write_diagram(["..", ".#"]))
        assert not result.success
        assert "Cauchon" in result.error

    @pytest.mark.parametrize("rows", [[5], ["..", 3], [None]])
    def test_json_non_string_rows(self, tmp_path, rows):
        path = tmp_path / "d.json"
        path.write_text(json.dumps({"diagram": rows}), encoding="utf-8")
        result = DiagramImporter().import_file(path)
        assert not result.success
        assert result.error.startswith("Diagramme invalide")


class TestSchemeImporter:
    def test_partial_scheme(self, tmp_path):
        path = tmp_path / "s.json"
        path.write_text(
            json.dumps(
                {
                    "diagram": ["..#", "##.", "..."],
                    "boxes": [{"box": [1, 2], "sequence": [[1, 2], [3, 3]]}],
                }
            ),
            encoding="utf-8",
        )
        result = SchemeImporter().import_file(path)
        assert result.success
        assert result.payload.spec((1, 2)).label() == "[13|23]"
        assert result.warnings

    @pytest.mark.parametrize(
        "boxes",
        [
            [{"box": [1, 1], "sequence": [[1, 1], [2, 2]]}],   # non lacunaire
            [{"box": [1, 1], "sequence": [[1, 2], [2, 3]]}],   # mauvais départ
            [{"box": [1, 1], "sequence": [[2, 1], [1, 2]]}],   # non croissante
            [{"box": [1, 1]}],                                 # suite absente
        ],
    )
    def test_invalid(self, tmp_path, boxes):
        path = tmp_path / "s.json"
        path.write_text(json.dumps({"diagram": ["..#", "##.", "..."], "boxes": boxes}), encoding="utf-8")
        assert not SchemeImporter().import_file(path).success

    @pytest.mark.parametrize(
        "document",
        [
            {"diagram": [1, 2, 3]},
            {"diagram": "..#"},
            ["..#", "##.", "..."],
            {"diagram": ["..#", "##.", "..."], "boxes": [{"box": [1], "sequence": [[1, 1]]}]},
            {"diagram": ["..#", "##.", "..."], "boxes": [{"box": [1, 1], "sequence": [["a", 1]]}]},
        ],
    )
    def test_malformed_document(self, tmp_path, document):
        path = tmp_path / "s.json"
        path.write_text(json.dumps(document), encoding="utf-8")
        result = SchemeImporter().import_file(path)
        assert not result.success
        assert result.error

    def test_exported_scheme_reloads(self, tmp_path, worked_diagram):
        from tnncell.analysis import build_scheme

        scheme = build_scheme(worked_diagram)
        path = tmp_path / "s.json"
        path.write_text(json.dumps(scheme.to_dict()), encoding="utf-8")
        result = SchemeImporter().import_file(path)
        assert result.success
        assert result.payload.per_box == scheme.per_box
        assert not result.warnings


def test_get_importer_dispatch():
    assert isinstance(get_importer("a.json"), MatrixImporter)
    assert isinstance(get_importer("a.txt"), DiagramImporter)
    assert isinstance(get_importer("a.json", "scheme"), SchemeImporter)
    with pytest.raises(ValueError):
        get_importer("a.json", "video")


def test_diagram_ascii_format(write_diagram):
    path = write_diagram(CauchonDiagram.all_white(2, 2).to_lines())
    assert path.read_text(encoding="utf-8") == "..\n..\n"
