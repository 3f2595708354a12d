"""Tests du test d'appartenance par m·p mineurs."""

from fractions import Fraction

import numpy as np
import pytest

from tnncell.analysis import (
    all_lacunary_from,
    build_scheme,
    cell_of,
    classify,
    count_minors,
    enumerate_diagrams,
    final_minor_specs,
    is_tnn_bruteforce,
    lacunary_from,
    membership_test,
    product_identity_check,
    random_cell_matrix,
    random_diagram,
    representative,
    scheme_from_sequences,
)
from tnncell.models import (
    BoxResult,
    CauchonDiagram,
    DomainError,
    Expectation,
    GridIndex,
    InconsistencyError,
    LacunarySequence,
    Matrix,
    MembershipReport,
    MinorSpec,
)

WORKED_SCHEME = {
    (1, 1): "[13|12]",
    (1, 2): "[12|23]",
    (1, 3): "[1|3]",
    (2, 1): "[23|12]",
    (2, 2): "[23|23]",
    (2, 3): "[2|3]",
    (3, 1): "[3|1]",
    (3, 2): "[3|2]",
    (3, 3): "[3|3]",
}


def _battery(C: CauchonDiagram, others: list[CauchonDiagram], rng: np.random.Generator, k: int):
    """Représentants de C, d'autres cellules, perturbations et matrices quelconques."""
    m, p = C.shape
    base = representative(C)
    yield base
    for _ in range(k):
        yield random_cell_matrix(C, rng)
    for _ in range(k):
        yield representative(others[int(rng.integers(len(others)))])
    for _ in range(k):
        bi, ba = (int(v) for v in (rng.integers(1, m + 1), rng.integers(1, p + 1)))
        delta = 1 if rng.random() < 0.5 else -1
        yield Matrix.from_function(m, p, lambda i, a: base[i, a] + (delta if (i, a) == (bi, ba) else 0))
    for _ in range(k):
        yield Matrix.from_function(
            m, p, lambda i, a: Fraction(int(rng.integers(-3, 6)), int(rng.integers(1, 4)))
        )


def _expected_verdict(M: Matrix, C: CauchonDiagram) -> bool:
    return is_tnn_bruteforce(M) and classify(M).diagram == C


class TestBuildScheme:
    def test_worked_scheme(self, worked_diagram):
        scheme = build_scheme(worked_diagram)
        assert {box: scheme.spec(box).label() for box in scheme.boxes()} == WORKED_SCHEME

    def test_all_white_gives_final_minors(self):
        scheme = build_scheme(CauchonDiagram.all_white(3, 4))
        assert {scheme.spec(box) for box in scheme.boxes()} == set(final_minor_specs(3, 4))

    def test_single_row(self):
        C = CauchonDiagram.from_lines([".#.#"])
        scheme = build_scheme(C)
        assert [scheme.spec(box).label() for box in scheme.boxes()] == [
            "[1|1]",
            "[1|2]",
            "[1|3]",
            "[1|4]",
        ]

    def test_to_dict(self, worked_diagram):
        data = build_scheme(worked_diagram).to_dict()
        assert data["diagram"] == ["..#", "##.", "..."]
        assert data["boxes"][0] == {"box": [1, 1], "sequence": [[1, 1], [3, 2]], "minor": "[13|12]"}

    def test_custom_sequences(self, worked_diagram):
        alt = LacunarySequence(((1, 2), (3, 3)))
        scheme = scheme_from_sequences(worked_diagram, {(1, 2): alt})
        assert scheme.spec((1, 2)).label() == "[13|23]"
        assert scheme.spec((1, 1)).label() == "[13|12]"

    def test_custom_sequence_must_be_lacunary(self, worked_diagram):
        with pytest.raises(DomainError):
            scheme_from_sequences(worked_diagram, {(1, 1): LacunarySequence(((1, 1), (2, 2)))})


class TestMembership:
    def test_worked_example_passes(self, worked_matrix, worked_diagram):
        report = membership_test(worked_matrix, build_scheme(worked_diagram))
        assert report.verdict
        values = {r.box: r.value for r in report.per_box}
        assert values[GridIndex(1, 1)] == 12
        assert values[GridIndex(1, 2)] == 15
        assert values[GridIndex(2, 2)] == 0

    def test_all_white_fails_on_zero_entry(self, worked_matrix):
        report = membership_test(worked_matrix, build_scheme(CauchonDiagram.all_white(3, 3)))
        assert not report.verdict
        assert GridIndex(1, 3) in {r.box for r in report.failures}

    def test_zero_matrix_all_black(self):
        scheme = build_scheme(CauchonDiagram.all_black(2, 3))
        assert membership_test(Matrix.zeros(2, 3), scheme).verdict

    def test_exactly_mp_minors(self, worked_matrix, worked_diagram):
        scheme = build_scheme(worked_diagram)
        with count_minors() as counter:
            membership_test(worked_matrix, scheme)
        assert counter.count == 9

    def test_shape_mismatch(self, worked_diagram):
        with pytest.raises(DomainError):
            membership_test(Matrix.zeros(2, 3), build_scheme(worked_diagram))

    def test_report_dict(self, worked_matrix, worked_diagram):
        data = membership_test(worked_matrix, build_scheme(worked_diagram)).to_dict()
        assert data["verdict"] is True
        assert data["minorsEvaluated"] == 9
        assert data["boxes"][2] == {
            "box": [1, 3],
            "minor": "[1|3]",
            "value": "0/1",
            "expected": "zero",
            "pass": True,
        }

    def test_representatives_match_signs(self):
        for C in enumerate_diagrams(3, 3):
            report = membership_test(representative(C), build_scheme(C))
            for r in report.per_box:
                assert (r.value == 0) == C.is_black(*r.box)
                assert r.value >= 0

    def test_classify_matches_bruteforce(self, rng):
        diagrams = list(enumerate_diagrams(3, 3))
        for C in diagrams[::2]:
            for M in _battery(C, diagrams, rng, k=3):
                assert classify(M).is_tnn == is_tnn_bruteforce(M), M.to_dict()
        for m, p in [(2, 4), (4, 2), (1, 5)]:
            shapes = list(enumerate_diagrams(m, p))
            for C in shapes[::5]:
                for M in _battery(C, shapes, rng, k=2):
                    assert classify(M).is_tnn == is_tnn_bruteforce(M), M.to_dict()

    def test_equivalence_3x3(self, rng):
        diagrams = list(enumerate_diagrams(3, 3))
        for C in diagrams:
            scheme = build_scheme(C)
            for M in _battery(C, diagrams, rng, k=5):
                assert membership_test(M, scheme).verdict == _expected_verdict(M, C), (
                    C.to_lines(),
                    M.to_dict(),
                )

    @pytest.mark.slow
    def test_equivalence_sampled_4x4(self, rng):
        others = [random_diagram(4, 4, rng) for _ in range(50)]
        for _ in range(200):
            C = random_diagram(4, 4, rng)
            scheme = build_scheme(C)
            for M in _battery(C, others, rng, k=5):
                assert membership_test(M, scheme).verdict == _expected_verdict(M, C)

    def test_any_lacunary_choice_gives_same_verdicts(self, rng):
        diagrams = list(enumerate_diagrams(3, 3))
        for C in diagrams[::3]:
            default = build_scheme(C)
            # Dernière suite possible pour chaque case
            alternative = scheme_from_sequences(
                C,
                {box: all_lacunary_from(C, *box)[-1] for box in default.boxes()},
            )
            for M in _battery(C, diagrams, rng, k=2):
                assert membership_test(M, default).verdict == membership_test(M, alternative).verdict


class TestProductIdentity:
    @pytest.mark.parametrize(
        "points",
        [((1, 1), (3, 2)), ((1, 2), (2, 3)), ((1, 2), (3, 3)), ((3, 2),), ((2, 3),)],
    )
    def test_worked_example(self, worked_matrix, worked_diagram, points):
        assert product_identity_check(worked_matrix, worked_diagram, LacunarySequence(points))

    def test_every_3x3_representative(self, rng):
        for C in enumerate_diagrams(3, 3):
            for M in (representative(C), random_cell_matrix(C, rng)):
                for box, seq in build_scheme(C).per_box.items():
                    assert product_identity_check(M, C, seq), (C.to_lines(), box)

    def test_precondition(self):
        M = Matrix.from_rows([[1, 2], [3, 4]])
        C = CauchonDiagram.all_white(2, 2)
        with pytest.raises(DomainError):
            product_identity_check(M, C, lacunary_from(C, 1, 1))

    def test_sequence_must_be_lacunary(self, worked_matrix, worked_diagram):
        with pytest.raises(DomainError):
            product_identity_check(worked_matrix, worked_diagram, LacunarySequence(((1, 1), (2, 2))))


class TestCellOf:
    def test_worked_example(self, worked_matrix, worked_diagram):
        assert cell_of(worked_matrix) == worked_diagram

    def test_not_tnn(self):
        assert cell_of(Matrix.from_rows([[1, 2], [3, 4]])) is None

    def test_every_representative(self):
        for m, p in [(2, 2), (2, 3), (3, 3)]:
            for C in enumerate_diagrams(m, p):
                assert cell_of(representative(C)) == C

    def test_inconsistency_is_reported(self, worked_matrix, monkeypatch):
        def failing(M, scheme):
            bad = BoxResult(GridIndex(1, 1), MinorSpec((1,), (1,)), Fraction(-1), Expectation.POSITIVE)
            return MembershipReport(scheme.diagram, (bad,))

        monkeypatch.setattr("tnncell.analysis.recognition.membership_test", failing)
        with pytest.raises(InconsistencyError):
            cell_of(worked_matrix)
