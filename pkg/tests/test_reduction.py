"""Tests de la réduction de Cauchon, de la restauration et des représentants."""

from fractions import Fraction

import pytest

from tnncell.analysis import (
    cauchon_reduce,
    classify,
    enumerate_diagrams,
    is_cauchon_matrix,
    is_tnn_bruteforce,
    random_cell_matrix,
    random_diagram,
    random_positive_rational,
    representative,
    restore,
    t_values_for,
    tp_product_formula_check,
    tp_t_formula_check,
)
from tnncell.models import CauchonDiagram, DomainError, GridIndex, Matrix, lex_successor


class TestReduce:
    def test_worked_example(self, worked_matrix):
        trace = cauchon_reduce(worked_matrix)
        assert trace.t_matrix == Matrix.from_rows([[6, 5, 0], [0, 0, 3], [4, 2, 1]])
        assert trace.t(1, 1) == 6

    def test_zero_pivot_is_noop(self, worked_matrix):
        trace = cauchon_reduce(worked_matrix, keep_intermediates=True)
        noops = [s.box for s in trace.steps if s.is_noop]
        assert GridIndex(2, 2) in noops
        before = trace.intermediates[GridIndex(2, 3)]
        assert trace.intermediates[GridIndex(2, 2)] == before

    def test_steps_and_intermediates(self, worked_matrix):
        trace = cauchon_reduce(worked_matrix, keep_intermediates=True)
        assert [s.box for s in trace.steps][:2] == [(3, 3), (3, 2)]
        assert len(trace.intermediates) == 8
        assert trace.intermediates[GridIndex(3, 3)] == Matrix.from_rows(
            [[16, 5, 0], [0, 0, 3], [4, 2, 1]]
        )

    @pytest.mark.parametrize("m, p", [(3, 3), (2, 4), (4, 3)])
    def test_step_locality_and_pivots(self, rng, m, p):
        for _ in range(20):
            M = Matrix.from_function(
                m, p, lambda i, a: Fraction(int(rng.integers(-4, 6)), int(rng.integers(1, 4)))
            )
            trace = cauchon_reduce(M, keep_intermediates=True)
            before, previous = M, GridIndex(m + 1, p)
            for step in trace.steps:
                assert lex_successor(step.box, m, p) == previous
                after = trace.intermediates[step.box]
                j, beta = step.box
                assert step.pivot == before[j, beta]
                for i in range(1, m + 1):
                    for a in range(1, p + 1):
                        if (i, a) >= step.box or not (i < j and a < beta):
                            assert after[i, a] == before[i, a]
                before, previous = after, step.box
            assert before == trace.t_matrix

    def test_one_by_one(self):
        M = Matrix.from_rows([[-3]])
        assert cauchon_reduce(M).t_matrix == M
        assert not classify(M).is_tnn


class TestClassify:
    def test_worked_example(self, worked_matrix, worked_diagram):
        result = classify(worked_matrix)
        assert result.is_tnn
        assert result.diagram == worked_diagram
        assert result.to_dict()["diagram"] == ["..#", "##.", "..."]

    def test_negative_determinant(self):
        result = classify(Matrix.from_rows([[1, 2], [3, 4]]))
        assert not result.is_tnn
        assert result.diagram is None
        assert result.t_matrix[1, 1] == Fraction(-1, 2)

    def test_zero_matrix(self):
        result = classify(Matrix.zeros(2, 3))
        assert result.is_tnn
        assert result.diagram == CauchonDiagram.all_black(2, 3)

    def test_non_cauchon_zero_set(self):
        # t_{2,2} = 0 avec (2,1) et (1,2) non nuls
        M = Matrix.from_rows([[2, 1], [1, 0]])
        assert not classify(M).is_tnn
        assert not is_tnn_bruteforce(M)

    def test_every_representative_lands_in_its_cell(self):
        for C in enumerate_diagrams(3, 3):
            assert classify(representative(C)).diagram == C


class TestRestore:
    def test_all_ones_2x2(self):
        assert restore(Matrix.from_rows([[1, 1], [1, 1]])) == Matrix.from_rows([[2, 1], [1, 1]])

    def test_worked_diagram_representative(self, worked_diagram):
        expected = Matrix.from_rows([[2, 1, 0], [1, 1, 1], [1, 1, 1]])
        assert restore(Matrix.from_rows([[1, 1, 0], [0, 0, 1], [1, 1, 1]])) == expected
        assert representative(worked_diagram) == expected

    def test_all_black_representative(self):
        assert representative(CauchonDiagram.all_black(3, 2)) == Matrix.zeros(3, 2)

    @pytest.mark.parametrize(
        "rows",
        [
            [[1, -1], [1, 1]],  # entrée négative
            [[1, 1], [1, 0]],   # zéros hors diagramme de Cauchon
        ],
    )
    def test_rejects_invalid_input(self, rows):
        with pytest.raises(DomainError):
            restore(Matrix.from_rows(rows))

    def test_round_trip(self, rng):
        for _ in range(1000):
            m, p = (int(v) for v in rng.integers(1, 6, size=2))
            C = random_diagram(m, p, rng)
            T = t_values_for(C, lambda i, a: random_positive_rational(rng, 9))
            assert cauchon_reduce(restore(T)).t_matrix == T

    def test_zero_sets_of_tnn_matrices_are_cauchon(self, rng):
        for _ in range(1000):
            m, p = (int(v) for v in rng.integers(1, 5, size=2))
            M = random_cell_matrix(random_diagram(m, p, rng), rng)
            assert is_cauchon_matrix(M)


class TestTotallyPositiveFormulas:
    def _random_tp(self, rng, m, p):
        return random_cell_matrix(CauchonDiagram.all_white(m, p), rng)

    def test_t_ratio_formula(self, rng):
        for _ in range(100):
            m, p = (int(v) for v in rng.integers(1, 5, size=2))
            assert tp_t_formula_check(self._random_tp(rng, m, p))

    def test_product_formula(self, rng):
        for _ in range(50):
            assert tp_product_formula_check(self._random_tp(rng, 3, 4))

    def test_requires_tp(self, worked_matrix):
        with pytest.raises(DomainError):
            tp_t_formula_check(worked_matrix)
        with pytest.raises(DomainError):
            tp_product_formula_check(worked_matrix)
