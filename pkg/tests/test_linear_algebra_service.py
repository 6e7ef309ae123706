import random
from fractions import Fraction

import pytest

from src.models.errors import InconsistentSystemError
from src.models.exact_matrix import ExactMatrix, format_fraction
from src.services.linear_algebra_service import linear_algebra_service


def _matrix(rows):
    return ExactMatrix.from_rows(rows, len(rows[0]))


def test_rank_and_kernel_of_rank_one_matrix():
    m = _matrix([[1, 2, 3], [2, 4, 6]])
    rank, kernel = linear_algebra_service.rank_and_kernel(m)
    assert rank == 1
    assert len(kernel) == 2
    for vec in kernel:
        assert m.matmul(vec).is_zero()


def test_rank_is_exact_over_rationals():
    m = _matrix([[Fraction(1, 3), Fraction(1, 2)], [Fraction(2, 3), 1]])
    assert linear_algebra_service.rank(m) == 1
    assert linear_algebra_service.nullity(m) == 1


def test_solve_linear_particular_solution():
    solution = linear_algebra_service.solve_linear(_matrix([[1, 1], [1, -1]]), [2, 0])
    assert solution.particular.column_values() == [1, 1]
    assert solution.kernel == []


def test_solve_linear_with_free_variable():
    solution = linear_algebra_service.solve_linear(_matrix([[1, 1]]), [Fraction(5, 2)])
    assert solution.particular.column_values() == [Fraction(5, 2), 0]
    assert len(solution.kernel) == 1


def test_inconsistent_system_raises():
    with pytest.raises(InconsistentSystemError):
        linear_algebra_service.solve_linear(_matrix([[1, 1], [2, 2]]), [1, 3])


def test_same_span_ignores_scaling():
    first = [ExactMatrix.column([1, 2, 0]), ExactMatrix.column([0, 0, 1])]
    second = [ExactMatrix.column([2, 4, 1]), ExactMatrix.column([0, 0, 3])]
    assert linear_algebra_service.same_span(first, second, 3)
    assert not linear_algebra_service.same_span(first, [ExactMatrix.column([1, 0, 0])], 3)
    assert linear_algebra_service.span_dimension(first + second, 3) == 2


def test_fractions_print_exactly():
    assert format_fraction(Fraction(-5, 2)) == '-5/2'
    assert format_fraction(Fraction(27, 1)) == '27'


def _random_matrix(rng, rows, cols, rank):
    """Product of random rows x rank and rank x cols factors, so the rank is at most `rank`"""
    left = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(rank)] for _ in range(rows)]
    right = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rank)]
    return _matrix(left).matmul(_matrix(right))


def _random_matrices(seed=2024, count=30):
    rng = random.Random(seed)
    for _ in range(count):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        yield _random_matrix(rng, rows, cols, rng.randint(1, min(rows, cols)))


def test_rank_equals_rank_of_transpose():
    for m in _random_matrices():
        assert linear_algebra_service.rank(m) == linear_algebra_service.rank(m.transpose())


def test_kernel_vectors_are_annihilated():
    for m in _random_matrices(seed=7):
        rank, kernel = linear_algebra_service.rank_and_kernel(m)
        assert len(kernel) == m.cols - rank
        for vec in kernel:
            assert m.matmul(vec).is_zero()


def test_rref_is_row_equivalent_and_reduced():
    for m in _random_matrices(seed=11):
        rows, pivots = linear_algebra_service.rref(m)
        reduced = ExactMatrix.from_rows(rows, m.cols)
        assert linear_algebra_service.rank(reduced) == len(pivots) == linear_algebra_service.rank(m)
        original = [ExactMatrix.column(r) for r in m.to_rows()]
        assert linear_algebra_service.same_span(original, [ExactMatrix.column(r) for r in rows], m.cols)
        for r, c in enumerate(pivots):
            assert reduced.column_values(c) == [1 if i == r else 0 for i in range(m.rows)]
        assert linear_algebra_service.rref(reduced) == (rows, pivots)


def test_zero_matrix():
    m = ExactMatrix.zeros(3, 4)
    rank, kernel = linear_algebra_service.rank_and_kernel(m)
    assert rank == 0
    assert len(kernel) == 4
    assert m.matmul(ExactMatrix.identity(4)) == m
