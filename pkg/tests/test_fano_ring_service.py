from fractions import Fraction

import pytest

from src.config import Config
from src.services.fano_ring_service import fano_ring_service
from src.services.linear_algebra_service import linear_algebra_service


@pytest.mark.parametrize('n, a, b, degree', [
    (4, 4, 0, 108),
    (4, 2, 1, 45),
    (4, 0, 2, 27),
    (3, 2, 0, 45),
    (3, 0, 1, 27),
])
def test_degrees_on_F(n, a, b, degree):
    assert fano_ring_service.degree_F(a, b, fano_ring_service.context(n)) == degree


def test_degree_outside_top_degree_is_zero():
    assert fano_ring_service.degree_F(3, 0, fano_ring_service.context(4)) == 0


@pytest.mark.parametrize('n, expected', [
    (3, [1, 1, 1]),
    (4, [1, 1, 2, 1, 1]),
    (5, [1, 1, 2, 2, 2, 1, 1]),
    (6, [1, 1, 2, 2, 3, 2, 2, 1, 1]),
])
def test_hilbert_function(n, expected):
    ctx = fano_ring_service.context(n)
    assert fano_ring_service.taut_hilbert_function(ctx).as_list(ctx.dim + 1) == expected
    assert fano_ring_service.r_vector(n) == expected


@pytest.mark.slow
@pytest.mark.parametrize('n', range(7, 11))
def test_hilbert_function_matches_formula(n):
    ctx = fano_ring_service.context(n)
    assert fano_ring_service.taut_hilbert_function(ctx).as_list(ctx.dim + 1) == fano_ring_service.r_vector(n)


@pytest.mark.parametrize('n, degree, g_power, other, ratio', [
    (3, 2, (2, 0), (0, 1), Fraction(-5, 3)),
    (4, 3, (3, 0), (1, 1), Fraction(-12, 5)),
])
def test_annihilator_relation(n, degree, g_power, other, ratio):
    relations = fano_ring_service.annihilator_relation(fano_ring_service.context(n), degree)
    assert len(relations) == 1
    relation = relations[0]
    assert relation.coefficient(*g_power) == 1
    assert relation.coefficient(*other) == ratio


def test_context_needs_a_fano_of_lines():
    with pytest.raises(ValueError):
        fano_ring_service.context(2)


def test_socle_relation_rejects_small_n():
    with pytest.raises(ValueError):
        fano_ring_service.solve_socle_relation(4)


def test_socle_relation_respects_configured_bound(monkeypatch):
    monkeypatch.setattr(Config, 'SOCLE_N_MAX', 6)
    with pytest.raises(ValueError):
        fano_ring_service.solve_socle_relation(7)


@pytest.mark.parametrize('n', [5, 6, 7])
def test_socle_relation(n):
    relation = fano_ring_service.solve_socle_relation(n)
    assert relation.leading_coefficient == 1
    assert relation.recurrence_p[0] == Fraction(n - 1, 2)


def test_recurrence_values_for_n5():
    result = fano_ring_service.recurrence_check(5)
    assert result['p'][:2] == ['2', '-5/2']
    assert result['holds']


@pytest.mark.parametrize('n', [5, 6, 7, 8])
def test_recurrence_check(n):
    result = fano_ring_service.recurrence_check(n)
    assert result['a_integral']
    assert result['p_non_integral_from_2']
    assert result['expanded']['matches_binomial_j_minus_2']
    assert result['holds']


@pytest.mark.slow
@pytest.mark.parametrize('n', range(8, 13))
def test_socle_relation_large(n):
    assert fano_ring_service.solve_socle_relation(n).leading_coefficient == 1


def test_dimRFxF_bound_for_n4():
    assert fano_ring_service.dimRFxF_bound(0, 4) == 1
    assert fano_ring_service.dimRFxF_bound(4, 4) == 12
    with pytest.raises(ValueError):
        fano_ring_service.dimRFxF_bound(9, 4)


def test_degree_table_for_n4():
    table = fano_ring_service.degree_table(fano_ring_service.context(4))
    assert [row['degree'] for row in table] == ['108', '45', '27']


@pytest.mark.parametrize('n', [3, 4, 5, 6])
def test_pairing_is_perfect_in_complementary_degrees(n):
    ctx = fano_ring_service.context(n)
    for i in range(ctx.dim + 1):
        pairing = fano_ring_service.pairing_matrix(ctx, i)
        assert pairing == fano_ring_service.pairing_matrix(ctx, ctx.dim - i).transpose()
        rank = linear_algebra_service.rank(pairing)
        assert rank == fano_ring_service.r_formula(i, n) == fano_ring_service.r_formula(ctx.dim - i, n)
        assert len(fano_ring_service.annihilator_relation(ctx, i)) == pairing.rows - rank


@pytest.mark.parametrize('n', range(3, 9))
def test_dimRFxF_bound_is_reflected(n):
    top = 4 * n - 8
    for k in range(top + 1):
        assert fano_ring_service.dimRFxF_bound(k, n) == fano_ring_service.dimRFxF_bound(top - k, n), k
