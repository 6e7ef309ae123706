import pytest
from sympy import Symbol

from src.models.gamma3_models import Cycle, Gamma3Context, make_key
from src.services.gamma3_service import gamma3_service


def _identity(ctx, name):
    return next(i for i in gamma3_service.derive(ctx) if i.name == name)


def test_gamma3_has_seven_terms():
    gamma = gamma3_service.gamma3(gamma3_service.context('curve'))
    assert gamma.arity == 3
    assert len(gamma.terms) == 7


def test_unknown_kind():
    with pytest.raises(ValueError):
        Gamma3Context('threefold')


def test_cycle_keys_must_partition_the_factors():
    with pytest.raises(ValueError):
        Cycle(3, {make_key([((0, 1), ())]): 1})


def test_curve_tangent_class():
    ctx = gamma3_service.context('curve')
    identity = _identity(ctx, 'c_top(T) = chi*z')
    assert identity.holds
    assert identity.rhs == gamma3_service.exterior([('z',)], 2 - 2 * Symbol('g'))


def test_curve_canonical_class():
    ctx = gamma3_service.context('curve')
    identity = _identity(ctx, 'K = (2g-2)*z')
    assert identity.rhs == gamma3_service.exterior([('z',)], 2 * Symbol('g') - 2)


def test_faber_pandharipande():
    ctx = gamma3_service.context('curve')
    identity = _identity(ctx, 'Faber-Pandharipande')
    assert identity.holds
    assert identity.rhs == gamma3_service.diagonal_atom(2, (0, 1), ('K',)) * (2 * Symbol('g') - 2)
    assert identity.trace


def test_surface_second_chern_class():
    ctx = gamma3_service.context('surface')
    identity = _identity(ctx, 'c_top(T) = chi*z')
    assert identity.rhs == gamma3_service.exterior([('z',)], Symbol('chi'))


def test_surface_intersection_of_divisors():
    ctx = gamma3_service.context('surface')
    identity = _identity(ctx, 'D.Dp = deg(D.Dp)*z')
    assert identity.holds


@pytest.mark.parametrize('kind', ['curve', 'surface'])
def test_push_forwards_of_gamma3_vanish(kind):
    ctx = gamma3_service.context(kind)
    for pair in ('12', '13', '23'):
        assert _identity(ctx, f"p{pair}_* Gamma3 = 0").holds


@pytest.mark.parametrize('kind', ['curve', 'surface'])
def test_consequences_are_serializable(kind):
    consequences = gamma3_service.gamma3_consequences(gamma3_service.context(kind))
    assert all(c['holds'] for c in consequences)
    assert all(isinstance(c['identity'], str) for c in consequences)


@pytest.mark.parametrize('kind, model', [('curve', 'P^1'), ('surface', 'P^2')])
def test_validation_on_projective_space(kind, model):
    result = gamma3_service.validate_on_projective_space(gamma3_service.context(kind))
    assert result['model'] == model
    assert result['failures'] == []
    assert result['holds']


def test_diagonal_squared_is_pushed_top_chern_class():
    ctx = gamma3_service.context('curve')
    delta = gamma3_service.diagonal_atom(2, (0, 1))
    assert gamma3_service.multiply(ctx, delta, delta) == gamma3_service.diagonal_atom(2, (0, 1), ('c_top',))
