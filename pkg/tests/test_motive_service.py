from fractions import Fraction

import pytest

from src.config import Config
from src.models.errors import ModelMismatchError
from src.models.exact_matrix import ExactMatrix
from src.models.motive_models import CohModel, CorrClass, koszul_sign
from src.services.linear_algebra_service import linear_algebra_service
from src.services.motive_service import motive_service


def test_koszul_sign():
    assert koszul_sign([1, 1]) == -1
    assert koszul_sign([1, 2, 1]) == -1
    assert koszul_sign([1, 1, 1]) == -1
    assert koszul_sign([2, 4]) == 1


def test_model_size():
    model = motive_service.model(4)
    assert model.size == 5 + 22
    assert model.integral(4) == 3


def test_odd_model_needs_even_primitive_rank():
    with pytest.raises(ValueError):
        CohModel(3, 3)


def test_model_respects_configured_bound(monkeypatch):
    monkeypatch.setattr(Config, 'MOTIVE_N_MAX', 3)
    with pytest.raises(ValueError):
        motive_service.model(4)


@pytest.mark.parametrize('n', [2, 3, 4])
def test_ck_axioms(n):
    result = motive_service.verify_ck_axioms(motive_service.ck_projectors_cubic(n))
    assert result['complete']
    assert result['failures'] == []
    assert result['holds']


@pytest.mark.parametrize('n', [3, 4, 5])
def test_self_duality(n):
    assert motive_service.verify_self_duality(motive_service.ck_projectors_cubic(n))


def test_perturbed_projectors_are_caught():
    ps = motive_service.perturbed_projectors(4)
    result = motive_service.verify_ck_axioms(ps)
    assert not result['holds']
    assert any(f['axiom'] == 'orthogonality' for f in result['failures'])
    assert not motive_service.verify_self_duality(ps)


def test_diagonal_is_the_identity_correspondence():
    model = motive_service.model(3)
    delta = motive_service.diagonal(model)
    ps = motive_service.ck_projectors_cubic(3)
    for pi in ps:
        assert motive_service.compose(delta, pi) == pi
        assert motive_service.compose(pi, delta) == pi


def test_transpose_is_an_involution():
    model = motive_service.model(3)
    delta = motive_service.diagonal(model)
    assert motive_service.transpose(motive_service.transpose(delta)) == delta
    assert motive_service.transpose(delta) == delta


def test_product_needs_matching_arity():
    model = motive_service.model(2)
    with pytest.raises(ModelMismatchError):
        motive_service.product(motive_service.diagonal(model), motive_service.unit(model, 3))


def test_primitive_projector():
    pi = motive_service.primitive_projector(motive_service.ck_projectors_cubic(4))
    assert isinstance(pi, CorrClass)
    assert pi.label == 'pi^n_prim'


@pytest.mark.parametrize('n', [3, 4])
def test_relation_X2(n):
    assert motive_service.relation_X2(n)['holds']


@pytest.mark.parametrize('n', range(2, 7))
def test_diagonal_self_intersection_is_euler_characteristic(n):
    result = motive_service.diagonal_self_intersection(n)
    assert result['holds']


@pytest.mark.parametrize('n, euler', [
    (1, 0), (2, 9), (3, -6), (4, 27), (5, -36), (6, 93), (7, -162), (8, 351),
])
def test_chern_cubic(n, euler):
    result = motive_service.chern_cubic(n)
    assert result['euler_characteristic'] == euler
    assert result['holds']


def test_small_diagonal_realizes_cup_product():
    delta = motive_service.small_diagonal(motive_service.model(3))
    assert delta.arity == 3
    assert not delta.is_zero()


def test_obstruction_vanishes_off_degree():
    result = motive_service.mck_obstruction(2, 2, 0, 4)
    assert result['vanishes']
    assert result['symmetrized_vanishes']
    assert result['holds']


def test_obstruction_compatible_in_degree():
    result = motive_service.mck_obstruction(2, 2, 4, 4)
    assert result['compatible']
    assert result['holds']


def test_obstruction_index_range():
    with pytest.raises(ValueError):
        motive_service.mck_obstruction(0, 0, 9, 4)


def test_mck_sweep_n3():
    result = motive_service.mck_sweep(3)
    assert result['triples'] == 7 ** 3
    assert result['failures'] == []


@pytest.mark.slow
@pytest.mark.parametrize('n', [4, 5])
def test_mck_sweep(n):
    assert motive_service.mck_sweep(n)['holds']


def test_franchetta_with_diagonal_relations():
    result = motive_service.franchetta_rank_check(5, 2, 4)
    assert len(result['generators']) == 6
    assert result['kernel_dimension'] == 2
    assert result['holds']


def test_franchetta_middle_codimension():
    result = motive_service.franchetta_rank_check(4, 2, 4)
    assert result['rank'] == 6
    assert result['holds']


@pytest.mark.parametrize('n', [3, 4, 5])
def test_franchetta_all_codimensions(n):
    for power in (1, 2):
        for codim in range(n * power + 1):
            assert motive_service.franchetta_rank_check(codim, power, n)['holds'], (n, power, codim)


def test_franchetta_rejects_bad_power():
    with pytest.raises(ValueError):
        motive_service.franchetta_rank_check(1, 3, 3)


@pytest.mark.parametrize('n', [3, 4, 5, 6])
def test_bd_pairing_check(n):
    result = motive_service.bd_pairing_check(n)
    assert result['holds']
    assert result['steps'][-1]['step'] == 'beta2*g^(n-1) = 0'


def test_decomposable_scalar():
    model = motive_service.model(2)
    cls = motive_service.decomposable(model, (1, 1), Fraction(1, 3))
    assert cls.terms == {(1, 1): Fraction(1, 3)}


def _sample_classes(n):
    model = motive_service.model(n)
    ps = motive_service.ck_projectors_cubic(n)
    return [
        motive_service.diagonal(model),
        ps[0],
        ps[n],
        motive_service.primitive_projector(ps),
        motive_service.perturbed_projectors(n)[0],
        motive_service.decomposable(model, (1, n - 1), Fraction(2, 3)),
        motive_service.decomposable(model, (n, 1)),
        CorrClass(model, 2, {(n + 1, n + 2): 1, (n + 2, n + 1): Fraction(-1, 2)}),
    ]


@pytest.mark.parametrize('n', [3, 4])
def test_realization_is_functorial(n):
    classes = _sample_classes(n)
    for f in classes:
        for g in classes:
            composed = motive_service.to_endomorphism(motive_service.compose(f, g))
            expected = motive_service.to_endomorphism(f).matmul(motive_service.to_endomorphism(g))
            assert composed == expected, (f.label, g.label)


@pytest.mark.parametrize('n', [3, 4])
def test_endomorphism_round_trip(n):
    model = motive_service.model(n)
    for f in _sample_classes(n):
        assert motive_service.from_endomorphism(model, motive_service.to_endomorphism(f)) == f
    assert motive_service.to_endomorphism(motive_service.diagonal(model)) == ExactMatrix.identity(model.size)


@pytest.mark.parametrize('n', [3, 4])
def test_transpose_reverses_composition(n):
    classes = _sample_classes(n)
    transpose = motive_service.transpose
    for f in classes:
        for g in classes:
            assert transpose(motive_service.compose(f, g)) == motive_service.compose(transpose(g), transpose(f)), (
                f.label, g.label)


@pytest.mark.parametrize('n', [3, 4])
def test_intersection_form_is_perfect(n):
    model = motive_service.model(n)
    form = model.pairing_matrix()
    inverse = ExactMatrix.from_rows(
        [[model.inverse_pairing(k, i) for i in range(model.size)] for k in range(model.size)], model.size)
    assert linear_algebra_service.rank(form) == model.size
    assert form.matmul(inverse) == ExactMatrix.identity(model.size)
    for i in range(model.size):
        k, coeff = model.dual(i)
        assert model.pairing(i, k) * coeff == 1
