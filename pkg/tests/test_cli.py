import json

import pytest

from src.services.hodge_service import hodge_service
from src.services.motive_service import motive_service


def _run(runner, cli, *args):
    return runner.invoke(cli, list(args))


def _checks(result):
    return json.loads(result.stdout)['checks']


@pytest.mark.parametrize('monomial, degree', [('g^8', '14'), ('g^6c', '5'), ('g^4*c^2', '2')])
def test_schubert_degrees(runner, cli, no_timings, monomial, degree):
    result = _run(runner, cli, 'schubert', '--m', '6', '--monomial', monomial, '--format', 'json')
    assert result.exit_code == 0
    assert _checks(result)[0]['witness']['degree'] == degree


def test_schubert_expansion(runner, cli):
    result = _run(runner, cli, 'schubert', '--m', '6', '--monomial', 'g^2', '--format', 'json')
    expansion = _checks(result)[0]['witness']['expansion']
    assert 's[2,0]' in expansion and 's[1,1]' in expansion


def test_schubert_class(runner, cli):
    result = _run(runner, cli, 'schubert', '--m', '6', '--class', '2,1', '--format', 'json')
    assert result.exit_code == 0
    assert _checks(result)[0]['witness']['expansion'] == 'g*c'


def test_schubert_class_before_m(runner, cli):
    result = _run(runner, cli, 'schubert', '--class', '4,4', '--m', '6', '--format', 'json')
    assert result.exit_code == 0
    assert _checks(result)[0]['verdict'] == 'pass'


@pytest.mark.parametrize('args', [
    ('--m', '6', '--monomial', 'x^3'),
    ('--m', '6', '--class', '2'),
    ('--m', '2', '--monomial', 'g'),
    ('--m', '6', '--class', '3,4'),
    ('--m', '6', '--class', '5,0'),
    ('--m', '6', '--class', '-1,0'),
    ('--class', '5,0', '--m', '6'),
])
def test_schubert_usage_errors(runner, cli, args):
    assert _run(runner, cli, 'schubert', *args).exit_code == 2


def test_fano_hilbert(runner, cli):
    result = _run(runner, cli, 'fano', '--n', '4', 'hilbert', '--format', 'json')
    assert result.exit_code == 0
    check = _checks(result)[0]
    assert check['verdict'] == 'pass'
    assert check['witness']['computed'] == [1, 1, 2, 1, 1]


def test_fano_socle_skipped_below_range(runner, cli):
    result = _run(runner, cli, 'fano', '--n', '4', 'socle', '--format', 'json')
    assert result.exit_code == 0
    check = _checks(result)[0]
    assert check['verdict'] == 'skipped'
    assert 'n >= 5' in check['witness']['reason']


def test_fano_socle(runner, cli):
    result = _run(runner, cli, 'fano', '--n', '7', 'socle', '--format', 'json')
    assert result.exit_code == 0
    assert _checks(result)[0]['witness']['leading_coefficient'] == '1'


def test_fano_dims(runner, cli):
    result = _run(runner, cli, 'fano', '--n', '4', 'dims', '--format', 'json')
    rows = _checks(result)[0]['witness']['FxF']
    assert len(rows) == 9
    assert all(row['equal'] for row in rows)


def test_mck_triple_vanishes(runner, cli):
    result = _run(runner, cli, 'mck', '--n', '4', '--triple', '2,2,0', '--format', 'json')
    assert result.exit_code == 0
    assert _checks(result)[0]['witness']['verdict'] == 'vanishes'


def test_mck_triple_in_degree(runner, cli):
    result = _run(runner, cli, 'mck', '--n', '4', '--triple', '2,2,4', '--format', 'json')
    assert _checks(result)[0]['witness']['verdict'] == 'compatible'


def test_mck_malformed_triple(runner, cli):
    assert _run(runner, cli, 'mck', '--n', '4', '--triple', '2,2').exit_code == 2


def test_mck_suite(runner, cli):
    result = _run(runner, cli, 'mck', '--n', '3', '--format', 'json')
    assert result.exit_code == 0
    assert {c['verdict'] for c in _checks(result)} == {'pass'}


def test_failing_check_sets_exit_code(runner, cli, monkeypatch):
    monkeypatch.setattr(motive_service, 'verify_self_duality', lambda ps: False)
    result = _run(runner, cli, 'mck', '--n', '2', '--format', 'json')
    assert result.exit_code == 1
    verdicts = {c['name']: c['verdict'] for c in _checks(result)}
    assert verdicts['mck.self_duality'] == 'fail'
    assert verdicts['mck.bd_pairing'] == 'skipped'


def test_internal_value_error_fails(runner, cli, monkeypatch):
    monkeypatch.setattr(hodge_service, 'census', lambda n: {'hdg': int('not-a-number')})
    result = _run(runner, cli, 'hodge', 'census', '--n', '4', '--format', 'json')
    assert result.exit_code == 1
    verdicts = {c['name']: c['verdict'] for c in _checks(result)}
    assert verdicts['hodge.census'] == 'fail'


def test_hodge_cubic(runner, cli):
    result = _run(runner, cli, 'hodge', 'cubic', '--n', '4', '--format', 'json')
    witness = _checks(result)[0]['witness']
    assert witness['middle_row'] == [0, 1, 21, 1, 0]
    assert witness['provenance'] == 'formula'


def test_hodge_kuechle(runner, cli):
    result = _run(runner, cli, 'hodge', 'kuechle-c7', '--format', 'json')
    witness = _checks(result)[0]['witness']
    assert (witness['h11'], witness['h22']) == (2, 22)


def test_hodge_fano_of_lines(runner, cli):
    result = _run(runner, cli, 'hodge', 'fano-of-lines', '--n', '4', '--format', 'json')
    witness = _checks(result)[0]['witness']
    assert witness['poincare_F'] == [1, 0, 23, 0, 276, 0, 23, 0, 1]
    assert witness['euler_characteristic_F'] == 324
    assert witness['provenance'] == 'GSV-solved'


def test_hodge_unknown_variety(runner, cli):
    assert _run(runner, cli, 'hodge', 'quartic').exit_code == 2


def test_gamma3_curve(runner, cli):
    result = _run(runner, cli, 'gamma3', 'curve', '--format', 'json')
    assert result.exit_code == 0
    assert [c['name'] for c in _checks(result)] == [
        'gamma3.cycle', 'gamma3.consequences', 'gamma3.projective_space']


def test_output_independent_of_jobs(runner, cli, no_timings):
    single = _run(runner, cli, 'hodge', 'census', '--n', '4', '--format', 'json', '--jobs', '1')
    pooled = _run(runner, cli, 'hodge', 'census', '--n', '4', '--format', 'json', '--jobs', '3')
    assert single.stdout == pooled.stdout


def test_command_echo(runner, cli):
    result = _run(runner, cli, 'fano', '--n', '4', 'hilbert', '--format', 'json')
    assert json.loads(result.stdout)['command'] == 'mck-verify fano --n 4 hilbert'


def test_csv_output(runner, cli):
    result = _run(runner, cli, 'hodge', 'kuechle-c7', '--format', 'csv')
    assert result.stdout.splitlines()[0] == 'name,inputs,verdict,witness,millis'


@pytest.mark.slow
def test_verify_all(runner, cli):
    result = _run(runner, cli, 'verify-all', '--n-max', '8', '--jobs', '4', '--format', 'json')
    assert result.exit_code == 0
    assert 'fail' not in {c['verdict'] for c in _checks(result)}
