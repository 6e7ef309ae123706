import json
import time
from fractions import Fraction

import pytest

from src.config import Config
from src.models.errors import CensusMismatchError, OutOfRangeError
from src.models.report_models import CheckRecord, ReportDocument
from src.services.report_service import CheckTask, plain, report_service


def _boom():
    raise RuntimeError('boom')


def _out_of_range():
    raise OutOfRangeError('n must be at least 5')


def _bad_conversion():
    return {'value': int('not-a-number'), 'holds': True}


def _mismatch():
    raise CensusMismatchError('hdg = 13 but the bound is 12')


def _slow(value, delay):
    def run():
        time.sleep(delay)
        return {'value': value, 'holds': True}
    return run


def test_verdicts(no_timings):
    records = report_service.run_checks([
        CheckTask('ok', {'n': 4}, lambda: {'holds': True}),
        CheckTask('bool', {}, lambda: False),
        CheckTask('range', {'n': 3}, _out_of_range),
        CheckTask('mismatch', {}, _mismatch),
        CheckTask('crash', {}, _boom),
        CheckTask('conversion', {}, _bad_conversion),
    ])
    assert [r.verdict for r in records] == ['pass', 'fail', 'skipped', 'fail', 'fail', 'fail']
    assert records[2].reason == 'n must be at least 5'
    assert records[3].witness['error'] == 'CensusMismatchError'
    assert records[4].reason == 'boom'
    assert records[5].witness['error'] == 'ValueError'
    assert all(r.millis == 0 for r in records)


def test_parallel_runs_keep_submission_order(no_timings):
    tasks = [CheckTask(f"check{i}", {'i': i}, _slow(i, 0.05 * (4 - i))) for i in range(4)]
    records = report_service.run_checks(tasks, jobs=4)
    assert [r.name for r in records] == ['check0', 'check1', 'check2', 'check3']
    assert [r.witness['value'] for r in records] == [0, 1, 2, 3]


def test_exit_code():
    passing = ReportDocument('1.0.0', 'x', [CheckRecord('a', {}, 'pass'), CheckRecord('b', {}, 'skipped')])
    failing = ReportDocument('1.0.0', 'x', [CheckRecord('a', {}, 'pass'), CheckRecord('b', {}, 'fail')])
    assert passing.exit_code == 0
    assert failing.exit_code == 1


def test_unknown_verdict():
    with pytest.raises(ValueError):
        CheckRecord('a', {}, 'maybe')


def test_plain_values():
    assert plain({'x': Fraction(-5, 2), 'y': (1, 2)}) == {'x': '-5/2', 'y': [1, 2]}


def test_json_round_trip_reproduces_table(no_timings):
    document = report_service.build('mck-verify hodge cubic --n 4', [
        CheckTask('one', {'n': 4}, lambda: {'degree': Fraction(27), 'holds': True}),
        CheckTask('two', {'n': 2}, _out_of_range),
    ])
    text = report_service.render(document, 'json')
    parsed = report_service.parse(text)
    assert report_service.render(parsed, 'table') == report_service.render(document, 'table')
    assert json.loads(text)['checks'][0]['witness']['degree'] == '27'


def test_csv_header_and_cells(no_timings):
    document = report_service.build('x', [CheckTask('one', {'n': 4}, lambda: {'holds': True})])
    lines = report_service.render(document, 'csv').splitlines()
    assert lines[0] == 'name,inputs,verdict,witness,millis'
    assert lines[1] == 'one,"{""n"":4}",pass,"{""holds"":true}",0'


def test_table_summary_line(no_timings):
    document = report_service.build('x', [CheckTask('one', {}, lambda: True)])
    table = report_service.render(document, 'table')
    assert table.splitlines()[0] == f"mck-verify {Config.VERSION} :: x"
    assert table.splitlines()[-1] == '1 passed, 0 failed, 0 skipped'


def test_unknown_format():
    with pytest.raises(ValueError):
        report_service.render(ReportDocument('1.0.0', 'x'), 'xml')


def test_plain_value_error_fails_the_run(no_timings):
    document = report_service.build('x', [
        CheckTask('range', {'n': 2}, _out_of_range),
        CheckTask('conversion', {}, _bad_conversion),
    ])
    assert [r.verdict for r in document.checks] == ['skipped', 'fail']
    assert document.exit_code == 1
