import click

from src.routes.common import CheckTask, emit, report_options
from src.services.fano_ring_service import fano_ring_service
from src.services.hodge_service import hodge_service

SUBCHECKS = ['hilbert', 'socle', 'recurrence', 'dims', 'degrees']


def hilbert(n: int):
    ctx = fano_ring_service.context(n)
    dims = fano_ring_service.taut_hilbert_function(ctx)
    computed = dims.as_list(ctx.dim + 1)
    expected = fano_ring_service.r_vector(n)
    return {
        'n': n,
        'computed': computed,
        'expected': expected,
        'palindromic': dims.is_palindromic(ctx.dim),
        'holds': computed == expected,
    }


def socle(n: int):
    relation = fano_ring_service.solve_socle_relation(n)
    witness = relation.to_dict()
    witness['holds'] = relation.leading_coefficient == 1
    return witness


def dims(n: int):
    rows = []
    for k in range(4 * n - 7):
        bound = fano_ring_service.dimRFxF_bound(k, n)
        count = hodge_service.hdg_count_FxF(k, n)
        rows.append({'k': k, 'dimRFxF': bound, 'hdg': count, 'equal': bound == count})
    single = [hodge_service.hdg_count_F(k, n) for k in range(2 * n - 3)]
    return {
        'n': n,
        'FxF': rows,
        'F': single,
        'holds': all(row['equal'] for row in rows) and single == fano_ring_service.r_vector(n),
    }


def degrees(n: int):
    ctx = fano_ring_service.context(n)
    return {'n': n, 'fano_class': str(ctx.fano_class), 'degrees': fano_ring_service.degree_table(ctx)}


CHECKS = {
    'hilbert': hilbert,
    'socle': socle,
    'recurrence': fano_ring_service.recurrence_check,
    'dims': dims,
    'degrees': degrees,
}


def fano_task(n: int, subcheck: str) -> CheckTask:
    return CheckTask(f"fano.{subcheck}", {'n': n}, lambda: CHECKS[subcheck](n))


@click.command('fano')
@click.option('--n', 'n', type=int, required=True, help='Dimension of the cubic hypersurface.')
@click.argument('subcheck', type=click.Choice(SUBCHECKS))
@report_options
def fano_cmd(n, subcheck, output_format, jobs):
    """Tautological ring of the Fano variety of lines."""
    emit([fano_task(n, subcheck)], output_format, jobs)
