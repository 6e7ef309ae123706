import click

from src.routes.common import CheckTask, emit, parse_int_list, report_options
from src.services.motive_service import motive_service


def parse_triple(ctx, param, value):
    if value is None:
        return None
    return parse_int_list(value, 3, '--triple')


def ck_axioms(n: int):
    return motive_service.verify_ck_axioms(motive_service.ck_projectors_cubic(n))


def self_duality(n: int):
    ps = motive_service.ck_projectors_cubic(n)
    return {'n': n, 'projectors': [p.label for p in ps], 'holds': motive_service.verify_self_duality(ps)}


def primitive(n: int):
    pi = motive_service.primitive_projector(motive_service.ck_projectors_cubic(n))
    return {'n': n, 'class': pi.tensor_string(), 'holds': True}


def small_diagonal(n: int):
    delta = motive_service.small_diagonal(motive_service.model(n))
    return {'n': n, 'terms': len(delta.terms), 'holds': True}


def obstruction(i: int, j: int, k: int, n: int):
    report = motive_service.mck_obstruction(i, j, k, n)
    if k == i + j:
        report['verdict'] = 'compatible' if report['holds'] else 'incompatible'
    else:
        report['verdict'] = 'vanishes' if report['vanishes'] else 'nonzero'
    return report


def mck_tasks(n: int):
    inputs = {'n': n}
    tasks = [
        CheckTask('mck.ck_axioms', inputs, lambda: ck_axioms(n)),
        CheckTask('mck.self_duality', inputs, lambda: self_duality(n)),
        CheckTask('mck.primitive_projector', inputs, lambda: primitive(n)),
        CheckTask('mck.small_diagonal', inputs, lambda: small_diagonal(n)),
        CheckTask('mck.relation_X2', inputs, lambda: motive_service.relation_X2(n)),
        CheckTask('mck.sweep', inputs, lambda: motive_service.mck_sweep(n)),
        CheckTask('mck.diagonal_self_intersection', inputs, lambda: motive_service.diagonal_self_intersection(n)),
        CheckTask('mck.chern', inputs, lambda: motive_service.chern_cubic(n)),
    ]
    tasks.extend(franchetta_tasks(n))
    tasks.append(CheckTask('mck.bd_pairing', inputs, lambda: motive_service.bd_pairing_check(n)))
    return tasks


def franchetta_tasks(n: int):
    tasks = []
    for power in (1, 2):
        for codim in range(n * power + 1):
            tasks.append(CheckTask(
                'mck.franchetta', {'n': n, 'power': power, 'codim': codim},
                lambda codim=codim, power=power: motive_service.franchetta_rank_check(codim, power, n)))
    return tasks


@click.command('mck')
@click.option('--n', 'n', type=click.IntRange(min=2), required=True, help='Dimension of the cubic hypersurface.')
@click.option('--triple', callback=parse_triple, help='Single obstruction i,j,k.')
@report_options
def mck_cmd(n, triple, output_format, jobs):
    """Multiplicative Chow-Kunneth checks for a cubic hypersurface."""
    if triple is not None:
        i, j, k = triple
        tasks = [CheckTask('mck.obstruction', {'n': n, 'triple': [i, j, k]}, lambda: obstruction(i, j, k, n))]
    else:
        tasks = mck_tasks(n)
    emit(tasks, output_format, jobs)
