import click

from src.config import Config
from src.models.gamma3_models import KINDS
from src.routes.common import CheckTask, emit, report_options
from src.routes.fano import fano_task
from src.routes.gamma3 import gamma3_tasks
from src.routes.hodge import hodge_tasks
from src.routes.mck import franchetta_tasks
from src.routes.schubert import golden_tasks, presentation_task
from src.services.motive_service import motive_service

MOTIVE_SWEEP = (3, 4, 5)


def acceptance_tasks(n_max: int):
    """The full acceptance suite, sweeping n up to n_max where a range is open"""
    tasks = list(golden_tasks())
    tasks.extend(presentation_task(n) for n in range(1, Config.SOCLE_N_MAX + 1))
    tasks.extend(fano_task(n, 'hilbert') for n in range(3, max(n_max, 10) + 1))
    for n in range(5, Config.SOCLE_N_MAX + 1):
        tasks.append(fano_task(n, 'socle'))
        tasks.append(fano_task(n, 'recurrence'))
    tasks.append(fano_task(4, 'degrees'))

    tasks.extend(hodge_tasks('cubic', 4))
    tasks.extend(hodge_tasks('kuechle-c7', 4))
    for n in range(3, n_max + 1):
        tasks.extend(hodge_tasks('fano-of-lines', n))
        tasks.append(fano_task(n, 'dims'))
    tasks.extend(hodge_tasks('census', 4)[:2])

    for n in MOTIVE_SWEEP:
        inputs = {'n': n}
        tasks.append(CheckTask('mck.ck_axioms', inputs, lambda n=n: motive_service.verify_ck_axioms(
            motive_service.ck_projectors_cubic(n))))
        tasks.append(CheckTask('mck.self_duality', inputs, lambda n=n: motive_service.verify_self_duality(
            motive_service.ck_projectors_cubic(n))))
        tasks.append(CheckTask('mck.sweep', inputs, lambda n=n: motive_service.mck_sweep(n)))
        tasks.extend(franchetta_tasks(n))
    for n in range(2, min(6, Config.MOTIVE_N_MAX) + 1):
        tasks.append(CheckTask('mck.diagonal_self_intersection', {'n': n},
                               lambda n=n: motive_service.diagonal_self_intersection(n)))
    for n in range(1, n_max + 1):
        tasks.append(CheckTask('mck.chern', {'n': n}, lambda n=n: motive_service.chern_cubic(n)))
    for n in range(3, n_max + 1):
        tasks.append(CheckTask('mck.bd_pairing', {'n': n}, lambda n=n: motive_service.bd_pairing_check(n)))

    for kind in KINDS:
        tasks.extend(gamma3_tasks(kind))
    return tasks


@click.command('verify-all')
@click.option('--n-max', type=click.IntRange(min=3), default=Config.N_MAX, show_default=True,
              help='Upper end of the n sweeps.')
@report_options
def verify_all_cmd(n_max, output_format, jobs):
    """Run the complete acceptance suite."""
    emit(acceptance_tasks(n_max), output_format, jobs)
