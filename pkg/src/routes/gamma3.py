import click

from src.models.gamma3_models import KINDS
from src.routes.common import CheckTask, emit, report_options
from src.services.gamma3_service import gamma3_service


def cycle(kind: str):
    ctx = gamma3_service.context(kind)
    gamma = gamma3_service.gamma3(ctx)
    return {'context': ctx.to_dict(), 'gamma3': str(gamma), 'terms': len(gamma.terms)}


def consequences(kind: str):
    identities = gamma3_service.gamma3_consequences(gamma3_service.context(kind))
    return {'identities': identities, 'holds': all(i['holds'] for i in identities)}


def gamma3_tasks(kind: str):
    inputs = {'kind': kind}
    return [
        CheckTask('gamma3.cycle', inputs, lambda: cycle(kind)),
        CheckTask('gamma3.consequences', inputs, lambda: consequences(kind)),
        CheckTask('gamma3.projective_space', inputs,
                  lambda: gamma3_service.validate_on_projective_space(gamma3_service.context(kind))),
    ]


@click.command('gamma3')
@click.argument('kind', type=click.Choice(KINDS))
@report_options
def gamma3_cmd(kind, output_format, jobs):
    """Consequences of the vanishing modified small diagonal."""
    emit(gamma3_tasks(kind), output_format, jobs)
