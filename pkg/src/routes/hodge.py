import click

from src.config import Config
from src.models.hodge_models import Parity
from src.routes.common import CheckTask, emit, report_options
from src.services.hodge_service import hodge_service


def cubic(n: int):
    diamond = hodge_service.hypersurface_diamond(3, n)
    witness = diamond.to_dict()
    witness.update({
        'n': n,
        'middle_row': diamond.row(n),
        'primitive': hodge_service.hypersurface_hodge(3, n),
        'provenance': 'formula',
        'holds': diamond.is_symmetric(),
    })
    return witness


def kuechle_c7():
    diamond = hodge_service.kuechle_c7_diamond()
    witness = diamond.to_dict()
    witness.update({'h11': diamond.h(1, 1), 'h22': diamond.h(2, 2), 'provenance': 'formula'})
    return witness


def fano_poincare(n: int):
    witness = hodge_service.verify_gsv_identity(n)
    witness['provenance'] = 'GSV-solved'
    witness['decomposition'] = hodge_service.gs_fano_decomposition(n).to_dict()
    return witness


def census(n: int):
    return hodge_service.census(n)


def atom_table(parity: Parity):
    table = hodge_service.hdg_atom_table(parity)
    return {'parity': parity.value, 'hdg': {atom.value: count for atom, count in table.items()}}


def hodge_tasks(variety: str, n: int):
    if variety == 'cubic':
        return [CheckTask('hodge.cubic', {'n': n}, lambda: cubic(n))]
    if variety == 'kuechle-c7':
        return [CheckTask('hodge.kuechle-c7', {}, kuechle_c7)]
    if variety == 'fano-of-lines':
        return [
            CheckTask('hodge.fano-of-lines', {'n': n}, lambda: fano_poincare(n)),
            CheckTask('hodge.fano-h-n-minus-2', {'n': n},
                      lambda: hodge_service.fano_h_n_minus_2_decomposition(n)),
        ]
    if variety == 'census':
        return [
            CheckTask('hodge.atoms', {'parity': Parity.EVEN.value}, lambda: atom_table(Parity.EVEN)),
            CheckTask('hodge.atoms', {'parity': Parity.ODD.value}, lambda: atom_table(Parity.ODD)),
            CheckTask('hodge.census', {'n': n}, lambda: census(n)),
        ]
    raise click.UsageError(f"unknown variety {variety!r}")


@click.command('hodge')
@click.argument('variety', type=click.Choice(Config.VARIETIES))
@click.option('--n', 'n', type=int, default=4, show_default=True, help='Dimension of the cubic hypersurface.')
@report_options
def hodge_cmd(variety, n, output_format, jobs):
    """Hodge diamonds, Betti numbers and Hodge class counts."""
    emit(hodge_tasks(variety, n), output_format, jobs)
