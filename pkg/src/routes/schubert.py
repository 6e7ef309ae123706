import re

import click

from src.models.exact_matrix import format_fraction
from src.models.schubert_models import SchubertElement, WeightedGCPoly
from src.routes.common import CheckTask, emit, parse_int_list, report_options
from src.services.schubert_service import schubert_service

MONOMIAL = re.compile(r'^(g(?:\^(\d+))?)?\*?(c(?:\^(\d+))?)?$')


def parse_monomial(ctx, param, value):
    """'g^6c', 'g^4*c^2', 'g', 'c^3' or '1' -> (a, b)"""
    if value is None:
        return None
    text = value.replace(' ', '')
    if text == '1':
        return 0, 0
    match = MONOMIAL.match(text)
    if not text or not match:
        raise click.BadParameter(f"expected a monomial like g^6c, got {value!r}")
    a = int(match.group(2) or 1) if match.group(1) else 0
    b = int(match.group(4) or 1) if match.group(3) else 0
    return a, b


def parse_class(ctx, param, value):
    """'a,b' with m-2 >= a >= b >= 0; --m is eager so it is already parsed"""
    if value is None:
        return None
    a, b = parse_int_list(value, 2, '--class')
    m = ctx.params['m']
    if not m - 2 >= a >= b >= 0:
        raise click.BadParameter(f"expected m-2 >= a >= b >= 0 with m={m}, got {value!r}")
    return a, b


def monomial_task(a: int, b: int, m: int) -> CheckTask:
    label = str(WeightedGCPoly.monomial(a, b))

    def run():
        element = schubert_service.gc_monomial_to_schubert(a, b, m)
        witness = {
            'monomial': label,
            'codegree': a + 2 * b,
            'expansion': str(element),
            'terms': element.to_dict()['terms'],
        }
        if a + 2 * b == 2 * (m - 2):
            witness['degree'] = format_fraction(schubert_service.degree_G(element))
        return witness

    return CheckTask('schubert.monomial', {'m': m, 'monomial': label}, run)


def class_task(a: int, b: int, m: int) -> CheckTask:
    def run():
        poly = schubert_service.schubert_class_as_gc(a, b, m)
        back = schubert_service.evaluate(poly, m)
        return {
            'class': f"s[{a},{b}]",
            'expansion': str(poly),
            'holds': back == SchubertElement.single(a, b, m),
        }

    return CheckTask('schubert.class', {'m': m, 'class': [a, b]}, run)


def degree_table_task(m: int) -> CheckTask:
    def run():
        top = 2 * (m - 2)
        rows = []
        for a, b in WeightedGCPoly.monomials_of_degree(top):
            element = schubert_service.gc_monomial_to_schubert(a, b, m)
            rows.append({'monomial': str(WeightedGCPoly.monomial(a, b)),
                         'degree': format_fraction(schubert_service.degree_G(element))})
        return {'m': m, 'degrees': rows, 'catalan': schubert_service.catalan(m - 2)}

    return CheckTask('schubert.degrees', {'m': m}, run)


def presentation_task(n: int) -> CheckTask:
    return CheckTask('schubert.presentation', {'n': n}, lambda: schubert_service.verify_presentation(n))


def golden_tasks(m: int = 6):
    """deg g^8 = 14, g^6 c = 5, g^4 c^2 = 2 on Gr(2,6)"""
    expected = {(8, 0): '14', (6, 1): '5', (4, 2): '2'}

    def check(a, b, value):
        def run():
            degree = format_fraction(schubert_service.degree_G(schubert_service.gc_monomial_to_schubert(a, b, m)))
            return {'degree': degree, 'expected': value, 'holds': degree == value}
        return CheckTask('schubert.golden', {'m': m, 'monomial': str(WeightedGCPoly.monomial(a, b))}, run)

    return [check(a, b, value) for (a, b), value in expected.items()]


@click.command('schubert')
@click.option('--m', 'm', type=click.IntRange(min=3), required=True, is_eager=True, help='Ambient Gr(2, m).')
@click.option('--monomial', callback=parse_monomial, help='Monomial g^a c^b to expand.')
@click.option('--class', 'schubert_class', callback=parse_class, help='Schubert class a,b to write in g, c.')
@click.option('--presentation', is_flag=True, help='Also verify the presentation of CH*(Gr(2, m)).')
@report_options
def schubert_cmd(m, monomial, schubert_class, presentation, output_format, jobs):
    """Schubert expansions and degrees on Gr(2, m)."""
    tasks = []
    if monomial is not None:
        tasks.append(monomial_task(*monomial, m))
    if schubert_class is not None:
        tasks.append(class_task(*schubert_class, m))
    if not tasks:
        tasks.append(degree_table_task(m))
    if presentation:
        tasks.append(presentation_task(m - 2))
    emit(tasks, output_format, jobs)
