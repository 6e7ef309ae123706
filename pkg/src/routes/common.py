import click

from src.config import Config
from src.services.report_service import CheckTask, report_service

# Flags that change how a report is produced, not what it says
RUNTIME_PARAMS = ('output_format', 'jobs')


def report_options(command):
    """--format and --jobs, shared by every subcommand"""
    command = click.option(
        '--jobs', type=click.IntRange(min=1), default=Config.JOBS, show_default=True,
        help='Worker threads for independent checks.')(command)
    command = click.option(
        '--format', 'output_format', type=click.Choice(Config.OUTPUT_FORMATS),
        default=Config.OUTPUT_FORMAT, show_default=True, help='Report format.')(command)
    return command


def command_echo(ctx: click.Context) -> str:
    parts = [ctx.command_path]
    for param in ctx.command.params:
        value = ctx.params.get(param.name)
        if param.name in RUNTIME_PARAMS or value is None or value is False:
            continue
        if isinstance(param, click.Argument):
            parts.append(str(value))
            continue
        flag = param.opts[0]
        parts.append(flag if value is True else f"{flag} {value}")
    return " ".join(parts)


def emit(tasks, output_format: str, jobs: int):
    """Run the checks, print the report and exit 1 when any check failed"""
    ctx = click.get_current_context()
    document = report_service.build(command_echo(ctx), tasks, jobs)
    click.echo(report_service.render(document, output_format))
    ctx.exit(document.exit_code)


def parse_int_list(value: str, length: int, name: str):
    try:
        numbers = [int(part) for part in value.split(',')]
    except ValueError:
        raise click.BadParameter(f"expected {length} comma-separated integers, got {value!r}", param_hint=name)
    if len(numbers) != length:
        raise click.BadParameter(f"expected {length} comma-separated integers, got {value!r}", param_hint=name)
    return tuple(numbers)


__all__ = ['CheckTask', 'emit', 'parse_int_list', 'report_options']
