import click

from src.config import Config


def trace(tag: str, message: str):
    """Write a tagged debug line to stderr when MCK_DEBUG is set."""
    if not Config.DEBUG:
        return
    click.echo(f"[{tag}] {message}", err=True)
