"""
Command-line plumbing shared by every context

Error mapping for the commands: domain ``ValueError``s become a
``click.ClickException`` (exit 1), usage errors also exit 1, and a found
counterexample exits 3.
"""
import functools
import json
import logging
from typing import Any, Callable

import click

from shared.domain.errors import CrossCheckError

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_COUNTEREXAMPLE = 3


class OrlikGroup(click.Group):
    """Click group whose usage errors exit with status 1 instead of 2."""

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = EXIT_ERROR
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_ERROR
            raise


def handle_domain_errors(command: Callable) -> Callable:
    """Turn domain errors raised inside a command into ``ClickException``."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except CrossCheckError as e:
            LOGGER.error("Internal cross-check failed: %s", e)
            raise click.ClickException(f"internal error: {e}")
        except ValueError as e:
            raise click.ClickException(str(e))

    return wrapper


def emit_json(payload: Any) -> None:
    click.echo(json.dumps(payload, ensure_ascii=False, indent=2))


def flag(value: bool) -> str:
    """Lower-case boolean as printed in report lines."""
    return "true" if value else "false"
