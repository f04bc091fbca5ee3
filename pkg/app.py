"""Orlik Scan - command-line entry point.

Exact invariants of quasihomogeneous weight systems: the divisor of the
monodromy characteristic polynomial, exponents, the elementary-divisor sets
and the Orlik graph conditions on them, plus scans that test the monodromy
conjectures over whole families of weight systems.

Commands:
- divisor, check: one weight system
- family: cycle, chain, Fermat and Saito family members
- graph: conditions on a set of orders
- scan, fixtures: batch runs and the worked examples
"""
import click
from dotenv import load_dotenv

# Load environment variables from .env if present
load_dotenv()

from families.interfaces.services import family_command  # noqa: E402
from orlik_graph.interfaces.services import graph_command  # noqa: E402
from scan.interfaces.services import fixtures_command, scan_command  # noqa: E402
from shared.infrastructure.log_config import init_logging  # noqa: E402
from shared.interfaces.cli import OrlikGroup  # noqa: E402
from weight_systems.interfaces.services import check_command, divisor_command  # noqa: E402


@click.group(cls=OrlikGroup)
@click.option('-v', '--verbose', count=True, help='-v for INFO, -vv for DEBUG logging on stderr.')
def cli(verbose):
    """Orlik Scan - monodromy invariants of weight systems."""
    init_logging(verbose)


cli.add_command(divisor_command)
cli.add_command(check_command)
cli.add_command(family_command)
cli.add_command(graph_command)
cli.add_command(scan_command)
cli.add_command(fixtures_command)


def main():
    cli()


if __name__ == '__main__':
    main()
