"""Command-line commands for the Scan context."""
import logging

import click

from scan.application.fixtures import FixtureApplicationService
from scan.application.services import ScanApplicationService
from scan.domain.entities import FAMILIES, MODES
from scan.infrastructure.config import build_scan_config
from shared.interfaces.cli import EXIT_COUNTEREXAMPLE, EXIT_ERROR, emit_json, handle_domain_errors

LOGGER = logging.getLogger(__name__)

scan_service = ScanApplicationService()


@click.command('scan')
@click.argument('config', required=False, type=click.Path(exists=True, dir_okay=False))
@click.option('--n', type=int, default=None, help='Number of variables.')
@click.option('--d-max', type=int, default=None, help='Degree bound (exhaustive mode).')
@click.option('--mu-max', type=int, default=None, help='Milnor number bound.')
@click.option('--mode', type=click.Choice(MODES), default=None)
@click.option('--family', type=click.Choice(FAMILIES), default=None, help='Family enumerated in family mode.')
@click.option('--a-max', type=int, default=None, help='Exponent bound for cycle, chain and fermat families.')
@click.option('--jobs', type=int, default=None, help='Worker processes (default ORLIK_JOBS or 1).')
@click.option('--out', type=click.Path(dir_okay=False), default=None, help='JSONL output file.')
@click.option('--resume/--no-resume', default=None, help='Skip systems already in the output file.')
@click.option(
    '--allow-exhaustive-n4/--no-allow-exhaustive-n4', default=None,
    help='Permit exhaustive mode for n >= 4 (mu <= 500 takes hours on one core).'
)
@click.option('--progress', is_flag=True, help='Show a progress bar on stderr.')
@click.pass_context
@handle_domain_errors
def scan_command(ctx, config, progress, **flags):
    """Scan weight systems and test the monodromy conjectures on each.

    Settings come from defaults, the environment, the optional key=value
    CONFIG file and the flags, later ones winning. Records go to the JSONL
    output file, the summary to stdout. Exits with status 3 when a
    counterexample was recorded.
    """
    cfg = build_scan_config(config, flags)
    try:
        summary = scan_service.run_scan(cfg, progress=progress)
    except OSError as e:
        raise click.ClickException(f"cannot write scan output {cfg.out}: {e}")

    emit_json(summary)
    if summary['counterexamples']:
        LOGGER.warning("%d counterexample(s) recorded in %s", summary['counterexamples'], cfg.out)
        ctx.exit(EXIT_COUNTEREXAMPLE)


@click.command('fixtures')
@click.option('--show-values', is_flag=True, help='Also print the computed value of every matching example.')
@click.pass_context
def fixtures_command(ctx, show_values):
    """Run every golden example and report differences."""
    results = FixtureApplicationService().run_fixtures()
    failed = 0
    for result in results:
        if result['ok']:
            click.echo(f"ok    {result['name']}")
        else:
            failed += 1
            click.echo(f"DIFF  {result['name']}: expected {result['expected']!r}, got {result['actual']!r}")
        if show_values and result['ok']:
            click.echo(f"      {result['actual']!r}")

    click.echo(f"{len(results) - failed}/{len(results)} examples match")
    if failed:
        ctx.exit(EXIT_ERROR)
