"""Command-line commands for the Families context."""
import click

from families.application.services import FamilyApplicationService
from shared.interfaces.cli import emit_json, flag, handle_domain_errors

family_service = FamilyApplicationService()


@click.command('family')
@click.argument('spec')
@click.option('--seed', default=None, help="Root weight s0/t0 of a generalized chain.")
@click.option('--json', 'as_json', is_flag=True, help='Print the full report as JSON.')
@handle_domain_errors
def family_command(spec, seed, as_json):
    """Generate a family member from SPEC with its cross-checks.

    SPEC is one of cycle:a1,..,an  chain:a1,..,an  fermat:t1,..,tn  ts:k,q1,q2
    """
    report = family_service.generate(spec, seed)
    if as_json:
        emit_json(report)
        return

    click.echo(f"ws: {report['ws']} (canonical {report['canonical']})")
    click.echo(f"weights: {', '.join(report['weights'])}")
    click.echo(f"D = {report['D_lambda']}")
    click.echo(f"D = {report['D_psi']}")
    click.echo(f"mu={report['mu']} d_w={report['d_w']}")
    for key in ('s', 't', 'beta', 'alpha', 'b', 'mu_seq'):
        if key in report:
            click.echo(f"{key}: {' '.join(map(str, report[key]))}")
    if 'orlik_randell' in report:
        click.echo(f"orlik_randell={flag(report['orlik_randell'])}")
    if 'saito' in report:
        click.echo(f"saito eq53={report['saito']['eq53']} eq54={report['saito']['eq54']}")
