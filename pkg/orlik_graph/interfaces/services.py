"""Command-line commands for the Orlik Graph context."""
import click

from orlik_graph.application.services import GraphApplicationService
from shared.interfaces.cli import emit_json, flag, handle_domain_errors

graph_service = GraphApplicationService()


@click.command('graph')
@click.argument('vertices')
@click.option('--edges', 'show_edges', is_flag=True, help='Also print the edge list "m1 m2 prime".')
@click.option('--alternating', is_flag=True, help='Treat VERTICES as k1,k2,... of an alternating Lambda sum.')
@click.option('--json', 'as_json', is_flag=True, help='Print the verdict record as JSON.')
@handle_domain_errors
def graph_command(vertices, show_edges, alternating, as_json):
    """Conditions (I), (II) and the strong condition for the set VERTICES."""
    report = graph_service.report(vertices, alternating=alternating, edges=show_edges)
    if as_json:
        emit_json(report)
        return

    click.echo(f"M: {','.join(map(str, report['M']))}")
    tp = ' '.join(f"T{p}={flag(ok)}" for p, ok in report['Tp'].items())
    click.echo(f"connected={flag(report['connected'])} S2={flag(report['S2'])} {tp}".rstrip())
    click.echo(
        f"condition_I={flag(report['condition_I'])} condition_II={flag(report['condition_II'])} "
        f"strong={flag(report['strong'])}"
    )
    for line in report.get('edges', []):
        click.echo(line)
