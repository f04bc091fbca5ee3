"""Command-line commands for the Weight Systems context."""
import click

from monodromy.application.services import MonodromyApplicationService
from shared.interfaces.cli import EXIT_COUNTEREXAMPLE, emit_json, flag, handle_domain_errors
from weight_systems.application.services import WeightSystemApplicationService

weight_system_service = WeightSystemApplicationService()
monodromy_service = MonodromyApplicationService()


@click.command('divisor')
@click.argument('ws')
@click.option('--exponents', 'show_exponents', is_flag=True, help='List every exponent with its multiplicity.')
@click.option('--json', 'as_json', is_flag=True, help='Print the full report as JSON.')
@handle_domain_errors
def divisor_command(ws, show_exponents, as_json):
    """Divisor D_w of the weight system WS ("v1,...,vn:d" or "s1/t1,...").

    Prints D_w in Psi and Lambda form, mu, d_w, d_mon and the exponents.
    """
    report = weight_system_service.describe(ws)
    if as_json:
        emit_json(report)
        return

    click.echo(f"ws: {report['ws']}")
    click.echo(f"weights: {', '.join(report['weights'])}")
    click.echo(f"D = {report['D_psi']}")
    click.echo(f"D = {report['D_lambda']}")
    d_mon = report['d_mon'] if report['d_mon'] is not None else 'undefined'
    click.echo(f"mu={report['mu']} d_w={report['d_w']} d_mon={d_mon}")
    click.echo("L: " + ' '.join(f"{k}:{value}" for k, value in report['lefschetz'].items()))

    exponents = report['exponents']
    if exponents is None:
        click.echo("exponents: rho not a polynomial")
    elif show_exponents:
        click.echo("exponents: " + ' '.join(f"{alpha}:{c}" for alpha, c in exponents.items()))
    else:
        first, last = next(iter(exponents)), next(reversed(exponents))
        click.echo(f"exponents: {len(exponents)} distinct in [{first}, {last}]")


@click.command('check')
@click.argument('ws')
@click.option('--json', 'as_json', is_flag=True, help='Print the full report as JSON.')
@click.pass_context
@handle_domain_errors
def check_command(ctx, ws, as_json):
    """Solvability conditions and conjecture verdicts of WS.

    Exits with status 3 when a conjecture fails.
    """
    conditions = weight_system_service.conditions(ws)
    verdicts = monodromy_service.verdicts(ws)

    if as_json:
        emit_json({**conditions, **verdicts})
    else:
        c = conditions['conditions']
        click.echo(f"ws: {conditions['ws']}")
        click.echo(
            f"C1={flag(c['c1'])} C1'={flag(c['c1_prime'])} C2={flag(c['c2'])} "
            f"C1bar={flag(c['c1_bar'])} C1'bar={flag(c['c1_prime_bar'])} C2bar={flag(c['c2_bar'])}"
        )
        for failure in conditions['witness_failures']:
            click.echo(f"  fails for J={{{','.join(map(str, failure['J']))}}}: {failure['detail']}")

        c14 = verdicts['conjecture14']
        click.echo(f"conjecture14={c14['verdict']} sets={len(c14['sets'])}")
        for j, (M, ok, strong) in enumerate(zip(c14['sets'], c14['condition_I'], c14['strong']), start=1):
            click.echo(f"  M{j} = {','.join(map(str, M))}: condition_I={flag(ok)} strong={flag(strong)}")
        saito = verdicts['saito']
        click.echo(f"saito eq53={saito['eq53']} eq54={saito['eq54']}")

    if verdicts['counterexample']:
        ctx.exit(EXIT_COUNTEREXAMPLE)
