"""
Skein Lasagna Calculator

Command-line entry point: one subcommand per computation plus golden-table
regression.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import click

sys.path.insert(0, str(Path(__file__).parent / "src"))

from cli import FORMATS, RunConfig, golden_configs, render, run  # noqa: E402
from colimit import NEGATIVE, P_SIGNS, POSITIVE  # noqa: E402
from center import SIGN_CONVENTIONS  # noqa: E402
from core import LasagnaError, OracleDisagreementError, configure_logging, load_settings  # noqa: E402
from evaluation import RouteEvaluator  # noqa: E402

logger = logging.getLogger("lasagna")


def _fail(ctx: click.Context, error: LasagnaError) -> None:
    logger.error(f"{type(error).__name__}: {error.message}")
    click.echo(json.dumps(error.to_record(), sort_keys=True, default=str), err=True)
    ctx.exit(error.exit_code)


def _execute(ctx: click.Context, subcommand: str, **params: Any) -> None:
    """Build the RunConfig, run it, emit the report and map failures to exit codes."""
    options: Dict[str, Any] = ctx.obj
    settings = options['settings']
    try:
        config = RunConfig(
            subcommand,
            output_format=options['output_format'],
            oracle=options['oracle'],
            allow_unstable=options['allow_unstable'],
            progress=options['progress'],
            **params,
        )
        evaluator = RouteEvaluator(settings.golden_dir)
        report = run(config, settings, evaluator)
    except LasagnaError as error:
        _fail(ctx, error)
        return

    text = render(report, config.output_format)
    out: Optional[str] = options['out']
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        with open(out, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        logger.info(f"Report written to {out}")
    else:
        click.echo(text, nl=False)

    verdict = report.get('oracle_agreement')
    if verdict is not None:
        try:
            evaluator.require_agreement(verdict)
        except OracleDisagreementError as error:
            _fail(ctx, error)


@click.group()
@click.option('--format', 'output_format', type=click.Choice(FORMATS), default='json',
              show_default=True, help='Report format.')
@click.option('--out', type=click.Path(dir_okay=False), default=None,
              help='Write the report to a file instead of stdout.')
@click.option('--log-level', default=None, help='DEBUG, INFO, WARNING or ERROR.')
@click.option('--progress', is_flag=True, help='Show progress bars on stderr.')
@click.option('--allow-unstable', is_flag=True, help='Report degrees outside the certified window.')
@click.option('--oracle', is_flag=True, help='Cross-check against the independent route.')
@click.pass_context
def cli(ctx: click.Context, output_format: str, out: Optional[str], log_level: Optional[str],
        progress: bool, allow_unstable: bool, oracle: bool) -> None:
    """Skein lasagna modules of S2xD2, D(p) and CP2 from cabled Khovanov-Rozansky homology."""
    settings = load_settings()
    configure_logging(log_level or settings.log_level)
    ctx.obj = {
        'settings': settings,
        'output_format': output_format,
        'out': out,
        'progress': progress,
        'allow_unstable': allow_unstable,
        'oracle': oracle,
    }


@cli.command()
@click.option('--N', 'N', type=int, default=2, show_default=True, help='Rank of gl_N.')
@click.option('--alpha', type=int, default=0, show_default=True, help='Level of the 2-sphere class.')
@click.option('--q-max', type=int, default=6, show_default=True, help='Report degrees down to -q_max.')
@click.option('--r-max', type=int, default=None, help='Oracle truncation (default: certified bound).')
@click.option('--local-unlink', type=int, default=0, show_default=True,
              help='Components of a local unlink in the interior.')
@click.pass_context
def s2d2(ctx: click.Context, N: int, alpha: int, q_max: int, r_max: Optional[int],
         local_unlink: int) -> None:
    """Skein lasagna module of S2xD2."""
    _execute(ctx, 's2d2', N=N, alpha=(alpha,), q_max=q_max, r_max=r_max,
             local_unlink=local_unlink)


@cli.command()
@click.option('--N', 'N', type=int, default=2, show_default=True, help='Rank of gl_N.')
@click.option('--alpha', type=int, multiple=True, default=(0, 0), show_default=True,
              help='Level per component (repeat once per component).')
@click.option('--q-max', type=int, default=4, show_default=True, help='Report degrees down to -q_max.')
@click.option('--r-max', type=int, default=None, help='Oracle truncation (default: certified bound).')
@click.pass_context
def unlink(ctx: click.Context, N: int, alpha: tuple, q_max: int, r_max: Optional[int]) -> None:
    """Boundary connected sum of copies of S2xD2 (0-framed unlink)."""
    _execute(ctx, 'unlink', N=N, alpha=tuple(alpha), q_max=q_max, r_max=r_max)


@cli.command()
@click.option('--p-sign', type=click.Choice(P_SIGNS), default=NEGATIVE, show_default=True)
@click.option('--n-max', type=int, default=4, show_default=True, help='Truncation level.')
@click.option('--j-min', type=int, default=-8, show_default=True)
@click.option('--j-max', type=int, default=0, show_default=True)
@click.option('--sign-convention', type=click.Choice(SIGN_CONVENTIONS), default=SIGN_CONVENTIONS[0],
              show_default=True)
@click.pass_context
def dp(ctx: click.Context, p_sign: str, n_max: int, j_min: int, j_max: int,
       sign_convention: str) -> None:
    """D2-bundle over S2 with Euler number p (gl_2)."""
    _execute(ctx, 'dp', p_sign=p_sign, n_max=n_max, j_min=j_min, j_max=j_max,
             sign_convention=sign_convention)


@cli.command()
@click.option('--bar', is_flag=True, help='Orientation-reversed CP2.')
@click.option('--n-max', type=int, default=4, show_default=True, help='Truncation level.')
@click.option('--j-min', type=int, default=-8, show_default=True)
@click.option('--j-max', type=int, default=0, show_default=True)
@click.option('--sign-convention', type=click.Choice(SIGN_CONVENTIONS), default=SIGN_CONVENTIONS[0],
              show_default=True)
@click.pass_context
def cp2(ctx: click.Context, bar: bool, n_max: int, j_min: int, j_max: int,
        sign_convention: str) -> None:
    """Complex projective plane (gl_2)."""
    _execute(ctx, 'cp2', p_sign=NEGATIVE if bar else POSITIVE, n_max=n_max, j_min=j_min,
             j_max=j_max, sign_convention=sign_convention)


@cli.command()
@click.option('--n', 'n', type=int, default=2, show_default=True, help='Arc ring index.')
@click.pass_context
def center(ctx: click.Context, n: int) -> None:
    """Graded ranks and admissible basis of the arc-ring center."""
    _execute(ctx, 'center', n=n)


@cli.command()
@click.option('--dir', 'golden_dir', type=click.Path(file_okay=False), default=None,
              help='Golden table directory (default: LASAGNA_GOLDEN_DIR).')
@click.option('--update', is_flag=True, help='Rewrite the golden tables.')
@click.pass_context
def golden(ctx: click.Context, golden_dir: Optional[str], update: bool) -> None:
    """Compare every golden case against its stored table, or rewrite them."""
    settings = ctx.obj['settings']
    evaluator = RouteEvaluator(golden_dir or settings.golden_dir)
    drift = []
    try:
        for name, config in golden_configs().items():
            report = run(config, settings, evaluator)
            if update:
                evaluator.write_golden(name, report)
                click.echo(f"{name}: written")
                continue
            changes = evaluator.golden_drift(name, report)
            drift.extend(changes)
            click.echo(f"{name}: {'DRIFT' if changes else 'ok'}")
    except LasagnaError as error:
        _fail(ctx, error)
        return
    if drift:
        _fail(ctx, OracleDisagreementError(f"{len(drift)} golden differences", {'drift': drift}))


if __name__ == "__main__":
    cli()
