#!/usr/bin/env python3
"""
Graph Configuration Spaces - CLI Module

This module provides the command-line interface using Click.
"""

import json
import logging
import sys
from pathlib import Path
from typing import List, NoReturn, Optional, Tuple

import click
from rich.console import Console
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from .core.config import Config
from .core.error_handler import (
    EXIT_INPUT_ERROR, EXIT_MISMATCH, ConfigurationError, ErrorHandler, create_error_context, exit_code_for
)
from .core.logger import get_logger, setup_logging
from .core.runner import JobReport, JobRunner, parse_range
from .utils.version import get_version, get_version_string

# Set up logging
logger = get_logger(__name__)

# Results go to stdout; spinners share stderr with the logs
console = Console()
status_console = Console(stderr=True)


def create_error_summary_table(error_handler: ErrorHandler) -> Table:
    """Create a Rich table showing error summary"""
    summary = error_handler.get_error_summary()

    table = Table(title="Error Summary")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="magenta")

    table.add_row("Total Errors", str(summary.get("total_errors", 0)))

    if summary.get("severity_distribution"):
        for severity, count in summary["severity_distribution"].items():
            table.add_row(f"  {severity.title()} Severity", str(count))

    if summary.get("category_distribution"):
        for category, count in summary["category_distribution"].items():
            table.add_row(f"  {category.title()} Category", str(count))

    if summary.get("latest_error"):
        table.add_row("Latest Error ID", summary["latest_error"])

    return table


def display_error_report(error_handler: ErrorHandler, verbose: bool = False) -> None:
    """Display error report on stderr"""
    summary = error_handler.get_error_summary()
    if summary.get("total_errors", 0) == 0:
        return

    status_console.print(create_error_summary_table(error_handler))

    if verbose and error_handler.error_reports:
        status_console.print("\n[bold red]Detailed Error Reports:[/bold red]")
        for report in error_handler.error_reports[-5:]:
            suggestions = "\n".join(f"  - {s}" for s in report.suggestions) or "  none"
            panel = Panel(
                f"[bold]{report.error_type}[/bold]\n"
                f"[red]{report.message}[/red]\n"
                f"Severity: {report.severity.value}\n"
                f"Category: {report.category.value}\n"
                f"Component: {report.context.component or 'Unknown'}\n"
                f"File: {report.context.file_path or 'N/A'}\n"
                f"Suggestions:\n{suggestions}",
                title=f"Error {report.error_id}",
                border_style="red"
            )
            status_console.print(panel)


def _spinner() -> Progress:
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=status_console,
        transient=True
    )


def _fail(ctx: click.Context, error: Exception, operation: str, file_path: Optional[str] = None) -> NoReturn:
    error_handler: ErrorHandler = ctx.obj["error_handler"]
    logger.debug(f"{operation} failed with {type(error).__name__}")
    error_handler.handle_error(
        error,
        context=create_error_context(file_path=file_path, component="CLI", operation=operation)
    )
    status_console.print(f"[red]Error:[/red] {error}")
    display_error_report(error_handler, verbose=ctx.obj["verbose"])
    sys.exit(exit_code_for(error))


def _emit(ctx: click.Context, report: JobReport, json_out: Optional[str], timings: bool = False) -> None:
    config: Config = ctx.obj["config"]
    if json_out is None:
        return
    text = report.to_json(
        include_timings=timings or config.output.include_timings,
        indent=config.output.json_indent
    )
    if json_out == "-":
        click.echo(text, nl=False)
    else:
        path = Path(json_out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        status_console.print(f"Report written to {path}")


def _int_list(text: Optional[str], option: str) -> List[int]:
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected a comma separated list of integers, got '{text}'", param_hint=option)


def _components(values: Tuple[str, ...]) -> List[Tuple[int, int, int]]:
    components = []
    for value in values:
        numbers = _int_list(value, "--component")
        if len(numbers) != 3:
            raise click.BadParameter(f"expected b2,b1,mu, got '{value}'", param_hint="--component")
        components.append((numbers[0], numbers[1], numbers[2]))
    return components


def homology_table(report: JobReport) -> Table:
    table = Table(title=f"Homology of the {report.flavor} configuration space, n={report.particles}")
    table.add_column("Dimension", style="cyan", justify="right")
    table.add_column("Cells", justify="right")
    table.add_column("Betti", style="magenta", justify="right")
    table.add_column("Torsion")
    for k, cells in enumerate(report.cell_counts):
        betti = str(report.betti[k]) if k < len(report.betti) else "-"
        if report.torsion is None:
            torsion = "not computed"
        else:
            torsion = ", ".join(map(str, report.torsion[k])) if k < len(report.torsion) and report.torsion[k] else ""
        table.add_row(str(k), str(cells), betti, torsion)
    return table


def checks_table(report: JobReport) -> Table:
    table = Table(title="Formula checks")
    for column in ("n", "m", "Flavor", "Equation", "Formula", "Homology", "Verdict"):
        table.add_column(column)
    for check in report.checks:
        style = "red" if check.verdict == "mismatch" else "green"
        table.add_row(
            str(check.n), str(check.m), check.flavor, check.equation,
            str(check.formula_value), str(check.oracle_value), f"[{style}]{check.verdict}[/{style}]"
        )
    return table


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose logging')
@click.option('--config', '-c', type=click.Path(exists=True), help='Path to configuration file')
@click.option('--log-file', type=click.Path(), help='Path to log file')
@click.option('--log-level',
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']),
              default='WARNING', help='Logging level')
@click.version_option(version=get_version(), prog_name='graph-confspace')
@click.pass_context
def cli(ctx, verbose, config, log_file, log_level):
    """
    Graph Configuration Spaces - exact homology of particles on graphs.

    Builds the discrete configuration space of n particles on a graph as an
    integer cubical chain complex, computes its homology exactly, and checks
    closed-form Betti number formulas against it.
    """
    ctx.ensure_object(dict)

    try:
        config_obj = Config.from_file(config) if config else Config.from_env()
    except ConfigurationError as e:
        ctx.obj.update(error_handler=ErrorHandler(log_errors=False), verbose=verbose)
        _fail(ctx, e, "load configuration", config)
    level = "DEBUG" if verbose else log_level
    setup_logging(
        level=getattr(logging, level.upper()),
        log_file=log_file or config_obj.logging.file,
        log_format=config_obj.logging.format,
        max_size=config_obj.logging.max_size,
        backup_count=config_obj.logging.backup_count
    )

    error_handler = ErrorHandler(
        log_errors=True,
        save_reports=config_obj.errors.save_reports,
        reports_dir=config_obj.errors.reports_dir
    )
    ctx.obj['error_handler'] = error_handler
    ctx.obj['config'] = config_obj
    ctx.obj['runner'] = JobRunner(config_obj, error_handler=error_handler)
    ctx.obj['verbose'] = verbose

    if verbose:
        status_console.print(f"[bold blue]{get_version_string()}[/bold blue]")
        status_console.print(f"Log Level: {level}")


@cli.command()
@click.option('--graph', 'graph_file', required=True, type=click.Path(), help='Graph file')
@click.option('--particles', '-n', required=True, type=click.IntRange(min=0), help='Number of particles')
@click.option('--ordered', is_flag=True, help='Use the ordered configuration space')
@click.option('--max-dim', type=click.IntRange(min=0), help='Highest homology dimension to compute')
@click.option('--bigint', is_flag=True, help='Use arbitrary precision Smith form arithmetic')
@click.option('--rank-only', is_flag=True, help='Compute Betti numbers without torsion')
@click.option('--json', 'json_out', type=click.Path(), help='Write the JSON report here ("-" for stdout)')
@click.option('--budget', type=click.IntRange(min=1), help='Refuse complexes with more cells than this')
@click.option('--timings', is_flag=True, help='Include wall time in the JSON report')
@click.pass_context
def homology(ctx, graph_file, particles, ordered, max_dim, bigint, rank_only, json_out, budget, timings):
    """Compute the homology of a configuration space."""
    runner: JobRunner = ctx.obj['runner']
    try:
        with _spinner() as progress:
            progress.add_task(f"Computing homology for n={particles}...", total=None)
            report = runner.run_homology(
                graph_file, particles, ordered=ordered, max_dim=max_dim,
                bigint=bigint, rank_only=rank_only, budget=budget
            )
    except Exception as e:
        _fail(ctx, e, "homology", graph_file)

    if json_out != "-":
        console.print(homology_table(report))
        console.print(f"Euler characteristic: {report.euler_characteristic}")
    _emit(ctx, report, json_out, timings)


@cli.command()
@click.option('--variant', required=True,
              type=click.Choice(['star', 'two-particle', 'two-particle-multi', 'tree-pair', 'tree-recursive',
                                 'tree-closed', 'tree-general', 'single-edge']),
              help='Closed-form formula to evaluate')
@click.option('--stars', help='Comma separated hub degrees, e.g. 3,3,4')
@click.option('--graph', 'graph_file', type=click.Path(), help='Tree graph file, instead of --stars')
@click.option('--particles', '-n', required=True, type=click.IntRange(min=0), help='Number of particles')
@click.option('--order', '-m', type=click.IntRange(min=1), help='Homology order (defaults to the number of stars)')
@click.option('--component', multiple=True, help='b2,b1,mu of one split component (repeatable)')
@click.option('--betti-row', multiple=True, help='beta_1 of D_k for k = 0..n, comma separated (repeatable)')
@click.option('--b2', multiple=True, type=int, help='beta_2 of one component at n particles (repeatable)')
@click.option('--ordered', is_flag=True, help='Use the ordered variant of the formula')
@click.option('--json', 'json_out', type=click.Path(), help='Write the JSON report here ("-" for stdout)')
@click.pass_context
def formula(ctx, variant, stars, graph_file, particles, order, component, betti_row, b2, ordered, json_out):
    """Evaluate a closed-form Betti number formula."""
    runner: JobRunner = ctx.obj['runner']
    try:
        report = runner.run_formula(
            variant, particles, m=order,
            stars=_int_list(stars, "--stars"),
            graph_file=graph_file,
            components=_components(component),
            betti_rows=[_int_list(row, "--betti-row") for row in betti_row],
            b2=list(b2),
            ordered=ordered
        )
    except click.ClickException:
        raise
    except Exception as e:
        _fail(ctx, e, "formula", graph_file)

    if json_out != "-":
        for record in report.formulas:
            note = " (conditional on the injectivity conjecture)" if record.conjecture_conditional else ""
            console.print(f"{record.equation}: [bold magenta]{record.value}[/bold magenta]{note}")
    _emit(ctx, report, json_out)


@cli.command()
@click.option('--graph', 'graph_file', type=click.Path(), help='Graph file')
@click.option('--stars', help='Comma separated hub degrees of a tree, instead of --graph')
@click.option('--particles', '-n', required=True, help='Particle count or range A..B')
@click.option('--order', '-m', default='1..2', show_default=True, help='Homology order or range A..B')
@click.option('--ordered', is_flag=True, help='Verify ordered formulas')
@click.option('--bigint', is_flag=True, help='Use arbitrary precision Smith form arithmetic')
@click.option('--json', 'json_out', type=click.Path(), help='Write the JSON report here ("-" for stdout)')
@click.option('--budget', type=click.IntRange(min=1), help='Refuse complexes with more cells than this')
@click.option('--spans', is_flag=True, help='Also check that the Y-cycle basis spans H_m (unordered trees)')
@click.option('--timings', is_flag=True, help='Include wall time in the JSON report')
@click.pass_context
def verify(ctx, graph_file, stars, particles, order, ordered, bigint, json_out, budget, timings, spans):
    """Check closed-form formulas against exact homology."""
    runner: JobRunner = ctx.obj['runner']
    try:
        with _spinner() as progress:
            progress.add_task("Verifying formulas...", total=None)
            report = runner.run_verify(
                parse_range(particles), parse_range(order),
                graph_file=graph_file, stars=_int_list(stars, "--stars"),
                ordered=ordered, bigint=bigint, budget=budget, spans=spans
            )
    except click.ClickException:
        raise
    except Exception as e:
        _fail(ctx, e, "verify", graph_file)

    if json_out != "-":
        console.print(checks_table(report))
    _emit(ctx, report, json_out, timings)

    if report.has_mismatch:
        status_console.print("[bold red]At least one formula disagrees with the computed homology[/bold red]")
        sys.exit(EXIT_MISMATCH)


@cli.command(name="dump-complex")
@click.option('--graph', 'graph_file', required=True, type=click.Path(), help='Graph file')
@click.option('--particles', '-n', required=True, type=click.IntRange(min=0), help='Number of particles')
@click.option('--ordered', is_flag=True, help='Use the ordered configuration space')
@click.option('--json', 'json_out', default='-', show_default=True, type=click.Path(),
              help='Write the dump here ("-" for stdout)')
@click.option('--budget', type=click.IntRange(min=1), help='Refuse complexes with more cells than this')
@click.pass_context
def dump_complex(ctx, graph_file, particles, ordered, json_out, budget):
    """Write cells and boundary matrices as JSON."""
    runner: JobRunner = ctx.obj['runner']
    config: Config = ctx.obj['config']
    try:
        dump = runner.dump_complex(graph_file, particles, ordered=ordered, budget=budget)
    except Exception as e:
        _fail(ctx, e, "dump-complex", graph_file)

    text = json.dumps(dump, indent=config.output.json_indent) + "\n"
    if json_out == "-":
        click.echo(text, nl=False)
    else:
        path = Path(json_out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        status_console.print(f"Complex written to {path}")


def main() -> None:
    """Console entry point; usage errors exit with 1"""
    try:
        code = cli.main(standalone_mode=False)
    except click.exceptions.Abort:
        status_console.print("Aborted!")
        sys.exit(EXIT_INPUT_ERROR)
    except click.ClickException as e:
        e.show()
        sys.exit(EXIT_INPUT_ERROR)
    sys.exit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    main()
