#!/usr/bin/env python3
"""
Command-line interface for the spectral sequence engine.

Exit status: 0 on success, 1 when a verified property has a counterexample,
2 when an input is invalid.
"""

import os
import sys
import time
import json
import click
import logging
from functools import wraps

# Add the parent directory to the path so we can import the src package
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src import __version__
from src.campaign import THEOREMS
from src.config import Config, OUTPUT_FORMATS
from src.exceptions import SpectralSequenceError
from src.formats import dumps, save_file, serialize_filtered_complex
from src.indexing import all_conventions
from src.output import OutputFormatter
from src.pages import METHODS
from src.service import SpectralSequenceService
from src.utils import format_duration

logger = logging.getLogger(__name__)

EXIT_VIOLATION = 1
EXIT_INVALID = 2


def print_version(ctx, param, value):
    """Print version information and exit."""
    if not value or ctx.resilient_parsing:
        return
    click.echo(f"specseq v{__version__}")
    ctx.exit()


def invalid_input_exits(command):
    """Report domain and input errors on stderr and exit with status 2."""
    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except SpectralSequenceError as e:
            click.echo(click.style(f"Invalid input: {e}", fg="red"), err=True)
            for violation in getattr(e, "violations", [])[:20]:
                click.echo(f"  {violation}", err=True)
            degree = getattr(e, "degree", None)
            if degree is not None:
                click.echo(f"  offending degree: {degree}", err=True)
        except (KeyError, ValueError, OSError) as e:
            click.echo(click.style(f"Invalid input: {e}", fg="red"), err=True)
        sys.exit(EXIT_INVALID)
    return wrapper


def make_service(ctx, **overrides) -> SpectralSequenceService:
    overrides = {key: value for key, value in overrides.items() if value is not None}
    config = Config(ctx.obj.get('env_file'), **overrides)
    if not config.validate():
        raise ValueError("invalid configuration (see log)")
    return SpectralSequenceService(config, cache_dir=ctx.obj.get('cache_dir'))


@click.group(context_settings=dict(help_option_names=['-h', '--help']))
@click.option('--version', is_flag=True, callback=print_version,
              expose_value=False, is_eager=True, help='Show version and exit.')
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose logging.')
@click.option('--env-file', type=click.Path(exists=True, dir_okay=False), help='Load settings from a .env file.')
@click.option('--cache-dir', type=click.Path(file_okay=False), help='Directory for cached pages.')
@click.pass_context
def cli(ctx, verbose, env_file, cache_dir):
    """specseq - exact spectral sequences of filtered chain complexes.

    Computes pages, décalage and Atiyah-Hirzebruch spectral sequences over
    the integers, the rationals and prime fields, and checks the comparison
    theorems on seeded random instances.
    """
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)
        logger.debug("Verbose logging enabled")

    ctx.ensure_object(dict)
    ctx.obj['verbose'] = verbose
    ctx.obj['env_file'] = env_file
    ctx.obj['cache_dir'] = cache_dir


@cli.command()
@click.argument('input_path', type=click.Path(exists=True, dir_okay=False))
@click.pass_context
@invalid_input_exits
def validate(ctx, input_path):
    """Check that a file parses and passes validation.

    Examples:
        validate tests/fixtures/toy_d2.fc.json
    """
    service = make_service(ctx)
    summary = service.validate_file(input_path)
    click.echo(click.style(f"{input_path}: valid {summary['kind']}", fg="green"))


@cli.command()
@click.option('--input', '-i', 'input_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Filtered complex file (*.fc.json).')
@click.option('--rmax', '-r', type=click.IntRange(min=1), help='Last page to compute.')
@click.option('--convention', '-c', help='Indexing convention, e.g. adams-homology-decreasing.')
@click.option('--format', '-f', 'output_format', type=click.Choice(OUTPUT_FORMATS), help='Output format.')
@click.option('--method', '-m', type=click.Choice(METHODS), default='classical', show_default=True,
              help='Page construction.')
@click.option('--no-infinity', is_flag=True, help='Do not append the E^inf page.')
@click.option('--output', '-o', type=click.Path(dir_okay=False), help='Write the report to a file.')
@click.pass_context
@invalid_input_exits
def pages(ctx, input_path, rmax, convention, output_format, method, no_infinity, output):
    """Compute the pages of a filtered complex.

    Examples:
        pages --input toy_d2.fc.json --rmax 3
        pages -i toy_d2.fc.json -c adams-homology-decreasing -f svg -o chart.svg
    """
    service = make_service(ctx, rmax=rmax, convention=convention, output_format=output_format)
    result = service.pages_file(
        input_path,
        output_path=output,
        method=method,
        include_infinity=not no_infinity,
    )
    if output:
        click.echo(click.style(f"Saved {len(result['reports'])} pages to {output}", fg="green"))
    else:
        click.echo(result['preview_text'], nl=False)


@cli.command()
@click.option('--input', '-i', 'input_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Filtered complex file (*.fc.json).')
@click.option('--iterate', '-k', type=click.IntRange(min=0), default=1, show_default=True,
              help='Number of décalage steps.')
@click.option('--output', '-o', type=click.Path(dir_okay=False), help='Write the result to a file.')
@click.pass_context
@invalid_input_exits
def decalage(ctx, input_path, iterate, output):
    """Apply Deligne's décalage to a filtered complex.

    Examples:
        decalage --input toy_d2.fc.json
        decalage -i toy_d2.fc.json --iterate 2 -o toy_d2.dec2.fc.json
    """
    service = make_service(ctx)
    _, F, _ = service.load_filtered(input_path)
    data = serialize_filtered_complex(service.decalage(F, iterate))
    if output:
        save_file(data, output)
        click.echo(click.style(f"Saved Dec^({iterate}) to {output}", fg="green"))
    else:
        click.echo(dumps(data), nl=False)


@cli.command()
@click.option('--cw', 'cw', required=True, help='CW complex: point, S1, S2, RP2, T2, CP2 or a *.cw.json file.')
@click.option('--coeff', 'coeff', default='Z', show_default=True,
              help='Coefficients: Z, Z+Z[-2] or a chain complex file.')
@click.option('--rmax', '-r', type=click.IntRange(min=2), help='Last page to compare.')
@click.option('--ring', help='Coefficient ring of the built-in coefficients (ZZ, QQ, GF2, GF<p>).')
@click.option('--format', '-f', 'output_format', type=click.Choice(OUTPUT_FORMATS), help='Output format.')
@click.pass_context
@invalid_input_exits
def ahss(ctx, cw, coeff, rmax, ring, output_format):
    """Atiyah-Hirzebruch spectral sequence of a CW complex.

    Computes the skeletal and Whitehead spectral sequences of Hom(C_*(X), M)
    and checks that they agree from the second page on. Exits 1 if they do
    not.

    Examples:
        ahss --cw RP2
        ahss --cw CP2 --coeff Z+Z[-2] --rmax 4
    """
    service = make_service(ctx, ring=ring, output_format=output_format)
    result = service.ahss(cw, coeff, rmax)
    report = result['report']

    formatter = OutputFormatter(service.config)
    if formatter.format == 'json':
        click.echo(json.dumps({
            "comparison": report.to_dict(),
            "skeletal": [page.to_dict() for page in result['skeletal']],
            "whitehead": [page.to_dict() for page in result['whitehead']],
        }, indent=2, ensure_ascii=False))
    else:
        click.echo(click.style("Skeletal filtration", fg="blue"))
        click.echo(formatter.format_reports(result['skeletal']), nl=False)
        click.echo(click.style("Whitehead filtration", fg="blue"))
        click.echo(formatter.format_reports(result['whitehead']), nl=False)

    if not report.ok:
        for failure in report.failures:
            click.echo(click.style(failure, fg="red"), err=True)
        sys.exit(EXIT_VIOLATION)
    click.echo(click.style(f"Skeletal and Whitehead pages agree from E_2 through r = {report.r_max}", fg="green"))


@cli.command()
@click.option('--theorem', '-t', required=True, type=click.Choice(sorted(THEOREMS)), help='Property to check.')
@click.option('--seed', '-s', type=int, help='Campaign seed.')
@click.option('--count', '-n', type=click.IntRange(min=0), help='Number of instances.')
@click.option('--ring', help='Coefficient ring (ZZ, QQ, GF2, GF<p>).')
@click.option('--rmax', '-r', type=click.IntRange(min=1), help='Last page to compare.')
@click.option('--workers', '-w', type=click.IntRange(min=0), default=0,
              help='Worker threads (0 for auto-detection).')
@click.option('--mutate', is_flag=True, help='Run a deliberately broken comparison.')
@click.option('--counterexample-dir', type=click.Path(file_okay=False), help='Where to write counterexamples.')
@click.option('--no-progress', is_flag=True, help='Hide the progress bar.')
@click.pass_context
@invalid_input_exits
def verify(ctx, theorem, seed, count, ring, rmax, workers, mutate, counterexample_dir, no_progress):
    """Check a property on seeded random instances.

    Exits 1 and writes the failing instances to the counterexample
    directory if any instance violates the property.

    Examples:
        verify --theorem decalage --seed 7 --count 200
        verify --theorem maunder --count 20 --mutate
    """
    start_time = time.time()
    service = make_service(ctx, ring=ring, counterexample_dir=counterexample_dir)
    result = service.verify(
        theorem,
        seed=seed,
        count=count,
        mutate=mutate,
        r_max=rmax,
        workers=workers or None,
        show_progress=not no_progress,
    )

    elapsed = format_duration(time.time() - start_time)
    if result.ok:
        click.echo(click.style(
            f"{theorem}: {result.count} instances over {result.ring} (seed {result.seed}), "
            f"no counterexamples ({elapsed})", fg="green"))
        return

    click.echo(click.style(
        f"{theorem}: {len(result.failures)} of {result.count} instances failed", fg="red"), err=True)
    for instance, path in zip(result.failures, result.counterexample_files):
        click.echo(f"  #{instance.index}: {instance.violations[0]}", err=True)
        click.echo(f"    written to {path}", err=True)
    sys.exit(EXIT_VIOLATION)


@cli.command()
@click.pass_context
def conventions(ctx):
    """List the indexing conventions and their d^2 bidegrees."""
    for convention in all_conventions():
        click.echo(f"{convention.name:32} d^r: {convention.differential_bidegree(2)} at r = 2")


def main(argv=None) -> int:
    """Run the command line and return its exit status."""
    try:
        cli.main(args=argv, prog_name="specseq", obj={}, standalone_mode=False)
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else EXIT_INVALID
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return EXIT_INVALID
    except click.exceptions.Abort:
        return EXIT_INVALID
    return 0


if __name__ == '__main__':
    sys.exit(main())
