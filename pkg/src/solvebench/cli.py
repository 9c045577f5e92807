"""Command line entry points.

Exit codes: 0 success, 1 domain failure (wrong candidate, infeasible
instance, failed run), 2 usage errors including malformed inputs.
"""

import sys
from pathlib import Path

import click

from . import __version__
from .core import (
    INFEASIBLE,
    GenerationError,
    ParseError,
    SizeDescriptor,
    SizeError,
    SolveBenchError,
    build_dataset,
    get_problem,
    save_dataset,
)
from .orchestrate import ConfigError, parse_config, run_experiment
from .report import emit, parse_report


@click.group()
@click.version_option(__version__, prog_name="solvebench")
def main():
    """Benchmark tools for program-writing LLM pipelines on constraint puzzles."""


def _adapter(problem: str):
    try:
        return get_problem(problem)
    except SolveBenchError as exc:
        raise click.UsageError(str(exc))


def _read_instance(adapter, input_file: str):
    text = Path(input_file).read_text(encoding="utf-8")
    try:
        adapter.parse(text)
        size = adapter.measure(text)
    except ParseError as exc:
        raise click.UsageError("%s: %s" % (input_file, exc))
    return adapter._instance(text, size)


@main.command()
@click.option("--problem", required=True, help="Problem identifier.")
@click.option("--out", "out_dir", required=True,
              type=click.Path(file_okay=False), help="Dataset directory to write.")
@click.option("--train", "train_count", default=10, show_default=True)
@click.option("--test", "test_count", default=5, show_default=True)
@click.option("--train-size", default=None, help="Dimensions like grid_n=4.")
@click.option("--test-size", default=None, help="Dimensions like grid_n=9.")
@click.option("--seed", default=0, show_default=True)
def gen(problem, out_dir, train_count, test_count, train_size, test_size, seed):
    """Generate a dataset of train (with solutions) and test instances."""
    adapter = _adapter(problem)
    try:
        train_sd = (SizeDescriptor.decode(train_size) if train_size
                    else adapter.default_train_size())
        test_sd = (SizeDescriptor.decode(test_size) if test_size
                   else adapter.default_test_size())
    except SizeError as exc:
        raise click.UsageError(str(exc))
    try:
        dataset = build_dataset(problem, train_count, test_count,
                                train_sd, test_sd, seed)
    except (GenerationError, SizeError) as exc:
        raise click.ClickException(str(exc))
    written = save_dataset(dataset, Path(out_dir))
    click.echo("wrote %d train and %d test instances to %s"
               % (len(dataset.train), len(dataset.test), written))


@main.command()
@click.option("--problem", required=True)
@click.argument("input_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("candidate_file", type=click.Path(exists=True, dir_okay=False))
def verify(problem, input_file, candidate_file):
    """Check a candidate solution; exit 0 only when it is correct."""
    adapter = _adapter(problem)
    instance = _read_instance(adapter, input_file)
    candidate = Path(candidate_file).read_text(encoding="utf-8")
    verdict = adapter.verify(instance, candidate)
    if verdict.reason:
        click.echo("%s: %s" % (verdict.kind.value, verdict.reason))
    else:
        click.echo(verdict.kind.value)
    if verdict.kind.name != "CORRECT":
        sys.exit(1)


@main.command()
@click.option("--problem", required=True)
@click.argument("input_file", type=click.Path(exists=True, dir_okay=False))
def solve(problem, input_file):
    """Print one solution from the reference solver, or INFEASIBLE (exit 1)."""
    adapter = _adapter(problem)
    instance = _read_instance(adapter, input_file)
    solution = adapter.solve(instance)
    if solution == INFEASIBLE:
        click.echo(INFEASIBLE)
        sys.exit(1)
    click.echo(solution, nl=False)


@main.command()
@click.option("--config", "config_path", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--quiet", is_flag=True, help="No per-step progress lines.")
def run(config_path, quiet):
    """Run the experiment described by a config file; print the output dir."""
    try:
        config = parse_config(Path(config_path).read_text(encoding="utf-8"))
    except (ConfigError, SizeError) as exc:
        raise click.UsageError(str(exc))
    try:
        result = run_experiment(config, log=None if quiet else click.echo)
    except (SolveBenchError, OSError) as exc:
        raise click.ClickException(str(exc))
    click.echo(str(result.out_dir))


@main.command()
@click.option("--dir", "run_dir", required=True,
              type=click.Path(exists=True, file_okay=False),
              help="Output directory of a previous run.")
@click.option("--format", "fmt", default="markdown", show_default=True,
              type=click.Choice(["json", "markdown", "csv"]))
def report(run_dir, fmt):
    """Re-emit the stored report in the requested format."""
    path = Path(run_dir) / "report.json"
    if not path.exists():
        raise click.UsageError("%s has no report.json" % run_dir)
    try:
        stored = parse_report(path.read_text(encoding="utf-8"))
    except SolveBenchError as exc:
        raise click.ClickException(str(exc))
    click.echo(emit(stored, fmt), nl=False)


@main.command()
@click.option("--config", "config_path", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--cassette", required=True, type=click.Path(dir_okay=False),
              help="JSONL file to write every LLM exchange to.")
@click.option("--quiet", is_flag=True)
def record(config_path, cassette, quiet):
    """Run an experiment while recording LLM traffic for later replay."""
    try:
        config = parse_config(Path(config_path).read_text(encoding="utf-8"))
    except (ConfigError, SizeError) as exc:
        raise click.UsageError(str(exc))
    config.record_cassette = cassette
    try:
        result = run_experiment(config, log=None if quiet else click.echo)
    except (SolveBenchError, OSError) as exc:
        raise click.ClickException(str(exc))
    click.echo("cassette: %s" % cassette)
    click.echo(str(result.out_dir))


if __name__ == "__main__":
    main()
