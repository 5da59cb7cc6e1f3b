from __future__ import annotations

import json
from pathlib import Path

import typer
from pydantic import ValidationError
from rich.console import Console

from lyndon_sa.commands import (
    do_bench,
    do_build,
    do_doctor,
    do_gen,
    do_inspect,
    do_verify,
    do_version,
    exit_code_for_verify,
)
from lyndon_sa.config import CliConfig, GenConfig, RunConfig
from lyndon_sa.errors import ExitCodes, LyndonSaError
from lyndon_sa.logging_utils import LoggingConfig, configure_logging
from lyndon_sa.reporting.bench_report import bench_payload, bench_table, write_bench_json
from lyndon_sa.text import SentinelPolicy

app = typer.Typer(add_completion=False, help="Suffix arrays through Lyndon groupings.")


@app.callback()
def _global_options(
    verbose: int = typer.Option(0, "--verbose", "-v", count=True, help="Increase logging verbosity"),
    quiet: bool = typer.Option(False, "--quiet", help="Only show errors"),
    structured_logs: bool = typer.Option(False, "--structured-logs", help="Emit JSON lines logs to stderr"),
) -> None:
    configure_logging(LoggingConfig(verbose=verbose, quiet=quiet, structured=structured_logs))


def _exit_for_error(e: Exception) -> typer.Exit:
    if isinstance(e, LyndonSaError):
        Console().print(f"[red]Error:[/red] {e}")
        return typer.Exit(code=e.code)
    if isinstance(e, ValidationError):
        Console().print(f"[red]Bad options:[/red] {e}")
        return typer.Exit(code=ExitCodes.USAGE_ERROR)
    if isinstance(e, (OSError, ValueError)):
        Console().print(f"[red]Error:[/red] {e}")
        return typer.Exit(code=ExitCodes.USAGE_ERROR)
    Console().print(f"[red]Error:[/red] {type(e).__name__}: {e}")
    return typer.Exit(code=ExitCodes.USAGE_ERROR)


def _run_config(queue_capacity: int, width: int | None, debug: bool = False) -> RunConfig:
    return RunConfig(queue_capacity=queue_capacity, forced_width=width, debug=debug)


_SENTINEL_HELP = "strict: reject zero bytes; remap: shift bytes into 16-bit symbols"


@app.command()
def version() -> None:
    """Print version."""
    try:
        Console().print(do_version())
    except Exception as e:
        raise _exit_for_error(e)


@app.command()
def doctor() -> None:
    """Report the numeric stack, JIT status and a self-test."""
    try:
        results = do_doctor()
        console = Console()
        for k in sorted(results):
            console.print(f"{k}: {results[k]}")
    except Exception as e:
        raise _exit_for_error(e)


@app.command()
def build(
    input_path: Path = typer.Argument(..., help="Input file (raw bytes)"),
    output: Path = typer.Option(..., "--output", "-o", help="Where to write the suffix array"),
    fmt: str = typer.Option("auto", "--format", help="raw32 | raw64 | text | auto"),
    sentinel: SentinelPolicy = typer.Option(SentinelPolicy.STRICT, "--sentinel", help=_SENTINEL_HELP),
    queue_capacity: int = typer.Option(1024, "--queue-capacity", min=1),
    width: int | None = typer.Option(None, "--width", help="Force 32- or 64-bit index cells"),
    debug: bool = typer.Option(False, "--debug", help="Extra consistency checks"),
) -> None:
    """Build the suffix array of a file (the internal terminal entry is not written)."""
    try:
        cfg = CliConfig(
            command="build",
            input_path=input_path,
            output_path=output,
            format=fmt,
            sentinel_policy=sentinel,
            run=_run_config(queue_capacity, width, debug),
        )
        result = do_build(cfg)
        Console().print(
            f"Wrote {result.m} entries ({result.format}) to {result.output_path} "
            f"in {result.stats.total_time:.3f}s"
        )
    except Exception as e:
        raise _exit_for_error(e)


@app.command()
def verify(
    input_path: Path = typer.Argument(..., help="Input file the suffix array was built from"),
    sa_path: Path = typer.Argument(..., help="Suffix array file"),
    fmt: str = typer.Option("auto", "--format", help="raw32 | raw64 | text | auto"),
    sentinel: SentinelPolicy = typer.Option(SentinelPolicy.STRICT, "--sentinel", help=_SENTINEL_HELP),
) -> None:
    """Check a suffix array file; exit 1 if it is not the suffix array of the input."""
    try:
        cfg = CliConfig(
            command="verify",
            input_path=input_path,
            sa_path=sa_path,
            format=fmt,
            sentinel_policy=sentinel,
        )
        result = do_verify(cfg)
    except Exception as e:
        raise _exit_for_error(e)
    if result.ok:
        Console().print(f"[green]OK[/green] {result.m} entries ({result.format})")
    else:
        Console().print(f"[red]FAILED[/red] {sa_path} is not the suffix array of {input_path}")
    raise typer.Exit(code=exit_code_for_verify(result))


@app.command()
def bench(
    input_path: Path = typer.Argument(..., help="Input file"),
    iterations: int = typer.Option(5, "--iterations", min=1),
    warmup: int = typer.Option(0, "--warmup", min=0, help="Untimed runs before measuring"),
    queue_capacity: int = typer.Option(1024, "--queue-capacity", min=1),
    width: int | None = typer.Option(None, "--width", help="Force 32- or 64-bit index cells"),
    sentinel: SentinelPolicy = typer.Option(SentinelPolicy.STRICT, "--sentinel", help=_SENTINEL_HELP),
    as_json: bool = typer.Option(False, "--json", help="Print a JSON object instead of a table"),
    out: Path | None = typer.Option(None, "--out", help="Also write the JSON object to this file"),
) -> None:
    """Time repeated constructions; report per-phase means and peak auxiliary memory."""
    try:
        cfg = CliConfig(
            command="bench",
            input_path=input_path,
            sentinel_policy=sentinel,
            iterations=iterations,
            warmup=warmup,
            json=as_json,
            run=_run_config(queue_capacity, width),
        )
        summary = do_bench(cfg)
        if out is not None:
            write_bench_json(summary, out_path=out)
        if cfg.json_output:
            typer.echo(json.dumps(bench_payload(summary), indent=2))
        else:
            Console().print(bench_table(summary, title=f"{input_path.name} (n={summary.n})"))
            Console().print(f"sa_sha256: {summary.sa_sha256}")
    except Exception as e:
        raise _exit_for_error(e)


@app.command()
def inspect(
    input_path: Path = typer.Argument(..., help="Input file"),
    dump: list[str] = typer.Option(
        ["pss", "nss"], "--dump", help="pss | nss | lyndon | flags | grouping | sa (repeatable)"
    ),
    oracle: bool = typer.Option(False, "--oracle", help="Print brute-force rows too, then OK or DIFF"),
    sentinel: SentinelPolicy = typer.Option(SentinelPolicy.STRICT, "--sentinel", help=_SENTINEL_HELP),
    queue_capacity: int = typer.Option(1024, "--queue-capacity", min=1),
) -> None:
    """Print internal arrays of the terminated text, one row per dump."""
    try:
        cfg = CliConfig(
            command="inspect",
            input_path=input_path,
            sentinel_policy=sentinel,
            dumps=dump,
            oracle=oracle,
            run=_run_config(queue_capacity, None),
        )
        lines = do_inspect(cfg)
    except Exception as e:
        raise _exit_for_error(e)
    differs = False
    for line in lines:
        typer.echo(line.row)
        if line.oracle_row is not None:
            typer.echo(line.oracle_row)
            typer.echo(line.verdict)
            differs = differs or line.verdict == "DIFF"
    if differs:
        raise typer.Exit(code=ExitCodes.VERIFY_FAILED)


@app.command()
def gen(
    output: Path = typer.Argument(..., help="File to write"),
    kind: str = typer.Option("random", "--kind", help="fibonacci | random | periodic"),
    size: int = typer.Option(..., "--size", min=0),
    sigma: int = typer.Option(4, "--sigma", help="Alphabet size for random and periodic (1-255)"),
    seed: int = typer.Option(0, "--seed"),
    period: int = typer.Option(64, "--period", help="Block length for periodic"),
) -> None:
    """Write a deterministic test corpus (PCG64-seeded)."""
    try:
        cfg = GenConfig(kind=kind, size=size, sigma=sigma, seed=seed, period=period)
        path = do_gen(cfg, output)
        Console().print(f"Wrote {cfg.size} bytes ({cfg.kind}) to {path}")
    except Exception as e:
        raise _exit_for_error(e)


def main() -> None:
    app()
