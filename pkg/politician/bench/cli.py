from argparse import ArgumentParser, Namespace
from pathlib import Path
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table
from politician.bench.config import BenchConfig, ProblemSpec
from politician.bench.profiles import performance_profile, write_profile
from politician.bench.suite import Manifest, run_suite
from politician.bench.tracking import tracker_from_env
from politician.config import POLITICIAN_LOG_LEVEL
from politician.errors import ConfigError, ParseError, PoliticianContractError, PoliticianError, ProfileError
from politician.log import configure_logging
from politician.methods.registry import ALGORITHMS


EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CONTRACT = 3

console = Console()


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="politician-bench", description="Benchmark first-order methods with and without the geometric politician")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run a suite and write CSV traces, a manifest and a performance profile")
    run.add_argument("--config", type=Path, help="JSON suite configuration; other flags are ignored when given")
    run.add_argument("--problem", choices=["quadratic", "nesterov", "hinge"], default="quadratic")
    run.add_argument("--n", type=int, default=100, help="Dimension (features for synthetic hinge data)")
    run.add_argument("--seed", type=int, action="append", help="Instance seed; repeat for several instances")
    run.add_argument("--kappa", type=float, help="Condition number bound of quadratics")
    run.add_argument("--method", action="append", help=f"Algorithm, repeatable. One of: {', '.join(ALGORITHMS)}")
    run.add_argument("--budget", type=int, default=100)
    run.add_argument("--tol", type=float, default=0.0)
    run.add_argument("--t", type=float, default=1.0, help="Hinge smoothness parameter")
    run.add_argument("--lambda", dest="lam", type=float, default=1e-4, help="Hinge regularization")
    run.add_argument("--data", type=Path, help="LIBSVM file for hinge problems")
    run.add_argument("--out", type=Path, help="Output directory")
    run.add_argument("--workers", type=int, help="Runs executed in parallel")
    run.add_argument("--log-level", default=POLITICIAN_LOG_LEVEL)
    return parser


def config_from_args(args: Namespace) -> BenchConfig:
    if args.config is not None:
        return BenchConfig.from_file(args.config)

    problems = [
        ProblemSpec(
            family=args.problem,
            n=args.n,
            seed=seed,
            kappa=args.kappa,
            t=args.t,
            lam=args.lam,
            path=args.data,
        )
        for seed in (args.seed or [0])
    ]
    options: dict = {
        "problems": problems,
        "methods": args.method or ["sd", "sd+"],
        "budget": args.budget,
        "tol": args.tol,
    }
    if args.out is not None:
        options["output_dir"] = args.out
    if args.workers is not None:
        options["workers"] = args.workers
    return BenchConfig(**options)


def summary_table(manifest: Manifest) -> Table:
    table = Table(title="Suite summary")
    table.add_column("problem")
    table.add_column("method")
    table.add_column("termination")
    table.add_column("iters", justify="right")
    table.add_column("best f", justify="right")
    table.add_column("solved at", justify="right")
    for record in manifest.runs:
        table.add_row(
            record.problem,
            record.method,
            record.termination,
            str(record.iterations),
            f"{record.best_value:.6e}",
            "-" if record.solved_at is None else str(record.solved_at),
        )
    return table


def run_command(args: Namespace) -> int:
    config = config_from_args(args)
    manifest = run_suite(config, tracker=tracker_from_env())
    console.print(summary_table(manifest))
    try:
        path = write_profile(performance_profile(manifest.solved_counts()), config.output_dir)
        console.print(f"Profile written to [bold]{path}[/bold]")
    except ProfileError as e:
        console.print(f"[yellow]No profile: {e}[/yellow]")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level.upper())
    try:
        if args.command == "run":
            return run_command(args)
    except (ConfigError, ParseError, ValidationError, OSError) as e:
        console.print(f"[bold red]Configuration error:[/bold red] {e}")
        return EXIT_CONFIG
    except PoliticianContractError as e:
        console.print(f"[bold red]Contract violation:[/bold red] {e}")
        return EXIT_CONTRACT
    except PoliticianError as e:
        console.print(f"[bold red]Run failed:[/bold red] {e}")
        return EXIT_CONTRACT
    return EXIT_OK
