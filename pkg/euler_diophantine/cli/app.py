import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Annotated, Any, Optional

import rich.traceback
import typer
from luxonis_ml.utils import setup_logging
from pydantic import ValidationError
from rich.console import Console

from euler_diophantine.cli.parser import parse_equation, parse_vector
from euler_diophantine.cli.report import PowerReport, SolveReport
from euler_diophantine.core.oracle import oracle_check
from euler_diophantine.core.solver import power_equation
from euler_diophantine.core.solver import solve as solve_equation
from euler_diophantine.core.solver import verify as verify_solution
from euler_diophantine.utils.config import Config, parse_overrides
from euler_diophantine.utils.types import (
    CrossCheckFailed,
    DimensionMismatch,
    DiophantineError,
    Equation,
    FactorizationLimitExceeded,
    NotSolvable,
    ParseError,
    RawFormTooLarge,
    SolveMode,
    UnsupportedMode,
    ZeroCoefficient,
)

logger = logging.getLogger(__name__)

app = typer.Typer(
    help="Exact solver for linear Diophantine equations.", add_completion=False
)

stderr = Console(stderr=True)

EXIT_OK = 0
EXIT_NOT_SOLVABLE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_CROSS_CHECK = 4

EXIT_CODES: dict[type[Exception], int] = {
    NotSolvable: EXIT_NOT_SOLVABLE,
    ParseError: EXIT_USAGE,
    UnsupportedMode: EXIT_USAGE,
    DimensionMismatch: EXIT_USAGE,
    ZeroCoefficient: EXIT_USAGE,
    RawFormTooLarge: EXIT_GUARD,
    FactorizationLimitExceeded: EXIT_GUARD,
    CrossCheckFailed: EXIT_CROSS_CHECK,
}


EquationArg = Annotated[
    str,
    typer.Argument(
        help='Equation, either "2x1 + 3x2 = 1" or "2, 3 = 1".',
        show_default=False,
    ),
]

ConfigType = Annotated[
    Optional[Path],
    typer.Option(
        help="Path to the configuration file.",
        show_default=False,
    ),
]

OptsType = Annotated[
    Optional[list[str]],
    typer.Argument(
        help="A list of optional CLI overrides of the config file.",
        show_default=False,
    ),
]

ModeType = Annotated[
    Optional[SolveMode],
    typer.Option("--mode", help="Solver mode.", show_default=False),
]

GuardType = Annotated[
    Optional[int],
    typer.Option(
        "--guard-bits",
        help="Largest bit length allowed for closed-form values.",
        show_default=False,
    ),
]

ParamsType = Annotated[
    Optional[str],
    typer.Option(
        "--params",
        help='Parameter values "t1,t2,..." at which to evaluate the family.',
        show_default=False,
    ),
]

JsonType = Annotated[bool, typer.Option("--json", help="Emit JSON.")]
LatexType = Annotated[bool, typer.Option("--latex", help="Emit LaTeX.")]
OracleCheckType = Annotated[
    bool,
    typer.Option(
        "--oracle-check",
        help="Cross-check the family against the extended-Euclid solver.",
    ),
]
VerboseType = Annotated[
    bool, typer.Option("--verbose", "-v", help="Log solver progress to stderr.")
]


def _output_format(json_output: bool, latex: bool) -> str | None:
    if json_output and latex:
        raise typer.BadParameter("`--json` and `--latex` are mutually exclusive.")
    if json_output:
        return "json"
    if latex:
        return "latex"
    return None


def _load_config(
    config: Path | None,
    opts: list[str] | None,
    verbose: bool,
    **flags: Any,
) -> Config:
    overrides: dict[str, Any] = parse_overrides(opts)
    for key, value in flags.items():
        if value is not None:
            overrides[key] = value
    cfg = Config.get_config(config, overrides)
    if verbose:
        setup_logging(use_rich=cfg.use_rich_text)
        logging.getLogger("euler_diophantine").setLevel(logging.DEBUG)
        if cfg.use_rich_text:
            rich.traceback.install()
    return cfg


def _emit(report: SolveReport | PowerReport, output_format: str) -> None:
    if output_format == "json":
        typer.echo(report.to_json())
    elif output_format == "latex":
        typer.echo(report.to_latex())
    else:
        typer.echo(report.to_plain())


@app.command()
def solve(
    equation: EquationArg,
    mode: ModeType = None,
    guard_bits: GuardType = None,
    params: ParamsType = None,
    json_output: JsonType = False,
    latex: LatexType = False,
    oracle: OracleCheckType = False,
    config: ConfigType = None,
    verbose: VerboseType = False,
    opts: OptsType = None,
):
    """Solve an equation and print its complete solution family."""
    cfg = _load_config(
        config,
        opts,
        verbose,
        **{
            "solver.mode": mode.value if mode is not None else None,
            "solver.guard_bits": guard_bits,
            "solver.oracle_check": True if oracle else None,
            "output.format": _output_format(json_output, latex),
        },
    )
    eq = parse_equation(equation)
    t = parse_vector(params) if params is not None else None
    logger.info(f"Solving `{eq}` in {cfg.solver.mode} mode")

    try:
        sol = solve_equation(
            eq,
            cfg.solver.mode,
            cfg.solver.guard_bits,
            factorization=cfg.factorization,
        )
        checked = oracle_check(eq, sol) if cfg.solver.oracle_check else None
        report = SolveReport.from_solution(eq, sol, oracle_checked=checked, params=t)
    except DiophantineError as e:
        if cfg.output.format == "json":
            typer.echo(SolveReport.from_error(eq, e).to_json())
        raise

    _emit(report, cfg.output.format)
    if report.oracle_checked is False:
        raise CrossCheckFailed(
            f"The {report.mode} family does not describe the same solutions as "
            "the extended-Euclid family."
        )
    if not report.verified or report.point_verified is False:
        raise CrossCheckFailed(f"The {report.mode} family failed verification.")


@app.command()
def verify(
    equation: EquationArg,
    vector: Annotated[
        str, typer.Argument(help='Candidate solution "x1,x2,...".', show_default=False)
    ],
):
    """Check whether a vector solves an equation. Exits 1 when it does not."""
    eq = parse_equation(equation)
    result = verify_solution(eq, parse_vector(vector))
    typer.echo(str(result).lower())
    if not result:
        raise typer.Exit(EXIT_NOT_SOLVABLE)


@app.command()
def power(
    m: Annotated[int, typer.Option("--m", help="Exponent of 2.", min=1)],
    n: Annotated[int, typer.Option("--n", help="Exponent of 3.", min=1)],
    guard_bits: GuardType = None,
    json_output: JsonType = False,
    latex: LatexType = False,
    config: ConfigType = None,
    verbose: VerboseType = False,
    opts: OptsType = None,
):
    """Both closed forms for 2^m x + 3^n y = 1."""
    cfg = _load_config(
        config,
        opts,
        verbose,
        **{
            "solver.guard_bits": guard_bits,
            "output.format": _output_format(json_output, latex),
        },
    )
    eq = Equation((2**m, 3**n), 1)
    form_a, form_b = power_equation(m, n, cfg.solver.guard_bits)
    report = PowerReport(
        m=m,
        n=n,
        form_a=SolveReport.from_solution(eq, form_a),
        form_b=SolveReport.from_solution(eq, form_b),
    )
    _emit(report, cfg.output.format)
    if not (report.form_a.verified and report.form_b.verified):
        raise CrossCheckFailed(f"Closed forms for m={m}, n={n} failed verification.")


@app.command()
def oracle(
    equation: EquationArg,
    json_output: JsonType = False,
    latex: LatexType = False,
    verbose: VerboseType = False,
):
    """Solve with the extended Euclidean algorithm only."""
    cfg = _load_config(
        None,
        None,
        verbose,
        **{"output.format": _output_format(json_output, latex)},
    )
    eq = parse_equation(equation)
    sol = solve_equation(eq, SolveMode.ORACLE)
    _emit(SolveReport.from_solution(eq, sol), cfg.output.format)


def version_callback(value: bool):
    if value:
        from euler_diophantine import __version__

        typer.echo(f"euler-diophantine version: {__version__}")
        raise typer.Exit()


@app.callback()
def common(
    _: Annotated[
        bool,
        typer.Option(
            "--version", callback=version_callback, help="Show version and exit."
        ),
    ] = False,
):
    ...


def _exit_code(error: Exception) -> int:
    for exc_type, code in EXIT_CODES.items():
        if isinstance(error, exc_type):
            return code
    return EXIT_USAGE


def run(argv: Sequence[str] | None = None) -> int:
    """Runs the CLI and returns the process exit code instead of exiting.

    Usage errors are reported by typer itself and exit with 2. Domain errors
    are printed to standard error and mapped through L{EXIT_CODES}.
    """
    args = list(argv) if argv is not None else sys.argv[1:]
    try:
        app(args=args, prog_name="euler_diophantine")
    except SystemExit as e:
        if e.code is None:
            return EXIT_OK
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except (DiophantineError, ValidationError, ValueError, OSError) as e:
        stderr.print(f"Error: {e}", markup=False, highlight=False, soft_wrap=True)
        return _exit_code(e)
    return EXIT_OK


def main():
    sys.exit(run())
