"""
abel-frac: solve Abel integral equations of the first kind from the command line

    abel-frac solve --f "exp(x)-1" --alpha 1/2 --x 0.1,0.2 --k 100
    abel-frac table --preset example1
    abel-frac converge --preset example3 --x 0.6 --k 10,100,1000
    abel-frac residual --preset example1 --k 100 --format json

Config sources are merged with increasing priority: defaults, --preset, --cfg YAML file, flags.
Results go to stdout, diagnostics to stderr. Exit codes: 0 on success, 2 for invalid input,
3 for numerical failures.
"""
import argparse
import sys
import time
from typing import Callable, Dict, List, Optional

import yaml
from omegaconf import OmegaConf
from tqdm import tqdm

from abelfrac.abel import (
    EXAMPLES,
    AbelProblem,
    AbelProblemError,
    ConvergenceError,
    convergence_study,
    get_preset,
    interpolate_solution,
    residual,
    solve,
    solve_exact,
)
from abelfrac.cfg import merge_cfgs
from abelfrac.expr import ExprDomainError, ExprSyntaxError, NonDifferentiableError, parse
from abelfrac.logger import Logger, LoggerConfig
from abelfrac.special import GammaPoleError
from abelfrac.utils.io import csv_text

from .config import COMMANDS, FORMATS, ConfigError, RunConfig, build_run_config, normalize
from .render import Report, TableRow, converge_report, render, residual_report, solve_report, table_report

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3

GRAMMAR_HELP = """
expressions: numbers, x, + - * / ^ (right associative, binds tighter than unary minus),
parentheses and the functions exp, ln, sin, cos, sqrt, erf, abs. Write rational exponents
with parentheses, e.g. x^(7/6).
"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abel-frac",
        description="Solve Abel integral equations f(x) = int_0^x g(t) (x - t)^(-alpha) dt",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--f", help="right-hand side f(x), with f(0) = 0")
    parser.add_argument("--alpha", help="kernel exponent in (0, 1), fractions like 4/5 are exact")
    parser.add_argument("--x", dest="points", help="comma separated query points")
    parser.add_argument("--k", dest="ks", help="comma separated numbers of subintervals")
    parser.add_argument("--tol", help="quadrature tolerance of exact solutions and residuals")
    parser.add_argument("--preset", choices=sorted(EXAMPLES.keys()), help="built-in example problem")
    parser.add_argument("--format", choices=FORMATS)
    parser.add_argument("--digits", help="significant digits of the pretty format")
    parser.add_argument("--cfg", help="YAML file with any of the options above")
    parser.add_argument("--g", help="candidate solution g(x) checked by residual")
    parser.add_argument("--samples", help="samples used to interpolate the approximate solution in residual")
    parser.add_argument("--workspace", help="directory in which config and results are stored")
    parser.add_argument("--exp-name", dest="exp_name")
    parser.add_argument("--clear-out", dest="clear_out", action="store_true", default=None)
    parser.add_argument("--verbose", action="store_true", default=None)
    return parser


def build_logger(cfg: RunConfig, color: bool = True) -> Logger:
    """Logger of a run. Only writes files when the config names a workspace"""
    exp_name = cfg.exp_name or f"{cfg.command}/{round(time.time_ns() / 1000)}"
    return Logger.create_from_cfg(
        LoggerConfig(workspace=cfg.workspace, exp_name=exp_name, clear_out=cfg.clear_out, color=color, cfg=cfg.echo())
    )


def preset_cfg(name: Optional[str]) -> Optional[Dict]:
    if name is None:
        return None
    try:
        preset = get_preset(name)
    except KeyError as e:
        raise ConfigError(str(e.args[0])) from e
    return dict(f=preset.f, alpha=preset.alpha, points=list(preset.points), ks=list(preset.ks))


def load_config(args: argparse.Namespace) -> RunConfig:
    flags = {k: v for k, v in vars(args).items() if k != "cfg" and v is not None}
    file_cfg = None
    if args.cfg is not None:
        try:
            file_cfg = OmegaConf.to_container(OmegaConf.load(args.cfg))
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"cannot read config file {args.cfg}: {e}") from e
        if not isinstance(file_cfg, dict):
            raise ConfigError(f"config file {args.cfg} must hold a mapping")
    preset_name = flags.get("preset", (file_cfg or {}).get("preset"))
    defaults = dict(command=args.command)
    sources = [defaults, preset_cfg(preset_name), file_cfg, flags]
    merged = merge_cfgs(*[None if s is None else normalize(s) for s in sources])
    return build_run_config(OmegaConf.to_container(merged))


def cmd_solve(cfg: RunConfig, problem: AbelProblem, logger: Logger) -> Report:
    result = solve(problem, cfg.points, cfg.ks[0], tol=cfg.tol, verbose=cfg.verbose)
    return solve_report(cfg.echo(), result.points, result.values, result.k, result.exact, result.abs_errors)


def cmd_table(cfg: RunConfig, problem: AbelProblem, logger: Logger) -> Report:
    columns = [solve(problem, cfg.points, k, tol=cfg.tol, with_exact=False) for k in tqdm(cfg.ks, disable=not cfg.verbose)]
    exact = [solve_exact(problem, x, cfg.tol) for x in cfg.points]
    rows = []
    for i, x in enumerate(cfg.points):
        values = [float(c.values[i]) for c in columns]
        rows.append(TableRow(x=x, values=values, exact=float(exact[i]), abs_error=abs(values[-1] - float(exact[i]))))
    return table_report(cfg.echo(), cfg.ks, rows)


def cmd_converge(cfg: RunConfig, problem: AbelProblem, logger: Logger) -> Report:
    study = convergence_study(problem, cfg.points[0], cfg.ks, tol=cfg.tol, verbose=cfg.verbose)
    if cfg.verbose:
        logger.store(tag="converge", log_summary=True, abs_error=study.abs_errors)
        logger.pretty_print_table(logger.log(step=len(cfg.ks)))
        logger.reset()
    if study.floor:
        logger.print("errors are at the level of the exact solution's tolerance, order not fitted", color="yellow")
    return converge_report(cfg.echo(), study)


def cmd_residual(cfg: RunConfig, problem: AbelProblem, logger: Logger) -> Report:
    k = None
    if cfg.g is not None:
        g = parse(cfg.g)
    else:
        k = cfg.ks[0]
        g = interpolate_solution(problem, k, upper=problem.upper, samples=cfg.samples)
    residuals = [residual(problem, g, x, tol=cfg.tol) for x in tqdm(cfg.points, disable=not cfg.verbose)]
    return residual_report(cfg.echo(), cfg.points, residuals, k)


COMMAND_FNS: Dict[str, Callable[[RunConfig, AbelProblem, Logger], Report]] = dict(
    solve=cmd_solve,
    table=cmd_table,
    converge=cmd_converge,
    residual=cmd_residual,
)


def main(argv: Optional[List[str]] = None) -> int:
    """Runs the command line interface and returns the exit code"""
    args = build_parser().parse_args(argv)
    logger = Logger(color=sys.stderr.isatty())
    try:
        cfg = load_config(args)
        logger = build_logger(cfg, color=logger.color)
        problem = AbelProblem.create(cfg.f, cfg.alpha, upper=max(cfg.points))
        report = COMMAND_FNS[cfg.command](cfg, problem, logger)
    except (ExprSyntaxError, NonDifferentiableError, ConfigError, AbelProblemError) as e:
        logger.error(e)
        return EXIT_INVALID
    except ConvergenceError as e:
        logger.error(f"{e} (best value {e.partial!r})")
        return EXIT_NUMERICAL
    except (ExprDomainError, OverflowError, GammaPoleError) as e:
        logger.error(e)
        return EXIT_NUMERICAL

    sys.stdout.write(render(report, cfg.format, cfg.digits))
    sys.stdout.flush()
    logger.save_result("results.csv", csv_text(report.header, report.table))
    logger.save_result("results.json", render(report, "json"))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
