"""`solve`: stream solutions for one (variant, k)."""
import logging
from typing import List, Optional, Tuple

from quartic.commands.report import RunReport, render_solutions
from quartic.errors import UnknownConfig
from quartic.solutions.families import MISSING_REASONS, FamilyConfig, Variant, lookup, registry
from quartic.solutions.identities import k2_generate
from quartic.solutions.pipeline import Provenance, QuarticSolution, explore_branch, generate, verify

logger = logging.getLogger(__name__)

Rows = List[Tuple[QuarticSolution, Provenance]]


def resolve_config(variant: Variant, k: int, configs: Optional[List[FamilyConfig]] = None) -> FamilyConfig:
    """Registry entry for (variant, k).

    Raises:
        UnknownConfig: with the known reason when there is none
    """
    cfg = lookup(variant, k, configs)
    if cfg is None:
        reason = MISSING_REASONS.get((variant, k), "no configuration is known")
        raise UnknownConfig(f"no configuration for {variant.value} k={k}: {reason}")
    return cfg


def cmd_solve(
    variant: Variant,
    k: int,
    count: int = 1,
    max_digits: Optional[int] = None,
    branch: int = 1,
    search_bound: int = 200,
    configs: Optional[List[FamilyConfig]] = None,
) -> Tuple[RunReport, Rows]:
    """Build the curve for (variant, k) and generate count solutions from it.

    The (k+3) k=2 case runs on the (p, q) curve. With branch -1 the opposite model is
    seeded from a point search up to search_bound.
    """
    report = RunReport(f"solve {variant.value} {k}")
    if variant is Variant.THREE_PLUS and k == 2 and lookup(variant, k, configs) is None:
        rows = k2_generate(count, max_digits)
    else:
        cfg = resolve_config(variant, k, configs)
        if branch != cfg.branch:
            cfg = explore_branch(cfg, search_bound)
        rows = generate(cfg, count, max_digits)
    for sol, prov in rows:
        report.add(f"{prov.config_id} n={prov.multiple}", verify(sol), str(sol))
    return report, rows


def add_parser(subparsers):
    parser = subparsers.add_parser("solve", help="generate solutions from a configuration's curve")
    parser.add_argument("variant", type=Variant, choices=list(Variant))
    parser.add_argument("k", type=int)
    parser.add_argument("--count", type=int, default=1)
    parser.add_argument("--max-digits", type=int, default=None)
    parser.add_argument("--branch", choices=["+", "-"], default="+")
    parser.add_argument("--search-bound", type=int, default=200, help="point search bound for --branch -")
    parser.set_defaults(func=run)
    return parser


def run(args) -> int:
    report, rows = cmd_solve(
        args.variant,
        args.k,
        count=args.count,
        max_digits=args.max_digits,
        branch=1 if args.branch == "+" else -1,
        search_bound=args.search_bound,
        configs=registry(args.registry),
    )
    print(render_solutions(rows, args.format or "json"))
    return report.exit_code
