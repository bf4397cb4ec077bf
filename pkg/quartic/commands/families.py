"""`families`: evaluate the parametric families or export the registry."""
import logging
from typing import List, Tuple

from quartic.commands.report import RunReport, render_solutions
from quartic.errors import DegenerateSolution, IdentityFailed, UnknownConfig
from quartic.schemas import registry_to_json
from quartic.solutions.families import registry
from quartic.solutions.identities import FAMILIES, ParamFamily, family_eval, literal_k2_family
from quartic.solutions.pipeline import Provenance, QuarticSolution

logger = logging.getLogger(__name__)


def parse_n_range(text: str) -> range:
    """"a..b" (inclusive) or a single integer."""
    if ".." in text:
        start, _, stop = text.partition("..")
        lo, hi = int(start), int(stop)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return range(lo, hi + 1)


def family_for(k: int, literal: bool = False) -> ParamFamily:
    if literal:
        if k != 2:
            raise UnknownConfig(f"only the k=2 family has a printed variant, not k={k}")
        return literal_k2_family()
    if k not in FAMILIES:
        raise UnknownConfig(f"no parametric family for k={k}; known: {sorted(FAMILIES)}")
    return FAMILIES[k]()


def cmd_family_eval(fam: ParamFamily, n_range: range) -> Tuple[RunReport, List[Tuple[QuarticSolution, Provenance]]]:
    report = RunReport(f"families eval k={fam.k}")
    rows: List[Tuple[QuarticSolution, Provenance]] = []
    if fam.repaired_from_paper:
        logger.warning(f"family {fam.label} uses coefficients repaired from the printed version")
    for n in n_range:
        try:
            sol = family_eval(fam, n)
        except DegenerateSolution as e:
            report.add(f"n={n}", True, f"skipped: {e}")
            continue
        except IdentityFailed as e:
            report.add(f"n={n}", False, str(e))
            continue
        report.add(f"n={n}", True, str(sol))
        rows.append((sol, Provenance(f"family-{fam.label}", n, None, 1, fam.repaired_from_paper)))
    return report, rows


def add_parser(subparsers):
    parser = subparsers.add_parser("families", help="parametric families and registry export")
    parser.add_argument("action", nargs="?", choices=["export"], help="write the registry as JSON")
    parser.add_argument("--output", default=None, help="file for export (default stdout)")
    parser.add_argument("--eval", type=int, dest="eval_k", metavar="K", default=None)
    parser.add_argument(
        "--n-range", type=parse_n_range, default=parse_n_range("-10..10"),
        help="a..b inclusive; write --n-range=-3..3 when a is negative",
    )
    parser.add_argument("--literal", action="store_true", help="use the printed k=2 coefficients")
    parser.set_defaults(func=run)
    return parser


def run(args) -> int:
    if args.action == "export":
        text = registry_to_json(registry(args.registry))
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text + "\n")
            logger.info(f"Registry written to {args.output}")
        else:
            print(text)
        return 0
    if args.eval_k is None:
        for cfg in registry(args.registry):
            multipliers = ", ".join(str(m) for m in cfg.multipliers)
            print(f"{cfg.config_id}: sextuple {cfg.sextuple}, multipliers ({multipliers}), seed {cfg.seed}")
        return 0
    report, rows = cmd_family_eval(family_for(args.eval_k, args.literal), args.n_range)
    if args.format in ("json", "csv"):
        print(render_solutions(rows, args.format))
    else:
        print(report.render("text"))
    return report.exit_code
