"""`check`: identity, family, curve and showcase property suites."""
import logging
from typing import List, Optional

from quartic.arithmetic.poly import UniPoly
from quartic.cache import cache_stats
from quartic.commands.report import RunReport
from quartic.curves.curve import CurvePoint
from quartic.errors import DegenerateSolution, IdentityFailed
from quartic.solutions.corpus import K2_SHOWCASE, PRINTED_CURVES, k2_rows, showcase_rows, witness_rows
from quartic.solutions.families import (
    LINEAR_FREE_SEXTUPLE,
    PLUS_TWO_SEXTUPLE,
    STANDARD_SEXTUPLE,
    FamilyConfig,
    curve_for,
    derive_identity,
    registry,
)
from quartic.solutions.identities import (
    FAMILIES,
    carmichael_terms,
    family_eval,
    family_terms,
    grid_identity_check,
    k14_witness,
    k2_curve,
    k2_point_to_solution,
    literal_k2_family,
    three_quartic_square,
    verify_family,
)
from quartic.solutions.pipeline import point_to_solution

logger = logging.getLogger(__name__)

CATEGORIES = ("identities", "families", "curves", "showcase", "all")

EXPECTED_IDENTITIES = [
    (STANDARD_SEXTUPLE, 1, UniPoly([8, 8, 0, 32])),
    (LINEAR_FREE_SEXTUPLE, 2, UniPoly([0, -4, 0, 16])),
    (PLUS_TWO_SEXTUPLE, 1, UniPoly([-8, 8, 0, 32])),
]


def check_identities(report: RunReport):
    for sextuple, content, root in EXPECTED_IDENTITIES:
        report.check(
            f"identity {sextuple}",
            lambda: derive_identity(sextuple) == (content, root),
            f"{content} * ({root!r})^2",
        )
    content, root = derive_identity(LINEAR_FREE_SEXTUPLE)
    report.add(
        f"identity {LINEAR_FREE_SEXTUPLE} as 8 * (8x^3 - 2x)^2",
        root * root * content == UniPoly([0, -2, 0, 8]) ** 2 * 8,
        f"{content} * ({root!r})^2",
    )
    for which in ("carmichael", "k4"):
        report.add(f"grid {which}", grid_identity_check(which, 9), "signed 17x17 grid")

    def three_quartic_range() -> bool:
        for a in range(-50, 51):
            for b in range(-50, 51):
                three_quartic_square(a, b)
        return True

    try:
        report.add("three-quartic |a|,|b| <= 50", three_quartic_range())
    except ArithmeticError as e:
        report.add("three-quartic |a|,|b| <= 50", False, str(e))
    x, y, z, w = carmichael_terms(1, 1)
    report.add("carmichael (1, 1)", x ** 4 + y ** 4 + 4 * z ** 4 == w ** 4, f"({x}, {y}, {z}; {w})")
    report.check("k=14 witness", lambda: k14_witness() is not None, "(4, 11, 15) + 14*1^4 = 16^4")


def check_families(report: RunReport, n_range=range(-10, 11)):
    for k, build in sorted(FAMILIES.items()):
        fam = build()
        report.add(f"family k={k} polynomial identity", verify_family(fam))
        for n in n_range:
            try:
                sol = family_eval(fam, n)
            except DegenerateSolution:
                raw = family_terms(fam, n)
                report.add(f"family k={k} n={n}", raw.lhs() == raw.rhs(), "zero term; equation holds")
                continue
            except IdentityFailed as e:
                report.add(f"family k={k} n={n}", False, str(e))
                continue
            report.add(f"family k={k} n={n}", True, str(sol))

    literal = literal_k2_family()

    def literal_rejected() -> bool:
        try:
            family_eval(literal, 1)
        except IdentityFailed:
            return not verify_family(literal)
        return False

    report.add("printed k=2 family fails at n=1", literal_rejected(), "known typo, kept as regression")


def check_curves(report: RunReport, configs: Optional[List[FamilyConfig]] = None):
    for cfg in configs if configs is not None else registry():
        _, curve, _ = curve_for(cfg)
        expected = PRINTED_CURVES.get(cfg.config_id)
        if expected is not None:
            report.add(f"curve {cfg.config_id}", (curve.a, curve.b) == expected, str(curve))
        if cfg.seed is not None:
            report.add(f"seed {cfg.config_id} on curve", curve.contains(cfg.seed), str(cfg.seed))
            report.check(f"seed {cfg.config_id} non-torsion", lambda: curve.is_infinite_order(cfg.seed))
    curve, _ = k2_curve()
    report.add("curve three_plus-k2-pq", (curve.a, curve.b) == (-36, 0), str(curve))
    for (x, y), _ in K2_SHOWCASE:
        p = CurvePoint.affine(x, y)
        report.check(f"point {p} non-torsion", lambda: curve.is_infinite_order(p))


def check_showcase(report: RunReport, configs: Optional[List[FamilyConfig]] = None):
    by_id = {cfg.config_id: cfg for cfg in (configs if configs is not None else registry())}
    for row in showcase_rows():
        cfg = by_id.get(row.config_id)
        if cfg is None or cfg.seed is None:
            report.add(row.label, False, "configuration missing")
            continue
        report.check(row.label, lambda: row.matches(point_to_solution(cfg, cfg.seed)), row.mode.value)
    for row, ((x, y), _) in zip(k2_rows(), K2_SHOWCASE):
        p = CurvePoint.affine(x, y)
        report.check(row.label, lambda: row.matches(k2_point_to_solution(p)), f"from {p}")
    k14_row, *family_rows = witness_rows()
    report.check(k14_row.label, lambda: k14_row.matches(k14_witness()))
    for row in family_rows:
        fam = FAMILIES[row.solution.k]()
        report.check(row.label, lambda: row.matches(family_eval(fam, 0)), "n=0")


def cmd_check(what: str, configs: Optional[List[FamilyConfig]] = None) -> RunReport:
    if what not in CATEGORIES:
        raise ValueError(f"unknown check category {what!r}")
    report = RunReport(f"check {what}")
    if what in ("identities", "all"):
        check_identities(report)
    if what in ("families", "all"):
        check_families(report)
    if what in ("curves", "all"):
        check_curves(report, configs)
    if what in ("showcase", "all"):
        check_showcase(report, configs)
    return report


def add_parser(subparsers):
    parser = subparsers.add_parser("check", help="run a property suite")
    parser.add_argument("what", choices=CATEGORIES, nargs="?", default="all")
    parser.add_argument("--stats", action="store_true", help="print multiple-cache statistics")
    parser.set_defaults(func=run)
    return parser


def run(args) -> int:
    report = cmd_check(args.what, registry(args.registry))
    print(report.render(args.format or "text"))
    if args.stats:
        stats = cache_stats.get_stats()
        print(" ".join(f"{key}={value}" for key, value in stats.items()))
    return report.exit_code
