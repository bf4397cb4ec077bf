#!/usr/bin/env python3
"""Re-derive every published solution and print a summary per section."""
import os
import sys

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from quartic.cache import cache_stats
from quartic.commands.check import cmd_check
from quartic.commands.families import cmd_family_eval
from quartic.commands.solve import cmd_solve
from quartic.commands.tables import cmd_tables
from quartic.main import configure_logging
from quartic.solutions.corpus import all_rows
from quartic.solutions.families import Variant, registry
from quartic.solutions.identities import FAMILIES
from quartic.solutions.pipeline import verify


def section(title: str):
    print("\n" + "=" * 60)
    print(title)
    print("=" * 60)


def run_streams(count: int = 3) -> bool:
    """First count solutions of every configuration, plus the k=2 (k+3) curve."""
    ok = True
    targets = [(cfg.variant, cfg.k) for cfg in registry()] + [(Variant.THREE_PLUS, 2)]
    for variant, k in targets:
        report, rows = cmd_solve(variant, k, count=count)
        digits = ", ".join(str(len(str(sol.g))) for sol, _ in rows)
        mark = "✅" if report.ok else "❌"
        print(f"  {mark} {variant.value} k={k}: {report.summary()} (digits of g: {digits})")
        ok = ok and report.ok
    return ok


def main() -> int:
    configure_logging(quiet=True)
    results = {}

    section("📊 Published tables")
    report = cmd_tables()
    print(report.render("text"))
    results["tables"] = report.ok

    section("📚 Every published solution")
    rows = all_rows()
    failed = [row.label for row in rows if not verify(row.solution)]
    print(f"{len(rows) - len(failed)}/{len(rows)} verified")
    for label in failed:
        print(f"  ❌ {label}")
    results["published"] = not failed

    for what in ("identities", "families", "curves", "showcase"):
        section(f"🔍 Check: {what}")
        report = cmd_check(what)
        print(report.summary())
        for item in report.items:
            if not item.passed:
                print(f"  ❌ {item.item}: {item.detail}")
        results[what] = report.ok

    section("🔁 Solution streams")
    results["streams"] = run_streams()

    section("🧮 Parametric families, n = -10..10")
    for k, build in sorted(FAMILIES.items()):
        report, rows = cmd_family_eval(build(), range(-10, 11))
        print(f"  k={k}: {report.summary()}, {len(rows)} solution(s)")
        results[f"family k={k}"] = report.ok

    section("📈 Cache")
    for key, value in cache_stats.get_stats().items():
        print(f"  {key}: {value}")

    section("Summary")
    for name, ok in results.items():
        print(f"  {'✅' if ok else '❌'} {name}")
    return 0 if all(results.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
