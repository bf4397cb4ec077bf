"""Run reports and tabular solution output."""
import json
import logging
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import pandas as pd

from quartic.errors import QuarticError
from quartic.schemas import ItemResultSchema, RunReportSchema, solution_to_schema
from quartic.solutions.pipeline import Provenance, QuarticSolution

logger = logging.getLogger(__name__)

SOLUTION_COLUMNS = ["variant", "k", "terms", "f", "g", "config", "multiple", "branch", "repaired_from_paper"]


@dataclass
class ItemResult:
    item: str
    passed: bool
    detail: str = ""


@dataclass
class RunReport:
    """Per-item pass/fail record of one command."""

    command: str
    items: List[ItemResult] = field(default_factory=list)
    started: float = field(default_factory=time.perf_counter)

    def add(self, item: str, passed: bool, detail: str = "") -> bool:
        self.items.append(ItemResult(item, bool(passed), detail))
        if not passed:
            logger.warning(f"{self.command}: {item} failed {detail}".rstrip())
        return bool(passed)

    def check(self, item: str, fn: Callable[[], bool], detail: str = "") -> bool:
        """Record fn(); a domain error counts as a failure with its message."""
        try:
            ok = fn()
        except QuarticError as e:
            return self.add(item, False, f"{type(e).__name__}: {e}")
        return self.add(item, ok, detail)

    @property
    def passed(self) -> int:
        return sum(1 for i in self.items if i.passed)

    @property
    def total(self) -> int:
        return len(self.items)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.started

    def summary(self) -> str:
        return f"{self.passed}/{self.total} verified"

    def to_frame(self) -> pd.DataFrame:
        df = pd.DataFrame([vars(i) for i in self.items], columns=["item", "passed", "detail"])
        df["passed"] = df["passed"].map({True: "pass", False: "FAIL"})
        return df

    def to_schema(self) -> RunReportSchema:
        return RunReportSchema(
            command=self.command,
            items=[ItemResultSchema(item=i.item, passed=i.passed, detail=i.detail) for i in self.items],
            passed=self.passed,
            total=self.total,
        )

    def render(self, fmt: str = "text") -> str:
        """Data section of the report; timing goes to the log only."""
        logger.info(f"{self.command}: {self.summary()} in {self.elapsed:.2f}s")
        if fmt == "json":
            return self.to_schema().json(indent=2)
        if fmt == "csv":
            return self.to_frame().to_csv(index=False)
        if not self.items:
            return self.summary()
        table = self.to_frame().to_string(index=False)
        return f"{table}\n{self.summary()}"


def solutions_frame(rows: Sequence[Tuple[QuarticSolution, Optional[Provenance]]]) -> pd.DataFrame:
    """One row per solution; terms pipe-joined, integers as strings."""
    records = []
    for sol, prov in rows:
        records.append(
            {
                "variant": sol.variant.value,
                "k": sol.k,
                "terms": "|".join(str(t) for t in sol.terms),
                "f": str(sol.f),
                "g": str(sol.g),
                "config": prov.config_id if prov else "",
                "multiple": prov.multiple if prov else "",
                "branch": prov.branch if prov else "",
                "repaired_from_paper": prov.repaired_from_paper if prov else False,
            }
        )
    return pd.DataFrame(records, columns=SOLUTION_COLUMNS)


def render_solutions(rows: Sequence[Tuple[QuarticSolution, Optional[Provenance]]], fmt: str = "json") -> str:
    """JSON list of SolutionSchema documents, or CSV via solutions_frame."""
    if fmt == "csv":
        return solutions_frame(rows).to_csv(index=False)
    docs = [solution_to_schema(sol, prov).dict(by_alias=True) for sol, prov in rows]
    return json.dumps(docs, indent=2)
