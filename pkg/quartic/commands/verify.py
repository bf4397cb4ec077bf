"""`verify FILE`: re-check solutions written by `solve` or `families --eval`."""
import json
import logging
from typing import List, Optional, Tuple

import pandas as pd
from pydantic import ValidationError

from quartic.commands.report import RunReport
from quartic.errors import ConfigError
from quartic.schemas import SolutionSchema, schema_to_solution
from quartic.solutions.families import Variant
from quartic.solutions.pipeline import Provenance, QuarticSolution, verify

logger = logging.getLogger(__name__)

Loaded = List[Tuple[QuarticSolution, Optional[Provenance]]]


def _from_csv(path: str) -> Loaded:
    df = pd.read_csv(path, dtype=str, keep_default_na=False)
    missing = {"variant", "k", "terms", "f", "g"} - set(df.columns)
    if missing:
        raise ConfigError(f"{path} lacks columns {sorted(missing)}")
    rows: Loaded = []
    for record in df.to_dict(orient="records"):
        sol = QuarticSolution(
            variant=Variant(record["variant"]),
            k=int(record["k"]),
            terms=tuple(int(t) for t in record["terms"].split("|")),
            f=int(record["f"]),
            g=int(record["g"]),
        )
        rows.append((sol, None))
    return rows


def load_solutions(path: str) -> Loaded:
    """Solutions from a JSON list, a single JSON solution, or a CSV file.

    Raises:
        ConfigError: if the file cannot be read or parsed
    """
    try:
        if path.lower().endswith(".csv"):
            return _from_csv(path)
        with open(path) as fh:
            doc = json.load(fh)
        docs = doc if isinstance(doc, list) else [doc]
        return [schema_to_solution(SolutionSchema.parse_obj(d)) for d in docs]
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e}")
    except (ValidationError, ValueError) as e:
        raise ConfigError(f"{path} is not a solution document: {e}")


def cmd_verify(rows: Loaded) -> RunReport:
    report = RunReport("verify")
    for i, (sol, prov) in enumerate(rows):
        label = f"#{i + 1} {sol.variant.value} k={sol.k}"
        if prov is not None:
            label += f" ({prov.config_id} n={prov.multiple})"
        report.add(label, verify(sol), str(sol))
    return report


def add_parser(subparsers):
    parser = subparsers.add_parser("verify", help="verify solutions from a JSON or CSV file")
    parser.add_argument("file")
    parser.set_defaults(func=run)
    return parser


def run(args) -> int:
    report = cmd_verify(load_solutions(args.file))
    print(report.render(args.format or "text"))
    return report.exit_code
