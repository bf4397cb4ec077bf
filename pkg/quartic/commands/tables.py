"""`tables`: verify every row of both published tables."""
import logging
from typing import List, Optional

from quartic.commands.report import RunReport
from quartic.solutions.corpus import CorpusRow, table_rows
from quartic.solutions.pipeline import verify

logger = logging.getLogger(__name__)


def cmd_tables(rows: Optional[List[CorpusRow]] = None) -> RunReport:
    report = RunReport("tables")
    for row in rows if rows is not None else table_rows():
        report.add(row.label, verify(row.solution), str(row.solution))
    return report


def add_parser(subparsers):
    parser = subparsers.add_parser("tables", help="verify the 18 rows of both tables")
    parser.set_defaults(func=run)
    return parser


def run(args) -> int:
    report = cmd_tables()
    print(report.render(args.format or "text"))
    return report.exit_code
