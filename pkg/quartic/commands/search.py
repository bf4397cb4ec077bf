"""`search`: multiplier tuples that make M / content a square."""
import logging
from fractions import Fraction
from typing import List, Optional

import pandas as pd

from quartic.arithmetic.exactnum import rational_sqrt
from quartic.solutions.families import (
    STANDARD_SEXTUPLE,
    FamilyConfig,
    Sextuple,
    Variant,
    derive_identity,
    lookup,
    registry,
    search_multipliers,
)

logger = logging.getLogger(__name__)


def cmd_search(
    variant: Variant,
    k: int,
    bound: int,
    sextuple: Optional[Sextuple] = None,
    configs: Optional[List[FamilyConfig]] = None,
) -> pd.DataFrame:
    """Hits of search_multipliers with their M and m = sqrt(M / content).

    Without an explicit sextuple the registered one for (variant, k) sets the content,
    falling back to 4,3,4,-1,4,-2.
    """
    if sextuple is None:
        cfg = lookup(variant, k, configs)
        sextuple = cfg.sextuple if cfg is not None else STANDARD_SEXTUPLE
    content, _ = derive_identity(sextuple)
    records = []
    for tup in search_multipliers(variant, k, bound, content):
        big_m = sum(v ** 4 for v in tup) + k
        records.append(
            {
                "multipliers": ",".join(str(v) for v in tup),
                "M": big_m,
                "m": str(rational_sqrt(Fraction(big_m) / content)),
            }
        )
    logger.info(f"search {variant.value} k={k} bound={bound}: {len(records)} tuple(s), content {content}")
    return pd.DataFrame(records, columns=["multipliers", "M", "m"])


def _sextuple(text: str) -> Sextuple:
    values = [v for v in text.replace("[", "").replace("]", "").split(",") if v.strip()]
    if len(values) != 6:
        raise ValueError(f"a sextuple needs 6 integers, got {text!r}")
    return Sextuple.of(values)


def add_parser(subparsers):
    parser = subparsers.add_parser("search", help="search multiplier tuples")
    parser.add_argument("variant", type=Variant, choices=list(Variant))
    parser.add_argument("k", type=int)
    parser.add_argument("--bound", type=int, default=20)
    parser.add_argument("--sextuple", type=_sextuple, default=None, help="a,b,c,d,e,f (default: the registered one for k)")
    parser.set_defaults(func=run)
    return parser


def run(args) -> int:
    df = cmd_search(args.variant, args.k, args.bound, args.sextuple, registry(args.registry))
    if args.format == "csv":
        print(df.to_csv(index=False), end="")
    elif args.format == "json":
        print(df.to_json(orient="records", indent=2))
    else:
        print(df.to_string(index=False) if len(df) else "no tuples found")
    return 0
