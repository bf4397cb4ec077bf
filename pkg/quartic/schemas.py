"""Pydantic schemas for every document the toolkit reads or writes.

Integers travel as decimal strings and rationals as "num/den" strings, since the
published solutions are far past 64 bits.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, validator

from quartic.arithmetic.exactnum import format_rational, to_rational
from quartic.curves.curve import INFINITY, CurvePoint
from quartic.errors import ConfigError
from quartic.solutions.families import FamilyConfig, Sextuple, Variant
from quartic.solutions.pipeline import Provenance, QuarticSolution

logger = logging.getLogger(__name__)


def _check_integer(value: str) -> str:
    text = value.strip()
    if not text.lstrip("-").isdigit():
        raise ValueError(f"expected a decimal integer, got {value!r}")
    return text


def _check_rational(value: str) -> str:
    try:
        to_rational(value)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"expected an integer or num/den fraction, got {value!r}")
    return value.strip()


class SchemaBase(BaseModel):
    class Config:
        allow_population_by_field_name = True
        use_enum_values = True


# Point schemas
class PointSchema(SchemaBase):
    x: Optional[str] = Field(None, alias="X")
    y: Optional[str] = Field(None, alias="Y")
    infinity: bool = False

    @validator("x", "y")
    def coordinate_is_rational(cls, v):
        return None if v is None else _check_rational(v)

    @validator("infinity", always=True)
    def affine_needs_both(cls, v, values):
        if not v and (values.get("x") is None or values.get("y") is None):
            raise ValueError("an affine point needs both X and Y")
        return v

    def dict(self, **kwargs):
        """{"X", "Y"} for affine points and {"infinity": true} for the identity."""
        data = super().dict(**kwargs)
        if self.infinity:
            return {"infinity": True}
        data.pop("infinity", None)
        return data


# Solution schemas
class ProvenanceSchema(SchemaBase):
    config: str
    multiple: int
    point: Optional[PointSchema] = None
    branch: int = 1
    repaired_from_paper: bool = False

    @validator("branch")
    def branch_sign(cls, v):
        if v not in (1, -1):
            raise ValueError("branch must be 1 or -1")
        return v


class SolutionSchema(SchemaBase):
    variant: Variant
    k: int
    terms: List[str]
    f: str
    g: str
    provenance: Optional[ProvenanceSchema] = None

    @validator("terms", each_item=True)
    def term_is_integer(cls, v):
        return _check_integer(v)

    @validator("f", "g")
    def entry_is_integer(cls, v):
        return _check_integer(v)


# Registry schemas
class SextupleSchema(SchemaBase):
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int


class FamilyConfigSchema(SchemaBase):
    variant: Variant
    k: int = Field(..., ge=1)
    sextuple: SextupleSchema
    multipliers: List[str]
    branch: int = 1
    seed: Optional[PointSchema] = None
    note: str = ""

    @validator("multipliers", each_item=True)
    def multiplier_is_rational(cls, v):
        return _check_rational(v)


class RegistrySchema(SchemaBase):
    configs: List[FamilyConfigSchema]


# Report schemas
class ItemResultSchema(SchemaBase):
    item: str
    passed: bool
    detail: str = ""


class RunReportSchema(SchemaBase):
    command: str
    items: List[ItemResultSchema]
    passed: int
    total: int


def point_to_schema(p: CurvePoint) -> PointSchema:
    if p.is_infinity:
        return PointSchema(infinity=True)
    return PointSchema(x=format_rational(p.x), y=format_rational(p.y))


def schema_to_point(schema: PointSchema) -> CurvePoint:
    if schema.infinity:
        return INFINITY
    return CurvePoint.affine(schema.x, schema.y)


def solution_to_schema(sol: QuarticSolution, provenance: Optional[Provenance] = None) -> SolutionSchema:
    prov = None
    if provenance is not None:
        prov = ProvenanceSchema(
            config=provenance.config_id,
            multiple=provenance.multiple,
            point=point_to_schema(provenance.point) if provenance.point is not None else None,
            branch=provenance.branch,
            repaired_from_paper=provenance.repaired_from_paper,
        )
    return SolutionSchema(
        variant=sol.variant,
        k=sol.k,
        terms=[str(t) for t in sol.terms],
        f=str(sol.f),
        g=str(sol.g),
        provenance=prov,
    )


def schema_to_solution(schema: SolutionSchema) -> Tuple[QuarticSolution, Optional[Provenance]]:
    sol = QuarticSolution(
        variant=Variant(schema.variant),
        k=schema.k,
        terms=tuple(int(t) for t in schema.terms),
        f=int(schema.f),
        g=int(schema.g),
    )
    prov = None
    if schema.provenance is not None:
        p = schema.provenance
        prov = Provenance(
            config_id=p.config,
            multiple=p.multiple,
            point=schema_to_point(p.point) if p.point is not None else None,
            branch=p.branch,
            repaired_from_paper=p.repaired_from_paper,
        )
    return sol, prov


def config_to_schema(cfg: FamilyConfig) -> FamilyConfigSchema:
    s = cfg.sextuple
    return FamilyConfigSchema(
        variant=cfg.variant,
        k=cfg.k,
        sextuple=SextupleSchema(a=s.a, b=s.b, c=s.c, d=s.d, e=s.e, f=s.f),
        multipliers=[format_rational(m) for m in cfg.multipliers],
        branch=cfg.branch,
        seed=point_to_schema(cfg.seed) if cfg.seed is not None else None,
        note=cfg.note,
    )


def schema_to_config(schema: FamilyConfigSchema) -> FamilyConfig:
    s = schema.sextuple
    try:
        return FamilyConfig(
            variant=Variant(schema.variant),
            k=schema.k,
            sextuple=Sextuple(s.a, s.b, s.c, s.d, s.e, s.f),
            multipliers=tuple(Fraction(to_rational(m)) for m in schema.multipliers),
            branch=schema.branch,
            seed=schema_to_point(schema.seed) if schema.seed is not None else None,
            note=schema.note,
        )
    except ValueError as e:
        raise ConfigError(f"invalid configuration for k={schema.k}: {e}")


def registry_to_json(configs: List[FamilyConfig]) -> str:
    doc = RegistrySchema(configs=[config_to_schema(c) for c in configs])
    return doc.json(by_alias=True, indent=2)


def load_registry(path: str) -> List[FamilyConfig]:
    """Read a registry document.

    Raises:
        ConfigError: if the file is missing or does not match RegistrySchema
    """
    try:
        doc = RegistrySchema.parse_file(path)
    except OSError as e:
        raise ConfigError(f"cannot read registry {path}: {e}")
    except ValidationError as e:
        raise ConfigError(f"registry {path} is invalid: {e}")
    return [schema_to_config(c) for c in doc.configs]
