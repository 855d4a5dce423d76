"""Pydantic request/response models for the HTTP surface.

These models validate shape only; exact-rational semantics (string rationals,
subset ordering, geometric invariants) are enforced by the core parsers, so
the CLI and the service cannot drift apart.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

from ..instances import SCHEMA_VERSION, format_coords, format_rational
from ..simplex import ConcurrencyReport, Criterion, FaceInstance, Minor, TripleViolation
from ..triangle import INFINITE, CevaReport


class FacePointModel(BaseModel):
    subset: list[int]
    coords: list[str]


class FaceInstanceModel(BaseModel):
    schema_version: int = SCHEMA_VERSION
    n: int
    k: int
    points: list[FacePointModel]

    @classmethod
    def from_core(cls, inst: FaceInstance) -> "FaceInstanceModel":
        return cls(
            n=inst.n,
            k=inst.k,
            points=[
                FacePointModel(subset=list(subset), coords=format_coords(p.coords))
                for subset, p in inst.points.items()
            ],
        )


class TriangleInstanceModel(BaseModel):
    schema_version: int = SCHEMA_VERSION
    triangle: list[list[str]] = Field(description="three vertices as rational pairs")
    feet: list[list[str]] = Field(description="feet on BC, AC, AB as rational pairs")


class Check2DRequest(BaseModel):
    instance: TriangleInstanceModel


class Check2DResponse(BaseModel):
    concurrent: bool
    determinant: str
    ratio_product: Optional[str] = Field(
        default=None,
        description='"p/q", "inf", or null when both monomials vanish',
    )
    common_point: Optional[list[str]] = None

    @classmethod
    def from_report(cls, report: CevaReport) -> "Check2DResponse":
        if report.ratio_product is None:
            ratio = None
        elif report.ratio_product is INFINITE:
            ratio = "inf"
        else:
            ratio = format_rational(report.ratio_product)
        return cls(
            concurrent=report.concurrent,
            determinant=format_rational(report.determinant),
            ratio_product=ratio,
            common_point=(
                format_coords(report.common_point.coords) if report.common_point else None
            ),
        )


class CheckRequest(BaseModel):
    instance: FaceInstanceModel
    oracle: bool = False


class TripleWitnessModel(BaseModel):
    a: int
    b: int
    c: int
    product: str


class MinorWitnessModel(BaseModel):
    row_i: list[int]
    row_j: list[int]
    col_i: int
    col_j: int
    value: str


class CheckResponse(BaseModel):
    verdict: bool
    criterion: Literal["triple_ratios", "minors"]
    witnesses: list[Union[TripleWitnessModel, MinorWitnessModel]]
    common_point: Optional[list[str]] = None
    oracle_agrees: Optional[bool] = None

    @classmethod
    def from_report(cls, report: ConcurrencyReport) -> "CheckResponse":
        witnesses: list[Union[TripleWitnessModel, MinorWitnessModel]] = []
        for witness in report.witnesses:
            if isinstance(witness, TripleViolation):
                witnesses.append(
                    TripleWitnessModel(
                        a=witness.a,
                        b=witness.b,
                        c=witness.c,
                        product=format_rational(witness.product),
                    )
                )
            elif isinstance(witness, Minor):
                witnesses.append(
                    MinorWitnessModel(
                        row_i=list(witness.row_i),
                        row_j=list(witness.row_j),
                        col_i=witness.col_i,
                        col_j=witness.col_j,
                        value=format_rational(witness.value),
                    )
                )
        return cls(
            verdict=report.verdict,
            criterion=report.criterion.value,
            witnesses=witnesses,
            common_point=(
                format_coords(report.common_point.coords) if report.common_point else None
            ),
            oracle_agrees=report.oracle_agrees,
        )


class RandomRequest(BaseModel):
    n: int
    k: int
    seed: int = 0
    kind: Literal["positive", "perturbed"] = "positive"


class RandomResponse(BaseModel):
    instance: FaceInstanceModel
    label: Literal["concurrent", "not_concurrent"]


class LineTripleRequest(BaseModel):
    d: list[str]
    e: list[str]
    f: list[str]


class DP6CheckRequest(LineTripleRequest):
    x: Optional[list[str]] = None


class DP6CheckResponse(BaseModel):
    on_surface: Optional[bool] = Field(
        default=None, description="null when no plane point was supplied"
    )
    on_hypersurface: bool


class DP6LiftResponse(BaseModel):
    status: Literal["ok", "not_on_hypersurface", "not_in_image"]
    x: Optional[list[str]] = None
    excluded_point: Optional[str] = None


class RankSearchRequest(BaseModel):
    instance: FaceInstanceModel
    r: int
    tol: float = 1e-8
    max_iter: int = 500
    restarts: int = 10
    seed: int = 0


class SubsetCheckModel(BaseModel):
    subset: list[int]
    min_singular_value: float
    intersects: bool


class RankSearchResponse(BaseModel):
    status: Literal["found", "not_found_within_budget"]
    residual: float
    basis: Optional[list[list[str]]] = Field(
        default=None, description="orthonormal transversal basis, decimal strings"
    )
    completion: Optional[list[list[str]]] = None
    verification: Optional[list[SubsetCheckModel]] = None


class HealthResponse(BaseModel):
    status: str
    service: str
    version: str
