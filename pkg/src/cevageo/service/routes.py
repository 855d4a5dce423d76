"""HTTP endpoints wrapping the exact-geometry core.

Domain errors surface as 400 responses whose detail carries the exception
class name as a machine-readable code; malformed request shapes are
pydantic's usual 422.
"""

from __future__ import annotations

from fastapi import APIRouter, HTTPException

from .. import __version__, delpezzo
from ..errors import GeometryError, NotInImage, NotOnHypersurface
from ..completion import RankSearchConfig, SearchStatus, low_rank_complete, transversal_checks
from ..instances import (
    face_instance_from_payload,
    format_coords,
    parse_coords,
    triangle_from_payload,
)
from ..projective import ProjectivePoint
from ..simplex import InstanceKind, build_matrix, decide_concurrent, decide_with_oracle, random_instance
from ..triangle import check_ceva
from .models import (
    Check2DRequest,
    Check2DResponse,
    CheckRequest,
    CheckResponse,
    DP6CheckRequest,
    DP6CheckResponse,
    DP6LiftResponse,
    FaceInstanceModel,
    HealthResponse,
    LineTripleRequest,
    RandomRequest,
    RandomResponse,
    RankSearchRequest,
    RankSearchResponse,
    SubsetCheckModel,
)

router = APIRouter()


def _bad_request(exc: GeometryError) -> HTTPException:
    return HTTPException(
        status_code=400,
        detail={"error": type(exc).__name__, "message": str(exc)},
    )


@router.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", service="cevageo", version=__version__)


@router.post("/check2d", response_model=Check2DResponse)
def check2d(request: Check2DRequest) -> Check2DResponse:
    try:
        triangle, feet = triangle_from_payload(request.instance.model_dump())
        report = check_ceva(triangle, *feet)
    except GeometryError as exc:
        raise _bad_request(exc) from exc
    return Check2DResponse.from_report(report)


@router.post("/check", response_model=CheckResponse)
def check(request: CheckRequest) -> CheckResponse:
    try:
        instance = face_instance_from_payload(request.instance.model_dump())
        if request.oracle:
            report = decide_with_oracle(instance)
        else:
            report = decide_concurrent(instance)
    except GeometryError as exc:
        raise _bad_request(exc) from exc
    return CheckResponse.from_report(report)


@router.post("/random", response_model=RandomResponse)
def random_endpoint(request: RandomRequest) -> RandomResponse:
    try:
        instance = random_instance(
            request.n, request.k, request.seed, InstanceKind(request.kind)
        )
    except GeometryError as exc:
        raise _bad_request(exc) from exc
    label = "concurrent" if request.kind == "positive" else "not_concurrent"
    return RandomResponse(instance=FaceInstanceModel.from_core(instance), label=label)


def _parse_triple(request: LineTripleRequest) -> tuple[ProjectivePoint, ...]:
    return tuple(
        ProjectivePoint(parse_coords(values)) for values in (request.d, request.e, request.f)
    )


@router.post("/dp6/check", response_model=DP6CheckResponse)
def dp6_check(request: DP6CheckRequest) -> DP6CheckResponse:
    try:
        d, e, f = _parse_triple(request)
        on_h = delpezzo.on_hypersurface(d, e, f)
        on_s = None
        if request.x is not None:
            x = ProjectivePoint(parse_coords(request.x))
            on_s = delpezzo.on_surface(x, d, e, f)
    except GeometryError as exc:
        raise _bad_request(exc) from exc
    return DP6CheckResponse(on_surface=on_s, on_hypersurface=on_h)


@router.post("/dp6/lift", response_model=DP6LiftResponse)
def dp6_lift(request: LineTripleRequest) -> DP6LiftResponse:
    try:
        d, e, f = _parse_triple(request)
    except GeometryError as exc:
        raise _bad_request(exc) from exc
    try:
        lifted = delpezzo.lift_triple(d, e, f)
    except NotOnHypersurface:
        return DP6LiftResponse(status="not_on_hypersurface")
    except NotInImage as exc:
        excluded = str(exc).split(" has no preimage")[0]
        return DP6LiftResponse(status="not_in_image", excluded_point=excluded)
    return DP6LiftResponse(status="ok", x=format_coords(lifted.x.coords))


@router.post("/rank-search", response_model=RankSearchResponse)
def rank_search(request: RankSearchRequest) -> RankSearchResponse:
    try:
        instance = face_instance_from_payload(request.instance.model_dump())
        config = RankSearchConfig(
            r=request.r,
            tol=request.tol,
            max_iter=request.max_iter,
            restarts=request.restarts,
            seed=request.seed,
        )
        result = low_rank_complete(build_matrix(instance), config)
    except GeometryError as exc:
        raise _bad_request(exc) from exc
    if result.status is not SearchStatus.FOUND:
        return RankSearchResponse(status=result.status.value, residual=result.residual)
    verify_tol = max(100.0 * request.tol, 1e-12)
    checks = transversal_checks(instance, result.subspace, tol=verify_tol)
    return RankSearchResponse(
        status=result.status.value,
        residual=result.residual,
        basis=[[repr(float(v)) for v in row] for row in result.subspace],
        completion=[[repr(float(v)) for v in row] for row in result.completion],
        verification=[
            SubsetCheckModel(
                subset=list(subset), min_singular_value=smallest, intersects=ok
            )
            for subset, smallest, ok in checks
        ],
    )
