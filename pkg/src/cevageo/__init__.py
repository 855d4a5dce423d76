"""cevageo: exact projective geometry for cevian concurrency problems."""

__version__ = "0.1.0"

from .errors import GeometryError
from .projective import (
    LinearSubspace,
    ProjectivePoint,
    coordinate_subspace,
    embed,
    intersect,
    normalize,
    opposite_face,
    point,
    project,
    span,
)
from .triangle import (
    INFINITE,
    CevaReport,
    CevianTriple,
    Triangle2D,
    cevian_coordinates,
    cevian_feet,
    check_ceva,
    concurrency_determinant,
    embedding_transform,
    ratio_product,
)
from .delpezzo import (
    HypersurfacePoint,
    SurfacePoint,
    excluded_triple,
    lift_to_surface,
    lift_triple,
    on_affine_blowup,
    on_hypersurface,
    on_surface,
    project_to_hypersurface,
)
from .simplex import (
    ConcurrencyReport,
    Criterion,
    FaceInstance,
    InstanceKind,
    PartialMatrix,
    build_matrix,
    check_triples_k1,
    complete_rank1,
    decide_concurrent,
    decide_with_oracle,
    face_subsets,
    geometric_oracle,
    matrix_to_instance,
    random_instance,
    specified_minors,
)
from .completion import (
    RankSearchConfig,
    SearchStatus,
    TransversalResult,
    construct_rank_instance,
    low_rank_complete,
    verify_transversal,
)

__all__ = [
    "GeometryError",
    "LinearSubspace",
    "ProjectivePoint",
    "coordinate_subspace",
    "embed",
    "intersect",
    "normalize",
    "opposite_face",
    "point",
    "project",
    "span",
    "INFINITE",
    "CevaReport",
    "CevianTriple",
    "Triangle2D",
    "cevian_coordinates",
    "cevian_feet",
    "check_ceva",
    "concurrency_determinant",
    "embedding_transform",
    "ratio_product",
    "HypersurfacePoint",
    "SurfacePoint",
    "excluded_triple",
    "lift_to_surface",
    "lift_triple",
    "on_affine_blowup",
    "on_hypersurface",
    "on_surface",
    "project_to_hypersurface",
    "ConcurrencyReport",
    "Criterion",
    "FaceInstance",
    "InstanceKind",
    "PartialMatrix",
    "build_matrix",
    "check_triples_k1",
    "complete_rank1",
    "decide_concurrent",
    "decide_with_oracle",
    "face_subsets",
    "geometric_oracle",
    "matrix_to_instance",
    "random_instance",
    "specified_minors",
    "RankSearchConfig",
    "SearchStatus",
    "TransversalResult",
    "construct_rank_instance",
    "low_rank_complete",
    "verify_transversal",
    "__version__",
]
