"""Heuristic low-rank completion of the face matrix.

Asks whether the partially specified matrix extends to rank r+1, which is
the same as asking for an r-dimensional linear space meeting every cevian
span. No exact criterion is known, so this module works in floating point:
alternating least squares on the specified entries, seeded restarts, and an
independent numeric verification of any claimed transversal. A Found result
is a checkable certificate; NotFoundWithinBudget proves nothing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

import numpy as np

from . import linalg
from .errors import InvalidArgument
from .simplex import FaceInstance, PartialMatrix, face_subsets, _validate_shape


class SearchStatus(Enum):
    FOUND = "found"
    NOT_FOUND_WITHIN_BUDGET = "not_found_within_budget"


@dataclass(frozen=True)
class RankSearchConfig:
    r: int
    tol: float = 1e-8
    max_iter: int = 500
    restarts: int = 10
    seed: int = 0

    def __post_init__(self) -> None:
        if self.r < 0:
            raise InvalidArgument(f"need r >= 0, got {self.r}")
        if not self.tol > 0:
            raise InvalidArgument("tol must be positive")
        if self.max_iter < 1 or self.restarts < 1:
            raise InvalidArgument("max_iter and restarts must be positive")


@dataclass(frozen=True)
class TransversalResult:
    status: SearchStatus
    completion: np.ndarray | None
    subspace: np.ndarray | None
    residual: float


def construct_rank_instance(n: int, k: int, r: int, seed: int) -> PartialMatrix:
    """Instance completable to rank r+1 by construction.

    Every row is a random combination of the rows of a fixed full-rank
    (r+1) x (n+1) matrix, resampled until its entries on the face columns
    are all nonzero.
    """
    _validate_shape(n, k)
    if r < 0 or r + 1 > n + 1:
        raise InvalidArgument(f"need 0 <= r <= n, got r={r} for n={n}")
    rng = random.Random(f"cevageo-rank:{n}:{k}:{r}:{seed}")
    width = n + 1
    while True:
        base = [[Fraction(rng.randint(-5, 5)) for _ in range(width)] for _ in range(r + 1)]
        if linalg.rank(base, width) == r + 1:
            break
    subsets = face_subsets(n, k)
    entries = []
    for subset in subsets:
        while True:
            weights = [rng.randint(-5, 5) for _ in range(r + 1)]
            row = [
                sum(w * base[t][j] for t, w in enumerate(weights))
                for j in range(width)
            ]
            if all(row[j] != 0 for j in subset):
                break
        entries.append(tuple(row[j] if j in subset else None for j in range(width)))
    return PartialMatrix(n=n, k=k, subsets=subsets, entries=tuple(entries))


def low_rank_complete(m: PartialMatrix, cfg: RankSearchConfig) -> TransversalResult:
    """Alternating least squares on the specified entries, with restarts.

    Returns Found as soon as one restart drives the masked relative residual
    below cfg.tol; restarts are deterministic in (cfg.seed, restart index),
    and a full miss reports the best residual seen.
    """
    height = len(m.subsets)
    width = m.n + 1
    rank1 = cfg.r + 1
    if rank1 > min(height, width):
        raise InvalidArgument(
            f"rank {rank1} exceeds the matrix dimensions {height}x{width}"
        )
    mask = np.zeros((height, width), dtype=bool)
    data = np.zeros((height, width))
    for i, (subset, row) in enumerate(zip(m.subsets, m.entries)):
        for j in subset:
            mask[i, j] = True
            data[i, j] = float(row[j])
    norm = float(np.linalg.norm(data[mask]))
    row_cols = [np.flatnonzero(mask[i]) for i in range(height)]
    col_rows = [np.flatnonzero(mask[:, j]) for j in range(width)]

    best_residual = np.inf
    for restart in range(cfg.restarts):
        rng = np.random.default_rng((cfg.seed, restart))
        left = rng.standard_normal((height, rank1))
        right = rng.standard_normal((rank1, width))
        for _ in range(cfg.max_iter):
            for i in range(height):
                cols = row_cols[i]
                left[i], *_ = np.linalg.lstsq(right[:, cols].T, data[i, cols], rcond=None)
            for j in range(width):
                rows = col_rows[j]
                right[:, j], *_ = np.linalg.lstsq(left[rows], data[rows, j], rcond=None)
            completion = left @ right
            residual = float(np.linalg.norm((completion - data)[mask])) / norm
            if residual <= cfg.tol:
                return TransversalResult(
                    status=SearchStatus.FOUND,
                    completion=completion,
                    subspace=_row_space_basis(right),
                    residual=residual,
                )
        best_residual = min(best_residual, residual)
    return TransversalResult(
        status=SearchStatus.NOT_FOUND_WITHIN_BUDGET,
        completion=None,
        subspace=None,
        residual=best_residual,
    )


def _row_space_basis(right: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the row space (drops numerically null rows)."""
    _, singular, vh = np.linalg.svd(right, full_matrices=False)
    keep = singular > max(right.shape) * np.finfo(float).eps * singular[0]
    return vh[: int(np.count_nonzero(keep))]


def span_annihilator(inst: FaceInstance, subset: tuple[int, ...]) -> np.ndarray:
    """Covectors (floats) vanishing on the span of the face point and its
    opposite face: supported on the face indices and orthogonal to the point."""
    coords = np.array([float(c) for c in inst.points[subset].coords])
    coords = coords / np.linalg.norm(coords)
    pivot = int(np.argmax(np.abs(coords)))
    rows = []
    for position, j in enumerate(subset):
        if position == pivot:
            continue
        covector = np.zeros(inst.n + 1)
        covector[subset[pivot]] = coords[position]
        covector[j] = -coords[pivot]
        rows.append(covector)
    return np.array(rows)


def transversal_checks(
    inst: FaceInstance, basis: np.ndarray, tol: float = 1e-6
) -> list[tuple[tuple[int, ...], float, bool]]:
    """Per-face intersection tests for a candidate transversal.

    For each face the stacked annihilators of the candidate space and of the
    cevian span must drop rank; the smallest singular value measures how far
    from intersecting the pair is.
    """
    basis = np.atleast_2d(np.asarray(basis, dtype=float))
    width = inst.n + 1
    if basis.shape[1] != width:
        raise InvalidArgument(f"basis vectors must have length {width}")
    if np.linalg.matrix_rank(basis) < basis.shape[0]:
        raise InvalidArgument("transversal basis is not linearly independent")
    _, _, vh = np.linalg.svd(basis)
    basis_annihilator = vh[basis.shape[0] :]
    results = []
    for subset in inst.subsets:
        stacked = np.vstack([basis_annihilator, span_annihilator(inst, subset)])
        if stacked.shape[0] < width:
            results.append((subset, 0.0, True))
            continue
        singular = np.linalg.svd(stacked, compute_uv=False)
        smallest = float(singular[-1])
        ok = smallest <= tol * max(1.0, float(singular[0]))
        results.append((subset, smallest, ok))
    return results


def verify_transversal(inst: FaceInstance, basis: np.ndarray, tol: float = 1e-6) -> bool:
    """True when the candidate space meets every cevian span (numerically)."""
    return all(ok for _, _, ok in transversal_checks(inst, basis, tol))
