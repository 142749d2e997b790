"""
Simplicial homology over the two-element field.

Betti numbers come from the ranks of the boundary operators:
beta_k = f_k - rank d_k - rank d_{k+1}. Homology is computed from the full
face enumeration, so a size guard refuses complexes whose middle-dimensional
face count could exceed the configured cap.
"""

import logging
from dataclasses import dataclass
from math import ceil, comb
from typing import Dict, Iterable, List, Optional, Tuple

from src.homology.gf2_matrix import Gf2Matrix
from src.models.complex import Complex, Face
from src.models.errors import DimOutOfRangeError, TooLargeError
from src.utils.config import get_config

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiVector:
    """
    Betti numbers beta_0..beta_d over the two-element field.

    Attributes:
        values: the Betti numbers in increasing degree
    """
    values: Tuple[int, ...]

    @property
    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.values))

    def __getitem__(self, k: int) -> int:
        return self.values[k] if 0 <= k < len(self.values) else 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BettiVector):
            return self.values == other.values
        if isinstance(other, (tuple, list)):
            return self.values == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)


def _face_index(faces: Iterable[Face]) -> Dict[Face, int]:
    return {face: i for i, face in enumerate(faces)}


def boundary_matrix(X: Complex, k: int) -> Gf2Matrix:
    """
    Boundary operator d_k over the two-element field.

    Args:
        X: complex
        k: degree, 1 <= k <= dim(X)

    Returns:
        Matrix with rows indexed by (k-1)-faces and columns by k-faces, both in
        lexicographic order; entry 1 iff the row face lies in the column face

    Raises:
        DimOutOfRangeError: If k is outside 1..dim(X)
    """
    if k < 1 or k > X.dimension:
        raise DimOutOfRangeError(f"Boundary degree {k} outside 1..{X.dimension}")
    rows = _face_index(X.faces(k - 1))
    cols = X.faces(k)
    row_idx: List[int] = []
    col_idx: List[int] = []
    for j, face in enumerate(cols):
        for p in range(len(face)):
            row_idx.append(rows[face[:p] + face[p + 1:]])
            col_idx.append(j)
    return Gf2Matrix.from_entries(len(rows), len(cols), row_idx, col_idx)


def check_size(X: Complex, cap: Optional[int] = None) -> None:
    """Refuse complexes whose middle face count bound C(f0, ceil(d/2)) exceeds ``cap``."""
    if cap is None:
        cap = int(get_config().get("homology.max_middle_faces", 5_000_000))
    d = max(X.dimension, 0)
    bound = comb(X.n_vertices, ceil(d / 2))
    if bound > cap:
        raise TooLargeError(
            f"C({X.n_vertices}, {ceil(d / 2)}) = {bound} exceeds homology cap {cap}",
            size=bound,
            cap=cap,
        )


def boundary_ranks(X: Complex) -> List[int]:
    """Ranks of d_0..d_{d+1}, with the two outer maps zero."""
    d = X.dimension
    ranks = [0] * (d + 2)
    for k in range(1, d + 1):
        ranks[k] = boundary_matrix(X, k).rank()
    return ranks


def betti(X: Complex, cap: Optional[int] = None) -> BettiVector:
    """
    Betti numbers of X over the two-element field.

    Raises:
        TooLargeError: If the complex is above the configured homology cap
    """
    if X.is_empty:
        return BettiVector(())
    check_size(X, cap)
    f = X.f_vector()
    ranks = boundary_ranks(X)
    values = tuple(f[k] - ranks[k] - ranks[k + 1] for k in range(X.dimension + 1))
    result = BettiVector(values)
    logger.info(f"Betti numbers of {X}: {values}")
    return result


def induced(X: Complex, vertices: Iterable[int]) -> Complex:
    """Induced subcomplex on ``vertices`` (faces of X with all vertices in the set)."""
    return X.induced(vertices)
