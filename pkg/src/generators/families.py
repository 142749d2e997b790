"""
The two infinite families of neighborly fillings and their boundaries.

For d >= 2 and n = d^2 + 5d + 5 each family is a pure (d+1)-dimensional
complex on vertices 0..n-1 (vertex a_i is the integer i) with (d+2)n facets
sigma_i, mu_i and alpha_{k,i} (1 <= k <= d), subscripts taken mod n. The
manifold of the family is the boundary of its filling.

Family M:
    sigma_i     = {i - j : 0 <= j <= d+1}
    mu_i        = {i} + {i + j(d+3) - 1 : 1 <= j <= d+1}
    alpha_{k,i} = {i} + {i - j : 2 <= j <= d+2-k} + {i + j(d+3) - 1 : 1 <= j <= k}

Family N:
    sigma_i     as for M
    mu_i        = {i - j(d+3) : 0 <= j <= d+1}
    alpha_{k,i} = {i} + {i - j : 2 <= j <= d+2-k} + {i - j(d+3) : 2 <= j <= k+1}
"""

import logging
from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property
from typing import Callable, Dict, List, NamedTuple, Tuple

from src.models.complex import Complex, Face
from src.models.errors import ConstructionBugError, DimOutOfRangeError

logger = logging.getLogger(__name__)


class FacetKind(IntEnum):
    """Kinds of named facets; the integer value fixes iteration order."""
    SIGMA = 0
    ALPHA = 1
    MU = 2


class FacetLabel(NamedTuple):
    """Name of a facet: kind, index k (0 for sigma and mu) and subscript i."""
    kind: FacetKind
    k: int
    i: int

    def __str__(self) -> str:
        if self.kind is FacetKind.ALPHA:
            return f"alpha_{self.k},{self.i}"
        return f"{self.kind.name.lower()}_{self.i}"


def family_size(d: int) -> int:
    """Number of vertices n = d^2 + 5d + 5."""
    return d * d + 5 * d + 5


@dataclass
class FamilyComplexes:
    """
    A generated family member with its named facets.

    Attributes:
        family: "M" or "N"
        d: dimension of the manifold (the filling has dimension d+1)
        n: number of vertices
        facets: facet label -> facet of the filling
    """
    family: str
    d: int
    n: int
    facets: Dict[FacetLabel, Face] = field(default_factory=dict)

    @cached_property
    def filling(self) -> Complex:
        return Complex.from_canonical(self.facets.values())

    @cached_property
    def manifold(self) -> Complex:
        return self.filling.boundary()

    @property
    def name(self) -> str:
        return f"{self.family}^{self.d}_{self.n}"

    def facet(self, kind: FacetKind, k: int, i: int) -> Face:
        return self.facets[FacetLabel(kind, k, i % self.n)]

    def label_of(self) -> Dict[Face, FacetLabel]:
        return {face: label for label, face in self.facets.items()}

    @cached_property
    def sigma_part(self) -> Complex:
        """E_1: the sigma facets; their dual graph is the cycle C_1."""
        return Complex.from_canonical(
            f for lab, f in self.facets.items() if lab.kind is FacetKind.SIGMA
        )

    @cached_property
    def mu_part(self) -> Complex:
        """E_2: the mu facets."""
        return Complex.from_canonical(
            f for lab, f in self.facets.items() if lab.kind is FacetKind.MU
        )

    def alpha_part(self, i: int) -> Complex:
        """F_i: the stacked ball with facets alpha_{1,i}..alpha_{d,i}."""
        return Complex.from_canonical(
            self.facet(FacetKind.ALPHA, k, i) for k in range(1, self.d + 1)
        )

    def __iter__(self):
        return iter((self.filling, self.manifold))


def _build(family: str, d: int, mu: Callable, alpha: Callable) -> FamilyComplexes:
    if d < 2:
        raise DimOutOfRangeError(f"Families need d >= 2, got {d}")
    n = family_size(d)
    result = FamilyComplexes(family=family, d=d, n=n)

    def face(labels: List[int]) -> Face:
        return Face(x % n for x in labels)

    for i in range(n):
        result.facets[FacetLabel(FacetKind.SIGMA, 0, i)] = face([i - j for j in range(d + 2)])
        result.facets[FacetLabel(FacetKind.MU, 0, i)] = face(mu(i, d))
        for k in range(1, d + 1):
            result.facets[FacetLabel(FacetKind.ALPHA, k, i)] = face(alpha(k, i, d))

    faces = list(result.facets.values())
    if any(len(f) != d + 2 for f in faces) or len(set(faces)) != (d + 2) * n:
        raise ConstructionBugError(f"{family}^{d}: facets collide mod {n}")
    logger.info(f"Built filling {result.name} with {len(faces)} facets")
    return result


def _mu_m(i: int, d: int) -> List[int]:
    return [i] + [i + j * (d + 3) - 1 for j in range(1, d + 2)]


def _alpha_m(k: int, i: int, d: int) -> List[int]:
    return [i] + [i - j for j in range(2, d + 3 - k)] + [i + j * (d + 3) - 1 for j in range(1, k + 1)]


def _mu_n(i: int, d: int) -> List[int]:
    return [i - j * (d + 3) for j in range(d + 2)]


def _alpha_n(k: int, i: int, d: int) -> List[int]:
    return [i] + [i - j for j in range(2, d + 3 - k)] + [i - j * (d + 3) for j in range(2, k + 2)]


def family_M(d: int) -> FamilyComplexes:
    """The M family at dimension d (filling of dimension d+1 and its boundary)."""
    return _build("M", d, _mu_m, _alpha_m)


def family_N(d: int) -> FamilyComplexes:
    """The N family at dimension d."""
    return _build("N", d, _mu_n, _alpha_n)


def family(name: str, d: int) -> FamilyComplexes:
    builders = {"M": family_M, "N": family_N}
    try:
        return builders[name.upper()](d)
    except KeyError:
        raise ValueError(f"Unknown family {name!r}; expected M or N") from None


def connecting_ridges(fam: FamilyComplexes, i: int) -> Tuple[Face, Face]:
    """
    The two ridges along which F_i meets E_1 and E_2.

    A_i = sigma_i minus a_{i-1}; B_i = mu_i minus the vertex opposite to alpha_{d,i}.
    """
    sigma = fam.facet(FacetKind.SIGMA, 0, i)
    mu = fam.facet(FacetKind.MU, 0, i)
    a = Face(set(sigma) & set(fam.facet(FacetKind.ALPHA, 1, i)))
    b = Face(set(mu) & set(fam.facet(FacetKind.ALPHA, fam.d, i)))
    return a, b
