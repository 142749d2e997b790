"""
Induced-subcomplex injectivity checks.

A complex X is tight when H_j(Y) -> H_j(X) is injective for every induced
subcomplex Y. Checking all 2^n subsets is out of reach, so this module checks
seeded pseudo-random subsets (and any explicitly given ones).

Injectivity in degree j is decided from ranks only. A j-chain of Y that bounds
in X lies in B_j(X) intersected with the chains supported on Y; that space has
dimension rank d_{j+1}(X) minus the rank of d_{j+1}(X) restricted to the rows
of j-faces outside Y. The map is injective iff that dimension equals
rank d_{j+1}(Y).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from src.homology.betti import betti, boundary_matrix
from src.homology.gf2_matrix import Gf2Matrix
from src.models.certificate import Certificate, CheckResult, CheckVerdict
from src.models.complex import Complex
from src.models.errors import NotConnectedError
from src.utils.config import get_config

logger = logging.getLogger(__name__)


@dataclass
class DegreeReport:
    """Injectivity data for one degree."""
    degree: int
    betti_sub: int  # beta_j(Y)
    image_rank: int  # rank of H_j(Y) -> H_j(X)

    @property
    def injective(self) -> bool:
        return self.image_rank == self.betti_sub


@dataclass
class InjectivityResult:
    """Injectivity of H_*(Y) -> H_*(X) for one induced subcomplex Y."""
    subset: Tuple[int, ...]
    degrees: List[DegreeReport] = field(default_factory=list)

    @property
    def injective(self) -> bool:
        return all(r.injective for r in self.degrees)

    def first_failure(self) -> Optional[DegreeReport]:
        return next((r for r in self.degrees if not r.injective), None)


class InducedHomologyChecker:
    """
    Checks injectivity for many induced subcomplexes of one complex.

    Boundary matrices and their ranks of the ambient complex are computed
    once and reused for every subset.
    """

    def __init__(self, X: Complex):
        self.X = X
        self._matrices: Dict[int, Gf2Matrix] = {}
        self._ranks: Dict[int, int] = {}

    def _ambient(self, k: int) -> Tuple[Gf2Matrix, int]:
        if k not in self._matrices:
            self._matrices[k] = boundary_matrix(self.X, k)
            self._ranks[k] = self._matrices[k].rank()
        return self._matrices[k], self._ranks[k]

    def check(self, subset: Iterable[int]) -> InjectivityResult:
        W = tuple(sorted(set(subset)))
        Y = self.X.induced(W)
        result = InjectivityResult(subset=W)
        if Y.is_empty:
            return result
        keep = set(W)
        beta_Y = betti(Y)
        for j in range(Y.dimension + 1):
            if j + 1 > self.X.dimension:
                # nothing bounds in the top degree
                result.degrees.append(DegreeReport(j, beta_Y[j], beta_Y[j]))
                continue
            matrix, rank_x = self._ambient(j + 1)
            outside = [i for i, face in enumerate(self.X.faces(j)) if not keep.issuperset(face)]
            rank_outside = matrix.select_rows(outside).rank() if outside else 0
            rank_y = boundary_matrix(Y, j + 1).rank() if j + 1 <= Y.dimension else 0
            kernel = (rank_x - rank_outside) - rank_y
            result.degrees.append(DegreeReport(j, beta_Y[j], beta_Y[j] - kernel))
        return result


def check_induced_injectivity(X: Complex, subset: Iterable[int]) -> InjectivityResult:
    """Injectivity of H_*(X[W]) -> H_*(X) for a single vertex subset W."""
    return InducedHomologyChecker(X).check(subset)


def sample_subsets(vertices: Sequence[int], samples: int, seed: int) -> List[Tuple[int, ...]]:
    """
    Seeded subset sampler.

    Draws a size uniformly from {3, ..., f0 - 1}, then a uniform subset of that
    size, using numpy's 64-bit PCG generator.
    """
    rng = np.random.default_rng(seed)
    verts = np.asarray(sorted(vertices), dtype=np.int64)
    n = len(verts)
    low = min(3, max(n - 1, 1))
    high = max(n - 1, low)
    subsets = []
    for _ in range(samples):
        size = int(rng.integers(low, high + 1))
        chosen = rng.choice(verts, size=size, replace=False)
        subsets.append(tuple(sorted(int(v) for v in chosen)))
    return subsets


def tightness_spotcheck(
    X: Complex,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    subsets: Optional[Iterable[Iterable[int]]] = None,
    subject: Optional[str] = None,
    progress: bool = False,
) -> Certificate:
    """
    Spot-check tightness on seeded random induced subcomplexes.

    Args:
        X: connected complex
        samples: number of random subsets (config default if None)
        seed: PRNG seed (config default if None)
        subsets: explicit subsets checked before the random ones
        subject: certificate subject
        progress: show a progress bar

    Returns:
        Certificate with one ``spotcheck`` entry; FAIL carries the first
        failing subset, degree and ranks

    Raises:
        NotConnectedError: If X is disconnected
    """
    homology = get_config().get_homology_config()
    if samples is None:
        samples = int(homology.get("spotcheck_samples", 200))
    if seed is None:
        seed = int(homology.get("spotcheck_seed", 20130611))
    if not X.is_connected():
        raise NotConnectedError("Tightness spot check needs a connected complex")

    todo = [tuple(sorted(s)) for s in (subsets or [])]
    todo.extend(sample_subsets(X.vertices, samples, seed))

    checker = InducedHomologyChecker(X)
    certificate = Certificate(
        subject=subject or repr(X),
        parameters={"samples": samples, "seed": seed, "explicit_subsets": len(todo) - samples},
    )
    failure: Optional[InjectivityResult] = None
    for W in tqdm(todo, desc="spotcheck", disable=not progress):
        result = checker.check(W)
        if not result.injective:
            failure = result
            break

    if failure is None:
        certificate.add(CheckResult.build(
            "spotcheck", CheckVerdict.PASS,
            summary=f"{len(todo)} induced subcomplexes, all injective",
            witness={"checked": len(todo)},
        ))
        logger.info(f"Spot check passed on {len(todo)} subsets of {X}")
    else:
        bad = failure.first_failure()
        certificate.add(CheckResult.build(
            "spotcheck", CheckVerdict.FAIL,
            summary=f"H_{bad.degree} of induced subcomplex does not inject",
            witness={
                "subset": list(failure.subset),
                "degree": bad.degree,
                "betti_sub": bad.betti_sub,
                "image_rank": bad.image_rank,
            },
        ))
        logger.warning(f"Spot check failed on subset {failure.subset} in degree {bad.degree}")
    return certificate
