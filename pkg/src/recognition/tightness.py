"""
Tightness criteria for closed triangulated manifolds.

Manifoldness is never checked here: callers assert it and every report says
so. The criteria are sufficient conditions only, so a complex that fails them
is reported INCONCLUSIVE, never "not tight".
"""

import logging
from functools import lru_cache
from math import comb
from typing import Any, Dict, Optional

from src.homology.betti import BettiVector, betti
from src.models.certificate import Certificate, CheckResult, CheckVerdict
from src.models.complex import Complex
from src.models.errors import DimOutOfRangeError, NotConnectedError, ToolkitError
from src.recognition.stacked import in_walkup_K, in_walkup_Kbar

logger = logging.getLogger(__name__)

MANIFOLD_NOTE = "manifoldness of the input is an asserted precondition, not verified"


@lru_cache(maxsize=32)
def cached_betti(X: Complex) -> BettiVector:
    """Betti numbers memoized per complex (complexes are immutable)."""
    return betti(X)


def novik_swartz_bound(X: Complex) -> Dict[str, Any]:
    """
    Evaluate C(d+2,2)*beta_1 <= f_1 - (d+1) f_0 + C(d+2,2).

    Returns:
        Dict with both sides, whether the inequality holds and whether it is tight
    """
    d = X.dimension
    f = X.f_vector()
    beta1 = cached_betti(X)[1]
    lhs = comb(d + 2, 2) * beta1
    rhs = f[1] - (d + 1) * f[0] + comb(d + 2, 2)
    return {"lhs": lhs, "rhs": rhs, "holds": lhs <= rhs, "equality": lhs == rhs}


def tight_neighborly(X: Complex, subject: Optional[str] = None) -> Certificate:
    """
    Check C(d+2,2)*beta_1 = C(f_0-d-1, 2).

    Raises:
        DimOutOfRangeError: If dim(X) < 3
    """
    d = X.dimension
    if d < 3:
        raise DimOutOfRangeError(f"Tight-neighborly equation needs dimension >= 3, got {d}")
    f0 = X.n_vertices
    beta1 = cached_betti(X)[1]
    lhs = comb(d + 2, 2) * beta1
    rhs = comb(f0 - d - 1, 2)
    equal = lhs == rhs
    certificate = Certificate(subject=subject or repr(X), parameters={"d": d, "n": f0})
    certificate.notes.append(MANIFOLD_NOTE)
    certificate.add(CheckResult.build(
        "tight-neighborly",
        CheckVerdict.PASS if equal else CheckVerdict.FAIL,
        summary=f"{comb(d + 2, 2)}*{beta1} = {lhs} {'=' if equal else '!='} C({f0 - d - 1},2) = {rhs}",
        witness={"lhs": lhs, "rhs": rhs, "beta1": beta1, "novik_swartz": novik_swartz_bound(X)},
    ))
    return certificate


def tightness_certificate(X: Complex, subject: Optional[str] = None) -> Certificate:
    """
    Sufficient tightness criteria.

    Dimension other than 3: neighborly and in K(d). Dimension 3: neighborly,
    in K(3) and beta_1 = (f_0 - 4)(f_0 - 5)/20.

    Raises:
        NotConnectedError: If X is disconnected
    """
    if not X.is_connected():
        raise NotConnectedError("Tightness criterion needs a connected complex")
    d = X.dimension
    f0 = X.n_vertices
    neighborly = X.is_neighborly(2)
    witness: Dict[str, Any] = {"d": d, "f0": f0, "neighborly": neighborly}

    try:
        in_k = in_walkup_K(X)
        witness["in_K"] = in_k.verdict
        if not in_k.verdict:
            witness["failing_vertices"] = in_k.failing_vertices()
    except ToolkitError as exc:
        in_k = None
        witness["in_K"] = False
        witness["in_K_error"] = str(exc)

    tight = neighborly and in_k is not None and in_k.verdict
    if d == 3:
        beta1 = cached_betti(X)[1]
        witness["beta1"] = beta1
        witness["required_beta1"] = (f0 - 4) * (f0 - 5) / 20
        witness["route"] = "neighborly + K(3) + beta_1 = (f0-4)(f0-5)/20"
        tight = tight and 20 * beta1 == (f0 - 4) * (f0 - 5)
    else:
        witness["route"] = "neighborly member of K(d)"

    witness["classification"] = "TIGHT" if tight else "INCONCLUSIVE"
    witness["strongly_minimal_implied"] = bool(tight)
    certificate = Certificate(subject=subject or repr(X), parameters={"d": d, "n": f0})
    certificate.notes.append(MANIFOLD_NOTE)
    certificate.add(CheckResult.build(
        "tightness",
        CheckVerdict.PASS if tight else CheckVerdict.INCONCLUSIVE,
        summary="TIGHT" if tight else "criterion not met (sufficient conditions only)",
        witness=witness,
    ))
    logger.info(f"Tightness criterion for {X}: {witness['classification']}")
    return certificate


def boundary_consistency(Y: Complex) -> Dict[str, Any]:
    """
    Data-level check of the filling/boundary correspondence.

    For a filling Y in K-bar(d+1): the boundary lies in K(d), has the same
    vertex set, and shares the (d-1)-skeleton with Y. The correspondence is a
    bijection for d >= 4; smaller d are checked but flagged.
    """
    bd = Y.boundary()
    d = bd.dimension
    return {
        "d": d,
        "filling_in_Kbar": in_walkup_Kbar(Y).verdict,
        "boundary_in_K": in_walkup_K(bd).verdict,
        "same_vertices": bd.vertex_set == Y.vertex_set,
        "skeleton_equal": bd.skeleton(d - 1) == Y.skeleton(d - 1),
        "bijection_range": d >= 4,
    }
