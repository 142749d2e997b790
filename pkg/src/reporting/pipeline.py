"""
Verification pipeline: a registry of named checks and a runner that collects
their results into one certificate.

Each check takes a `PipelineContext` and returns a single `CheckResult`.
Precondition errors raised by the library never escape a check; they become
FAIL, or INCONCLUSIVE when the input was refused rather than judged.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from src.homology.spotcheck import tightness_spotcheck
from src.models.certificate import Certificate, CheckResult, CheckVerdict, truncate_witness
from src.models.complex import Complex
from src.models.errors import (
    ConeNotSupportedError,
    ConstructionBugError,
    DimOutOfRangeError,
    GroupOrderOverflowError,
    TooLargeError,
    ToolkitError,
)
from src.orientation.orientability import is_coherent, orientability
from src.recognition.stacked import in_walkup_K, in_walkup_Kbar
from src.recognition.tightness import MANIFOLD_NOTE, cached_betti, tight_neighborly, tightness_certificate
from src.symmetry.search import ROW0, automorphism_group, link_cycle, same_cycle, verify_cyclic_action
from src.utils.config import get_config

logger = logging.getLogger(__name__)

# Errors meaning the input was refused, not that a property failed
REFUSALS = (ConeNotSupportedError, TooLargeError, GroupOrderOverflowError, DimOutOfRangeError)


@dataclass
class PipelineContext:
    """
    Inputs shared by all checks of one run.

    Attributes:
        complex: the complex under test
        n_cyclic: n for the cyclic-action check (labels must be 0..n-1)
        samples: spot-check sample count (config default if None)
        seed: spot-check seed (config default if None)
        vertex: vertex for the link-order check
        expect_cycle: expected link cycle for the link-order check
        expect_betti: expected Betti vector
        expect_orientable: expected orientability
        expect_aut_order: expected automorphism group order
        max_group_order: cap for the automorphism search
        progress: show progress bars
    """
    complex: Complex
    n_cyclic: Optional[int] = None
    samples: Optional[int] = None
    seed: Optional[int] = None
    vertex: int = 0
    expect_cycle: Optional[Tuple[int, ...]] = None
    expect_betti: Optional[Tuple[int, ...]] = None
    expect_orientable: Optional[bool] = None
    expect_aut_order: Optional[int] = None
    max_group_order: Optional[int] = None
    progress: bool = False


CheckFn = Callable[[PipelineContext], CheckResult]


def _verdict(ok: bool) -> CheckVerdict:
    return CheckVerdict.PASS if ok else CheckVerdict.FAIL


def check_neighborly(ctx: PipelineContext) -> CheckResult:
    X = ctx.complex
    edges = X.graph
    missing = [[p, q] for p, q in combinations(X.vertices, 2) if not edges.has_edge(p, q)]
    return CheckResult.build(
        "neighborly", _verdict(not missing),
        summary=f"{len(missing)} vertex pairs are not edges",
        witness={"missing_edges": missing},
    )


def check_class_K(ctx: PipelineContext) -> CheckResult:
    verdict = in_walkup_K(ctx.complex)
    return CheckResult.build(
        "class-K", _verdict(verdict.verdict),
        summary=f"every vertex link a stacked sphere: {verdict.verdict}",
        witness={"failing_vertices": verdict.failing_vertices()},
    )


def check_class_Kbar(ctx: PipelineContext) -> CheckResult:
    verdict = in_walkup_Kbar(ctx.complex)
    return CheckResult.build(
        "class-Kbar", _verdict(verdict.verdict),
        summary=f"every vertex link a stacked ball: {verdict.verdict}",
        witness={"failing_vertices": verdict.failing_vertices()},
    )


def check_betti(ctx: PipelineContext) -> CheckResult:
    values = cached_betti(ctx.complex)
    ok = ctx.expect_betti is None or tuple(values) == tuple(ctx.expect_betti)
    witness: Dict[str, Any] = {"betti": list(values), "euler": values.euler}
    if ctx.expect_betti is not None:
        witness["expected"] = list(ctx.expect_betti)
    return CheckResult.build("betti", _verdict(ok), summary=f"beta = {tuple(values)}", witness=witness)


def check_tight_neighborly(ctx: PipelineContext) -> CheckResult:
    return tight_neighborly(ctx.complex).check("tight-neighborly")


def check_tight(ctx: PipelineContext) -> CheckResult:
    result = tightness_certificate(ctx.complex).check("tightness")
    return result.model_copy(update={"name": "tight"})


def check_spotcheck(ctx: PipelineContext) -> CheckResult:
    certificate = tightness_spotcheck(ctx.complex, samples=ctx.samples, seed=ctx.seed, progress=ctx.progress)
    return certificate.check("spotcheck")


def check_orientability(ctx: PipelineContext) -> CheckResult:
    X = ctx.complex
    result = orientability(X)
    if result.orientable and not is_coherent(X, result.assignment.signs):
        raise ConstructionBugError(f"Orientation found for {X} is not coherent")
    ok = ctx.expect_orientable is None or result.orientable == ctx.expect_orientable
    label = "orientable" if result.orientable else "non-orientable"
    witness: Dict[str, Any] = {"orientable": result.orientable}
    if result.witness:
        witness["flip_cycle"] = [list(f) for f in result.witness]
    if ctx.expect_orientable is not None:
        witness["expected"] = ctx.expect_orientable
    return CheckResult.build("orientability", _verdict(ok), summary=label, witness=witness)


def check_cyclic(ctx: PipelineContext) -> CheckResult:
    if ctx.n_cyclic is None:
        return CheckResult.build(
            "cyclic", CheckVerdict.INCONCLUSIVE,
            summary="no n given for the cyclic action",
        )
    ok = verify_cyclic_action(ctx.complex, ctx.n_cyclic)
    return CheckResult.build(
        "cyclic", _verdict(ok),
        summary=f"i -> i+1 mod {ctx.n_cyclic} is {'an' if ok else 'not an'} automorphism",
        witness={"n": ctx.n_cyclic},
    )


def check_automorphism(ctx: PipelineContext) -> CheckResult:
    group = automorphism_group(ctx.complex, max_order=ctx.max_group_order)
    ok = ctx.expect_aut_order is None or group.order == ctx.expect_aut_order
    witness = group.to_dict()
    if ctx.expect_aut_order is not None:
        witness["expected_order"] = ctx.expect_aut_order
    return CheckResult.build("automorphism", _verdict(ok), summary=f"|Aut| = {group.order}", witness=witness)


def check_link_order(ctx: PipelineContext) -> CheckResult:
    found = link_cycle(ctx.complex, ctx.vertex)
    witness: Dict[str, Any] = {"vertex": ctx.vertex, "cycle": list(found)}
    if ctx.expect_cycle is None:
        return CheckResult.build("link-order", CheckVerdict.PASS, summary=f"link of {ctx.vertex} recorded", witness=witness)
    ok = same_cycle(found, ctx.expect_cycle)
    witness["expected"] = list(ctx.expect_cycle)
    return CheckResult.build(
        "link-order", _verdict(ok),
        summary=f"link of {ctx.vertex} {'matches' if ok else 'differs from'} the expected cycle",
        witness=witness,
    )


# Registry in pipeline order
CHECKS: Dict[str, CheckFn] = {
    "neighborly": check_neighborly,
    "class-K": check_class_K,
    "class-Kbar": check_class_Kbar,
    "betti": check_betti,
    "tight-neighborly": check_tight_neighborly,
    "tight": check_tight,
    "spotcheck": check_spotcheck,
    "orientability": check_orientability,
    "cyclic": check_cyclic,
    "automorphism": check_automorphism,
    "link-order": check_link_order,
}

# What --all runs: the closed-manifold checks; fillings and surfaces opt in to the rest
DEFAULT_CHECKS: Tuple[str, ...] = (
    "neighborly", "class-K", "betti", "tight-neighborly", "tight",
    "spotcheck", "orientability", "cyclic", "automorphism",
)

# Checks only defined from this dimension up
MIN_DIMENSION: Dict[str, int] = {"tight-neighborly": 3, "class-K": 2, "class-Kbar": 2}


def default_checks(dimension: int) -> Tuple[str, ...]:
    """The --all selection for a complex of the given dimension."""
    return tuple(c for c in DEFAULT_CHECKS if dimension >= MIN_DIMENSION.get(c, 0))


def expected_row0(name: str) -> Tuple[int, ...]:
    """Stored row-0 cycle by name (R, M or N)."""
    try:
        return ROW0[name.upper()]
    except KeyError:
        raise ValueError(f"Unknown row-0 list '{name}', expected one of {sorted(ROW0)}")


def run_check(name: str, ctx: PipelineContext, max_items: Optional[int] = None) -> CheckResult:
    """
    Run one registered check with timing and error mapping.

    Raises:
        KeyError: If the check name is not registered
    """
    fn = CHECKS[name]
    if max_items is None:
        max_items = int(get_config().get("reporting.max_witness_items", 64))
    start = time.perf_counter()
    try:
        result = fn(ctx)
    except REFUSALS as exc:
        logger.warning(f"Check {name} refused input: {exc}")
        result = CheckResult.build(name, CheckVerdict.INCONCLUSIVE, summary=type(exc).__name__, witness={"error": str(exc)})
    except (ToolkitError, ValueError) as exc:
        logger.warning(f"Check {name} failed on precondition: {exc}")
        result = CheckResult.build(name, CheckVerdict.FAIL, summary=type(exc).__name__, witness={"error": str(exc)})

    witness, cut = truncate_witness(result.witness, max_items)
    if cut:
        logger.warning(f"Witness of check {name} truncated to {max_items} items")
    result = result.model_copy(update={
        "name": name,
        "witness": witness,
        "truncated": result.truncated or cut,
        "duration": time.perf_counter() - start,
    })
    logger.info(f"Check {name}: {result.verdict.value} ({result.duration:.2f}s)")
    return result


def run_pipeline(
    ctx: PipelineContext,
    checks: Sequence[str],
    subject: str,
    parameters: Optional[Dict[str, Any]] = None,
    jobs: int = 1,
) -> Certificate:
    """
    Run the requested checks and collect them into a certificate.

    Checks run in registry order regardless of the order requested, and the
    result order does not depend on ``jobs``.

    Raises:
        KeyError: If a requested check is not registered
    """
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise KeyError(f"Unknown checks: {unknown}")
    ordered: List[str] = [name for name in CHECKS if name in set(checks)]

    X = ctx.complex
    params: Dict[str, Any] = {"d": X.dimension, "n": X.n_vertices, "f": list(X.f_vector().counts)}
    params.update(parameters or {})
    certificate = Certificate(subject=subject, parameters=params)
    certificate.notes.append(MANIFOLD_NOTE)

    if jobs > 1 and len(ordered) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda name: run_check(name, ctx), ordered))
    else:
        results = [run_check(name, ctx) for name in ordered]
    for result in results:
        certificate.add(result)

    logger.info(f"Pipeline on {subject}: {certificate.verdict.value} over {len(results)} checks")
    return certificate
