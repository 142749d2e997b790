"""
Rebuilding a family member from a stacked sphere by handle additions.

Two routes are provided:

* ``replay_m329`` follows the explicit decomposition of M^3_29: a stacked
  4-ball on 149 boundary vertices is built from a path of 29 simplices and a
  comb of 116 simplices, and 30 handle additions turn its boundary sphere
  into the manifold.
* ``replay_from_filling`` derives the same kind of decomposition from any
  family filling by cutting it open along the complement of a spanning tree
  of its dual graph. For N this is the only route and is marked experimental.

Vertex encoding used by ``replay_m329`` (all labels non-negative):

    a_j, 0 <= j <= 28            -> j
    a_j, -4 <= j <= -1           -> 28 - j           (29..32)
    b_m, 0 <= m <= 28            -> 33 + m           (33..61)
    b_34, b_40, b_46, b_52       -> 62, 63, 64, 65
    b_m, other m >= 29           -> same as b_{m-29}
    u_j, -4 <= j <= 24           -> 70 + j           (66..94)
    v_j, -3 <= j <= 25           -> 98 + j           (95..123)
    w_j, -2 <= j <= 26           -> 126 + j          (124..152)

Merged vertices keep the smaller label, so the final complex lands on the
labels 0..28 of the a-vertices.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from tqdm import tqdm

from src.generators.families import FacetKind, FacetLabel, FamilyComplexes, family_M
from src.generators.handles import GluingMap, UnionFind, glue_along, handle_addition, identify_vertices
from src.models.certificate import Certificate, CheckResult, CheckVerdict
from src.models.complex import Complex, Face
from src.models.errors import ConstructionBugError, ToolkitError
from src.recognition.stacked import in_walkup_K, is_stacked_ball, is_stacked_sphere
from src.symmetry.search import isomorphic

logger = logging.getLogger(__name__)

EXTRA_B = (34, 40, 46, 52)


def a(j: int) -> int:
    return j if j >= 0 else 28 - j


def b(m: int) -> int:
    if m in EXTRA_B:
        return 62 + EXTRA_B.index(m)
    if m >= 29:
        m -= 29
    return 33 + m


def u(j: int) -> int:
    return 70 + j


def v(j: int) -> int:
    return 98 + j


def w(j: int) -> int:
    return 126 + j


Pairs = List[Tuple[int, int]]


@dataclass
class HandleStep:
    """One scheduled handle addition, in the labels of the initial sphere."""
    name: str
    pairs: Pairs


@dataclass
class ReplayState:
    """Complex after the last completed step plus the label bookkeeping."""
    current: Complex
    labels: Dict[int, int] = field(default_factory=dict)
    completed: int = 0

    def resolve(self, label: int) -> int:
        return self.labels.get(label, label)


def path_part() -> Complex:
    """Stacked 4-ball with facets {a_{i-j} : 0 <= j <= 4}, 0 <= i <= 28."""
    return Complex([[a(i - j) for j in range(5)] for i in range(29)])


def comb_part() -> Complex:
    """Stacked 4-ball of mu- and alpha-simplices whose dual graph is a comb with 29 teeth."""
    facets = []
    for i in range(29):
        facets.append([b(i + 5 + 6 * j) for j in range(5)])
        facets.append([w(i - 2), b(i), b(i + 5), b(i + 11), b(i + 17)])
        facets.append([v(i - 3), w(i - 2), b(i), b(i + 5), b(i + 11)])
        facets.append([u(i - 4), v(i - 3), w(i - 2), b(i), b(i + 5)])
    return Complex(facets)


def ball_gluing() -> Pairs:
    """Identification of u_{-4} v_{-3} w_{-2} b_0 with a_{-4} a_{-3} a_{-2} a_0."""
    return [(u(-4), a(-4)), (v(-3), a(-3)), (w(-2), a(-2)), (b(0), a(0))]


def m329_steps() -> List[HandleStep]:
    steps = [
        HandleStep(f"handle-{i:02d}", [(u(i - 4), a(i - 4)), (v(i - 3), a(i - 3)), (w(i - 2), a(i - 2)), (b(i), a(i))])
        for i in range(1, 29)
    ]
    steps.append(HandleStep("handle-29", [(a(j), a(j + 29)) for j in range(-4, 0)]))
    steps.append(HandleStep("handle-30", [(b(m), b(m - 29)) for m in EXTRA_B]))
    return steps


def _check_ball(certificate: Certificate, name: str, X: Complex, expected_f0: Optional[int] = None) -> bool:
    ok = is_stacked_ball(X)
    if expected_f0 is not None:
        ok = ok and X.n_vertices == expected_f0
    certificate.add(CheckResult.build(
        name,
        CheckVerdict.PASS if ok else CheckVerdict.FAIL,
        summary=f"{len(X)} facets on {X.n_vertices} vertices, stacked ball: {ok}",
        witness={"facets": len(X), "f0": X.n_vertices, "expected_f0": expected_f0},
    ))
    return ok


def _check_sphere(certificate: Certificate, S: Complex, expected_f0: int) -> bool:
    result = is_stacked_sphere(S)
    ok = result.stacked and S.n_vertices == expected_f0
    certificate.add(CheckResult.build(
        "sphere",
        CheckVerdict.PASS if ok else CheckVerdict.FAIL,
        summary=f"boundary has {S.n_vertices} vertices (expected {expected_f0}), stacked sphere: {result.stacked}",
        witness={"f0": S.n_vertices, "reverse_moves": len(result.trace), "reason": result.reason},
    ))
    return ok


def run_handles(
    state: ReplayState,
    steps: Sequence[HandleStep],
    certificate: Certificate,
    stop_after: Optional[int] = None,
    inadmissible: CheckVerdict = CheckVerdict.FAIL,
    progress: bool = False,
) -> bool:
    """
    Apply scheduled handle additions in order, recording one check per step.

    Args:
        state: starting complex; updated in place
        steps: handle additions in initial-sphere labels
        certificate: receives one check per executed step
        stop_after: number of steps to execute (all if None)
        inadmissible: verdict recorded for a step that is not admissible
        progress: show a progress bar

    Returns:
        True iff every executed step was performed
    """
    todo = list(steps)[:stop_after] if stop_after is not None else list(steps)
    for step in tqdm(todo, desc="handles", disable=not progress):
        pairs = [(state.resolve(x), state.resolve(y)) for x, y in step.pairs]
        before = state.current.n_vertices
        try:
            result = handle_addition(state.current, GluingMap.from_pairs(pairs))
        except ToolkitError as exc:
            logger.error(f"{step.name} failed: {exc}")
            certificate.add(CheckResult.build(
                step.name, CheckVerdict.FAIL,
                summary=f"step {state.completed + 1} failed: {exc}",
                witness={"step": state.completed + 1, "pairs": pairs, "error": type(exc).__name__},
            ))
            return False

        for label, current in list(state.labels.items()):
            state.labels[label] = result.vertex_map.get(current, current)
        for old, new in result.vertex_map.items():
            state.labels.setdefault(old, new)
        state.current = result.complex
        state.completed += 1

        witness = {
            "step": state.completed,
            "pairs": pairs,
            "vertices": [before, state.current.n_vertices],
            "admissible": result.admissible,
        }
        if result.violation is not None:
            witness["shared_neighbour"] = {"pair": list(result.violation[0]), "vertex": result.violation[1]}
        certificate.add(CheckResult.build(
            step.name,
            CheckVerdict.PASS if result.admissible else inadmissible,
            summary=f"{before} -> {state.current.n_vertices} vertices, admissible: {result.admissible}",
            witness=witness,
        ))
    return True


def _check_intermediate(certificate: Certificate, X: Complex) -> None:
    verdict = in_walkup_K(X)
    certificate.add(CheckResult.build(
        "intermediate-class-K",
        CheckVerdict.PASS if verdict.verdict else CheckVerdict.FAIL,
        summary=f"{X.n_vertices}-vertex intermediate in K({X.dimension}): {verdict.verdict}",
        witness={"f0": X.n_vertices, "failing_vertices": verdict.failing_vertices()},
    ))


def _check_final(certificate: Certificate, X: Complex, target: Complex, name: str) -> None:
    identical = X == target
    iso = identical or isomorphic(X, target) is not None
    certificate.add(CheckResult.build(
        "final-complex",
        CheckVerdict.PASS if iso else CheckVerdict.FAIL,
        summary=f"result {'is' if iso else 'is not'} isomorphic to {name}",
        witness={"f0": X.n_vertices, "facets": len(X), "labels_identical": identical},
    ))


def replay_m329(stop_after: Optional[int] = None, progress: bool = False) -> Certificate:
    """
    Build the boundary of M^3_29 from a 149-vertex stacked 3-sphere by 30 handle additions.

    Args:
        stop_after: stop after this many handle additions and check the
            intermediate complex for membership in K(3) instead of comparing
            the final result
        progress: show a progress bar over the handle steps

    Returns:
        Certificate with one check per stage; a failing step is recorded as
        FAIL carrying its index and the remaining steps are skipped
    """
    certificate = Certificate(subject="replay M^3_29", parameters={"family": "M", "d": 3, "n": 29})
    if stop_after is not None:
        certificate.parameters["stop_after"] = stop_after

    path, comb = path_part(), comb_part()
    _check_ball(certificate, "path-ball", path, 33)
    _check_ball(certificate, "comb-ball", comb, 120)
    ball, _ = glue_along(path, comb, ball_gluing())
    _check_ball(certificate, "glued-ball", ball, 149)

    sphere = ball.boundary()
    _check_sphere(certificate, sphere, 149)

    steps = m329_steps()
    state = ReplayState(sphere)
    finished = run_handles(state, steps, certificate, stop_after=stop_after, progress=progress)

    if finished and stop_after is not None and stop_after < len(steps):
        _check_intermediate(certificate, state.current)
    elif finished:
        fam = family_M(3)
        _check_final(certificate, state.current, fam.manifold, fam.name)
        quotient, _ = identify_vertices(ball.facets, ball_gluing() + [p for s in steps for p in s.pairs])
        same = quotient == fam.filling or isomorphic(quotient, fam.filling) is not None
        certificate.add(CheckResult.build(
            "quotient-filling",
            CheckVerdict.PASS if same else CheckVerdict.FAIL,
            summary=f"identifying all handle pairs on the ball gives the filling of {fam.name}: {same}",
            witness={"facets": len(quotient), "f0": quotient.n_vertices},
        ))

    logger.info(f"Replay of M^3_29 finished with verdict {certificate.verdict.value}")
    return certificate


# ----------------------------------------------------------------------
# cutting a filling open along a spanning tree
# ----------------------------------------------------------------------

def cut_edges(fam: FamilyComplexes) -> List[Tuple[FacetLabel, FacetLabel]]:
    """
    Dual-graph edges removed to leave a spanning tree, in handle order.

    These are sigma_i alpha_{1,i} for 1 <= i < n, then the cycle edges
    sigma_{n-1} sigma_0 and mu_{n-d-3} mu_0.
    """
    n, d = fam.n, fam.d
    edges = [
        (FacetLabel(FacetKind.SIGMA, 0, i), FacetLabel(FacetKind.ALPHA, 1, i)) for i in range(1, n)
    ]
    edges.append((FacetLabel(FacetKind.SIGMA, 0, n - 1), FacetLabel(FacetKind.SIGMA, 0, 0)))
    edges.append((FacetLabel(FacetKind.MU, 0, n - d - 3), FacetLabel(FacetKind.MU, 0, 0)))
    return edges


@dataclass
class CutOpenBall:
    """A filling cut open along the complement of a spanning tree of its dual graph."""
    ball: Complex
    copies: Dict[Tuple[int, Face], int]  # (vertex, facet) -> label of that vertex's copy
    steps: List[HandleStep]


def cut_open(fam: FamilyComplexes) -> CutOpenBall:
    """
    Split every vertex into one copy per component of its star in the spanning tree.

    The copy through the lowest-indexed facet keeps the original label; the
    others get fresh labels from n upwards.

    Raises:
        ConstructionBugError: If the chosen edges are not dual edges or leave no spanning tree
    """
    Y = fam.filling
    index = {face: k for k, face in enumerate(Y.facets)}
    dual = Y.dual_graph()
    ridge_of = {frozenset(e): r for e, r in zip(dual.edges, dual.ridges)}

    cut = []
    for left, right in cut_edges(fam):
        key = frozenset((index[fam.facets[left]], index[fam.facets[right]]))
        if key not in ridge_of:
            raise ConstructionBugError(f"{left} and {right} are not adjacent in the dual graph")
        cut.append((left, right, key))

    removed = {key for _, _, key in cut}
    tree = nx.Graph()
    tree.add_nodes_from(range(len(Y)))
    tree.add_edges_from(tuple(key) for key in ridge_of if key not in removed)
    if not nx.is_tree(tree):
        raise ConstructionBugError(f"Removing {len(cut)} edges from the dual graph of {fam.name} leaves no spanning tree")

    stride = max(Y.vertex_set) + 1
    uf = UnionFind(k * stride + x for k, face in enumerate(Y.facets) for x in face)
    for i, j in tree.edges():
        for x in ridge_of[frozenset((i, j))]:
            uf.union(i * stride + x, j * stride + x)

    # roots are the smallest key, i.e. the lowest facet index of each copy
    roots = sorted({uf.find(key) for key in uf.parent}, key=lambda r: (r % stride, r // stride))
    labels: Dict[int, int] = {}
    fresh = stride
    for root in roots:
        x = root % stride
        if x in labels.values():
            labels[root] = fresh
            fresh += 1
        else:
            labels[root] = x
    copies = {(x, face): labels[uf.find(k * stride + x)] for k, face in enumerate(Y.facets) for x in face}

    ball = Complex([[copies[(x, face)] for x in face] for face in Y.facets])
    steps = []
    for number, (left, right, key) in enumerate(cut, start=1):
        f, g = fam.facets[left], fam.facets[right]
        ridge = ridge_of[key]
        steps.append(HandleStep(f"handle-{number:02d}", [(copies[(x, f)], copies[(x, g)]) for x in ridge]))
    logger.info(f"Cut {fam.name} open: {ball.n_vertices} vertices, {len(steps)} handles")
    return CutOpenBall(ball, copies, steps)


def replay_from_filling(fam: FamilyComplexes, stop_after: Optional[int] = None, progress: bool = False) -> Certificate:
    """
    Re-glue the boundary of a cut-open filling into the family manifold.

    Inadmissible steps are recorded INCONCLUSIVE: the route is a heuristic
    choice of spanning tree, not a proof.
    """
    certificate = Certificate(
        subject=f"replay {fam.name} (experimental)",
        parameters={"family": fam.family, "d": fam.d, "n": fam.n},
    )
    certificate.notes.append("EXPERIMENTAL: spanning-tree decomposition of the filling")
    if stop_after is not None:
        certificate.parameters["stop_after"] = stop_after

    cut = cut_open(fam)
    expected_f0 = len(fam.filling) + fam.d + 1
    _check_ball(certificate, "glued-ball", cut.ball, expected_f0)
    sphere = cut.ball.boundary()
    _check_sphere(certificate, sphere, expected_f0)

    state = ReplayState(sphere)
    finished = run_handles(
        state, cut.steps, certificate,
        stop_after=stop_after, inadmissible=CheckVerdict.INCONCLUSIVE, progress=progress,
    )
    if finished and stop_after is not None and stop_after < len(cut.steps):
        _check_intermediate(certificate, state.current)
    elif finished:
        _check_final(certificate, state.current, fam.manifold, fam.name)

    logger.info(f"Replay of {fam.name} finished with verdict {certificate.verdict.value}")
    return certificate
