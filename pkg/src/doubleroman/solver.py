"""Exact 0/1 minimization by best-first branch-and-bound over LP relaxations.

The bounding LP is the built-in bounded-variable two-phase simplex from the
kernels package; continuous variables are never branched. Identical inputs
always reproduce the identical search tree.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from heapq import heappop, heappush

import numpy as np

from . import kernels
from .formulations import (
    FormulationKind,
    all_threes_assignment,
    build_formulation,
    compute_bounds,
    extract_labeling,
    rounding_repair_heuristic,
)
from .graphs import Graph, compute_params
from .model import BINARY, EQ, GE, LE, IlpModel

STATUS_OPTIMAL = "optimal"
STATUS_TIME_LIMIT = "time_limit"
STATUS_INFEASIBLE = "infeasible"


class InfeasibleRelaxation(Exception):
    """The continuous relaxation of a model admits no feasible point."""


class SolverInternalError(RuntimeError):
    pass


@dataclass
class SolverConfig:
    time_limit: float = 300.0
    integrality_tol: float = 1e-6
    feasibility_tol: float = 1e-7
    integral_objective: bool = False

    def __post_init__(self):
        if self.time_limit <= 0 or self.integrality_tol <= 0 or self.feasibility_tol <= 0:
            raise ValueError("tolerances and time limit must be positive")


@dataclass
class SolveResult:
    status: str
    objective: float | None
    assignment: dict[int, float]
    nodes: int
    simplex_iterations: int
    best_bound: float


class _Arrays:
    """Dense float views of a model, built once per solve."""

    def __init__(self, model: IlpModel):
        nv = len(model.variables)
        rows = []
        for con in model.constraints:
            if con.terms:
                rows.append(con)
            else:
                # empty rows are dropped unless trivially impossible
                rhs = float(con.rhs)
                bad = (
                    (con.sense == GE and rhs > 0)
                    or (con.sense == LE and rhs < 0)
                    or (con.sense == EQ and rhs != 0)
                )
                if bad:
                    raise InfeasibleRelaxation(f"constraint {con.name} is unsatisfiable")
        m = len(rows)
        self.A = np.zeros((m, nv))
        self.senses = np.zeros(m, dtype=np.int8)
        self.b = np.zeros(m)
        for i, con in enumerate(rows):
            for vid, coef in con.terms:
                self.A[i, vid] = float(coef)
            self.senses[i] = {LE: 0, GE: 1, EQ: 2}[con.sense]
            self.b[i] = float(con.rhs)
        self.c = np.zeros(nv)
        for vid, coef in model.objective:
            self.c[vid] = float(coef)
        self.lb = np.zeros(nv)
        self.ub = np.zeros(nv)
        for j, var in enumerate(model.variables):
            if var.lower is None:
                raise ValueError(f"variable {var.name} lacks a finite lower bound")
            self.lb[j] = float(var.lower)
            self.ub[j] = np.inf if var.upper is None else float(var.upper)
        self.binary = np.array(
            [v.integrality == BINARY for v in model.variables], dtype=bool
        )
        self.nv = nv


def _run_simplex(arr: _Arrays, lb, ub, hint, cfg: SolverConfig):
    status, x, obj, iters, duals, vstat = kernels.simplex_solve(
        arr.A, arr.senses, arr.b, arr.c, lb, ub, hint, cfg.feasibility_tol
    )
    if status == kernels.UNBOUNDED or status == kernels.ITERATION_LIMIT:
        raise SolverInternalError(f"simplex returned status {status}")
    return status, x, obj, iters, duals, vstat


def lp_relax(model: IlpModel, cfg: SolverConfig | None = None):
    """Optimal value and point of the continuous relaxation.

    Raises InfeasibleRelaxation when no feasible point exists; unboundedness
    cannot occur for box-bounded models and is surfaced as an internal error.
    """
    if not model.variables:
        raise ValueError("model has no variables")
    cfg = cfg or SolverConfig()
    arr = _Arrays(model)
    hint = np.zeros(arr.nv, dtype=np.bool_)
    status, x, obj, _, _, _ = _run_simplex(arr, arr.lb, arr.ub, hint, cfg)
    if status == kernels.INFEASIBLE:
        raise InfeasibleRelaxation("LP relaxation is infeasible")
    return obj, {j: float(x[j]) for j in range(arr.nv)}


def solve(
    model: IlpModel,
    cfg: SolverConfig | None = None,
    warm_start: tuple[dict[int, float], float] | None = None,
    heuristic=None,
) -> SolveResult:
    """Minimize the model exactly by best-first branch-and-bound.

    Branches on the fractional binary with the largest fractionality scaled
    by a static influence weight (column support times cost; ties to the
    lowest id); nodes are explored best-bound-first with deeper nodes
    preferred on ties. With cfg.integral_objective the bound is rounded up
    before pruning, and nonbasic binaries whose reduced cost already pushes
    past the incumbent are fixed in the subtree (exact bound-based fixing).

    `warm_start` optionally seeds the incumbent with (assignment, objective)
    and supplies the initial crash-basis hint. `heuristic`, when given, maps
    a node's LP point to a feasible (assignment, value) candidate or None;
    its root candidate also refreshes the crash hint.
    """
    cfg = cfg or SolverConfig()
    start_time = time.monotonic()
    arr = _Arrays(model)
    # static branching weights: structural influence (column support) times cost
    branch_weight = (arr.A != 0).sum(axis=0).astype(float) * np.maximum(arr.c, 1.0)

    incumbent_val = math.inf
    incumbent: dict[int, float] = {}
    hint = np.zeros(arr.nv, dtype=np.bool_)
    if warm_start is not None:
        incumbent = dict(warm_start[0])
        incumbent_val = float(warm_start[1])
        for j in range(arr.nv):
            if incumbent.get(j, 0.0) >= 0.5:
                hint[j] = True

    def prunable(bound: float) -> bool:
        if cfg.integral_objective:
            return math.ceil(bound - 1e-6) >= incumbent_val - 1e-9
        return bound >= incumbent_val - 1e-9

    # A node is (bound_estimate, -depth, serial, fixings) where fixings is a
    # cons list ((var, value), parent) reaching back to the root.
    heap: list[tuple[float, int, int, object]] = []
    serial = 0
    heappush(heap, (-math.inf, 0, serial, None))
    nodes = 0
    total_iters = 0
    best_frontier = math.inf
    timed_out = False

    while heap:
        est, negdepth, _, fixings = heappop(heap)
        if est > -math.inf and prunable(est):
            continue
        if time.monotonic() - start_time > cfg.time_limit:
            timed_out = True
            if est > -math.inf:
                best_frontier = est
            break

        lb = arr.lb.copy()
        ub = arr.ub.copy()
        chain = fixings
        while chain is not None:
            (var, value), chain = chain
            lb[var] = value
            ub[var] = value

        status, x, obj, iters, duals, vstat = _run_simplex(arr, lb, ub, hint, cfg)
        nodes += 1
        total_iters += int(iters)
        if status == kernels.INFEASIBLE:
            continue
        if heuristic is not None:
            cand = heuristic(x)
            if cand is not None:
                if cand[1] < incumbent_val - 1e-9:
                    incumbent = cand[0]
                    incumbent_val = float(cand[1])
                if nodes == 1:
                    # crash-basis hint for the rest of the tree: the repaired
                    # root labeling starts every node LP near the optimum
                    hint = np.zeros(arr.nv, dtype=np.bool_)
                    for j, value in cand[0].items():
                        if value >= 0.5:
                            hint[j] = True
        if prunable(obj):
            continue

        frac_var = -1
        frac_score = 0.0
        for j in range(arr.nv):
            if not arr.binary[j]:
                continue
            dist = abs(x[j] - round(x[j]))
            if dist <= cfg.integrality_tol:
                continue
            score = dist * branch_weight[j]
            if score > frac_score:
                frac_score = score
                frac_var = j

        if frac_var < 0:
            value = obj
            if cfg.integral_objective:
                value = float(round(obj))
            if value < incumbent_val - 1e-9:
                incumbent_val = value
                incumbent = {j: float(x[j]) for j in range(arr.nv)}
            continue

        child_fixings = fixings
        for j in range(arr.nv):
            if not arr.binary[j] or lb[j] >= ub[j]:
                continue
            if vstat[j] == 0 and prunable(obj + duals[j]):
                child_fixings = ((j, 0.0), child_fixings)
            elif vstat[j] == 1 and prunable(obj - duals[j]):
                child_fixings = ((j, 1.0), child_fixings)

        for branch_value in (0.0, 1.0):
            serial += 1
            heappush(
                heap,
                (obj, negdepth - 1, serial, ((frac_var, branch_value), child_fixings)),
            )

    if timed_out:
        if heap:
            best_frontier = min(best_frontier, heap[0][0])
        bound = best_frontier if best_frontier < math.inf else incumbent_val
        if not incumbent:
            return SolveResult(STATUS_TIME_LIMIT, None, {}, nodes, total_iters, bound)
        return SolveResult(
            STATUS_TIME_LIMIT, incumbent_val, incumbent, nodes, total_iters, min(bound, incumbent_val)
        )

    if not incumbent:
        return SolveResult(STATUS_INFEASIBLE, None, {}, max(nodes, 1), total_iters, math.inf)
    return SolveResult(
        STATUS_OPTIMAL, incumbent_val, incumbent, max(nodes, 1), total_iters, incumbent_val
    )


def solve_formulation(
    g: Graph,
    kind: FormulationKind,
    strengthen: bool = False,
    cfg: SolverConfig | None = None,
    integral_prune: bool = True,
):
    """Build, warm-start, and solve a formulation; returns (result, labeling).

    The incumbent is seeded with the all-threes labeling so the search can
    only fail by timing out; the integral-objective pruning rule is safe for
    every formulation (their optima all equal the domination number).
    """
    if cfg is None:
        cfg = SolverConfig()
    cfg = SolverConfig(
        time_limit=cfg.time_limit,
        integrality_tol=cfg.integrality_tol,
        feasibility_tol=cfg.feasibility_tol,
        integral_objective=integral_prune,
    )
    bounds = compute_bounds(compute_params(g)) if strengthen else None
    model = build_formulation(g, kind, bounds=bounds, strengthen=strengthen)
    seed = all_threes_assignment(g, kind)
    heuristic = rounding_repair_heuristic(g, kind)
    result = solve(model, cfg, warm_start=(seed, 3.0 * g.n), heuristic=heuristic)
    labeling = None
    if result.status == STATUS_OPTIMAL:
        labeling = extract_labeling(g, kind, result.assignment)
    return result, labeling
