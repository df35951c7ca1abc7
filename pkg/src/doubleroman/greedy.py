"""Greedy covering approximation for double Roman and Roman domination.

The covering matrix pairs two columns per vertex: a light column (label 2,
or 1 for the Roman variant) covering mostly itself, and a heavy column
(label 3, or 2) covering the closed neighborhood. Column choices minimize
cost per unit of remaining coverage, compared in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph
from .oracle import Labeling, drdf_violation, is_dominating_set

PROBLEM_DRDP = "drdp"
PROBLEM_RDP = "rdp"

ROLE_LIGHT = "Y"
ROLE_HEAVY = "Z"


@dataclass(frozen=True)
class CoveringInstance:
    costs: np.ndarray  # (2n,) column costs
    matrix: np.ndarray  # (n, 2n) coverage amounts
    demand: np.ndarray  # (n,) required coverage per vertex
    column_meta: tuple[tuple[int, str], ...]  # (vertex, role) per column
    problem: str


@dataclass(frozen=True)
class GreedyResult:
    w1: int
    w2: int
    selected: frozenset[int]
    labeling: Labeling
    ratio_bound: float


def build_covering(g: Graph, problem: str) -> CoveringInstance:
    """Covering matrices for a graph: [2I+A | 2(I+A)] demand 2 (double Roman)
    or [I | I+A] demand 1 (Roman)."""
    n = g.n
    adj = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v in g.adjacency[u]:
            adj[u, v] = 1
    eye = np.eye(n, dtype=np.int64)
    if problem == PROBLEM_DRDP:
        matrix = np.hstack([2 * eye + adj, 2 * (eye + adj)])
        costs = np.concatenate([np.full(n, 2, dtype=np.int64), np.full(n, 3, dtype=np.int64)])
        demand = np.full(n, 2, dtype=np.int64)
    elif problem == PROBLEM_RDP:
        matrix = np.hstack([eye, eye + adj])
        costs = np.concatenate([np.full(n, 1, dtype=np.int64), np.full(n, 2, dtype=np.int64)])
        demand = np.full(n, 1, dtype=np.int64)
    else:
        raise ValueError(f"unknown covering problem {problem!r}")
    meta = tuple((v, ROLE_LIGHT) for v in range(n)) + tuple((v, ROLE_HEAVY) for v in range(n))
    return CoveringInstance(costs, matrix, demand, meta, problem)


def harmonic(d: int) -> float:
    """Partial harmonic sum H(d) = 1 + 1/2 + ... + 1/d, summed exactly."""
    if d < 1:
        raise ValueError("harmonic number needs d >= 1")
    return float(sum(Fraction(1, i) for i in range(1, d + 1)))


def greedy(inst: CoveringInstance) -> GreedyResult:
    """Greedy column selection with residual clamping and pair cleanup.

    Each round picks the column minimizing cost / remaining coverage (exact
    cross-multiplied comparison, lowest index on ties), then clamps every
    remaining column to the shrunken demand. Light columns selected together
    with their heavy partner are dropped before the final weight.
    """
    n = len(inst.demand)
    ncols = 2 * n
    a = inst.matrix.copy()
    b = inst.demand.copy()
    costs = inst.costs
    active = np.ones(ncols, dtype=bool)
    chosen = np.zeros(ncols, dtype=bool)
    col_sums = a.sum(axis=0)
    ratio_bound = harmonic(int(col_sums.max())) if ncols else 0.0

    while b.any():
        best = -1
        best_cost = 0
        best_sum = 0
        for j in range(ncols):
            if not active[j] or col_sums[j] <= 0:
                continue
            cj = int(costs[j])
            sj = int(col_sums[j])
            if best < 0 or cj * best_sum < best_cost * sj:
                best, best_cost, best_sum = j, cj, sj
        if best < 0:
            raise RuntimeError("no column can reduce the remaining demand")
        chosen[best] = True
        active[best] = False
        shrunk = a[:, best] > 0
        b -= a[:, best]
        for i in np.nonzero(shrunk)[0]:
            bi = b[i]
            row = a[i]
            over = row > bi
            if over.any():
                delta = row[over] - bi
                cols = np.nonzero(over)[0]
                col_sums[cols] -= delta
                row[over] = bi
    w1 = int(costs[chosen].sum())
    coverage = inst.matrix @ chosen.astype(np.int64)
    if not (coverage >= inst.demand).all():
        raise RuntimeError("greedy terminated with unmet demand")

    for v in range(n):
        if chosen[v] and chosen[v + n]:
            chosen[v] = False
    w2 = int(costs[chosen].sum())

    values = [0] * n
    for j in np.nonzero(chosen)[0]:
        vertex, role = inst.column_meta[j]
        if inst.problem == PROBLEM_DRDP:
            label = 2 if role == ROLE_LIGHT else 3
        else:
            label = 1 if role == ROLE_LIGHT else 2
        if label > values[vertex]:
            values[vertex] = label
    labeling = Labeling(tuple(values))
    return GreedyResult(w1, w2, frozenset(int(j) for j in np.nonzero(chosen)[0]), labeling, ratio_bound)


def drdf_from_dominating_set(g: Graph, s) -> Labeling:
    """Label every member of a dominating set 3 and all other vertices 0."""
    chosen = set(s)
    if not is_dominating_set(g, chosen):
        missing = next(
            v
            for v in range(g.n)
            if v not in chosen and not any(u in chosen for u in g.adjacency[v])
        )
        raise ValueError(f"set is not dominating: vertex {missing} uncovered")
    return Labeling(tuple(3 if v in chosen else 0 for v in range(g.n)))


def dominating_set_from_drdf(g: Graph, f) -> frozenset[int]:
    """The vertices labeled at least 2; dominating whenever f is a valid labeling."""
    bad = drdf_violation(g, f)
    if bad is not None:
        raise ValueError(f"labeling is not a double Roman dominating function (vertex {bad})")
    vals = f.values if isinstance(f, Labeling) else tuple(f)
    return frozenset(v for v in range(g.n) if vals[v] >= 2)
