"""Brute-force ground truth for domination numbers and feasibility predicates."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from . import kernels
from .graphs import Graph

ORACLE_MAX_VERTICES = 16


class Quantity(enum.Enum):
    GAMMA = "gamma"
    GAMMA_R = "gammaR"
    GAMMA_DR = "gammaDR"


class Codomain(enum.Enum):
    FULL_0123 = "full"
    REDUCED_023 = "reduced"


@dataclass(frozen=True)
class Labeling:
    """A vertex labeling f: V -> {0,1,2,3}; the certificate currency of the package."""

    values: tuple[int, ...]

    def __post_init__(self):
        for v in self.values:
            if v not in (0, 1, 2, 3):
                raise ValueError(f"label {v} outside 0..3")

    @property
    def weight(self) -> int:
        return sum(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


def _values(f) -> tuple[int, ...]:
    if isinstance(f, Labeling):
        return f.values
    return tuple(f)


def drdf_violation(g: Graph, f) -> int | None:
    """First vertex violating the double Roman rule, or None if f is a DRDF.

    A 0-vertex needs two neighbors labeled 2 or one labeled 3; a 1-vertex
    needs a neighbor labeled at least 2.
    """
    vals = _values(f)
    if len(vals) != g.n:
        raise ValueError("labeling length does not match vertex count")
    for v in range(g.n):
        fv = vals[v]
        if fv == 0:
            twos = 0
            covered = False
            for u in g.adjacency[v]:
                fu = vals[u]
                if fu == 3:
                    covered = True
                    break
                if fu == 2:
                    twos += 1
            if not covered and twos < 2:
                return v
        elif fv == 1:
            if not any(vals[u] >= 2 for u in g.adjacency[v]):
                return v
    return None


def is_drdf(g: Graph, f) -> bool:
    return drdf_violation(g, f) is None


def rdf_violation(g: Graph, f) -> int | None:
    """First vertex violating the Roman rule (0-vertex without a 2-neighbor)."""
    vals = _values(f)
    if len(vals) != g.n:
        raise ValueError("labeling length does not match vertex count")
    if any(v not in (0, 1, 2) for v in vals):
        raise ValueError("Roman labelings use values 0..2 only")
    for v in range(g.n):
        if vals[v] == 0 and not any(vals[u] == 2 for u in g.adjacency[v]):
            return v
    return None


def is_rdf(g: Graph, f) -> bool:
    return rdf_violation(g, f) is None


def is_dominating_set(g: Graph, s) -> bool:
    """True when every vertex is in s or adjacent to a member of s."""
    chosen = set(s)
    for v in range(g.n):
        if v in chosen:
            continue
        if not any(u in chosen for u in g.adjacency[v]):
            return False
    return True


def _csr(g: Graph):
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    for v in range(g.n):
        indptr[v + 1] = indptr[v] + len(g.adjacency[v])
    indices = np.empty(indptr[-1], dtype=np.int64)
    k = 0
    for v in range(g.n):
        for u in g.adjacency[v]:
            indices[k] = u
            k += 1
    return indptr, indices


def _checklists(g: Graph):
    """CSR mapping each DFS step to the vertices whose closed neighborhood completes there."""
    by_step: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        last = max(g.adjacency[v] + (v,))
        by_step[last].append(v)
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    flat: list[int] = []
    for i in range(g.n):
        flat.extend(by_step[i])
        indptr[i + 1] = len(flat)
    return indptr, np.array(flat, dtype=np.int64)


def _exact_gamma(g: Graph):
    for k in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            if is_dominating_set(g, combo):
                return k, frozenset(combo)
    raise AssertionError("full vertex set always dominates")


def exact(g: Graph, quantity: Quantity, codomain: Codomain | None = None):
    """Optimal value and certificate by exhaustive search (n <= 16 guard).

    Returns (value, certificate); the certificate is a frozenset for GAMMA
    and the lexicographically smallest optimal Labeling otherwise.
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise ValueError(
            f"oracle handles n <= {ORACLE_MAX_VERTICES}; use the ILP solver for larger graphs"
        )
    if codomain is not None and quantity is not Quantity.GAMMA_DR:
        raise ValueError("codomain applies to gammaDR only")
    if quantity is Quantity.GAMMA:
        return _exact_gamma(g)
    indptr, indices = _csr(g)
    chk_indptr, chk_indices = _checklists(g)
    if quantity is Quantity.GAMMA_R:
        best, cert = kernels.enumerate_rdf(indptr, indices, chk_indptr, chk_indices, g.n + 1)
        return int(best), Labeling(tuple(int(x) for x in cert))
    allowed = (
        np.array([0, 2, 3], dtype=np.int64)
        if codomain is Codomain.REDUCED_023
        else np.array([0, 1, 2, 3], dtype=np.int64)
    )
    best, cert = kernels.enumerate_drdf(
        indptr, indices, allowed, chk_indptr, chk_indices, 3 * g.n
    )
    return int(best), Labeling(tuple(int(x) for x in cert))
