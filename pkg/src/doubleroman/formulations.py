"""The six double Roman domination formulations, bound constants, and certificates.

Each builder returns an IlpModel over a graph. The two primed formulations
accept optional strengthening rows derived from domination-number bounds;
labeling extraction repairs solver assignments back into valid labelings.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, GraphParams
from .model import BINARY, CONTINUOUS, EQ, GE, LE, IlpModel, LinearConstraint, Variable
from .oracle import Labeling, drdf_violation

HALF = Fraction(1, 2)
ONE = Fraction(1)


class FormulationKind(enum.Enum):
    DRDP1 = "drdp1"
    DRDP2 = "drdp2"
    DRDP1P = "drdp1p"
    DRDP2P = "drdp2p"
    DRDP1PP = "drdp1pp"
    DRDP2PP = "drdp2pp"


STRENGTHENABLE = (FormulationKind.DRDP1P, FormulationKind.DRDP2P)


class CertificateError(ValueError):
    """Solver assignment failed verification; names the violated constraint."""

    def __init__(self, message: str, constraint: str | None = None):
        self.constraint = constraint
        super().__init__(message)


@dataclass(frozen=True)
class BoundSet:
    """Lower/upper bound constants for the strengthening rows; None means absent."""

    l1: int | None
    l2: int | None
    l3: int | None
    u1: int | None
    u2: int | None
    gamma_lb: int | None

    def __post_init__(self):
        if self.l1 is not None and self.l2 is not None and not self.l1 <= self.l2:
            raise ValueError("bound constants inconsistent: L1 > L2")
        if self.u1 is not None and self.u2 is not None and not self.u2 <= self.u1:
            raise ValueError("bound constants inconsistent: U2 > U1")


def compute_bounds(params: GraphParams) -> BoundSet:
    """Evaluate the bound constants from structural parameters.

    Graphs without edges get an all-absent BoundSet (every formula divides
    by a degree). The log-based upper bound additionally needs min degree
    >= 1: with isolated vertices present it can undercut the true optimum
    (two vertices joined by an edge plus four isolated ones already fails),
    so it is dropped for such graphs. Infinite girth counts as satisfying
    any girth threshold, which is harmless because acyclic graphs have min
    degree <= 1 and the guarded terms also require min degree >= 2.
    """
    n = params.n
    dmax = params.max_degree
    dmin = params.min_degree
    if dmax == 0:
        return BoundSet(None, None, None, None, None, None)
    gamma_lb = math.ceil(Fraction(n, 1 + dmax))
    girth = params.girth
    cyclic = girth is not None

    def girth_at_least(a: int) -> bool:
        return True if girth is None else girth >= a

    l1_terms = [2 * gamma_lb]
    if cyclic:
        l1_terms.append(math.ceil(Fraction(2 * girth, 3)))
    l1 = max(l1_terms)

    l2 = None
    if params.connected:
        d = params.diameter
        l2_terms = [2 * gamma_lb, math.ceil(Fraction(d + 2, 2))]
        if cyclic:
            l2_terms.append(math.ceil(Fraction(2 * girth, 3)))
        if girth_at_least(5):
            l2_terms.append(2 * dmin)
        if girth_at_least(6) and dmin >= 2:
            l2_terms.append(4 * (dmin - 1))
        if girth_at_least(7) and dmin >= 2:
            l2_terms.append(2 * dmax)
        l2 = max(l2_terms)

    l3_terms = [
        math.ceil(Fraction(3 * n, dmax + 1)),
        math.ceil(Fraction(2 * n, dmax) + Fraction(dmax - 2, dmax) * Fraction(n, 1 + dmax)),
    ]
    if params.connected:
        l3_terms.append(params.diameter + 1)
    l3 = max(l3_terms)

    u1_terms = [2 * n - 2 * dmax + 1, n if dmin >= 3 else 3 * n]
    if params.connected:
        u1_terms.append(2 * n - params.diameter)
    if dmin >= 1:
        u1_terms.append(
            math.floor(3 * n * (1.0 + math.log(2.0 * (1 + dmin) / 3.0)) / (1 + dmin))
        )
    u1 = min(u1_terms)

    u2 = None
    if params.connected and n >= 3:
        u2_terms = [
            2 * n - params.diameter,
            2 * n - 2 * dmax + 1,
            n if dmin >= 3 else (5 * n) // 4,
        ]
        if dmin >= 1:
            u2_terms.append(
                math.floor(3 * n * (1.0 + math.log(2.0 * (1 + dmin) / 3.0)) / (1 + dmin))
            )
        u2 = min(u2_terms)

    return BoundSet(l1=l1, l2=l2, l3=l3, u1=u1, u2=u2, gamma_lb=gamma_lb)


def _vertex_vars(g: Graph, prefixes: list[tuple[str, str]]) -> tuple[Variable, ...]:
    out = []
    vid = 0
    for prefix, integrality in prefixes:
        for v in range(g.n):
            if integrality == BINARY:
                out.append(Variable(vid, f"{prefix}_{v}", Fraction(0), Fraction(1), BINARY))
            else:
                out.append(Variable(vid, f"{prefix}_{v}", Fraction(0), Fraction(1), CONTINUOUS))
            vid += 1
    return tuple(out)


def build_formulation(
    g: Graph,
    kind: FormulationKind,
    bounds: BoundSet | None = None,
    strengthen: bool = False,
) -> IlpModel:
    """Assemble the chosen formulation for a graph as an IlpModel.

    `strengthen` is accepted only for DRDP1P and DRDP2P and requires a
    BoundSet; it appends the vi_L*/vi_U* rows for every constant present.
    """
    if strengthen and kind not in STRENGTHENABLE:
        raise ValueError(f"strengthen is valid only for {[k.value for k in STRENGTHENABLE]}")
    if strengthen and bounds is None:
        raise ValueError("strengthen requires a BoundSet")

    n = g.n
    cons: list[LinearConstraint] = []

    if kind is FormulationKind.DRDP1:
        variables = _vertex_vars(g, [("x", BINARY), ("y", BINARY), ("z", BINARY)])
        x, y, z = range(0, n), range(n, 2 * n), range(2 * n, 3 * n)
        objective = tuple([(x[v], ONE) for v in range(n)] + [(y[v], Fraction(2)) for v in range(n)] + [(z[v], Fraction(3)) for v in range(n)])
        for v in range(n):
            terms = [(x[v], ONE), (y[v], ONE), (z[v], ONE)]
            terms += [(y[u], HALF) for u in g.adjacency[v]]
            terms += [(z[u], ONE) for u in g.adjacency[v]]
            cons.append(LinearConstraint(f"cover_{v}", tuple(terms), GE, ONE))
        for v in range(n):
            terms = [(y[u], ONE) for u in g.adjacency[v]]
            terms += [(z[u], ONE) for u in g.adjacency[v]]
            terms.append((x[v], Fraction(-1)))
            cons.append(LinearConstraint(f"guard1_{v}", tuple(terms), GE, Fraction(0)))
        for v in range(n):
            cons.append(
                LinearConstraint(
                    f"one_value_{v}",
                    ((x[v], ONE), (y[v], ONE), (z[v], ONE)),
                    LE,
                    ONE,
                )
            )
    elif kind is FormulationKind.DRDP2:
        variables = _vertex_vars(g, [("p", BINARY), ("q", BINARY), ("r", BINARY)])
        p, q, r = range(0, n), range(n, 2 * n), range(2 * n, 3 * n)
        objective = tuple([(p[v], ONE) for v in range(n)] + [(q[v], ONE) for v in range(n)] + [(r[v], ONE) for v in range(n)])
        for v in range(n):
            terms = [(p[v], ONE)]
            terms += [(q[u], HALF) for u in g.adjacency[v]]
            terms += [(r[u], HALF) for u in g.adjacency[v]]
            cons.append(LinearConstraint(f"cover_{v}", tuple(terms), GE, ONE))
        for v in range(n):
            terms = [(q[v], ONE)]
            terms += [(q[u], ONE) for u in g.adjacency[v]]
            terms.append((p[v], Fraction(-1)))
            cons.append(LinearConstraint(f"guard1_{v}", tuple(terms), GE, Fraction(0)))
        for v in range(n):
            cons.append(
                LinearConstraint(f"chain_rq_{v}", ((r[v], ONE), (q[v], Fraction(-1))), LE, Fraction(0))
            )
        for v in range(n):
            cons.append(
                LinearConstraint(f"chain_qp_{v}", ((q[v], ONE), (p[v], Fraction(-1))), LE, Fraction(0))
            )
    elif kind in (FormulationKind.DRDP1P, FormulationKind.DRDP1PP):
        variables = _vertex_vars(g, [("y", BINARY), ("z", BINARY)])
        y, z = range(0, n), range(n, 2 * n)
        objective = tuple([(y[v], Fraction(2)) for v in range(n)] + [(z[v], Fraction(3)) for v in range(n)])
        for v in range(n):
            terms = [(y[v], ONE), (z[v], ONE)]
            terms += [(y[u], HALF) for u in g.adjacency[v]]
            terms += [(z[u], ONE) for u in g.adjacency[v]]
            cons.append(LinearConstraint(f"cover_{v}", tuple(terms), GE, ONE))
        if kind is FormulationKind.DRDP1P:
            for v in range(n):
                cons.append(
                    LinearConstraint(f"one_value_{v}", ((y[v], ONE), (z[v], ONE)), LE, ONE)
                )
        if strengthen:
            light = [(y[v], Fraction(2)) for v in range(n)] + [(z[v], Fraction(2)) for v in range(n)]
            weight = [(y[v], Fraction(2)) for v in range(n)] + [(z[v], Fraction(3)) for v in range(n)]
            if bounds.l1 is not None:
                cons.append(LinearConstraint("vi_L1", tuple(light), GE, Fraction(bounds.l1)))
            if bounds.l2 is not None:
                cons.append(LinearConstraint("vi_L2", tuple(light), GE, Fraction(bounds.l2)))
            if bounds.l3 is not None:
                cons.append(LinearConstraint("vi_L3", tuple(weight), GE, Fraction(bounds.l3)))
            if bounds.u1 is not None:
                cons.append(LinearConstraint("vi_U1", tuple(weight), LE, Fraction(bounds.u1)))
            if bounds.u2 is not None:
                cons.append(LinearConstraint("vi_U2", tuple(weight), LE, Fraction(bounds.u2)))
    elif kind in (FormulationKind.DRDP2P, FormulationKind.DRDP2PP):
        r_kind = BINARY if kind is FormulationKind.DRDP2P else CONTINUOUS
        variables = _vertex_vars(g, [("q", BINARY), ("r", r_kind)])
        q, r = range(0, n), range(n, 2 * n)
        objective = tuple([(q[v], Fraction(2)) for v in range(n)] + [(r[v], ONE) for v in range(n)])
        for v in range(n):
            terms = [(q[v], ONE)]
            terms += [(q[u], HALF) for u in g.adjacency[v]]
            terms += [(r[u], HALF) for u in g.adjacency[v]]
            cons.append(LinearConstraint(f"cover_{v}", tuple(terms), GE, ONE))
        for v in range(n):
            cons.append(
                LinearConstraint(f"chain_rq_{v}", ((r[v], ONE), (q[v], Fraction(-1))), LE, Fraction(0))
            )
        if strengthen:
            light = [(q[v], Fraction(2)) for v in range(n)]
            weight = [(q[v], Fraction(2)) for v in range(n)] + [(r[v], ONE) for v in range(n)]
            if bounds.l1 is not None:
                cons.append(LinearConstraint("vi_L1", tuple(light), GE, Fraction(bounds.l1)))
            if bounds.l2 is not None:
                cons.append(LinearConstraint("vi_L2", tuple(weight), GE, Fraction(bounds.l2)))
            # L3 bounds the full weight; a 2*sum(q)-only row cuts off
            # 3-heavy optima (a triangle already fails).
            if bounds.l3 is not None:
                cons.append(LinearConstraint("vi_L3", tuple(weight), GE, Fraction(bounds.l3)))
            if bounds.u1 is not None:
                cons.append(LinearConstraint("vi_U1", tuple(weight), LE, Fraction(bounds.u1)))
            if bounds.u2 is not None:
                cons.append(LinearConstraint("vi_U2", tuple(weight), LE, Fraction(bounds.u2)))
    else:  # pragma: no cover
        raise ValueError(f"unknown formulation kind {kind}")

    metadata = {
        "formulation": kind.value + ("+" if strengthen else ""),
        "graph_digest": g.digest(),
    }
    return IlpModel(tuple(variables), tuple(cons), objective, metadata)


def labeling_to_assignment(g: Graph, kind: FormulationKind, values) -> dict[int, float]:
    """Express a labeling (values in {0,1,2,3}) in a formulation's variables."""
    n = g.n
    out: dict[int, float] = {}
    if kind is FormulationKind.DRDP1:
        for v in range(n):
            out[v] = 1.0 if values[v] == 1 else 0.0
            out[n + v] = 1.0 if values[v] == 2 else 0.0
            out[2 * n + v] = 1.0 if values[v] == 3 else 0.0
    elif kind is FormulationKind.DRDP2:
        for v in range(n):
            out[v] = 1.0 if values[v] >= 1 else 0.0
            out[n + v] = 1.0 if values[v] >= 2 else 0.0
            out[2 * n + v] = 1.0 if values[v] == 3 else 0.0
    elif kind in (FormulationKind.DRDP1P, FormulationKind.DRDP1PP):
        for v in range(n):
            out[v] = 1.0 if values[v] == 2 else 0.0
            out[n + v] = 1.0 if values[v] == 3 else 0.0
    else:
        for v in range(n):
            out[v] = 1.0 if values[v] >= 2 else 0.0
            out[n + v] = 1.0 if values[v] == 3 else 0.0
    return out


def all_threes_assignment(g: Graph, kind: FormulationKind) -> dict[int, float]:
    """The labeling f = 3 everywhere expressed in the formulation's variables.

    Always feasible for the unstrengthened formulations, so it serves as the
    solver's starting incumbent (weight 3n).
    """
    return labeling_to_assignment(g, kind, [3] * g.n)


def rounding_repair_heuristic(g: Graph, kind: FormulationKind):
    """Build a node heuristic: threshold the LP point at 1/2, repair, price.

    The repair raises any uncovered 0-vertex to label 2, which can only help
    its neighbors, so a single ascending pass yields a valid labeling. The
    returned callable maps an LP vector to (assignment, weight).
    """
    n = g.n
    if kind is FormulationKind.DRDP1:
        two_base, three_base = n, 2 * n
    elif kind is FormulationKind.DRDP2:
        two_base, three_base = n, 2 * n
    elif kind in (FormulationKind.DRDP1P, FormulationKind.DRDP1PP):
        two_base, three_base = 0, n
    else:
        two_base, three_base = 0, n

    def heuristic(x):
        values = [0] * n
        for v in range(n):
            if x[three_base + v] >= 0.5:
                values[v] = 3
            elif x[two_base + v] >= 0.5:
                values[v] = 2
        for v in range(n):
            if values[v] != 0:
                continue
            twos = 0
            covered = False
            for u in g.adjacency[v]:
                fu = values[u]
                if fu == 3:
                    covered = True
                    break
                if fu == 2:
                    twos += 1
            if not covered and twos < 2:
                values[v] = 2
        return labeling_to_assignment(g, kind, values), float(sum(values))

    return heuristic


def _round_binary(value: float, name: str, tol: float = 1e-6) -> int:
    nearest = round(value)
    if abs(value - nearest) > tol or nearest not in (0, 1):
        raise CertificateError(f"variable {name} is not integral: {value!r}")
    return int(nearest)


def extract_labeling(g: Graph, kind: FormulationKind, assignment) -> Labeling:
    """Translate a solver assignment into a verified labeling.

    Binary variables are snapped to the nearest integer (tolerance 1e-6) and
    relaxed r-variables are rounded down unless they reached 1; the snapped
    point is then re-checked exactly against every constraint, so a bad
    assignment raises CertificateError naming the violated row. Assignments
    that select both the 2- and 3-variable of a vertex are repaired to the
    plain 3-label before reading off the labeling.
    """
    model = build_formulation(g, kind)
    n = g.n
    snapped: dict[int, Fraction] = {}
    for var in model.variables:
        value = float(assignment[var.id])
        if var.integrality == BINARY:
            snapped[var.id] = Fraction(_round_binary(value, var.name))
        else:
            # relaxed r rounds to 1 only when it reached 1 (modulo float noise)
            snapped[var.id] = Fraction(1) if value >= 1.0 - 1e-9 else Fraction(0)

    for con in model.constraints:
        lhs = sum(coef * snapped[vid] for vid, coef in con.terms)
        ok = lhs >= con.rhs if con.sense == GE else lhs <= con.rhs if con.sense == LE else lhs == con.rhs
        if not ok:
            raise CertificateError(
                f"assignment violates constraint {con.name}: {lhs} {con.sense} {con.rhs} fails",
                constraint=con.name,
            )

    if kind is FormulationKind.DRDP1:
        values = [
            int(snapped[v] + 2 * snapped[n + v] + 3 * snapped[2 * n + v]) for v in range(n)
        ]
    elif kind is FormulationKind.DRDP2:
        values = [
            int(snapped[v] + snapped[n + v] + snapped[2 * n + v]) for v in range(n)
        ]
    elif kind in (FormulationKind.DRDP1P, FormulationKind.DRDP1PP):
        values = []
        for v in range(n):
            yv, zv = snapped[v], snapped[n + v]
            if zv == 1:
                values.append(3)  # y is dropped when both were selected
            elif yv == 1:
                values.append(2)
            else:
                values.append(0)
    else:
        values = [int(2 * snapped[v] + snapped[n + v]) for v in range(n)]

    bad = drdf_violation(g, values)
    if bad is not None:
        raise CertificateError(
            f"extracted labeling violates the double Roman rule at vertex {bad}",
            constraint=f"cover_{bad}",
        )
    return Labeling(tuple(values))
