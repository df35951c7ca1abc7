"""Exact, approximate, and brute-force solvers for double Roman domination."""

from .formulations import (
    BoundSet,
    CertificateError,
    FormulationKind,
    build_formulation,
    compute_bounds,
    extract_labeling,
)
from .graphs import (
    Graph,
    GraphParams,
    complement,
    compute_params,
    from_edge_list,
    generate_gnp,
    generate_grid,
    generate_random_tree,
    load_graph,
    save_graph,
    to_edge_list,
)
from .greedy import (
    CoveringInstance,
    GreedyResult,
    build_covering,
    dominating_set_from_drdf,
    drdf_from_dominating_set,
    greedy,
    harmonic,
)
from .model import IlpModel, LinearConstraint, LpParseError, Variable, export_lp, import_lp
from .oracle import (
    Codomain,
    Labeling,
    Quantity,
    exact,
    is_dominating_set,
    is_drdf,
    is_rdf,
)
from .solver import (
    InfeasibleRelaxation,
    SolveResult,
    SolverConfig,
    lp_relax,
    solve,
    solve_formulation,
)

__version__ = "0.1.0"
