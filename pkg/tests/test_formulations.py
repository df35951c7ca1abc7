"""Model builders, bound constants, and labeling extraction."""

import math
from fractions import Fraction

import pytest

from doubleroman.corpus import cycle_graph, path_graph, star_graph
from doubleroman.formulations import (
    BoundSet,
    CertificateError,
    FormulationKind,
    all_threes_assignment,
    build_formulation,
    compute_bounds,
    extract_labeling,
    labeling_to_assignment,
)
from doubleroman.graphs import Graph, compute_params, generate_grid
from doubleroman.model import BINARY, CONTINUOUS, GE, LE
from doubleroman.oracle import is_drdf


def _counts(model):
    return model.num_binary(), model.num_continuous(), len(model.constraints)


class TestCounts:
    def test_drdp1_k2(self, k2):
        model = build_formulation(k2, FormulationKind.DRDP1)
        assert _counts(model) == (6, 0, 6)

    def test_drdp2_k2(self, k2):
        model = build_formulation(k2, FormulationKind.DRDP2)
        assert _counts(model) == (6, 0, 8)  # chain rows split in two

    def test_drdp1p_c4(self):
        model = build_formulation(cycle_graph(4), FormulationKind.DRDP1P)
        assert _counts(model) == (8, 0, 8)

    def test_drdp2p_c4(self):
        model = build_formulation(cycle_graph(4), FormulationKind.DRDP2P)
        assert _counts(model) == (8, 0, 8)

    def test_drdp1pp_c4_drops_pairing_rows(self):
        model = build_formulation(cycle_graph(4), FormulationKind.DRDP1PP)
        assert _counts(model) == (8, 0, 4)
        assert all(c.name.startswith("cover_") for c in model.constraints)

    def test_drdp2pp_k2_relaxed_r(self, k2):
        model = build_formulation(k2, FormulationKind.DRDP2PP)
        assert _counts(model) == (2, 2, 4)
        r0 = model.variable_by_name("r_0")
        assert r0.integrality == CONTINUOUS
        assert (r0.lower, r0.upper) == (Fraction(0), Fraction(1))

    def test_half_coefficients_are_exact(self, p3):
        model = build_formulation(p3, FormulationKind.DRDP2PP)
        halves = [
            coef
            for con in model.constraints
            for _, coef in con.terms
            if coef == Fraction(1, 2)
        ]
        assert halves, "cover rows must carry exact 1/2 coefficients"

    def test_objective_coefficients_from_paperly_range(self, p4):
        for kind in FormulationKind:
            model = build_formulation(p4, kind)
            assert {int(c) for _, c in model.objective} <= {1, 2, 3}


class TestStrengthen:
    def test_rejected_for_wrong_kinds(self, c4):
        bounds = compute_bounds(compute_params(c4))
        for kind in (FormulationKind.DRDP1, FormulationKind.DRDP2, FormulationKind.DRDP1PP, FormulationKind.DRDP2PP):
            with pytest.raises(ValueError):
                build_formulation(c4, kind, bounds=bounds, strengthen=True)

    def test_requires_bounds(self, c4):
        with pytest.raises(ValueError):
            build_formulation(c4, FormulationKind.DRDP1P, strengthen=True)

    def test_adds_named_rows(self, c5):
        bounds = compute_bounds(compute_params(c5))
        model = build_formulation(c5, FormulationKind.DRDP1P, bounds=bounds, strengthen=True)
        names = {c.name for c in model.constraints}
        assert {"vi_L1", "vi_L2", "vi_L3", "vi_U1", "vi_U2"} <= names
        model2 = build_formulation(c5, FormulationKind.DRDP2P, bounds=bounds, strengthen=True)
        names2 = {c.name for c in model2.constraints}
        assert {"vi_L1", "vi_L2", "vi_L3", "vi_U1", "vi_U2"} <= names2

    def test_disconnected_graph_omits_connected_rows(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        bounds = compute_bounds(compute_params(g))
        assert bounds.l2 is None and bounds.u2 is None
        model = build_formulation(g, FormulationKind.DRDP1P, bounds=bounds, strengthen=True)
        names = {c.name for c in model.constraints}
        assert "vi_L2" not in names and "vi_U2" not in names
        assert {"vi_L1", "vi_L3", "vi_U1"} <= names


class TestBounds:
    def test_grid_5x10_reference_values(self):
        params = compute_params(generate_grid(5, 10))
        bounds = compute_bounds(params)
        assert bounds.l3 == 30
        assert bounds.u2 == 62
        assert bounds.gamma_lb == 10

    def test_c9_l1(self):
        params = compute_params(cycle_graph(9))
        bounds = compute_bounds(params)
        assert bounds.l1 == 6

    def test_k1_all_absent(self, k1):
        bounds = compute_bounds(compute_params(k1))
        assert bounds == BoundSet(None, None, None, None, None, None)

    def test_l1_le_l2_and_u2_le_u1(self):
        for g in [cycle_graph(6), path_graph(7), star_graph(6), generate_grid(3, 4)]:
            bounds = compute_bounds(compute_params(g))
            if bounds.l2 is not None:
                assert bounds.l1 <= bounds.l2
            if bounds.u2 is not None:
                assert bounds.u2 <= bounds.u1

    def test_log_term_guarded_for_isolated_vertices(self):
        # one edge plus four isolated vertices: the unguarded log bound would
        # claim U1 = 10 while the optimum is 11
        g = Graph.from_edges(6, [(0, 1)])
        bounds = compute_bounds(compute_params(g))
        assert bounds.u1 == 11

    def test_tree_girth_indicators(self):
        # acyclic graphs count as girth >= a; with min degree 1 only the
        # 2*delta term fires, which every n >= 2 graph satisfies
        params = compute_params(path_graph(6))
        bounds = compute_bounds(params)
        assert bounds.l2 is not None and bounds.l2 >= 2


class TestExtract:
    def test_direct_readoff_p3(self, p3):
        assignment = labeling_to_assignment(p3, FormulationKind.DRDP2PP, [0, 3, 0])
        lab = extract_labeling(p3, FormulationKind.DRDP2PP, assignment)
        assert lab.values == (0, 3, 0)

    def test_pair_selection_repaired_to_three(self, k2):
        # y and z both one on vertex 0 is feasible for the cover-only model
        # and must come back as the single label 3
        assignment = {0: 1.0, 1: 0.0, 2: 1.0, 3: 0.0}
        lab = extract_labeling(k2, FormulationKind.DRDP1PP, assignment)
        assert lab.values == (3, 0)
        assert lab.weight == 3

    def test_relaxed_r_below_one_fails_cover(self, star4):
        assignment = {0: 1.0, 1: 0.0, 2: 0.0, 3: 0.0, 4: 0.999999, 5: 0.0, 6: 0.0, 7: 0.0}
        with pytest.raises(CertificateError) as err:
            extract_labeling(star4, FormulationKind.DRDP2PP, assignment)
        assert err.value.constraint.startswith("cover_")

    def test_relaxed_r_at_one_reads_as_three(self, star4):
        assignment = {0: 1.0, 1: 0.0, 2: 0.0, 3: 0.0, 4: 1.0, 5: 0.0, 6: 0.0, 7: 0.0}
        lab = extract_labeling(star4, FormulationKind.DRDP2PP, assignment)
        assert lab.values == (3, 0, 0, 0)

    def test_nonintegral_binary_rejected(self, k2):
        with pytest.raises(CertificateError, match="not integral"):
            extract_labeling(k2, FormulationKind.DRDP1PP, {0: 0.4, 1: 0.6, 2: 0.0, 3: 0.0})

    def test_violated_cover_names_row(self, c4):
        assignment = labeling_to_assignment(c4, FormulationKind.DRDP1P, [2, 0, 0, 0])
        with pytest.raises(CertificateError) as err:
            extract_labeling(c4, FormulationKind.DRDP1P, assignment)
        assert err.value.constraint.startswith("cover_")

    @pytest.mark.parametrize("kind", list(FormulationKind))
    def test_all_threes_assignment_round_trips(self, c5, kind):
        lab = extract_labeling(c5, kind, all_threes_assignment(c5, kind))
        assert lab.values == (3,) * 5
        assert is_drdf(c5, lab)

    @pytest.mark.parametrize("kind", list(FormulationKind))
    def test_labeling_round_trips_through_assignment(self, c5, kind):
        values = [0, 3, 0, 2, 2]
        assert is_drdf(c5, values)
        lab = extract_labeling(c5, kind, labeling_to_assignment(c5, kind, values))
        assert lab.values == tuple(values)
