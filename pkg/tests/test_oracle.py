"""Feasibility predicates and the brute-force optimum search."""

import itertools

import pytest

from doubleroman.corpus import complete_graph, corpus_graphs, path_graph, star_graph
from doubleroman.graphs import Graph, complement, generate_gnp
from doubleroman.oracle import (
    Codomain,
    Labeling,
    Quantity,
    drdf_violation,
    exact,
    is_dominating_set,
    is_drdf,
    is_rdf,
    rdf_violation,
)


def test_labeling_weight_and_validation():
    lab = Labeling((0, 3, 0))
    assert lab.weight == 3
    assert list(lab) == [0, 3, 0]
    with pytest.raises(ValueError):
        Labeling((0, 4))


class TestIsDrdf:
    def test_two_twos_cover(self, c4):
        assert is_drdf(c4, (2, 0, 2, 0))

    def test_unreached_vertex(self, c4):
        assert not is_drdf(c4, (3, 0, 0, 0))
        assert drdf_violation(c4, (3, 0, 0, 0)) == 2

    def test_one_needs_strong_neighbor(self, p3):
        assert drdf_violation(p3, (0, 1, 2)) == 0
        assert is_drdf(p3, (1, 2, 1))

    def test_single_two_insufficient(self, p3):
        assert drdf_violation(p3, (0, 2, 0)) == 0

    def test_three_neighbor_covers(self, p3):
        assert is_drdf(p3, (0, 3, 0))

    def test_length_mismatch(self, p3):
        with pytest.raises(ValueError):
            is_drdf(p3, (0, 3))


class TestIsRdf:
    def test_center_two(self, p3):
        assert is_rdf(p3, (0, 2, 0))

    def test_ones_do_not_guard(self, p3):
        assert rdf_violation(p3, (1, 0, 1)) == 1

    def test_lonely_one_is_fine(self, k1):
        assert is_rdf(k1, (1,))

    def test_rejects_threes(self, p3):
        with pytest.raises(ValueError):
            is_rdf(p3, (0, 3, 0))


class TestIsDominatingSet:
    def test_alternating_cycle(self, c4):
        assert is_dominating_set(c4, {0, 2})
        assert not is_dominating_set(c4, {0})

    def test_complete_single(self, k5):
        assert is_dominating_set(k5, {3})

    def test_isolated_needs_self(self):
        g = Graph.from_edges(3, [(0, 1)])
        assert not is_dominating_set(g, {0})
        assert is_dominating_set(g, {0, 2})


class TestExact:
    def test_k1_forced_two(self, k1):
        for codomain in (Codomain.FULL_0123, Codomain.REDUCED_023):
            value, cert = exact(k1, Quantity.GAMMA_DR, codomain)
            assert value == 2
            assert cert.values == (2,)

    def test_p3(self, p3):
        value, cert = exact(p3, Quantity.GAMMA_DR)
        assert value == 3
        assert cert.values == (0, 3, 0)

    def test_c4(self, c4):
        value, cert = exact(c4, Quantity.GAMMA_DR)
        assert value == 4
        assert is_drdf(c4, cert) and cert.weight == 4

    def test_certificate_is_lexicographically_smallest(self, c4):
        # both (0,2,0,2) and (2,0,2,0) are optimal; enumeration prefers the first
        _, cert = exact(c4, Quantity.GAMMA_DR)
        assert cert.values == (0, 2, 0, 2)

    def test_gamma_examples(self, c4, k5, star5):
        assert exact(c4, Quantity.GAMMA)[0] == 2
        assert exact(k5, Quantity.GAMMA)[0] == 1
        assert exact(star5, Quantity.GAMMA)[0] == 1

    def test_gamma_r_path4(self, p4):
        value, cert = exact(p4, Quantity.GAMMA_R)
        assert value == 3
        assert is_rdf(p4, cert) and cert.weight == 3

    def test_codomain_rejected_for_other_quantities(self, p3):
        with pytest.raises(ValueError):
            exact(p3, Quantity.GAMMA, Codomain.REDUCED_023)
        with pytest.raises(ValueError):
            exact(p3, Quantity.GAMMA_R, Codomain.FULL_0123)

    def test_size_guard(self):
        g = Graph.from_edges(17, [(i, i + 1) for i in range(16)])
        with pytest.raises(ValueError):
            exact(g, Quantity.GAMMA_DR)

    def test_certificates_reverify(self):
        for seed in range(1, 6):
            g = generate_gnp(7, 0.4, seed)
            value, cert = exact(g, Quantity.GAMMA_DR)
            assert is_drdf(g, cert) and cert.weight == value
            rvalue, rcert = exact(g, Quantity.GAMMA_R)
            assert is_rdf(g, rcert) and rcert.weight == rvalue
            gvalue, gcert = exact(g, Quantity.GAMMA)
            assert is_dominating_set(g, gcert) and len(gcert) == gvalue


def _exhaustive_gamma_dr(g: Graph) -> int:
    """Independent oracle: plain product enumeration, no pruning."""
    best = 3 * g.n
    for values in itertools.product((0, 1, 2, 3), repeat=g.n):
        if sum(values) < best and is_drdf(g, values):
            best = sum(values)
    return best


@pytest.mark.parametrize("seed", range(1, 9))
def test_exact_matches_plain_enumeration(seed):
    g = generate_gnp(6, 0.45, seed)
    assert exact(g, Quantity.GAMMA_DR)[0] == _exhaustive_gamma_dr(g)


def test_reduced_codomain_matches_full_on_small_corpus():
    checked = 0
    for name, g in corpus_graphs():
        if g.n > 10:
            continue
        full, _ = exact(g, Quantity.GAMMA_DR, Codomain.FULL_0123)
        reduced, _ = exact(g, Quantity.GAMMA_DR, Codomain.REDUCED_023)
        assert full == reduced, name
        checked += 1
    assert checked > 150


def test_classic_sandwiches_on_small_graphs():
    for name, g in itertools.islice(corpus_graphs(), 0, 60):
        if g.n < 2 or g.n > 9:
            continue
        gamma = exact(g, Quantity.GAMMA)[0]
        gamma_r = exact(g, Quantity.GAMMA_R)[0]
        gamma_dr = exact(g, Quantity.GAMMA_DR)[0]
        assert 2 * gamma <= gamma_dr <= 3 * gamma, name
        assert gamma_r < gamma_dr <= 2 * gamma_r, name
