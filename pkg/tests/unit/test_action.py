"""
Unit tests for the ribbon-group action and the propagation formulas.
"""

import itertools
import random
from pathlib import Path
import pytest

import sys

project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from twuality.action import (
    apply,
    apply_gamma,
    apply_uniform,
    cycle_order_check,
    cycle_product,
    is_self_gamma,
    lemma_reorder,
    orbit_step,
    propagate,
    propagate_canonical,
)
from twuality.base import DegreeMismatchError
from twuality.graph import LabeledRibbonGraph, parse_graph
from twuality.group import (
    EdgeOp,
    EdgePermutation,
    RibbonElement,
    SemidirectElement,
    all_ribbon_elements,
)
from twuality.enumeration import oebs_up_to_iso
from twuality.isomorphism import canonical_code, invariants, is_isomorphic, labeled_iso
from twuality.search.classify import is_self_twual

H3 = "[1, 2, 3, 1, 2, 3]"
CENSUS_THREE = "[1, -3, 2, 1, 2, -3]"


H5 = "[1, 2, 3, 4, 2, 5, 4, 1, 5, 3]"
H6 = "[1, 2, 3, 4, 5, 6, 2, 4, 1, 5, 3, 6]"
H7 = "[1, 2, 3, 4, 5, 6, 2, 7, 3, 5, 1, 4, 6, 7]"

# seed OEBs and a sample of self-trial graphs from the census tables
LISTED_GRAPHS = [
    H3,
    H5,
    H6,
    H7,
    CENSUS_THREE,
    "[-1, 4, 2, 3, -5, 2][-1, -5, 4, 3]",
    "[1, -4, -5, 3, -2][1, -5, 6, 3, -4, -2, 6]",
    "[-1, -2, 7][-1, 4, 5, 3, 7, -6, 4, 3, -2, -6, 5]",
    "[1, 5, -6, 2, 3, 7, -6, 4, 1, 2, 7][3, 5, 4]",
]


def cycles(text, n):
    return EdgePermutation.from_cycles(text, n)


def random_element(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    gamma = RibbonElement(tuple(rng.choice(list(EdgeOp)) for _ in range(n)))
    return SemidirectElement(gamma, EdgePermutation(tuple(images)))


def bouquets_up_to(k):
    """OEB classes on 1..k chords, each also with its first edge and all edges twisted."""
    graphs = []
    for size in range(1, k + 1):
        for diagram in oebs_up_to_iso(size):
            oeb = diagram.to_graph()
            first = RibbonElement((EdgeOp.TAU,) + (EdgeOp.ONE,) * (size - 1))
            graphs.extend([oeb, apply_gamma(first, oeb), apply_uniform(EdgeOp.TAU, oeb)])
    return graphs


class TestApply:
    """Single elements acting on graphs."""

    def test_identity(self):
        graph = parse_graph(CENSUS_THREE)
        assert labeled_iso(apply(SemidirectElement.identity(3), graph), graph)

    def test_petrial_of_loop(self):
        assert apply_uniform(EdgeOp.TAU, parse_graph("[1, 1]")) == parse_graph("[-1, -1]")

    def test_dual_swaps_vertices_and_faces(self):
        graph = parse_graph("[1, 1, 2, 2]")
        dual = apply_uniform(EdgeOp.DELTA, graph)
        before, after = invariants(graph), invariants(dual)
        assert (after.V, after.E, after.F) == (before.F, before.E, before.V)

    def test_petrial_keeps_vertices(self):
        graph = parse_graph(H3)
        petrial = apply_uniform(EdgeOp.TAU, graph)
        assert petrial.is_bouquet
        assert petrial.twisted_edges() == [1, 2, 3]

    def test_partial_dual_of_non_loop_merges_vertices(self):
        graph = parse_graph("[1, 2][1, 2]")
        image = apply_gamma(RibbonElement((EdgeOp.DELTA, EdgeOp.ONE)), graph)
        assert image.is_bouquet

    def test_triality_has_order_three(self):
        graph = parse_graph(CENSUS_THREE)
        image = graph
        for _ in range(3):
            image = apply_uniform(EdgeOp.DELTA_TAU, image)
        assert labeled_iso(image, graph)

    def test_relabeling_only(self):
        graph = parse_graph(H3)
        pi = cycles("(1 2)", 3)
        image = apply(SemidirectElement.of(RibbonElement.identity(3), pi), graph)
        assert labeled_iso(image, graph.relabel(pi))

    def test_edge_receives_operation_before_relabeling(self):
        graph = parse_graph("[1, 1, 2, 2]")
        x = SemidirectElement(RibbonElement((EdgeOp.ONE, EdgeOp.TAU)), cycles("(1 2)", 2))
        # edge 1 receives gamma(pi(1)) = tau and is renamed 2
        assert labeled_iso(apply(x, graph), parse_graph("[-2, -2, 1, 1]"))

    def test_action_law(self):
        graph = parse_graph(CENSUS_THREE)
        gammas = [
            RibbonElement.parse("(t,d,1)"),
            RibbonElement.parse("(td,1,dt)"),
            RibbonElement.parse("(tdt,d,t)"),
        ]
        perms = [cycles("()", 3), cycles("(1 2 3)", 3), cycles("(2 3)", 3)]
        elements = [SemidirectElement(g, p) for g in gammas for p in perms]
        for x, y in itertools.product(elements, repeat=2):
            assert labeled_iso(apply(x * y, graph), apply(x, apply(y, graph)))

    @pytest.mark.parametrize("text", LISTED_GRAPHS)
    def test_action_law_random(self, text):
        graph = parse_graph(text)
        rng = random.Random(text)
        for _ in range(25):
            x, y = random_element(rng, graph.n), random_element(rng, graph.n)
            assert labeled_iso(apply(x * y, graph), apply(x, apply(y, graph)))
            assert labeled_iso(apply(x.inverse(), apply(x, graph)), graph)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            apply(SemidirectElement.identity(2), parse_graph(H3))

    def test_isolated_vertex(self):
        graph = LabeledRibbonGraph.isolated_vertex()
        assert apply(SemidirectElement.identity(0), graph) == graph

    def test_orbit_step(self):
        graph = parse_graph(H3)
        step = orbit_step(SemidirectElement.of(RibbonElement.parse("(d,1,1)")), graph)
        assert step.verify()
        assert step.source == graph


class TestConservation:
    """Counts preserved or swapped by uniform operations on small bouquets."""

    GRAPHS = bouquets_up_to(5)

    def test_bouquet_sample(self):
        assert len(self.GRAPHS) == 3 * (1 + 2 + 5 + 17 + 79)

    def test_dual_swaps_vertices_and_faces(self):
        for graph in self.GRAPHS:
            before = invariants(graph)
            after = invariants(apply_uniform(EdgeOp.DELTA, graph))
            assert (after.V, after.E, after.F) == (before.F, before.E, before.V), str(graph)
            assert after.euler == before.euler
            assert after.orientable == before.orientable

    def test_petrial_keeps_vertices_and_edges(self):
        for graph in self.GRAPHS:
            before = invariants(graph)
            after = invariants(apply_uniform(EdgeOp.TAU, graph))
            assert (after.V, after.E) == (before.V, before.E), str(graph)

    def test_triality_cubed_is_identity(self):
        for graph in self.GRAPHS:
            image = graph
            for _ in range(3):
                image = apply_uniform(EdgeOp.DELTA_TAU, image)
            assert labeled_iso(image, graph), str(graph)


class TestSelfTwuality:
    """Stabilizer membership of known elements."""

    def test_both_trialities_agree_on_three_edges(self):
        seen = {}
        for diagram in oebs_up_to_iso(3):
            oeb = diagram.to_graph()
            for alpha in all_ribbon_elements(3):
                graph = apply_gamma(alpha, oeb)
                seen.setdefault(canonical_code(graph), graph)
        trial = 0
        for graph in seen.values():
            forward = is_self_twual(graph, EdgeOp.DELTA_TAU)
            assert forward == is_self_twual(graph, EdgeOp.TAU_DELTA), str(graph)
            trial += forward
        assert trial > 0

    def test_h3_stabilizer_element(self):
        x = SemidirectElement(RibbonElement.parse("(1,d,d)"), cycles("(1 2 3)", 3))
        assert is_self_gamma(parse_graph(H3), x)

    def test_census_graph_is_self_trial(self):
        graph = parse_graph(CENSUS_THREE)
        alpha = RibbonElement.parse("(tdt,td,d)")
        assert is_isomorphic(apply_gamma(alpha, parse_graph(H3)), graph)
        x = SemidirectElement(RibbonElement.uniform(EdgeOp.DELTA_TAU, 3), cycles("(1 2 3)", 3))
        assert is_self_gamma(apply_gamma(alpha, parse_graph(H3)), x)

    def test_identity_is_vacuous(self):
        assert is_self_gamma(parse_graph(H3), SemidirectElement.identity(3))


class TestPropagation:
    """Carrying a self-twuality along an orbit."""

    def test_canonical(self):
        gamma = RibbonElement.parse("(d,t,dt)")
        alpha = RibbonElement.parse("(t,dt,d)")
        propagated = propagate_canonical(gamma, alpha)
        assert propagated == RibbonElement.parse("(tdt,tdt,td)")

    def test_canonical_self_dual_digon(self):
        digon = parse_graph("[1, 2][1, 2]")
        gamma = RibbonElement.uniform(EdgeOp.DELTA, 2)
        assert labeled_iso(apply_gamma(gamma, digon), digon)
        alpha = RibbonElement.parse("(t,dt)")
        propagated = propagate_canonical(gamma, alpha)
        assert propagated == RibbonElement.parse("(tdt,t)")
        image = apply_gamma(alpha, digon)
        assert labeled_iso(apply_gamma(propagated, image), image)

    def test_h3_to_census_graph(self):
        gamma = RibbonElement.parse("(1,d,d)")
        mu = cycles("(1 2 3)", 3)
        alpha = RibbonElement.parse("(tdt,td,d)")
        gamma_prime, mu_prime = propagate(gamma, mu, alpha, EdgePermutation.identity(3))
        assert gamma_prime == RibbonElement.uniform(EdgeOp.DELTA_TAU, 3)
        assert mu_prime == mu

    def test_propagation_preserves_stabilizers(self):
        graph = parse_graph(H3)
        gamma, mu = RibbonElement.parse("(1,d,d)"), cycles("(1 2 3)", 3)
        for alpha_text, pi_text in [("(t,1,d)", "(1 2)"), ("(td,dt,1)", "(1 3 2)")]:
            alpha, pi = RibbonElement.parse(alpha_text), cycles(pi_text, 3)
            image = apply(SemidirectElement(alpha, pi), graph)
            gamma_prime, mu_prime = propagate(gamma, mu, alpha, pi)
            assert is_self_gamma(image, SemidirectElement(gamma_prime, mu_prime))

    @pytest.mark.parametrize(
        "oeb,gamma,mu",
        [
            (H3, "(1,d,d)", "(1 2 3)"),
            (H5, "(td,dt,td,1,dt)", "(3 5 4)"),
            (H6, "(tdt,1,tdt,td,d,tdt)", "(1 6 2)(3 4 5)"),
        ],
    )
    def test_propagation_random(self, oeb, gamma, mu):
        graph = parse_graph(oeb)
        gamma, mu = RibbonElement.parse(gamma), cycles(mu, graph.n)
        assert is_self_gamma(graph, SemidirectElement(gamma, mu))
        rng = random.Random(oeb)
        for _ in range(30):
            x = random_element(rng, graph.n)
            gamma_prime, mu_prime = propagate(gamma, mu, x.gamma, x.pi)
            image = apply(x, graph)
            assert is_self_gamma(image, SemidirectElement(gamma_prime, mu_prime)), str(x)

    def test_lemma_reorder(self):
        graph = parse_graph(H3)
        gamma, mu = RibbonElement.parse("(1,d,d)"), cycles("(1 2 3)", 3)
        pi = cycles("(1 2)", 3)
        gamma_prime, mu_prime = lemma_reorder(gamma, mu, pi)
        assert is_self_gamma(graph.relabel(pi), SemidirectElement(gamma_prime, mu_prime))

    def test_mismatched_degrees(self):
        with pytest.raises(DegreeMismatchError):
            propagate_canonical(RibbonElement.parse("(d)"), RibbonElement.parse("(d,t)"))
        with pytest.raises(DegreeMismatchError):
            propagate(
                RibbonElement.parse("(d)"),
                EdgePermutation.identity(2),
                RibbonElement.parse("(d)"),
                EdgePermutation.identity(1),
            )


class TestCycleConditions:
    """Cycle products and the order test."""

    def test_cycle_product_applies_first_point_first(self):
        gamma = RibbonElement.parse("(t,d,1)")
        assert cycle_product(gamma, (1, 2)) is EdgeOp.DELTA_TAU

    def test_h3_can_reach_triality(self):
        gamma = RibbonElement.parse("(1,d,d)")
        assert cycle_order_check(gamma, cycles("(1 2 3)", 3), EdgeOp.DELTA_TAU)

    def test_order_mismatch(self):
        # a fixed point carrying d cannot become dt
        gamma = RibbonElement.parse("(d,t,tdt)")
        assert not cycle_order_check(gamma, EdgePermutation.identity(3), EdgeOp.DELTA_TAU)
        assert cycle_order_check(gamma, EdgePermutation.identity(3), EdgeOp.TAU)


if __name__ == "__main__":
    pytest.main([__file__])
