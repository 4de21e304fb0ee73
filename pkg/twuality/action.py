"""
The action of S^n x| S_n on edge-labeled ribbon graphs and the formulas that
transport a self-twuality along an orbit.

(gamma, pi) . (G, l) = gamma . (G, l pi^-1): the edge labeled k in G receives
gamma(pi(k)) and is labeled pi(k) afterwards, so edge i of the image has
received gamma(i).
"""

from dataclasses import dataclass
from typing import Tuple

from loguru import logger

from .base import DegreeMismatchError
from .graph import LabeledRibbonGraph
from .group import EdgeOp, EdgePermutation, RibbonElement, SemidirectElement
from .isomorphism import labeled_iso
from .jewel import from_jewel, to_jewel


@dataclass(frozen=True)
class OrbitStep:
    element: SemidirectElement
    source: LabeledRibbonGraph
    target: LabeledRibbonGraph

    def verify(self) -> bool:
        return labeled_iso(apply(self.element, self.source), self.target)


def apply(x: SemidirectElement, graph: LabeledRibbonGraph) -> LabeledRibbonGraph:
    if x.degree != graph.n:
        raise DegreeMismatchError(f"Element of degree {x.degree} acting on {graph.n} edges")
    if graph.n == 0:
        return graph
    ops = [x.gamma.at(x.pi(label)) for label in range(1, graph.n + 1)]
    image = from_jewel(to_jewel(graph).recolor(ops))
    return image if x.pi.is_identity() else image.relabel(x.pi)


def orbit_step(x: SemidirectElement, graph: LabeledRibbonGraph) -> OrbitStep:
    return OrbitStep(x, graph, apply(x, graph))


def apply_gamma(gamma: RibbonElement, graph: LabeledRibbonGraph) -> LabeledRibbonGraph:
    return apply(SemidirectElement.of(gamma), graph)


def apply_uniform(op: EdgeOp, graph: LabeledRibbonGraph) -> LabeledRibbonGraph:
    return apply_gamma(RibbonElement.uniform(op, graph.n), graph)


def is_self_gamma(graph: LabeledRibbonGraph, x: SemidirectElement) -> bool:
    """Labeled check; the identity element is vacuously true."""
    return labeled_iso(apply(x, graph), graph)


def propagate_canonical(gamma: RibbonElement, alpha: RibbonElement) -> RibbonElement:
    if len(gamma) != len(alpha):
        raise DegreeMismatchError(f"Lengths differ: {len(gamma)} vs {len(alpha)}")
    return RibbonElement(tuple(a.conjugate(g) for a, g in zip(alpha, gamma)))


def propagate(
    gamma: RibbonElement,
    mu: EdgePermutation,
    alpha: RibbonElement,
    pi: EdgePermutation,
) -> Tuple[RibbonElement, EdgePermutation]:
    """If G is self-(gamma, mu) and (alpha, pi) maps G to G', G' is self of the result."""
    if not len(gamma) == mu.degree == len(alpha) == pi.degree:
        raise DegreeMismatchError("gamma, mu, alpha and pi must share one degree")
    mu_prime = pi * mu * pi.inverse()
    gamma_prime = alpha * gamma.permuted(pi) * alpha.inverse().permuted(mu_prime)
    logger.debug(f"propagated {gamma} via {mu} to {gamma_prime} via {mu_prime}")
    return gamma_prime, mu_prime


def lemma_reorder(
    gamma: RibbonElement, mu: EdgePermutation, pi: EdgePermutation
) -> Tuple[RibbonElement, EdgePermutation]:
    """Self-(gamma, mu) for labeling l becomes self of this pair for l pi^-1."""
    return gamma.permuted(pi), pi * mu * pi.inverse()


def cycle_product(gamma: RibbonElement, cycle: Tuple[int, ...]) -> EdgeOp:
    """gamma(c_m) ... gamma(c_1) for the cycle (c_1 ... c_m)."""
    product = EdgeOp.ONE
    for position in cycle:
        product = gamma.at(position) * product
    return product


def cycle_order_check(gamma: RibbonElement, mu: EdgePermutation, g: EdgeOp) -> bool:
    """Whether gamma can be carried to uniform g along mu, cycle by cycle."""
    if len(gamma) != mu.degree:
        raise DegreeMismatchError(f"gamma length {len(gamma)} vs mu degree {mu.degree}")
    for cycle in mu.cycles(include_fixed=True):
        power = EdgeOp.ONE
        for _ in cycle:
            power = power * g
        if cycle_product(gamma, cycle).order != power.order:
            return False
    return True
