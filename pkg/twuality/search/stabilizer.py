"""
Stabilizers of labeled ribbon graphs in S^n x| S_n.

For a bouquet the search never builds all 6^n edge operations. Whether
gamma.G is again a bouquet, and its chord structure, depend only on which
clique matching becomes red on each edge, i.e. on gamma modulo the subgroup
{1, tau}. So the search runs over the 3^n choices of red and, for every
dihedral match, fixes each edge's remaining tau factor so the chord twists
agree with the target.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from loguru import logger

from ..base import ColorPair, InvariantViolation
from ..chord import ChordDiagram, DiagramForm, DihedralElement, act_offsets
from ..graph import LabeledRibbonGraph
from ..group import EdgeOp, EdgePermutation, RibbonElement, SemidirectElement, all_ribbon_elements
from ..isomorphism import canonical_code, isomorphisms
from ..jewel import color_components, from_jewel, to_jewel
from ..action import apply_gamma, is_self_gamma

# the representative of each coset {g, tau g} sending original red, blue or green to red
_RED_CHOICES = (EdgeOp.ONE, EdgeOp.DELTA, EdgeOp.DELTA_TAU)


@dataclass(frozen=True)
class Stabilizer:
    graph: LabeledRibbonGraph
    elements: Tuple[SemidirectElement, ...]

    def __iter__(self) -> Iterator[SemidirectElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element: SemidirectElement) -> bool:
        return element in set(self.elements)

    def automorphisms(self) -> List[EdgePermutation]:
        return [x.pi for x in self.elements if x.gamma.is_identity()]

    def nontrivial(self) -> List[SemidirectElement]:
        """Elements with a non-identity gamma."""
        return [x for x in self.elements if not x.gamma.is_identity()]

    def is_closed(self) -> bool:
        members = set(self.elements)
        return all(x * y in members for x in self.elements for y in self.elements)


def _magnitudes(entries: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(abs(e) for e in entries)


def _bouquet_stabilizer(graph: LabeledRibbonGraph) -> List[SemidirectElement]:
    n = graph.n
    jewel = to_jewel(graph)
    labels = graph.vertices[0]
    target = ChordDiagram(DiagramForm.END_LABEL, labels).convert(DiagramForm.OFFSET).entries
    twisted = {abs(t): t < 0 for t in labels}

    # magnitudes of target.sigma' -> sigma'; a candidate with those magnitudes matches via sigma'^-1
    preimages: Dict[Tuple[int, ...], List[DihedralElement]] = {}
    for sigma in DihedralElement.all(len(target)):
        preimages.setdefault(_magnitudes(act_offsets(target, sigma)), []).append(sigma)

    found = set()
    for choice in itertools.product(_RED_CHOICES, repeat=n):
        recolored = jewel.recolor(choice)
        if color_components(recolored, ColorPair.RED_YELLOW) != 1:
            continue
        image = from_jewel(recolored)
        image_labels = image.vertices[0]
        image_offsets = ChordDiagram(DiagramForm.END_LABEL, image_labels).convert(
            DiagramForm.OFFSET
        )
        for sigma_prime in preimages.get(_magnitudes(image_offsets.entries), ()):
            sigma = sigma_prime.inverse()
            # target spot i corresponds to image spot sigma(i)
            images = [0] * n
            ops = list(choice)
            for spot, label in enumerate(labels):
                image_label = abs(image_labels[sigma(spot)])
                images[image_label - 1] = abs(label)
                if (image_labels[sigma(spot)] < 0) != twisted[abs(label)]:
                    ops[image_label - 1] = EdgeOp.TAU * choice[image_label - 1]
            f = EdgePermutation(tuple(images))
            gamma = RibbonElement(tuple(ops))
            found.add(SemidirectElement(gamma.permuted(f), f))
    return list(found)


def general_stabilizers(graph: LabeledRibbonGraph) -> List[SemidirectElement]:
    """Exhaustive search over all of S^n with full isomorphism enumeration."""
    code = canonical_code(graph)
    found = set()
    for gamma in all_ribbon_elements(graph.n):
        image = apply_gamma(gamma, graph)
        if image.vertex_count != graph.vertex_count or canonical_code(image) != code:
            continue
        for f in isomorphisms(image, graph):
            found.add(SemidirectElement(gamma.permuted(f), f))
    return list(found)


def stabilizers(graph: LabeledRibbonGraph, verify: bool = True) -> Stabilizer:
    if graph.is_bouquet and graph.n > 0:
        elements = _bouquet_stabilizer(graph)
    else:
        logger.debug(f"{graph} is not a bouquet; using the exhaustive stabilizer search")
        elements = general_stabilizers(graph)
    elements.sort(key=SemidirectElement.sort_key)
    if verify:
        for element in elements:
            if not is_self_gamma(graph, element):
                raise InvariantViolation(f"{element} does not fix {graph}")
    logger.debug(f"stabilizer of {graph} has {len(elements)} elements")
    return Stabilizer(graph, tuple(elements))
