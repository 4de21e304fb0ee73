"""
Self-twuality classification.

A graph is naturally self-g when the uniform image g.G is isomorphic to G by
any edge correspondence, and canonically self-g when the identity
correspondence already works.
"""

from dataclasses import asdict, dataclass
from typing import Dict, List

from ..action import apply_uniform
from ..graph import LabeledRibbonGraph
from ..group import EdgeOp, EdgePermutation
from ..isomorphism import is_isomorphic, isomorphisms, labeled_iso

TWUALITIES: Dict[str, EdgeOp] = {
    "dual": EdgeOp.DELTA,
    "petrial": EdgeOp.TAU,
    "wilsonial": EdgeOp.TAU_DELTA_TAU,
    "trial": EdgeOp.DELTA_TAU,
}


@dataclass(frozen=True)
class TwualityClass:
    self_dual: bool
    self_petrial: bool
    self_wilsonial: bool
    self_trial: bool
    canonical_self_dual: bool
    canonical_self_petrial: bool
    canonical_self_wilsonial: bool
    canonical_self_trial: bool

    def as_dict(self) -> Dict[str, bool]:
        return asdict(self)

    @property
    def is_class_three(self) -> bool:
        """Self-trial without being self-dual or self-Petrial."""
        return self.self_trial and not self.self_dual and not self.self_petrial


def is_self_twual(graph: LabeledRibbonGraph, op: EdgeOp, canonical: bool = False) -> bool:
    image = apply_uniform(op, graph)
    if canonical:
        return labeled_iso(image, graph)
    return is_isomorphic(image, graph)


def classify(graph: LabeledRibbonGraph) -> TwualityClass:
    flags = {}
    for name, op in TWUALITIES.items():
        image = apply_uniform(op, graph)
        flags[f"self_{name}"] = is_isomorphic(image, graph)
        flags[f"canonical_self_{name}"] = labeled_iso(image, graph)
    return TwualityClass(**flags)


def twuality_witnesses(graph: LabeledRibbonGraph, op: EdgeOp) -> List[EdgePermutation]:
    """Every pi with (uniform op, pi) fixing the labeled graph, least one-line form first."""
    witnesses = isomorphisms(apply_uniform(op, graph), graph)
    return sorted(witnesses, key=lambda pi: pi.images)


def automorphisms(graph: LabeledRibbonGraph) -> List[EdgePermutation]:
    return sorted(isomorphisms(graph, graph), key=lambda pi: pi.images)
