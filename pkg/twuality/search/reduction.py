"""Carry a connected ribbon graph to an orientable embedded bouquet in its orbit."""

from typing import List, Tuple

from loguru import logger

from ..action import apply_gamma
from ..base import DisconnectedGraphError, InvariantViolation
from ..chord import ChordDiagram, DiagramForm
from ..graph import LabeledRibbonGraph
from ..group import EdgeOp, RibbonElement
from ..isomorphism import is_oeb, labeled_iso


def _single(op: EdgeOp, label: int, n: int) -> RibbonElement:
    ops = [EdgeOp.ONE] * n
    ops[label - 1] = op
    return RibbonElement(tuple(ops))


def reduce_to_oeb(graph: LabeledRibbonGraph) -> Tuple[ChordDiagram, RibbonElement]:
    """Partial duals on non-loop edges until one vertex is left, then untwist.

    Returns the bouquet as an end-label diagram together with alpha such that
    (alpha, identity) maps the input onto it.
    """
    if not graph.is_connected():
        raise DisconnectedGraphError(f"{graph} has {len(graph.components())} components")
    n = graph.n
    if n == 0:
        return ChordDiagram(DiagramForm.END_LABEL, ()), RibbonElement(())

    alpha: List[EdgeOp] = [EdgeOp.ONE] * n
    current = graph
    while not current.is_bouquet:
        label = next(k for k in range(1, n + 1) if not current.is_loop(k))
        current = apply_gamma(_single(EdgeOp.DELTA, label, n), current)
        alpha[label - 1] = EdgeOp.DELTA * alpha[label - 1]
    for label in current.twisted_edges():
        current = apply_gamma(_single(EdgeOp.TAU, label, n), current)
        alpha[label - 1] = EdgeOp.TAU * alpha[label - 1]

    witness = RibbonElement(tuple(alpha))
    if not is_oeb(current) or not labeled_iso(apply_gamma(witness, graph), current):
        raise InvariantViolation(f"reduction of {graph} by {witness} did not reach an OEB")
    logger.debug(f"{graph} reduces to {current} via {witness}")
    return ChordDiagram(DiagramForm.END_LABEL, current.vertices[0]), witness
