"""
An infinite family of self-trial graphs that are not self-dual, and the
automorphism-driven search that produces it.

Any automorphism mu of H gives a self-(1, mu) graph; each alpha solving
alpha . phi_mu(alpha^-1) = (g, ..., g) turns it into a graph that is self-g
via mu.
"""

from typing import List, Optional, Tuple

from loguru import logger

from ..action import apply_gamma
from ..base import GraphValidationError
from ..graph import LabeledRibbonGraph
from ..group import EdgeOp, EdgePermutation, RibbonElement
from ..isomorphism import canonical_code
from .classify import automorphisms
from .solver import solve_alpha


def family_oeb(k: int) -> LabeledRibbonGraph:
    """The OEB reading e2, e1, e3, e2, ..., e_3k, e_3k-1, e1, e_3k around its vertex."""
    if k < 1:
        raise GraphValidationError(f"family index must be positive, got {k}")
    size = 3 * k
    tokens = []
    for i in range(2, size + 2):
        tokens.extend(((i - 1) % size + 1, i - 1))
    return LabeledRibbonGraph.from_vertices((tuple(tokens),))


def family_alpha(k: int) -> RibbonElement:
    return RibbonElement(
        (EdgeOp.ONE,) * k + (EdgeOp.DELTA_TAU,) * k + (EdgeOp.TAU_DELTA,) * k
    )


def family_rotation(k: int) -> EdgePermutation:
    """The automorphism i -> i + k of the family OEB."""
    size = 3 * k
    return EdgePermutation(tuple((i - 1 + k) % size + 1 for i in range(1, size + 1)))


def family(k: int) -> Tuple[LabeledRibbonGraph, RibbonElement, LabeledRibbonGraph]:
    oeb = family_oeb(k)
    alpha = family_alpha(k)
    return oeb, alpha, apply_gamma(alpha, oeb)


def automorph_twuals(
    oeb: LabeledRibbonGraph, op: EdgeOp, limit: Optional[int] = None
) -> List[Tuple[EdgePermutation, RibbonElement, LabeledRibbonGraph]]:
    """(mu, alpha, alpha.H) for automorphisms mu of H, one triple per isomorphism class."""
    target = RibbonElement.uniform(op, oeb.n)
    identity = RibbonElement.identity(oeb.n)
    seen = set()
    results = []
    for mu in automorphisms(oeb):
        for alpha in solve_alpha(identity, mu, target):
            graph = apply_gamma(alpha, oeb)
            code = canonical_code(graph)
            if code in seen:
                continue
            seen.add(code)
            results.append((mu, alpha, graph))
            if limit is not None and len(results) >= limit:
                return results
    logger.info(f"{len(results)} self-{op} classes from automorphisms of {oeb}")
    return results
