"""
Ribbon-graph isomorphism, canonical codes and topological invariants.

A ribbon graph is determined up to isomorphism by the red, yellow and blue
matchings of its jewel (the flag structure). Rooting a breadth-first walk at
a node fixes a root edge-end and a root orientation; everything else follows,
so the least code over all roots of a component is canonical. Bouquets use
the cheaper dihedral comparison of chord diagrams instead.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from .base import Color, ColorPair
from .chord import ChordDiagram, DihedralElement, canonical_form
from .graph import LabeledRibbonGraph
from .group import EdgePermutation
from .jewel import bfs_code, color_components, node_components, to_jewel

CanonicalCode = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class IsoWitness:
    """Edge bijection source -> target; sigma is set when both graphs are bouquets."""

    edge_bijection: EdgePermutation
    sigma: Optional[DihedralElement] = None


@dataclass(frozen=True)
class GraphInvariants:
    V: int
    E: int
    F: int
    euler: int
    orientable: bool
    genus: int
    components: int = 1


def _flag_matchings(graph: LabeledRibbonGraph) -> List[Tuple[int, ...]]:
    jewel = to_jewel(graph)
    return [jewel.matching(Color.RED), jewel.yellow, jewel.matching(Color.BLUE)]


def canonical_code(graph: LabeledRibbonGraph) -> CanonicalCode:
    """Equal for two graphs exactly when they are isomorphic as unlabeled ribbon graphs."""
    if graph.n == 0:
        return ((),)
    matchings = _flag_matchings(graph)
    codes = [
        min(bfs_code(root, matchings)[0] for root in group)
        for group in node_components(matchings, 4 * graph.n)
    ]
    return tuple(sorted(codes))


def labeled_code(graph: LabeledRibbonGraph) -> CanonicalCode:
    """Equal for two graphs exactly when an isomorphism fixes every edge label."""
    if graph.n == 0:
        return ((),)
    matchings = _flag_matchings(graph)
    labels = [node // 4 + 1 for node in range(4 * graph.n)]
    codes = []
    for group in node_components(matchings, 4 * graph.n):
        roots = group[:4]  # the four nodes of the smallest edge in the component
        codes.append(min(bfs_code(root, matchings, labels)[0] for root in roots))
    return tuple(sorted(codes))


def labeled_iso(first: LabeledRibbonGraph, second: LabeledRibbonGraph) -> bool:
    return first.n == second.n and labeled_code(first) == labeled_code(second)


def isomorphisms(
    source: LabeledRibbonGraph, target: LabeledRibbonGraph
) -> Iterator[EdgePermutation]:
    """Every distinct edge bijection source -> target induced by an isomorphism."""
    if source.n != target.n:
        return
    if source.n == 0:
        yield EdgePermutation.identity(0)
        return
    size = 4 * source.n
    source_matchings = _flag_matchings(source)
    target_matchings = _flag_matchings(target)
    source_groups = node_components(source_matchings, size)
    target_groups = node_components(target_matchings, size)
    if sorted(map(len, source_groups)) != sorted(map(len, target_groups)):
        return
    target_group_of = {node: gi for gi, group in enumerate(target_groups) for node in group}

    rooted = [bfs_code(group[0], source_matchings) for group in source_groups]
    candidates: List[List[Tuple[int, List[int]]]] = []
    for code, _ in rooted:
        options = []
        for node in range(size):
            target_code, order = bfs_code(node, target_matchings)
            if target_code == code:
                options.append((target_group_of[node], order))
        if not options:
            return
        candidates.append(options)

    seen = set()

    def extend(index: int, used: frozenset, mapping: Dict[int, int]):
        if index == len(source_groups):
            images = tuple(mapping[label] for label in range(1, source.n + 1))
            if images not in seen:
                seen.add(images)
                yield EdgePermutation(images)
            return
        source_order = rooted[index][1]
        for group_index, target_order in candidates[index]:
            if group_index in used:
                continue
            extended = dict(mapping)
            for x, y in zip(source_order, target_order):
                extended[x // 4 + 1] = y // 4 + 1
            yield from extend(index + 1, used | {group_index}, extended)

    yield from extend(0, frozenset(), {})


def _bouquet_witness(
    source: LabeledRibbonGraph, target: LabeledRibbonGraph
) -> Optional[IsoWitness]:
    source_diagram = ChordDiagram.from_graph(source)
    target_diagram = ChordDiagram.from_graph(target)
    source_canonical, source_sigma = canonical_form(source_diagram)
    target_canonical, target_sigma = canonical_form(target_diagram)
    if source_canonical != target_canonical:
        return None
    # target . sigma == source, so spot i of the source sits at spot sigma(i) of the target
    sigma = target_sigma * source_sigma.inverse()
    source_labels = source_diagram.entries
    target_labels = target_diagram.entries
    images = [0] * source.n
    for spot, label in enumerate(source_labels):
        images[abs(label) - 1] = abs(target_labels[sigma(spot)])
    return IsoWitness(EdgePermutation(tuple(images)), sigma)


def iso(first: LabeledRibbonGraph, second: LabeledRibbonGraph) -> Optional[IsoWitness]:
    """A witness when the graphs are isomorphic as unlabeled ribbon graphs, else None."""
    if first.n != second.n or first.vertex_count != second.vertex_count:
        return None
    if first.is_bouquet and first.n > 0:
        return _bouquet_witness(first, second)
    if canonical_code(first) != canonical_code(second):
        return None
    bijection = next(isomorphisms(first, second), None)
    return IsoWitness(bijection) if bijection is not None else None


def is_isomorphic(first: LabeledRibbonGraph, second: LabeledRibbonGraph) -> bool:
    return first.n == second.n and canonical_code(first) == canonical_code(second)


def _genus(euler: int, orientable: bool) -> int:
    return (2 - euler) // 2 if orientable else 2 - euler


def component_invariants(graph: LabeledRibbonGraph) -> List[GraphInvariants]:
    return [invariants(component) for component, _ in graph.component_subgraphs()]


def invariants(graph: LabeledRibbonGraph) -> GraphInvariants:
    """V, E, F, Euler characteristic, orientability and genus.

    For a disconnected graph the counts are totals and the genus is the sum
    of the component genera.
    """
    if graph.n == 0:
        return GraphInvariants(V=1, E=0, F=1, euler=2, orientable=True, genus=0)
    parts = graph.components()
    if len(parts) > 1:
        pieces = component_invariants(graph)
        return GraphInvariants(
            V=sum(p.V for p in pieces),
            E=sum(p.E for p in pieces),
            F=sum(p.F for p in pieces),
            euler=sum(p.euler for p in pieces),
            orientable=all(p.orientable for p in pieces),
            genus=sum(p.genus for p in pieces),
            components=len(pieces),
        )
    jewel = to_jewel(graph)
    vertices = color_components(jewel, ColorPair.RED_YELLOW)
    faces = color_components(jewel, ColorPair.YELLOW_BLUE)
    euler = vertices - graph.n + faces
    orientable = graph.is_orientable()
    return GraphInvariants(
        V=vertices,
        E=graph.n,
        F=faces,
        euler=euler,
        orientable=orientable,
        genus=_genus(euler, orientable),
    )


def is_oeb(graph: LabeledRibbonGraph) -> bool:
    return graph.is_bouquet and not graph.twisted_edges()
