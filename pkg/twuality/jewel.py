"""
Jewels: 4-regular graphs with four perfect matchings (red, green, blue, yellow)
encoding a ribbon graph.

Edge e owns four nodes 4(e-1) + 2*end + side, where end is 0 for the first
occurrence of the label in reading order and 1 for the second, and side is 0
for the boundary point reached first when walking around the vertex in the
written direction and 1 for the other. Inside a clique the three perfect
matchings are node ^ 1, node ^ 2 and node ^ 3, so a clique coloring is a
choice of mask per color:

* red always starts as mask 1 (the two points of one end)
* blue is mask 3 for an untwisted ribbon and mask 2 for a twisted one
* green takes the remaining mask

Yellow joins the last point of each end to the first point of the next end
around its vertex. Vertices, edges and faces are the red-yellow, red-blue and
yellow-blue cycles.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .base import Color, ColorPair, GraphValidationError, JewelInvariantError
from .graph import LabeledRibbonGraph
from .group import EdgeOp

_CLIQUE_COLORS = (Color.RED, Color.GREEN, Color.BLUE)

Masks = Tuple[int, int, int]


@dataclass(frozen=True)
class Jewel:
    n: int
    yellow: Tuple[int, ...]
    masks: Tuple[Masks, ...]

    @property
    def node_count(self) -> int:
        return 4 * self.n

    def mask(self, edge: int, color: Color) -> int:
        return self.masks[edge - 1][_CLIQUE_COLORS.index(color)]

    def partner(self, color: Color, node: int) -> int:
        if color is Color.YELLOW:
            return self.yellow[node]
        return node ^ self.masks[node >> 2][_CLIQUE_COLORS.index(color)]

    def matching(self, color: Color) -> Tuple[int, ...]:
        if color is Color.YELLOW:
            return self.yellow
        slot = _CLIQUE_COLORS.index(color)
        return tuple(node ^ self.masks[node >> 2][slot] for node in range(self.node_count))

    def clique(self, edge: int) -> Tuple[int, int, int, int]:
        base = 4 * (edge - 1)
        return base, base + 1, base + 2, base + 3

    def validate(self) -> None:
        if len(self.yellow) != self.node_count or len(self.masks) != self.n:
            raise JewelInvariantError("Jewel arrays do not match its edge count")
        for edge, masks in enumerate(self.masks, start=1):
            if sorted(masks) != [1, 2, 3]:
                raise JewelInvariantError(f"Clique {edge} is not properly 3-colored: {masks}")
        for node, image in enumerate(self.yellow):
            if not 0 <= image < self.node_count or image == node or self.yellow[image] != node:
                raise JewelInvariantError(f"Yellow is not a perfect matching at node {node}")

    def recolor_edge(self, edge: int, op: EdgeOp) -> "Jewel":
        if not 1 <= edge <= self.n:
            raise GraphValidationError(f"Unknown edge label {edge} (jewel has {self.n} edges)")
        masks = list(self.masks)
        masks[edge - 1] = _recolor_masks(masks[edge - 1], op)
        return Jewel(self.n, self.yellow, tuple(masks))

    def recolor(self, ops: Sequence[EdgeOp]) -> "Jewel":
        """Recolor every clique at once; ops[e - 1] acts on edge e."""
        if len(ops) != self.n:
            raise GraphValidationError(f"Expected {self.n} operations, got {len(ops)}")
        return Jewel(
            self.n,
            self.yellow,
            tuple(_recolor_masks(m, op) for m, op in zip(self.masks, ops)),
        )

    def dump(self) -> str:
        lines = []
        for color in (Color.RED, Color.GREEN, Color.BLUE, Color.YELLOW):
            matching = self.matching(color)
            pairs = [
                f"{_node_name(a)}-{_node_name(b)}" for a, b in enumerate(matching) if a < b
            ]
            lines.append(f"{color.value}: " + " ".join(pairs))
        return "\n".join(lines)


def _node_name(node: int) -> str:
    edge, local = divmod(node, 4)
    return f"{edge + 1}{'ab'[local >> 1]}{'+-'[local & 1]}"


def _recolor_masks(masks: Masks, op: EdgeOp) -> Masks:
    mapping = op.color_map()
    recolored = [0, 0, 0]
    for slot, color in enumerate(_CLIQUE_COLORS):
        recolored[_CLIQUE_COLORS.index(mapping[color])] = masks[slot]
    return tuple(recolored)


def recolor_edge(jewel: Jewel, edge: int, op: EdgeOp) -> Jewel:
    return jewel.recolor_edge(edge, op)


def to_jewel(graph: LabeledRibbonGraph) -> Jewel:
    yellow = [0] * (4 * graph.n)
    masks: List[Masks] = [(1, 2, 3)] * graph.n
    seen: Dict[int, int] = {}
    for vertex in graph.vertices:
        starts = []
        for token in vertex:
            label = abs(token)
            end = seen.get(label, 0)
            seen[label] = end + 1
            starts.append(4 * (label - 1) + 2 * end)
            masks[label - 1] = (1, 3, 2) if token < 0 else (1, 2, 3)
        for position, start in enumerate(starts):
            following = starts[(position + 1) % len(starts)]
            yellow[start + 1] = following
            yellow[following] = start + 1
    return Jewel(graph.n, tuple(yellow), tuple(masks))


def from_jewel(jewel: Jewel) -> LabeledRibbonGraph:
    jewel.validate()
    if jewel.n == 0:
        return LabeledRibbonGraph.isolated_vertex()
    red = jewel.matching(Color.RED)
    blue = jewel.matching(Color.BLUE)
    yellow = jewel.yellow
    visited = [False] * jewel.node_count
    walks: List[List[int]] = []
    for root in range(jewel.node_count):
        if visited[root]:
            continue
        walk, node = [], root
        while True:
            walk.append(node)
            visited[node] = visited[red[node]] = True
            node = yellow[red[node]]
            if node == root:
                break
            if visited[node]:
                raise JewelInvariantError("Red-yellow subgraph is not a union of cycles")
        walks.append(walk)
    starts: Dict[int, List[int]] = {}
    for walk in walks:
        for node in walk:
            starts.setdefault(node // 4 + 1, []).append(node)
    twisted = {}
    for edge, (first, second) in starts.items():
        if blue[first] == red[second]:
            twisted[edge] = False
        elif blue[first] == second:
            twisted[edge] = True
        else:
            raise JewelInvariantError(f"Blue does not cross the ribbon of edge {edge}")
    vertices = tuple(
        tuple(-(node // 4 + 1) if twisted[node // 4 + 1] else node // 4 + 1 for node in walk)
        for walk in walks
    )
    return LabeledRibbonGraph(jewel.n, vertices).with_tree_untwisted()


def _pair_components(first: Tuple[int, ...], second: Tuple[int, ...]) -> int:
    seen = [False] * len(first)
    count = 0
    for root in range(len(first)):
        if seen[root]:
            continue
        count += 1
        seen[root] = True
        queue = deque([root])
        while queue:
            node = queue.popleft()
            for other in (first[node], second[node]):
                if not seen[other]:
                    seen[other] = True
                    queue.append(other)
    return count


def color_components(jewel: Jewel, pair: ColorPair) -> int:
    a, b = pair.colors
    return _pair_components(jewel.matching(a), jewel.matching(b))


def bfs_code(
    root: int,
    matchings: Sequence[Sequence[int]],
    labels: Optional[Sequence[int]] = None,
) -> Tuple[Tuple[int, ...], List[int]]:
    """Breadth-first relabeling from a root: the code and the visiting order.

    Two rooted structures with equal codes are isomorphic by matching nodes
    with equal positions in their visiting orders.
    """
    order = {root: 0}
    queue = [root]
    code = []
    head = 0
    while head < len(queue):
        node = queue[head]
        head += 1
        for matching in matchings:
            image = matching[node]
            if image not in order:
                order[image] = len(queue)
                queue.append(image)
            code.append(order[image])
        if labels is not None:
            code.append(labels[node])
    return tuple(code), queue


def node_components(matchings: Iterable[Sequence[int]], size: int) -> List[List[int]]:
    matchings = list(matchings)
    seen = [False] * size
    groups = []
    for root in range(size):
        if seen[root]:
            continue
        seen[root] = True
        group, queue = [], deque([root])
        while queue:
            node = queue.popleft()
            group.append(node)
            for matching in matchings:
                image = matching[node]
                if not seen[image]:
                    seen[image] = True
                    queue.append(image)
        groups.append(sorted(group))
    return groups


def jewel_code(jewel: Jewel) -> Tuple[Tuple[int, ...], ...]:
    matchings = [jewel.matching(c) for c in (Color.RED, Color.GREEN, Color.BLUE, Color.YELLOW)]
    codes = []
    for group in node_components(matchings, jewel.node_count):
        codes.append(min(bfs_code(root, matchings)[0] for root in group))
    return tuple(sorted(codes))


def jewel_isomorphic(first: Jewel, second: Jewel) -> bool:
    """Whether a color-preserving node bijection exists."""
    return first.n == second.n and jewel_code(first) == jewel_code(second)
