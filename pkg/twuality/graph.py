"""
Edge-labeled ribbon graphs in end-label form.

Each vertex is a cyclic sequence of signed edge labels read in the written
(clockwise) direction. A label appears negated on both of its ends exactly
when the edge is twisted. Non-loop twist signs depend on the chosen vertex
orientations, so graphs are compared through isomorphism, never by text.
"""

import re
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .base import DegreeMismatchError, GraphValidationError
from .group import EdgePermutation

_GROUP = re.compile(r"\[([^\[\]]*)\]")


@dataclass(frozen=True)
class LabeledRibbonGraph:
    n: int
    vertices: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        vertices = tuple(tuple(int(token) for token in vertex) for vertex in self.vertices)
        object.__setattr__(self, "vertices", vertices)
        self._validate()

    def _validate(self) -> None:
        if self.n < 0:
            raise GraphValidationError(f"Edge count must be non-negative, got {self.n}")
        if self.n == 0:
            if self.vertices != ((),):
                raise GraphValidationError("A graph without edges is a single isolated vertex")
            return
        if any(len(vertex) == 0 for vertex in self.vertices):
            raise GraphValidationError("Empty vertex sequence in a graph with edges")
        signs: Dict[int, List[bool]] = {}
        for vertex in self.vertices:
            for token in vertex:
                if token == 0:
                    raise GraphValidationError("Edge labels must be non-zero")
                signs.setdefault(abs(token), []).append(token < 0)
        if set(signs) != set(range(1, self.n + 1)):
            raise GraphValidationError(
                f"Labels must be exactly 1..{self.n}, got {sorted(signs)}"
            )
        for label, ends in signs.items():
            if len(ends) != 2:
                raise GraphValidationError(f"Label {label} appears {len(ends)} times, expected 2")
            if ends[0] != ends[1]:
                raise GraphValidationError(f"Label {label} has inconsistent signs")

    @classmethod
    def isolated_vertex(cls) -> "LabeledRibbonGraph":
        return cls(0, ((),))

    @classmethod
    def from_vertices(cls, vertices) -> "LabeledRibbonGraph":
        vertices = tuple(tuple(v) for v in vertices)
        n = max((abs(t) for v in vertices for t in v), default=0)
        if n == 0:
            return cls.isolated_vertex()
        return cls(n, vertices)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def is_bouquet(self) -> bool:
        return len(self.vertices) == 1

    def is_twisted(self, label: int) -> bool:
        return self.end_positions(label)[0][2] < 0

    def twisted_edges(self) -> List[int]:
        return sorted({abs(t) for v in self.vertices for t in v if t < 0})

    def end_positions(self, label: int) -> List[Tuple[int, int, int]]:
        """(vertex index, position, token) for both ends of an edge."""
        return [
            (vi, pos, token)
            for vi, vertex in enumerate(self.vertices)
            for pos, token in enumerate(vertex)
            if abs(token) == label
        ]

    def is_loop(self, label: int) -> bool:
        first, second = self.end_positions(label)
        return first[0] == second[0]

    def flip_vertex(self, index: int) -> "LabeledRibbonGraph":
        """Reverse a vertex and toggle twists on edges with exactly one end there."""
        vertex = self.vertices[index]
        counts: Dict[int, int] = {}
        for token in vertex:
            counts[abs(token)] = counts.get(abs(token), 0) + 1
        toggled = {label for label, count in counts.items() if count == 1}
        vertices = []
        for vi, current in enumerate(self.vertices):
            sequence = tuple(reversed(current)) if vi == index else current
            vertices.append(tuple(-t if abs(t) in toggled else t for t in sequence))
        return LabeledRibbonGraph(self.n, tuple(vertices))

    def relabel(self, pi: EdgePermutation) -> "LabeledRibbonGraph":
        """Rename edge k to pi(k)."""
        if pi.degree != self.n:
            raise DegreeMismatchError(f"Permutation degree {pi.degree} vs {self.n} edges")
        vertices = tuple(
            tuple(pi(abs(t)) if t > 0 else -pi(abs(t)) for t in vertex)
            for vertex in self.vertices
        )
        return LabeledRibbonGraph(self.n, vertices)

    def _edge_incidence(self) -> List[Tuple[int, int, int]]:
        """(u, v, label) per edge, u and v being vertex indices."""
        ends: Dict[int, List[int]] = {}
        for vi, vertex in enumerate(self.vertices):
            for token in vertex:
                ends.setdefault(abs(token), []).append(vi)
        return [(ends[label][0], ends[label][1], label) for label in sorted(ends)]

    def components(self) -> List[List[int]]:
        """Vertex index groups of the connected components."""
        adjacency: Dict[int, List[int]] = {vi: [] for vi in range(len(self.vertices))}
        for u, v, _ in self._edge_incidence():
            adjacency[u].append(v)
            adjacency[v].append(u)
        seen, result = set(), []
        for root in range(len(self.vertices)):
            if root in seen:
                continue
            seen.add(root)
            group, queue = [], deque([root])
            while queue:
                u = queue.popleft()
                group.append(u)
                for v in adjacency[u]:
                    if v not in seen:
                        seen.add(v)
                        queue.append(v)
            result.append(sorted(group))
        return result

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def component_subgraphs(self) -> List[Tuple["LabeledRibbonGraph", Tuple[int, ...]]]:
        """Each component renumbered to 1..m, with the original labels in new order."""
        result = []
        for group in self.components():
            vertices = [self.vertices[vi] for vi in group]
            labels = tuple(sorted({abs(t) for v in vertices for t in v}))
            if not labels:
                result.append((LabeledRibbonGraph.isolated_vertex(), ()))
                continue
            rename = {old: new for new, old in enumerate(labels, start=1)}
            renamed = tuple(
                tuple(rename[abs(t)] if t > 0 else -rename[abs(t)] for t in v) for v in vertices
            )
            result.append((LabeledRibbonGraph(len(labels), renamed), labels))
        return result

    def _blocks_around(self, index: int) -> Dict[int, int]:
        """Edge label -> block id, edges sharing a vertex other than ``index`` merged."""
        parent = {label: label for label in range(1, self.n + 1)}

        def find(label: int) -> int:
            while parent[label] != label:
                parent[label] = parent[parent[label]]
                label = parent[label]
            return label

        for vi, vertex in enumerate(self.vertices):
            if vi == index or not vertex:
                continue
            root = find(abs(vertex[0]))
            for token in vertex[1:]:
                parent[find(abs(token))] = root
        return {label: find(label) for label in parent}

    def join_vertex(self) -> Optional[int]:
        """Index of a vertex at which the graph is a one-point join, or None.

        The graph is a join at v when the rotation of v cuts into two cyclic
        intervals whose edges are not connected away from v.
        """
        for index, vertex in enumerate(self.vertices):
            size = len(vertex)
            if size < 2:
                continue
            blocks = self._blocks_around(index)
            sequence = [blocks[abs(token)] for token in vertex]
            for start in range(size):
                for length in range(1, size):
                    inside = {sequence[(start + i) % size] for i in range(length)}
                    outside = {sequence[(start + i) % size] for i in range(length, size)}
                    if not inside & outside:
                        return index
        return None

    def is_one_point_join(self) -> bool:
        return self.join_vertex() is not None

    def _flip_assignment(self) -> Optional[List[bool]]:
        """Vertex flips making every edge untwisted, or None when impossible."""
        flips: List[Optional[bool]] = [None] * len(self.vertices)
        adjacency: Dict[int, List[Tuple[int, bool]]] = {vi: [] for vi in range(len(self.vertices))}
        for u, v, label in self._edge_incidence():
            twisted = self.is_twisted(label)
            if u == v:
                if twisted:
                    return None
                continue
            adjacency[u].append((v, twisted))
            adjacency[v].append((u, twisted))
        for root in range(len(self.vertices)):
            if flips[root] is not None:
                continue
            flips[root] = False
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v, twisted in adjacency[u]:
                    wanted = flips[u] ^ twisted
                    if flips[v] is None:
                        flips[v] = wanted
                        queue.append(v)
                    elif flips[v] != wanted:
                        return None
        return [bool(flag) for flag in flips]

    def is_orientable(self) -> bool:
        return self._flip_assignment() is not None

    def with_tree_untwisted(self) -> "LabeledRibbonGraph":
        """Flip vertices along a breadth-first forest so its edges carry no twist."""
        adjacency: Dict[int, List[Tuple[int, int]]] = {vi: [] for vi in range(len(self.vertices))}
        for u, v, label in self._edge_incidence():
            if u != v:
                adjacency[u].append((v, label))
                adjacency[v].append((u, label))
        graph, seen = self, set()
        for root in range(len(self.vertices)):
            if root in seen:
                continue
            seen.add(root)
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v, label in adjacency[u]:
                    if v in seen:
                        continue
                    seen.add(v)
                    if graph.is_twisted(label):
                        graph = graph.flip_vertex(v)
                    queue.append(v)
        return graph

    def __str__(self) -> str:
        return serialize_graph(self)


def parse_graph(text: str) -> LabeledRibbonGraph:
    """Parse ``[1, -3, 2, 1, 2, -3]`` or several bracketed vertices.

    A loop may carry its twist on one end only; both ends are then negated.
    """
    if _GROUP.sub("", text).strip():
        raise GraphValidationError(f"Expected bracketed integer tuples, got {text!r}")
    bodies = _GROUP.findall(text)
    if not bodies:
        raise GraphValidationError("No vertex found in graph text")
    vertices = []
    for body in bodies:
        tokens = [tok for tok in re.split(r"[\s,]+", body.strip()) if tok]
        try:
            vertices.append(tuple(int(tok) for tok in tokens))
        except ValueError:
            raise GraphValidationError(f"Non-integer entry in vertex [{body}]") from None
    return LabeledRibbonGraph.from_vertices(_twist_mixed_loops(vertices))


def _twist_mixed_loops(vertices: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Read a loop written ``[1, -1]`` as the twisted loop ``[-1, -1]``."""
    mixed = set()
    for vertex in vertices:
        signs: Dict[int, set] = {}
        for token in vertex:
            signs.setdefault(abs(token), set()).add(token < 0)
        mixed.update(label for label, seen in signs.items() if len(seen) == 2)
    if not mixed:
        return vertices
    return [tuple(-abs(t) if abs(t) in mixed else t for t in vertex) for vertex in vertices]


def serialize_graph(graph: LabeledRibbonGraph) -> str:
    return "".join("[" + ", ".join(str(t) for t in vertex) + "]" for vertex in graph.vertices)
