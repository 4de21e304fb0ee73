"""
Chord diagrams for embedded bouquets.

Spots are numbered around the single vertex. Three storage forms:

* offset: |D(i)| = j means the partner of spot i is spot i + j (mod 2k)
* end-spot: |D(i)| is the (1-based) partner spot
* end-label: D(i) is the label of the chord ending at spot i

A negative entry marks a twisted chord in every form. The dihedral group of
the 2k spots acts on offset diagrams from the right.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Iterator, List, Tuple

from .base import GraphValidationError
from .graph import LabeledRibbonGraph

# partner spot and twist flag per spot, 0-based
Pairing = Tuple[Tuple[int, ...], Tuple[bool, ...]]


class DiagramForm(Enum):
    OFFSET = "offset"
    END_SPOT = "end-spot"
    END_LABEL = "end-label"


@dataclass(frozen=True)
class ChordDiagram:
    form: DiagramForm
    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        DiagramConverter.pairing(self)

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def chords(self) -> int:
        return len(self.entries) // 2

    def convert(self, target: DiagramForm) -> "ChordDiagram":
        return DiagramConverter.convert(self, target)

    def to_graph(self) -> LabeledRibbonGraph:
        labels = self.convert(DiagramForm.END_LABEL).entries
        return LabeledRibbonGraph.from_vertices((labels,))

    @classmethod
    def from_graph(cls, graph: LabeledRibbonGraph) -> "ChordDiagram":
        if not graph.is_bouquet:
            raise GraphValidationError(
                f"A chord diagram needs a bouquet, graph has {graph.vertex_count} vertices"
            )
        return cls(DiagramForm.END_LABEL, graph.vertices[0])

    def __str__(self) -> str:
        return "[" + ", ".join(str(e) for e in self.entries) + "]"


def _read_offset(entries: Tuple[int, ...]) -> Pairing:
    size = len(entries)
    partners, twists = [], []
    for i, entry in enumerate(entries):
        if not 1 <= abs(entry) <= size - 1:
            raise GraphValidationError(f"Offset {entry} out of range at spot {i + 1}")
        partner = (i + abs(entry)) % size
        back = entries[partner]
        if abs(back) != size - abs(entry) or (back < 0) != (entry < 0):
            raise GraphValidationError(f"Offsets at spots {i + 1} and {partner + 1} disagree")
        partners.append(partner)
        twists.append(entry < 0)
    return tuple(partners), tuple(twists)


def _read_end_spot(entries: Tuple[int, ...]) -> Pairing:
    size = len(entries)
    partners, twists = [], []
    for i, entry in enumerate(entries):
        partner = abs(entry) - 1
        if not 0 <= partner < size or partner == i:
            raise GraphValidationError(f"Invalid partner {entry} at spot {i + 1}")
        back = entries[partner]
        if abs(back) - 1 != i or (back < 0) != (entry < 0):
            raise GraphValidationError(f"Spots {i + 1} and {partner + 1} are not mutual partners")
        partners.append(partner)
        twists.append(entry < 0)
    return tuple(partners), tuple(twists)


def _read_end_label(entries: Tuple[int, ...]) -> Pairing:
    size = len(entries)
    spots: Dict[int, List[int]] = {}
    for i, entry in enumerate(entries):
        if entry == 0:
            raise GraphValidationError("Chord labels must be non-zero")
        spots.setdefault(abs(entry), []).append(i)
    if set(spots) != set(range(1, size // 2 + 1)):
        raise GraphValidationError(f"Labels must be exactly 1..{size // 2}")
    partners, twists = [0] * size, [False] * size
    for label, where in spots.items():
        if len(where) != 2:
            raise GraphValidationError(f"Label {label} appears {len(where)} times, expected 2")
        a, b = where
        if (entries[a] < 0) != (entries[b] < 0):
            raise GraphValidationError(f"Label {label} has inconsistent signs")
        partners[a], partners[b] = b, a
        twists[a] = twists[b] = entries[a] < 0
    return tuple(partners), tuple(twists)


def _signed(value: int, twisted: bool) -> int:
    return -value if twisted else value


def _write_offset(pairing: Pairing) -> Tuple[int, ...]:
    partners, twists = pairing
    size = len(partners)
    return tuple(_signed((p - i) % size, t) for i, (p, t) in enumerate(zip(partners, twists)))


def _write_end_spot(pairing: Pairing) -> Tuple[int, ...]:
    partners, twists = pairing
    return tuple(_signed(p + 1, t) for p, t in zip(partners, twists))


def _write_end_label(pairing: Pairing) -> Tuple[int, ...]:
    """Chords are labeled in order of first appearance."""
    partners, twists = pairing
    labels = [0] * len(partners)
    next_label = 1
    for i, partner in enumerate(partners):
        if partner > i:
            labels[i] = labels[partner] = next_label
            next_label += 1
    return tuple(_signed(label, t) for label, t in zip(labels, twists))


class DiagramConverter:
    """Converts between forms through the shared pairing representation."""

    _readers: Dict[DiagramForm, Callable[[Tuple[int, ...]], Pairing]] = {
        DiagramForm.OFFSET: _read_offset,
        DiagramForm.END_SPOT: _read_end_spot,
        DiagramForm.END_LABEL: _read_end_label,
    }

    _writers: Dict[DiagramForm, Callable[[Pairing], Tuple[int, ...]]] = {
        DiagramForm.OFFSET: _write_offset,
        DiagramForm.END_SPOT: _write_end_spot,
        DiagramForm.END_LABEL: _write_end_label,
    }

    @classmethod
    def pairing(cls, diagram: ChordDiagram) -> Pairing:
        if len(diagram.entries) % 2:
            raise GraphValidationError("A chord diagram has an even number of spots")
        return cls._readers[diagram.form](diagram.entries)

    @classmethod
    def convert(cls, diagram: ChordDiagram, target: DiagramForm) -> ChordDiagram:
        if diagram.form is target:
            return diagram
        return ChordDiagram(target, cls._writers[target](cls.pairing(diagram)))


def convert(diagram: ChordDiagram, target: DiagramForm) -> ChordDiagram:
    return DiagramConverter.convert(diagram, target)


@dataclass(frozen=True)
class DihedralElement:
    """Spot map i -> shift - i (reflection) or i -> i + shift (rotation), mod size."""

    size: int
    reflect: bool = False
    shift: int = 0

    def __post_init__(self):
        if self.size:
            object.__setattr__(self, "shift", self.shift % self.size)

    @classmethod
    def identity(cls, size: int) -> "DihedralElement":
        return cls(size)

    @classmethod
    def all(cls, size: int) -> Iterator["DihedralElement"]:
        if size == 0:
            yield cls(0)
            return
        for reflect in (False, True):
            for shift in range(size):
                yield cls(size, reflect, shift)

    def __call__(self, spot: int) -> int:
        if self.reflect:
            return (self.shift - spot) % self.size
        return (spot + self.shift) % self.size

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        """Composition (self * other)(i) = self(other(i))."""
        sign = -1 if self.reflect else 1
        return DihedralElement(
            self.size, self.reflect != other.reflect, sign * other.shift + self.shift
        )

    def inverse(self) -> "DihedralElement":
        if self.reflect:
            return self
        return DihedralElement(self.size, False, -self.shift)

    def __str__(self) -> str:
        kind = "reflect" if self.reflect else "rotate"
        return f"{kind}({self.shift})"


def act_offsets(entries: Tuple[int, ...], sigma: DihedralElement) -> Tuple[int, ...]:
    if not sigma.reflect:
        return tuple(entries[sigma(i)] for i in range(len(entries)))
    size = len(entries)
    result = []
    for i in range(size):
        value = entries[sigma(i)]
        result.append(-(size + value) if value < 0 else size - value)
    return tuple(result)


def dihedral_act(diagram: ChordDiagram, sigma: DihedralElement) -> ChordDiagram:
    """Right action: D.sigma = D o sigma, or the complemented D o sigma for reflections."""
    if diagram.form is not DiagramForm.OFFSET:
        raise GraphValidationError("The dihedral action is defined on offset diagrams")
    if sigma.size != diagram.size:
        raise GraphValidationError(f"Dihedral size {sigma.size} vs diagram size {diagram.size}")
    return ChordDiagram(DiagramForm.OFFSET, act_offsets(diagram.entries, sigma))


def order_key(entries: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[bool, ...]]:
    """Magnitudes first, then signs with untwisted before twisted."""
    return tuple(abs(e) for e in entries), tuple(e < 0 for e in entries)


def canonical_offsets(entries: Tuple[int, ...]) -> Tuple[Tuple[int, ...], DihedralElement]:
    size = len(entries)
    best, best_key, best_sigma = entries, order_key(entries), DihedralElement.identity(size)
    for sigma in DihedralElement.all(size):
        image = act_offsets(entries, sigma)
        key = order_key(image)
        if key < best_key:
            best, best_key, best_sigma = image, key, sigma
    return best, best_sigma


def canonical_form(diagram: ChordDiagram) -> Tuple[ChordDiagram, DihedralElement]:
    """Lexicographically least offset image and a sigma with D.sigma equal to it."""
    offsets = diagram.convert(DiagramForm.OFFSET)
    entries, sigma = canonical_offsets(offsets.entries)
    return ChordDiagram(DiagramForm.OFFSET, entries), sigma


def matching_elements(source: ChordDiagram, target: ChordDiagram) -> List[DihedralElement]:
    """Every sigma with source.sigma == target (both converted to offset form)."""
    source_entries = source.convert(DiagramForm.OFFSET).entries
    target_entries = target.convert(DiagramForm.OFFSET).entries
    if len(source_entries) != len(target_entries):
        return []
    return [
        sigma
        for sigma in DihedralElement.all(len(source_entries))
        if act_offsets(source_entries, sigma) == target_entries
    ]
