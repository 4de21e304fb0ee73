"""
Generation of linear chord diagrams and of orientable embedded bouquets up to
isomorphism.
"""

import itertools
from dataclasses import dataclass, field
from typing import Iterator, List, Tuple

from loguru import logger

from .chord import ChordDiagram, DiagramForm, canonical_offsets

# 0-based partner spots and twist flags
_Linear = Tuple[Tuple[int, ...], Tuple[bool, ...]]


def double_factorial(m: int) -> int:
    result = 1
    while m > 1:
        result *= m
        m -= 2
    return result


def linear_diagram_count(k: int, signed: bool = False) -> int:
    count = double_factorial(2 * k - 1)
    return count * 2**k if signed else count


def _linear(k: int, signed: bool) -> Iterator[_Linear]:
    """Grow each (k-1)-chord diagram by a chord from a new first spot to every later gap."""
    if k == 0:
        yield (), ()
        return
    signs = (False, True) if signed else (False,)
    for partners, twists in _linear(k - 1, signed):
        size = len(partners) + 2
        for partner_spot in range(1, size):
            # old spot q moves to q + 1 before the inserted spot and q + 2 after it
            moved = [q + 1 if q + 1 < partner_spot else q + 2 for q in range(size - 2)]
            new_partners = [0] * size
            new_twists = [False] * size
            for q, p in enumerate(partners):
                new_partners[moved[q]] = moved[p]
                new_twists[moved[q]] = twists[q]
            new_partners[0], new_partners[partner_spot] = partner_spot, 0
            for twisted in signs:
                new_twists[0] = new_twists[partner_spot] = twisted
                yield tuple(new_partners), tuple(new_twists)


def _to_end_spot(linear: _Linear) -> Tuple[int, ...]:
    partners, twists = linear
    return tuple(-(p + 1) if t else p + 1 for p, t in zip(partners, twists))


def linear_diagrams(k: int, signed: bool = False) -> Iterator[ChordDiagram]:
    """All (2k-1)!! linear diagrams (times 2^k when signed) in end-spot form."""
    for linear in _linear(k, signed):
        yield ChordDiagram(DiagramForm.END_SPOT, _to_end_spot(linear))


@dataclass
class DiagramStream:
    """Resumable cursor over linear_diagrams(k, signed)."""

    k: int
    signed: bool = False
    position: int = 0
    _iterator: Iterator[ChordDiagram] = field(default=None, init=False, repr=False)

    def __iter__(self) -> "DiagramStream":
        return self

    def __next__(self) -> ChordDiagram:
        if self._iterator is None:
            self._iterator = itertools.islice(
                linear_diagrams(self.k, self.signed), self.position, None
            )
        diagram = next(self._iterator)
        self.position += 1
        return diagram

    @property
    def total(self) -> int:
        return linear_diagram_count(self.k, self.signed)


def oebs_up_to_iso(k: int) -> List[ChordDiagram]:
    """One canonical offset diagram per dihedral class, in increasing order."""
    classes = set()
    size = 2 * k
    for partners, _ in _linear(k, signed=False):
        offsets = tuple((p - i) % size for i, p in enumerate(partners))
        classes.add(canonical_offsets(offsets)[0])
    logger.info(
        f"Enumerated {linear_diagram_count(k)} linear diagrams on {k} chords: "
        f"{len(classes)} classes"
    )
    return [ChordDiagram(DiagramForm.OFFSET, entries) for entries in sorted(classes)]
