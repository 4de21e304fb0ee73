"""
The edge group S = <delta, tau | delta^2, tau^2, (tau delta)^3> (isomorphic to S3),
ribbon elements (one edge operation per edge), edge permutations and the
semidirect product that acts on edge-labeled ribbon graphs.

Convention: in a product word the rightmost factor acts on the graph first,
so ``td`` means "take the partial dual, then twist".
"""

import itertools
import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .base import Color, DegreeMismatchError, InvariantViolation, NotationError


class EdgeOp(Enum):
    ONE = "1"
    TAU = "t"
    DELTA = "d"
    TAU_DELTA = "td"
    DELTA_TAU = "dt"
    TAU_DELTA_TAU = "tdt"

    @property
    def word(self) -> str:
        """Reduced word over {t, d}; empty for the identity."""
        return "" if self is EdgeOp.ONE else self.value

    @property
    def index(self) -> int:
        return _ORDER.index(self)

    @property
    def order(self) -> int:
        return _ORDERS[self]

    def __mul__(self, other: "EdgeOp") -> "EdgeOp":
        if not isinstance(other, EdgeOp):
            return NotImplemented
        return _MULTIPLICATION[self, other]

    def __lt__(self, other: "EdgeOp") -> bool:
        return self.index < other.index

    def inverse(self) -> "EdgeOp":
        return _INVERSES[self]

    def conjugate(self, gamma: "EdgeOp") -> "EdgeOp":
        """Return self * gamma * self^-1."""
        return _CONJUGATION[self, gamma]

    def color_map(self) -> Dict[Color, Color]:
        """Where each clique color is sent when this operation recolors an edge."""
        return dict(_COLOR_MAPS[self])

    @classmethod
    def from_word(cls, word: str) -> "EdgeOp":
        if set(word) - {"t", "d"}:
            raise NotationError(f"Not a word over t and d: {word!r}")
        reduced = _reduce_word(word)
        return cls(reduced or "1")

    @classmethod
    def parse(cls, text: str) -> "EdgeOp":
        """Parse a name such as ``tdt``, ``tau``, ``delta tau`` or ``τδ``."""
        token = text.strip().lower()
        for alias, letter in _ALIASES:
            token = token.replace(alias, letter)
        token = re.sub(r"[\s·*]", "", token)
        if token in ("", "1", "id"):
            return cls.ONE
        try:
            return cls.from_word(token)
        except NotationError:
            raise NotationError(f"Unknown edge operation: {text!r}") from None

    def __str__(self) -> str:
        return self.value


_ALIASES = (("delta", "d"), ("tau", "t"), ("δ", "d"), ("τ", "t"))

_ORDER: List[EdgeOp] = list(EdgeOp)

# Each generator is a transposition of the clique colors.
_GENERATOR_SWAPS = {
    "d": (Color.RED, Color.BLUE),
    "t": (Color.BLUE, Color.GREEN),
}


def _reduce_word(word: str) -> str:
    """Normal form under tt -> "", dd -> "", dtd -> tdt."""
    previous = None
    while word != previous:
        previous = word
        word = word.replace("tt", "").replace("dd", "").replace("dtd", "tdt")
    return word


def _word_color_map(word: str) -> Tuple[Tuple[Color, Color], ...]:
    mapping = {color: color for color in (Color.RED, Color.GREEN, Color.BLUE)}
    for letter in reversed(word):
        first, second = _GENERATOR_SWAPS[letter]
        swap = {first: second, second: first}
        mapping = {color: swap.get(image, image) for color, image in mapping.items()}
    return tuple(sorted(mapping.items(), key=lambda item: item[0].value))


def _build_tables():
    multiplication = {}
    for a, b in itertools.product(_ORDER, repeat=2):
        multiplication[a, b] = EdgeOp(_reduce_word(a.word + b.word) or "1")
    inverses = {}
    for a in _ORDER:
        inverses[a] = next(b for b in _ORDER if multiplication[a, b] is EdgeOp.ONE)
    conjugation = {
        (a, g): multiplication[multiplication[a, g], inverses[a]]
        for a, g in itertools.product(_ORDER, repeat=2)
    }
    orders = {}
    for a in _ORDER:
        power, k = a, 1
        while power is not EdgeOp.ONE:
            power, k = multiplication[power, a], k + 1
        orders[a] = k
    color_maps = {a: _word_color_map(a.word) for a in _ORDER}
    return multiplication, inverses, conjugation, orders, color_maps


_MULTIPLICATION, _INVERSES, _CONJUGATION, _ORDERS, _COLOR_MAPS = _build_tables()


def _verify_tables() -> None:
    t, d, one = EdgeOp.TAU, EdgeOp.DELTA, EdgeOp.ONE
    td = _MULTIPLICATION[t, d]
    if _MULTIPLICATION[t, t] is not one or _MULTIPLICATION[d, d] is not one:
        raise InvariantViolation("tau and delta must be involutions")
    if _MULTIPLICATION[_MULTIPLICATION[td, td], td] is not one:
        raise InvariantViolation("(tau delta)^3 must be the identity")
    for a, b in itertools.product(_ORDER, repeat=2):
        left = dict(_COLOR_MAPS[_MULTIPLICATION[a, b]])
        first, second = dict(_COLOR_MAPS[b]), dict(_COLOR_MAPS[a])
        if any(left[c] != second[first[c]] for c in left):
            raise InvariantViolation(f"color realization is not a homomorphism at {a}, {b}")
    if len({_COLOR_MAPS[a] for a in _ORDER}) != len(_ORDER):
        raise InvariantViolation("color realization must be faithful")


_verify_tables()


def edgeop_mul(a: EdgeOp, b: EdgeOp) -> EdgeOp:
    return a * b


def edgeop_inv(a: EdgeOp) -> EdgeOp:
    return a.inverse()


def edgeop_conjugate(alpha: EdgeOp, gamma: EdgeOp) -> EdgeOp:
    return alpha.conjugate(gamma)


@dataclass(frozen=True)
class EdgePermutation:
    """A bijection of {1..n} stored in one-line notation: images[i - 1] = pi(i)."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise NotationError(f"Not a permutation of 1..{len(images)}: {images}")

    @classmethod
    def identity(cls, n: int) -> "EdgePermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, text: str, n: Optional[int] = None) -> "EdgePermutation":
        """Parse cycle notation such as ``(1 6 2)(3 4 5)`` or ``( 1, 2, 3 )``."""
        stripped = text.strip()
        if re.sub(r"\([^()]*\)", "", stripped).strip():
            raise NotationError(f"Malformed cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", stripped):
            tokens = [tok for tok in re.split(r"[\s,]+", body) if tok]
            try:
                cycles.append([int(tok) for tok in tokens])
            except ValueError:
                raise NotationError(f"Non-integer entry in cycle: {body!r}") from None
        points = [p for cycle in cycles for p in cycle]
        if len(points) != len(set(points)) or any(p < 1 for p in points):
            raise NotationError(f"Cycles must use distinct positive points: {text!r}")
        degree = n if n is not None else max(points, default=0)
        if points and max(points) > degree:
            raise NotationError(f"Cycle point exceeds degree {degree}: {text!r}")
        images = list(range(1, degree + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "EdgePermutation") -> "EdgePermutation":
        """Composition: (self * other)(i) = self(other(i))."""
        if self.degree != other.degree:
            raise DegreeMismatchError(f"Degrees differ: {self.degree} vs {other.degree}")
        return EdgePermutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "EdgePermutation":
        images = [0] * self.degree
        for i, image in enumerate(self.images, start=1):
            images[image - 1] = i
        return EdgePermutation(tuple(images))

    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        """Cycles in the order of their smallest point, each starting there."""
        seen, result = set(), []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle, point = [], start
            while point not in seen:
                seen.add(point)
                cycle.append(point)
                point = self(point)
            if len(cycle) > 1 or include_fixed:
                result.append(tuple(cycle))
        return result

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in cycle) + ")" for cycle in cycles)


@dataclass(frozen=True)
class RibbonElement:
    """A sequence of edge operations; position i acts on the edge labeled i."""

    ops: Tuple[EdgeOp, ...]

    def __post_init__(self):
        ops = tuple(self.ops)
        if not all(isinstance(op, EdgeOp) for op in ops):
            raise NotationError(f"Ribbon element entries must be EdgeOps: {ops}")
        object.__setattr__(self, "ops", ops)

    @classmethod
    def identity(cls, n: int) -> "RibbonElement":
        return cls((EdgeOp.ONE,) * n)

    @classmethod
    def uniform(cls, op: EdgeOp, n: int) -> "RibbonElement":
        return cls((op,) * n)

    @classmethod
    def parse(cls, text: str) -> "RibbonElement":
        """Parse ``tdt,td,d``, ``(tdt, td, d)`` or ``[τδτ, τδ, δ]``."""
        body = text.strip().strip("()[]")
        tokens = [tok for tok in body.split(",")]
        if tokens and not tokens[-1].strip():
            tokens = tokens[:-1]
        if not tokens:
            return cls(())
        return cls(tuple(EdgeOp.parse(tok) for tok in tokens))

    def __len__(self) -> int:
        return len(self.ops)

    def __iter__(self) -> Iterator[EdgeOp]:
        return iter(self.ops)

    def __getitem__(self, index: int) -> EdgeOp:
        return self.ops[index]

    def at(self, position: int) -> EdgeOp:
        """The operation at 1-indexed position."""
        return self.ops[position - 1]

    def _check(self, other: "RibbonElement") -> None:
        if len(self) != len(other):
            raise DegreeMismatchError(f"Lengths differ: {len(self)} vs {len(other)}")

    def __mul__(self, other: "RibbonElement") -> "RibbonElement":
        self._check(other)
        return RibbonElement(tuple(a * b for a, b in zip(self.ops, other.ops)))

    def inverse(self) -> "RibbonElement":
        return RibbonElement(tuple(op.inverse() for op in self.ops))

    def permuted(self, pi: EdgePermutation) -> "RibbonElement":
        """phi_pi: position i receives the entry at position pi^-1(i)."""
        if pi.degree != len(self):
            raise DegreeMismatchError(f"Permutation degree {pi.degree} vs length {len(self)}")
        inverse = pi.inverse()
        return RibbonElement(tuple(self.at(inverse(i)) for i in range(1, len(self) + 1)))

    def is_identity(self) -> bool:
        return all(op is EdgeOp.ONE for op in self.ops)

    def is_uniform(self) -> bool:
        return len(set(self.ops)) <= 1

    def sort_key(self) -> Tuple[int, ...]:
        return tuple(op.index for op in self.ops)

    def __str__(self) -> str:
        return "(" + ",".join(op.value for op in self.ops) + ")"


def phi_apply(pi: EdgePermutation, gamma: RibbonElement) -> RibbonElement:
    return gamma.permuted(pi)


@dataclass(frozen=True)
class SemidirectElement:
    """An element (gamma, pi) of S^n x| S_n."""

    gamma: RibbonElement
    pi: EdgePermutation

    def __post_init__(self):
        if len(self.gamma) != self.pi.degree:
            raise DegreeMismatchError(
                f"gamma has length {len(self.gamma)} but pi has degree {self.pi.degree}"
            )

    @classmethod
    def identity(cls, n: int) -> "SemidirectElement":
        return cls(RibbonElement.identity(n), EdgePermutation.identity(n))

    @classmethod
    def of(cls, gamma: RibbonElement, pi: Optional[EdgePermutation] = None) -> "SemidirectElement":
        return cls(gamma, pi if pi is not None else EdgePermutation.identity(len(gamma)))

    @property
    def degree(self) -> int:
        return self.pi.degree

    def __mul__(self, other: "SemidirectElement") -> "SemidirectElement":
        if self.degree != other.degree:
            raise DegreeMismatchError(f"Degrees differ: {self.degree} vs {other.degree}")
        return SemidirectElement(self.gamma * other.gamma.permuted(self.pi), self.pi * other.pi)

    def inverse(self) -> "SemidirectElement":
        inverse_pi = self.pi.inverse()
        return SemidirectElement(self.gamma.inverse().permuted(inverse_pi), inverse_pi)

    def is_identity(self) -> bool:
        return self.gamma.is_identity() and self.pi.is_identity()

    def sort_key(self):
        return (self.pi.images, self.gamma.sort_key())

    def __str__(self) -> str:
        return f"({self.gamma},{self.pi})"


def semidirect_mul(x: SemidirectElement, y: SemidirectElement) -> SemidirectElement:
    return x * y


def semidirect_inv(x: SemidirectElement) -> SemidirectElement:
    return x.inverse()


def all_ribbon_elements(n: int) -> Iterator[RibbonElement]:
    for ops in itertools.product(_ORDER, repeat=n):
        yield RibbonElement(ops)


def all_permutations(n: int) -> Iterator[EdgePermutation]:
    for images in itertools.permutations(range(1, n + 1)):
        yield EdgePermutation(images)


def parse_ops(values: Sequence[str]) -> RibbonElement:
    return RibbonElement(tuple(EdgeOp.parse(value) for value in values))
