from enum import Enum


class TwualityError(Exception):
    """Base exception for every error raised by the twuality library"""

    pass


class NotationError(TwualityError):
    """Raised when EdgeOp, ribbon element or permutation text cannot be parsed"""

    pass


class GraphValidationError(TwualityError):
    """Raised when a graph or chord diagram violates its structural invariants"""

    pass


class DegreeMismatchError(TwualityError):
    """Raised when a group element and a graph (or two elements) disagree on n"""

    pass


class JewelInvariantError(TwualityError):
    """Raised when a jewel is not a valid 4-colored encoding"""

    pass


class DisconnectedGraphError(TwualityError):
    """Raised by operations that require a connected ribbon graph"""

    pass


class CheckpointError(TwualityError):
    """Raised when a census checkpoint cannot be read or does not match the run"""

    pass


class InvariantViolation(TwualityError):
    """Raised when an internal verification fails. Always a bug."""

    pass


class Color(Enum):
    """Jewel edge colors. RED, GREEN and BLUE live inside the per-edge cliques."""

    RED = "red"
    GREEN = "green"
    BLUE = "blue"
    YELLOW = "yellow"


class ColorPair(Enum):
    """Bicolored subgraphs whose cycles count vertices, edges and faces."""

    RED_YELLOW = "red-yellow"
    RED_BLUE = "red-blue"
    YELLOW_BLUE = "yellow-blue"

    @property
    def colors(self) -> tuple[Color, Color]:
        first, second = self.value.split("-")
        return Color(first), Color(second)
