import re
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, Mapping, Optional, Tuple

from ..errors import MalformedExpressionError

DEFAULT_BASE = "x"
MULTIBASE_LABELS = ("x", "y", "z")
GEOMETRIC_LABELS = ("x1", "x2", "x3")

LABEL_PATTERN = re.compile(r"^[A-Za-z][A-Za-z0-9]*$")

BaseLabel = str


def check_label(name: str) -> BaseLabel:
    """
    Validates a base label.

    Args:
        name (str): Candidate label, e.g. "x", "y1", "z23".

    Returns:
        str: The label itself.

    Raises:
        MalformedExpressionError: If the label is not a letter followed by letters or digits.
    """
    if not isinstance(name, str) or not LABEL_PATTERN.match(name):
        raise MalformedExpressionError(f"Invalid base label: {name!r}")
    return name


class FieldKind(Enum):
    """Parity-even fields q^i and their parity-odd canonical conjugates q†_i."""
    EVEN = "q"
    ODD = "qd"

    @property
    def parity(self) -> int:
        return 1 if self is FieldKind.ODD else 0

    @property
    def dual(self) -> "FieldKind":
        return FieldKind.EVEN if self is FieldKind.ODD else FieldKind.ODD


class Side(Enum):
    """
    The side from which a graded partial derivative acts.

    LEFT is the derivative written in front of its argument, RIGHT the one written after it.
    The two differ only for parity-odd variables.
    """
    LEFT = "left"
    RIGHT = "right"


class MultiIndex:
    """
    Derivative orders per base label.

    Stored as a sorted tuple of (label, count) pairs with positive counts, so that equal
    multi-indices compare, hash and sort identically.
    """
    __slots__ = ("_items",)

    def __init__(self, counts: Optional[Mapping[str, int]] = None):
        items = []
        for label, count in (counts or {}).items():
            if count < 0:
                raise MalformedExpressionError(f"Negative derivative order {count} at label {label!r}")
            if count:
                items.append((check_label(label), int(count)))
        self._items: Tuple[Tuple[str, int], ...] = tuple(sorted(items))

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> "MultiIndex":
        """Builds a multi-index from a sequence of labels, one entry per derivative."""
        counts: Dict[str, int] = {}
        for label in labels:
            counts[label] = counts.get(label, 0) + 1
        return cls(counts)

    @property
    def items(self) -> Tuple[Tuple[str, int], ...]:
        return self._items

    @property
    def order(self) -> int:
        return sum(count for _, count in self._items)

    @property
    def is_zero(self) -> bool:
        return not self._items

    def count(self, label: str) -> int:
        for name, count in self._items:
            if name == label:
                return count
        return 0

    def counts(self) -> Dict[str, int]:
        return dict(self._items)

    def labels(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self._items)

    def expanded(self) -> Tuple[str, ...]:
        """Returns the labels repeated by their counts, in label order."""
        return tuple(name for name, count in self._items for _ in range(count))

    def increment(self, label: str, times: int = 1) -> "MultiIndex":
        counts = self.counts()
        counts[label] = counts.get(label, 0) + times
        return MultiIndex(counts)

    def decrement(self, label: str) -> Optional["MultiIndex"]:
        """Lowers the count at label by one; returns None when the count is already zero."""
        counts = self.counts()
        if not counts.get(label):
            return None
        counts[label] -= 1
        return MultiIndex(counts)

    def collapse(self, target: str) -> "MultiIndex":
        """Moves the whole order onto the single label target."""
        order = self.order
        return MultiIndex({target: order} if order else None)

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiIndex) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        return f"MultiIndex({dict(self._items)!r})"


@dataclass(frozen=True)
class JetVariable:
    """
    A jet coordinate q^i_σ or q†_{i,σ}.

    Attributes:
        kind (FieldKind): EVEN for q, ODD for q†.
        index (int): Component number i of the field tuple, starting at 1.
        deriv (MultiIndex): Derivative orders per base label.
    """
    kind: FieldKind
    index: int = 1
    deriv: MultiIndex = field(default_factory=MultiIndex)

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise MalformedExpressionError(f"Field index must be a positive integer, got {self.index!r}")

    @classmethod
    def q(cls, *labels: str, index: int = 1) -> "JetVariable":
        """Shorthand for the even coordinate, e.g. JetVariable.q("x", "x") is q_xx."""
        return cls(FieldKind.EVEN, index, MultiIndex.from_labels(labels))

    @classmethod
    def qd(cls, *labels: str, index: int = 1) -> "JetVariable":
        """Shorthand for the odd coordinate, e.g. JetVariable.qd("x") is q†_x."""
        return cls(FieldKind.ODD, index, MultiIndex.from_labels(labels))

    @property
    def parity(self) -> int:
        return self.kind.parity

    @property
    def order(self) -> int:
        return self.deriv.order

    @cached_property
    def key(self) -> Tuple:
        return (self.kind.parity, self.index, self.deriv.items)

    def differentiate(self, label: str) -> "JetVariable":
        return replace(self, deriv=self.deriv.increment(label))

    def lowered(self, label: str) -> Optional["JetVariable"]:
        deriv = self.deriv.decrement(label)
        return None if deriv is None else replace(self, deriv=deriv)

    def restricted(self, target: str) -> "JetVariable":
        return replace(self, deriv=self.deriv.collapse(target))

    def underived(self) -> "JetVariable":
        return replace(self, deriv=MultiIndex())

    def export(self) -> Dict:
        return {
            "field": self.kind.value,
            "index": self.index,
            "derivatives": self.deriv.counts(),
        }

    def __repr__(self) -> str:
        suffix = "".join(self.deriv.expanded())
        index = "" if self.index == 1 else str(self.index)
        return f"{self.kind.value}{index}" + (f"_{suffix}" if suffix else "")
