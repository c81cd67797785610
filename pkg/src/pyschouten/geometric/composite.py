import logging
import re
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Optional, Tuple

from ..errors import InhomogeneousError
from ..expr import BaseLabel, Expression

logger = logging.getLogger(__name__)

# Net values of the two ordered couplings between dual even/odd directions.
COUPLING_EVEN_ODD = 1
COUPLING_ODD_EVEN = -1

SHIFT_LABEL_PATTERN = re.compile(r"^([A-Za-z]+)(\d+)$")


@dataclass(frozen=True)
class ShiftLabel:
    """
    Integration variable of one deferred derivative, e.g. y1 or z23.

    Attributes:
        name (str): Letters followed by the number of the bracket application that introduced it.
        level (int): Bracket nesting depth at which it was introduced.
    """
    name: str
    level: int

    def renumbered(self, offset: int) -> "ShiftLabel":
        match = SHIFT_LABEL_PATTERN.match(self.name)
        if not match or not offset:
            return self
        return ShiftLabel(f"{match.group(1)}{int(match.group(2)) + offset}", self.level)


@dataclass(frozen=True)
class DeferredRecord:
    """
    One embraced operator ⌈(sign · d/d label)^order⌉, applied only at terminal evaluation.

    The sign is the overall factor, i.e. the record stands for sign · D^order.
    """
    sign: int
    order: int
    label: ShiftLabel

    def export(self) -> Dict:
        return {"sign": self.sign, "order": self.order, "label": self.label.name, "level": self.label.level}


@dataclass(frozen=True)
class DeferredFactor:
    """
    A core density with the deferred total derivatives stacked on it, outermost last.

    Attributes:
        core (Expression): Density in jet variables of the factor's own base.
        base (str): Base label the deferred derivatives act in.
        deferred (Tuple[DeferredRecord, ...]): Records in the order they were attached.
    """
    core: Expression
    base: BaseLabel
    deferred: Tuple[DeferredRecord, ...] = ()

    @property
    def parity(self) -> int:
        return self.core.parity

    def attach(self, record: Optional[DeferredRecord], core: Expression) -> "DeferredFactor":
        """Replaces the core and appends the record, if any."""
        deferred = self.deferred + (record,) if record is not None else self.deferred
        return DeferredFactor(core, self.base, deferred)

    def export(self) -> Dict:
        return {"base": self.base, "core": self.core.export(), "deferred": [r.export() for r in self.deferred]}


@dataclass(frozen=True)
class CompositeTerm:
    scalar: Fraction
    factors: Tuple[DeferredFactor, ...]

    @property
    def parity(self) -> int:
        return sum(f.parity for f in self.factors) % 2

    def export(self) -> Dict:
        return {"scalar": str(self.scalar), "factors": [f.export() for f in self.factors]}


@dataclass(frozen=True)
class CompositeExpression:
    """
    Signed sum of products of deferred factors.

    Attributes:
        terms (Tuple[CompositeTerm, ...]): The summands; the empty tuple is zero.
        applications (int): Number of bracket applications that built the expression. Shift labels
            are numbered 1..applications.
        depth (int): Deepest nesting level of the shift labels.
    """
    terms: Tuple[CompositeTerm, ...] = ()
    applications: int = 0
    depth: int = 0

    @property
    def is_empty(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def grading(self) -> int:
        """Common odd degree of all terms."""
        degrees = {sum(f.core.odd_degree for f in t.factors) for t in self.terms}
        if len(degrees) > 1:
            raise InhomogeneousError(f"Composite has mixed odd degrees {sorted(degrees)}")
        return degrees.pop() if degrees else 0

    def scale(self, factor) -> "CompositeExpression":
        return replace(self, terms=tuple(CompositeTerm(t.scalar * factor, t.factors) for t in self.terms))

    def __add__(self, other: "CompositeExpression") -> "CompositeExpression":
        return CompositeExpression(self.terms + other.terms, max(self.applications, other.applications),
                                   max(self.depth, other.depth))

    def __sub__(self, other: "CompositeExpression") -> "CompositeExpression":
        return self + other.scale(-1)

    def export(self) -> Dict:
        return {"terms": [t.export() for t in self.terms]}

    def __str__(self) -> str:
        from ..dsl.render import render_text  # Lazy import to avoid circular imports
        return render_text(self)


Signature = Tuple


def _koszul_sort(factors: List[Tuple[Tuple, DeferredFactor]]) -> Tuple[int, List[Tuple[Tuple, DeferredFactor]]]:
    """Sorts (key, factor) pairs by key; each swap of two odd factors flips the sign."""
    items = list(factors)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1][0] > items[j][0]:
            if items[j - 1][1].parity and items[j][1].parity:
                sign = -sign
            items[j - 1], items[j] = items[j], items[j - 1]
            j -= 1
    for (key_a, a), (key_b, b) in zip(items, items[1:]):
        if key_a == key_b and a.parity:
            return 0, []
    return sign, items


def _normalize_term(term: CompositeTerm) -> Optional[Tuple[Signature, Fraction, Tuple[DeferredFactor, ...]]]:
    """
    Brings one term into canonical shape.

    Returns:
        The signature, the scalar and the canonical factors, or None if the term vanishes.
    """
    scalar = Fraction(term.scalar)
    reduced = []
    for factor in term.factors:
        if factor.core.is_zero:
            return None
        lead = factor.core.leading_coefficient()
        scalar *= lead
        orders: Dict[int, int] = {}
        for record in factor.deferred:
            scalar *= record.sign
            orders[record.label.level] = orders.get(record.label.level, 0) + record.order
        reduced.append((factor.core.scale(1 / lead), factor.base, {lvl: o for lvl, o in orders.items() if o}))
    if not scalar:
        return None

    levels = sorted({lvl for _, _, orders in reduced for lvl in orders})
    best = None
    for image in permutations(range(1, len(levels) + 1)):
        relabel = dict(zip(levels, image))
        keyed = []
        for core, base, orders in reduced:
            records = tuple(sorted((relabel[lvl], o) for lvl, o in orders.items()))
            keyed.append(((base, core.key, records), DeferredFactor(core, base, tuple(
                DeferredRecord(1, o, ShiftLabel(f"w{lvl}", lvl)) for lvl, o in records))))
        sign, ordered = _koszul_sort(keyed)
        if not sign:
            return None
        sig = tuple(key for key, _ in ordered)
        if best is None or sig < best[0]:
            best = (sig, scalar * sign, tuple(f for _, f in ordered))
    return best


def signature(term: CompositeTerm) -> Optional[Signature]:
    """Label-erased signature of a term; None if the term vanishes."""
    normalized = _normalize_term(term)
    return None if normalized is None else normalized[0]


def signature_count(e: CompositeExpression) -> int:
    """Number of distinct signatures among the nonvanishing terms of e."""
    return len({s for s in (signature(t) for t in e.terms) if s is not None})


def canonicalize_composite(e: CompositeExpression) -> CompositeExpression:
    """
    Canonical form of a composite expression.

    Each core is made monic with its leading coefficient moved into the scalar, record signs move
    into the scalar, orders of records at the same nesting level are summed, factors are sorted with
    Koszul signs, and the nesting levels in use are renumbered onto 1..k in the order giving the smallest
    signature. Terms with equal
    signatures are then merged and zero terms dropped.
    """
    merged: Dict[Signature, Fraction] = {}
    factors: Dict[Signature, Tuple[DeferredFactor, ...]] = {}
    for term in e.terms:
        normalized = _normalize_term(term)
        if normalized is None:
            continue
        sig, scalar, canonical = normalized
        merged[sig] = merged.get(sig, 0) + scalar
        factors[sig] = canonical
    terms = tuple(CompositeTerm(merged[sig], factors[sig]) for sig in sorted(merged) if merged[sig])
    logger.debug(f"Canonicalised {len(e.terms)} composite terms into {len(terms)}")
    return CompositeExpression(terms, e.applications, e.depth)


def composite_equal(a: CompositeExpression, b: CompositeExpression) -> bool:
    return canonicalize_composite(a - b).is_empty
