import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..brackets import jacobi_sign
from ..calculus import iterated_total_derivative
from ..expr import (DEFAULT_BASE, GEOMETRIC_LABELS, BaseLabel, Expression, ExpressionBuilder, FieldKind, Functional,
                    MultiIndex, Side)
from .composite import (COUPLING_EVEN_ODD, COUPLING_ODD_EVEN, CompositeExpression, CompositeTerm, DeferredFactor,
                        DeferredRecord, ShiftLabel, canonicalize_composite, signature_count)

logger = logging.getLogger(__name__)

Variation = Tuple[int, int, Tuple[DeferredFactor, ...]]


def lift(F: Functional) -> CompositeExpression:
    """Embeds a functional as a single factor without deferred derivatives."""
    if F.is_zero:
        return CompositeExpression()
    return CompositeExpression((CompositeTerm(Fraction(1), (DeferredFactor(F.density, F.base),)),))


def _renumber(e: CompositeExpression, offset: int) -> CompositeExpression:
    if not offset:
        return e
    terms = []
    for term in e.terms:
        factors = tuple(
            DeferredFactor(f.core, f.base, tuple(
                DeferredRecord(r.sign, r.order, r.label.renumbered(offset)) for r in f.deferred))
            for f in term.factors)
        terms.append(CompositeTerm(term.scalar, factors))
    return CompositeExpression(tuple(terms), e.applications, e.depth)


def _variations(term: CompositeTerm, kind: FieldKind, side: Side, label: ShiftLabel) -> List[Variation]:
    """
    All first variations of a product of factors along variables of one kind.

    The partial derivative acts on the core of one factor at a time and leaves its deferred
    records untouched; an order |σ| variable attaches the record ⌈(-d/d label)^|σ|⌉.

    Returns:
        List[Tuple[int, int, Tuple[DeferredFactor, ...]]]: (field index, Leibniz sign, new factors).
    """
    found = []
    for j, factor in enumerate(term.factors):
        for v in sorted(factor.core.variables(), key=lambda v: v.key):
            if v.kind is not kind:
                continue
            core = factor.core.partial(v, side)
            if core.is_zero:
                continue
            sign = 1
            if v.parity:
                passed = term.factors[j + 1:] if side is Side.RIGHT else term.factors[:j]
                sign = -1 if sum(f.parity for f in passed) % 2 else 1
            record = DeferredRecord(-1 if v.order % 2 else 1, v.order, label) if v.order else None
            found.append((v.index, sign, term.factors[:j] + (factor.attach(record, core),) + term.factors[j + 1:]))
    return found


def geometric_bracket(A: CompositeExpression, B: CompositeExpression) -> CompositeExpression:
    """
    Bracket of composite expressions with deferred total derivatives.

    A is varied from the right and B from the left, each partial derivative acting on one core only.
    The variation of A carries the fresh shift label y_n, the variation of B carries z_n, where n
    numbers this application. The even-odd pairing enters with coupling +1 and the odd-even pairing
    with coupling -1.

    Args:
        A (CompositeExpression): First argument.
        B (CompositeExpression): Second argument; its shift labels are renumbered after A's.

    Returns:
        CompositeExpression: The raw (not canonicalised) bracket.
    """
    n = A.applications + B.applications + 1
    level = max(A.depth, B.depth) + 1
    if A.is_empty or B.is_empty:
        return CompositeExpression((), n, level)
    B = _renumber(B, A.applications)
    y, z = ShiftLabel(f"y{n}", level), ShiftLabel(f"z{n}", level)

    terms = []
    for ta in A.terms:
        for tb in B.terms:
            for kind, coupling in ((FieldKind.EVEN, COUPLING_EVEN_ODD), (FieldKind.ODD, COUPLING_ODD_EVEN)):
                right = _variations(tb, kind.dual, Side.LEFT, z)
                if not right:
                    continue
                for index_a, sign_a, factors_a in _variations(ta, kind, Side.RIGHT, y):
                    for index_b, sign_b, factors_b in right:
                        if index_a != index_b:
                            continue
                        scalar = ta.scalar * tb.scalar * coupling * sign_a * sign_b
                        terms.append(CompositeTerm(scalar, factors_a + factors_b))
    logger.debug(f"Geometric bracket of {len(A)} x {len(B)} terms gave {len(terms)} raw terms")
    return CompositeExpression(tuple(terms), n, level)


def evaluate_terminal(e: CompositeExpression, target: BaseLabel = DEFAULT_BASE) -> Expression:
    """
    Collapses deferral: every record becomes sign · D^order in its factor's base, each factor is
    restricted to target, and the factors are multiplied in order.
    """
    builder = ExpressionBuilder()
    for term in e.terms:
        product = Expression.constant(term.scalar)
        for factor in term.factors:
            value = factor.core
            for record in factor.deferred:
                value = iterated_total_derivative(value, MultiIndex({factor.base: record.order})).scale(record.sign)
            product = product * value.restrict_diagonal(target)
        builder.add(product)
    return builder.build()


@dataclass(frozen=True)
class GeometricJacobiExpansion:
    """
    The three nested geometric brackets of the Jacobi identity before cancellation.

    Attributes:
        lhs (CompositeExpression): ⟦F,⟦G,H⟧⟧.
        rhs_first (CompositeExpression): ⟦⟦F,G⟧,H⟧.
        rhs_second (CompositeExpression): ⟦G,⟦F,H⟧⟧.
        sign (int): (-1)^((|F|-1)(|G|-1)).
    """
    lhs: CompositeExpression
    rhs_first: CompositeExpression
    rhs_second: CompositeExpression
    sign: int

    def rhs(self) -> CompositeExpression:
        return self.rhs_first + self.rhs_second.scale(self.sign)

    def residual(self) -> CompositeExpression:
        return canonicalize_composite(self.lhs - self.rhs())

    def counts(self) -> Dict[str, int]:
        rhs = self.rhs()
        return {
            "lhs": len(self.lhs),
            "lhs_canonical": len(canonicalize_composite(self.lhs)),
            "rhs": len(rhs),
            "rhs_signatures": signature_count(rhs),
            "rhs_canonical": len(canonicalize_composite(rhs)),
        }


def expand_jacobi_geometric(F: Functional, G: Functional, H: Functional,
                            labels: Sequence[BaseLabel] = GEOMETRIC_LABELS) -> GeometricJacobiExpansion:
    """Places F, G, H at the three labels and expands both sides of the Jacobi identity."""
    F, G, H = (X.rebase(label) for X, label in zip((F, G, H), labels))
    f, g, h = lift(F), lift(G), lift(H)
    expansion = GeometricJacobiExpansion(
        lhs=geometric_bracket(f, geometric_bracket(g, h)),
        rhs_first=geometric_bracket(geometric_bracket(f, g), h),
        rhs_second=geometric_bracket(g, geometric_bracket(f, h)),
        sign=jacobi_sign(F, G),
    )
    logger.debug(f"Geometric Jacobi expansion: {len(expansion.lhs)} lhs terms, "
                 f"{len(expansion.rhs_first)} + {len(expansion.rhs_second)} rhs terms")
    return expansion


def jacobiator_geometric(F: Functional, G: Functional, H: Functional) -> CompositeExpression:
    """Canonical LHS - RHS of the Jacobi identity for the geometric bracket; empty when it holds."""
    return expand_jacobi_geometric(F, G, H).residual()
