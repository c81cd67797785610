import logging
from typing import Optional

from ..expr import BaseLabel, Expression, ExpressionBuilder, MultiIndex, check_label

logger = logging.getLogger(__name__)


def total_derivative(expr: Expression, label: BaseLabel) -> Expression:
    """
    Total derivative D_label.

    Every jet variable gains one derivative in label (q_x -> q_xy for label y), the Leibniz rule runs
    over all factors and function atoms follow the chain rule. D is parity-even, so odd factors are
    differentiated in place without signs.

    Args:
        expr (Expression): Canonical expression.
        label (str): Base label to differentiate in.

    Returns:
        Expression: D_label(expr).
    """
    check_label(label)
    builder = ExpressionBuilder()
    for (odd, even, atoms), coefficient in expr.items():
        for i, v in enumerate(odd):
            builder.add_term(coefficient, odd[:i] + (v.differentiate(label),) + odd[i + 1:], even, atoms)
        for i, (v, power) in enumerate(even):
            lowered = even[:i] + ((v, power - 1),) + even[i + 1:]
            builder.add_term(coefficient * power, odd, lowered + ((v.differentiate(label), 1),), atoms)
        for i, (atom, power) in enumerate(atoms):
            inner = total_derivative(atom.argument, label)
            rest = ExpressionBuilder()
            rest.add_term(coefficient * power, odd, even, atoms[:i] + ((atom, power - 1),) + atoms[i + 1:])
            builder.add(rest.build() * atom.derivative() * inner)
    return builder.build()


def iterated_total_derivative(expr: Expression, mi: Optional[MultiIndex] = None, signed: bool = False) -> Expression:
    """
    Applies D^mi, or (-D)^mi when signed is set.

    Labels are processed in label order; the result does not depend on it since total derivatives
    in different labels commute.
    """
    if mi is None or mi.is_zero:
        return expr
    result = expr
    for label in mi.expanded():
        result = total_derivative(result, label)
    if signed and mi.order % 2:
        result = -result
    logger.debug(f"D^{mi.order} took {len(expr)} terms to {len(result)} terms")
    return result
