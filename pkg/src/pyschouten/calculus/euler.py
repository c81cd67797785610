import logging
from dataclasses import dataclass, field
from typing import Dict, Tuple

from ..expr import BaseLabel, Expression, ExpressionBuilder, FieldKind, Side
from .total import iterated_total_derivative

logger = logging.getLogger(__name__)

FieldKey = Tuple[FieldKind, int]


@dataclass(frozen=True)
class EulerResult:
    """
    Variational derivatives of one density, one entry per field present.

    Attributes:
        by_field (Dict[Tuple[FieldKind, int], Expression]): δ/δq^i and δ/δq†_i keyed by (kind, index).
    """
    by_field: Dict[FieldKey, Expression] = field(default_factory=dict)

    def get(self, kind: FieldKind, index: int = 1) -> Expression:
        return self.by_field.get((kind, index), Expression.zero())

    @property
    def is_zero(self) -> bool:
        return all(value.is_zero for value in self.by_field.values())

    def export(self) -> Dict:
        return {
            f"{kind.value}{index}": value.export()
            for (kind, index), value in sorted(self.by_field.items(), key=lambda kv: (kv[0][0].parity, kv[0][1]))
        }


def euler(expr: Expression, kind: FieldKind, index: int = 1, side: Side = Side.LEFT) -> Expression:
    """
    Variational derivative Σ_σ (-D)^σ ∂/∂(field)_σ.

    The sum runs over every jet variable of the field present in expr, function arguments
    included, and (-D)^σ uses the labels of σ itself, so multi-base densities are handled.

    Args:
        expr (Expression): Canonical density.
        kind (FieldKind): EVEN for δ/δq, ODD for δ/δq†.
        index (int): Field component.
        side (Side): Side of the partial derivative; matters for odd fields only.

    Returns:
        Expression: The variational derivative.
    """
    builder = ExpressionBuilder()
    for v in sorted(expr.variables(), key=lambda v: v.key):
        if v.kind is not kind or v.index != index:
            continue
        builder.add(iterated_total_derivative(expr.partial(v, side), v.deriv, signed=True))
    result = builder.build()
    logger.debug(f"Euler derivative by {kind.value}{index} of {len(expr)} terms has {len(result)} terms")
    return result


def euler_all(expr: Expression, side: Side = Side.LEFT) -> EulerResult:
    """Variational derivatives with respect to every field (even and odd, all indices) present in expr."""
    return EulerResult({key: euler(expr, key[0], key[1], side) for key in sorted(
        expr.fields(), key=lambda key: (key[0].parity, key[1]))})


def odd_degree(expr: Expression) -> int:
    """Common odd degree; raises InhomogeneousError on mixed degrees."""
    return expr.odd_degree


def highest_order(expr: Expression, label: BaseLabel) -> int:
    return max((v.deriv.count(label) for v in expr.variables()), default=0)
