import logging

from ..calculus import euler
from ..expr import ExpressionBuilder, FieldKind, Functional, JetVariable, Side

logger = logging.getLogger(__name__)


def bv_laplacian(F: Functional) -> Functional:
    """
    Naive BV Laplacian Δ(F) = ∫ Σ_i δ/δq^i (δ/δq†_i (f)).

    Both variations act from the left. The full Euler operators are used, not the
    cohomologically equivalent shortcut.
    """
    f = F.density
    builder = ExpressionBuilder()
    for i in sorted(f.field_indices()):
        builder.add(euler(euler(f, FieldKind.ODD, i, Side.LEFT), FieldKind.EVEN, i, Side.LEFT))
    density = builder.build()
    logger.debug(f"Laplacian of {len(f)} terms gave {len(density)} terms")
    return Functional(density, F.base)


def laplacian_shortcut(F: Functional) -> Functional:
    """
    Δ(F) up to exact terms: ∫ Σ_i ∂/∂q^i ∂/∂q†_i (f) with underived coordinates only.

    Agrees with bv_laplacian modulo total derivatives, since ∂/∂q^i commutes with D.
    """
    f = F.density
    builder = ExpressionBuilder()
    for i in sorted(f.field_indices()):
        builder.add(f.partial(JetVariable.qd(index=i), Side.LEFT).partial(JetVariable.q(index=i)))
    return Functional(builder.build(), F.base)
