import logging
from typing import Set

from ..calculus import euler
from ..expr import BaseLabel, Expression, ExpressionBuilder, FieldKind, Functional, Side

logger = logging.getLogger(__name__)


def _field_indices(*densities: Expression) -> Set[int]:
    indices: Set[int] = set()
    for density in densities:
        indices |= density.field_indices()
    return indices


def schouten_old(F: Functional, G: Functional) -> Functional:
    """
    Variational Schouten bracket by the provisional formula

        ⟦F, G⟧ = ∫ Σ_i (f)δ←/δq^i · δ→/δq†_i(g) - (f)δ←/δq†_i · δ→/δq^i(g).

    The first argument is varied from the right, the second from the left. Euler operators are
    label-aware, so F and G may live on different bases; the result lives on G's base.

    Args:
        F (Functional): Homogeneous first argument.
        G (Functional): Homogeneous second argument.

    Returns:
        Functional: The bracket, of grading |F| + |G| - 1.
    """
    f, g = F.density, G.density
    builder = ExpressionBuilder()
    for i in sorted(_field_indices(f, g)):
        builder.add(euler(f, FieldKind.EVEN, i, Side.RIGHT) * euler(g, FieldKind.ODD, i, Side.LEFT))
        builder.add(euler(f, FieldKind.ODD, i, Side.RIGHT) * euler(g, FieldKind.EVEN, i, Side.LEFT), -1)
    density = builder.build()
    logger.debug(f"Bracket of {len(f)} x {len(g)} terms gave {len(density)} terms")
    return Functional(density, G.base)


def schouten_multibase(F: Functional, G: Functional, first: BaseLabel = "x", second: BaseLabel = "y") -> Functional:
    """Places F at first and G at second, then brackets them without restricting."""
    return schouten_old(F.rebase(first), G.rebase(second))
