import logging
from dataclasses import dataclass
from typing import Dict, Literal, Sequence

from ..calculus import iterated_total_derivative
from ..cohomology import is_exact
from ..errors import MalformedExpressionError
from ..expr import (DEFAULT_BASE, MULTIBASE_LABELS, BaseLabel, Expression, ExpressionBuilder, FieldKind, Functional,
                    JetVariable)
from .laplacian import bv_laplacian
from .schouten import schouten_old

logger = logging.getLogger(__name__)

JacobiMode = Literal["single", "multibase"]


@dataclass(frozen=True)
class IdentityReport:
    """
    Comparison of the two sides of an identity between densities.

    Attributes:
        lhs_density (Expression): Left-hand side.
        rhs_density (Expression): Right-hand side.
        difference (Expression): lhs - rhs.
        cohomologically_equal (bool): The difference is a total derivative in base.
        exactly_equal (bool): The difference is zero.
        base (str): Label the densities are integrated over.
    """
    lhs_density: Expression
    rhs_density: Expression
    difference: Expression
    cohomologically_equal: bool
    exactly_equal: bool
    base: BaseLabel = DEFAULT_BASE

    @classmethod
    def compare(cls, lhs: Expression, rhs: Expression, base: BaseLabel) -> "IdentityReport":
        difference = lhs - rhs
        exactly = difference.is_zero
        cohomologically = exactly or is_exact(difference, base).is_trivial
        logger.debug(f"Identity check over {base}: {len(difference)} difference terms, "
                     f"exact={exactly}, cohomological={cohomologically}")
        return cls(lhs, rhs, difference, cohomologically, exactly, base)

    @property
    def holds(self) -> bool:
        return self.cohomologically_equal

    def export(self) -> Dict:
        return {
            "base": self.base,
            "lhs": self.lhs_density.export(),
            "rhs": self.rhs_density.export(),
            "difference": self.difference.export(),
            "exactly_equal": self.exactly_equal,
            "cohomologically_equal": self.cohomologically_equal,
        }


def jacobi_sign(F: Functional, G: Functional) -> int:
    """(-1)^((|F|-1)(|G|-1))"""
    return -1 if ((F.grading - 1) * (G.grading - 1)) % 2 else 1


def jacobiator(F: Functional, G: Functional, H: Functional, mode: JacobiMode = "single",
               labels: Sequence[BaseLabel] = MULTIBASE_LABELS) -> Functional:
    """
    Jacobi residual ⟦F,⟦G,H⟧⟧ - ⟦⟦F,G⟧,H⟧ - (-1)^((|F|-1)(|G|-1)) ⟦G,⟦F,H⟧⟧ of the provisional bracket.

    In single mode all three functionals are brought onto F's base. In multibase mode they are
    placed at the three labels and the result is left unrestricted; restrict it with
    Functional.rebase.

    Args:
        F (Functional): First argument.
        G (Functional): Second argument.
        H (Functional): Third argument.
        mode (str): "single" or "multibase".
        labels (Sequence[str]): Labels for F, G and H in multibase mode.

    Returns:
        Functional: The residual, on H's (possibly new) base.
    """
    if mode == "single":
        F, G, H = (X.rebase(F.base) for X in (F, G, H))
    elif mode == "multibase":
        F, G, H = (X.rebase(label) for X, label in zip((F, G, H), labels))
    else:
        raise ValueError(f"Unknown Jacobi mode: {mode!r}")

    lhs = schouten_old(F, schouten_old(G, H))
    first = schouten_old(schouten_old(F, G), H)
    second = schouten_old(G, schouten_old(F, H))
    residual = lhs.density - first.density - second.density.scale(jacobi_sign(F, G))
    logger.debug(f"Jacobiator ({mode}): {len(lhs.density)} - {len(first.density)} - "
                 f"{len(second.density)} terms leave {len(residual)}")
    return Functional(residual, H.base)


def check_zimes(F: Functional, G: Functional) -> IdentityReport:
    """
    Tests Δ⟦F,G⟧ ≅ ⟦ΔF,G⟧ + (-1)^(|F|-1) ⟦F,ΔG⟧ on G's base.
    """
    F = F.rebase(G.base)
    lhs = bv_laplacian(schouten_old(F, G)).density
    sign = 1 if (F.grading - 1) % 2 == 0 else -1
    rhs = schouten_old(bv_laplacian(F), G).density + schouten_old(F, bv_laplacian(G)).density.scale(sign)
    return IdentityReport.compare(lhs, rhs, G.base)


def delta_squared(F: Functional) -> IdentityReport:
    """Tests Δ(Δ(F)) ≅ 0."""
    return IdentityReport.compare(bv_laplacian(bv_laplacian(F)).density, Expression.zero(), F.base)


def _check_evolutionary(characteristic: Expression, base: BaseLabel):
    if characteristic.odd_degrees() - {0}:
        raise MalformedExpressionError(f"Characteristic must be parity-even: {characteristic}")
    if characteristic.fields() - {(FieldKind.EVEN, 1)}:
        raise MalformedExpressionError(f"Characteristic must depend on the single field q: {characteristic}")
    if characteristic.labels() - {base}:
        raise MalformedExpressionError(f"Characteristic must live on {base!r}: {characteristic}")


def prolonged_action(X: Expression, Y: Expression) -> Expression:
    """The evolutionary field with characteristic X applied to Y: Σ_σ D^σ(X) ∂Y/∂q_σ."""
    builder = ExpressionBuilder()
    for v in sorted(Y.variables(), key=lambda v: v.key):
        builder.add(iterated_total_derivative(X, v.deriv) * Y.partial(v))
    return builder.build()


def evolutionary_commutator(X: Expression, Y: Expression, base: BaseLabel = DEFAULT_BASE) -> IdentityReport:
    """
    Compares ⟦∫X q†, ∫Y q†⟧ with -∫ [X, Y] q†, where [X, Y] = X(Y) - Y(X) is the commutator of the
    evolutionary vector fields, computed through prolonged actions independently of the bracket.

    Raises:
        MalformedExpressionError: If X or Y is odd, uses other fields than q, or other labels than base.
    """
    for characteristic in (X, Y):
        _check_evolutionary(characteristic, base)
    antifield = Expression.variable(JetVariable.qd())
    lhs = schouten_old(Functional(X * antifield, base), Functional(Y * antifield, base)).density
    rhs = -((prolonged_action(X, Y) - prolonged_action(Y, X)) * antifield)
    return IdentityReport.compare(lhs, rhs, base)
