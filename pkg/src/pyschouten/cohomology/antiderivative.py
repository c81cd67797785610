from fractions import Fraction
from typing import List, Tuple

from ..errors import UnsupportedAntiderivativeError
from ..expr import AtomKind, Expression, ExpressionBuilder, FunctionAtom, JetVariable

# Antiderivative of each atom kind as (kind, sign): ∫exp = exp, ∫sin = -cos, ∫cos = sin.
ANTIDERIVATIVES = {
    AtomKind.EXP: (AtomKind.EXP, 1),
    AtomKind.SIN: (AtomKind.COS, -1),
    AtomKind.COS: (AtomKind.SIN, 1),
}


def _integrate_power_times_atom(kind: AtomKind, n: int) -> List[Tuple[Fraction, int, AtomKind]]:
    """
    ∫ u^n K(u) du by repeated integration by parts.

    Returns:
        List[Tuple[Fraction, int, AtomKind]]: (coefficient, power of u, kind) summands.
    """
    pieces = []
    scale = Fraction(1)
    while True:
        anti_kind, anti_sign = ANTIDERIVATIVES[kind]
        pieces.append((scale * anti_sign, n, anti_kind))
        if n == 0:
            return pieces
        scale = -scale * anti_sign * n
        n -= 1
        kind = anti_kind


def antiderivative(coefficient: Expression, u: JetVariable) -> Expression:
    """
    Antiderivative of coefficient with respect to the even coordinate u.

    Every monomial must have the shape c · u^n · K(u) · R with K one of 1, exp, sin, cos applied
    to u itself and R free of u.

    Args:
        coefficient (Expression): The integrand.
        u (JetVariable): Parity-even integration variable.

    Returns:
        Expression: P with ∂P/∂u = coefficient and no u-free summands.

    Raises:
        UnsupportedAntiderivativeError: If a monomial falls outside the supported class.
    """
    if u.parity:
        raise UnsupportedAntiderivativeError(f"Cannot integrate with respect to odd variable {u}")
    argument = Expression.variable(u)
    result = ExpressionBuilder()
    for monomial in coefficient.monomials():
        n = monomial.power_of(u)
        atom_kind = None
        rest_atoms = []
        for atom, power in monomial.atom_factors:
            if u not in atom.argument.variables():
                rest_atoms.append((atom, power))
            elif atom.argument == argument and power == 1 and atom_kind is None:
                atom_kind = atom.kind
            else:
                raise UnsupportedAntiderivativeError(
                    f"Cannot integrate {monomial.as_expression()} with respect to {u}")
        rest = ExpressionBuilder()
        rest.add_term(monomial.coefficient, monomial.odd_factors,
                      [(v, p) for v, p in monomial.even_factors if v != u], rest_atoms)
        rest_value = rest.build()

        if atom_kind is None:
            result.add(rest_value * Expression.variable(u) ** (n + 1), Fraction(1, n + 1))
            continue
        for scale, power, kind in _integrate_power_times_atom(atom_kind, n):
            piece = Expression.variable(u) ** power * Expression.atom(FunctionAtom(kind, argument))
            result.add(rest_value * piece, scale)
    return result.build()
