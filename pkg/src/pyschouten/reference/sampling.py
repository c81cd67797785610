import random
from fractions import Fraction
from typing import Optional, Sequence

from ..expr import DEFAULT_BASE, AtomKind, BaseLabel, Expression, ExpressionBuilder, Functional, JetVariable

COEFFICIENTS = (-3, -2, -1, 1, 2, 5, Fraction(1, 2), Fraction(-3, 2))


def random_variable(rng: random.Random, odd: bool, max_order: int, labels: Sequence[BaseLabel] = (DEFAULT_BASE,),
                    fields: int = 1) -> JetVariable:
    order = rng.randint(0, max_order)
    picked = [rng.choice(labels) for _ in range(order)]
    index = rng.randint(1, fields)
    return JetVariable.qd(*picked, index=index) if odd else JetVariable.q(*picked, index=index)


def random_expression(rng: random.Random, terms: int = 3, odd_degree: Optional[int] = None, max_order: int = 2,
                      labels: Sequence[BaseLabel] = (DEFAULT_BASE,), fields: int = 1,
                      atoms: bool = True) -> Expression:
    """
    A random canonical expression.

    Args:
        rng (random.Random): Source of randomness.
        terms (int): Number of monomials drawn (like terms may merge or cancel).
        odd_degree (Optional[int]): Fixed odd degree of every monomial; random in 0..2 when None.
        max_order (int): Largest derivative order of a jet variable.
        labels (Sequence[str]): Base labels derivatives are drawn from.
        fields (int): Number of field components.
        atoms (bool): Allow exp, sin and cos of single even variables.
    """
    builder = ExpressionBuilder()
    for _ in range(terms):
        degree = rng.randint(0, 2) if odd_degree is None else odd_degree
        odd = [random_variable(rng, True, max_order, labels, fields) for _ in range(degree)]
        even = [(random_variable(rng, False, max_order, labels, fields), rng.randint(1, 2))
                for _ in range(rng.randint(0, 2))]
        term = ExpressionBuilder()
        term.add_term(rng.choice(COEFFICIENTS), odd, even)
        value = term.build()
        if atoms and rng.random() < 0.5:
            argument = Expression.variable(random_variable(rng, False, max(max_order - 1, 0), labels, fields))
            value = value * Expression.function(rng.choice(list(AtomKind)), argument)
        builder.add(value)
    return builder.build()


def random_functional(rng: random.Random, grading: int = 1, terms: int = 2, max_order: int = 2,
                      base: BaseLabel = DEFAULT_BASE, atoms: bool = True) -> Functional:
    """A random homogeneous functional of the given grading over base."""
    return Functional(random_expression(rng, terms, grading, max_order, (base,), atoms=atoms), base)
