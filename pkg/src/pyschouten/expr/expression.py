from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Set, Tuple, Union

from ..errors import InhomogeneousError, MalformedExpressionError
from .base import BaseLabel, FieldKind, JetVariable, Side

Scalar = Union[int, Fraction]


class AtomKind(Enum):
    """Transcendental functions allowed inside densities."""
    EXP = "exp"
    SIN = "sin"
    COS = "cos"


ATOM_ORDER = {AtomKind.EXP: 0, AtomKind.SIN: 1, AtomKind.COS: 2}

# Value of each function at a zero argument.
ATOM_AT_ZERO = {AtomKind.EXP: 1, AtomKind.SIN: 0, AtomKind.COS: 1}


def sort_odd(factors: Iterable[JetVariable]) -> Tuple[int, Tuple[JetVariable, ...]]:
    """
    Brings odd variables into canonical order.

    Args:
        factors (Iterable[JetVariable]): Odd variables in product order.

    Returns:
        Tuple[int, Tuple[JetVariable, ...]]: The sign (-1)^(number of transpositions) and the sorted
        tuple, or (0, ()) when a variable repeats.
    """
    items = list(factors)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1].key > items[j].key:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for left, right in zip(items, items[1:]):
        if left == right:
            return 0, ()
    return sign, tuple(items)


def _merge_powers(pairs: Iterable[Tuple[object, int]]) -> Dict[object, int]:
    merged: Dict[object, int] = {}
    for item, power in pairs:
        merged[item] = merged.get(item, 0) + power
    return merged


@dataclass(frozen=True)
class FunctionAtom:
    """
    An opaque exp, sin or cos of a parity-even expression.

    No trigonometric or exponential identities are ever applied: two atoms are equal
    iff their kinds and canonical arguments are equal.
    """
    kind: AtomKind
    argument: "Expression"

    def __post_init__(self):
        if self.argument.odd_degrees() - {0}:
            raise MalformedExpressionError(f"Argument of {self.kind.value} must be parity-even: {self.argument}")
        if self.argument.is_constant:
            raise MalformedExpressionError(
                f"Argument of {self.kind.value} must depend on jet variables: {self.argument}")

    @cached_property
    def key(self) -> Tuple:
        return (ATOM_ORDER[self.kind], self.argument.key)

    def derivative(self) -> "Expression":
        """Outer derivative of the function, evaluated at the argument."""
        if self.kind is AtomKind.EXP:
            return Expression.atom(self)
        if self.kind is AtomKind.SIN:
            return Expression.function(AtomKind.COS, self.argument)
        return -Expression.function(AtomKind.SIN, self.argument)

    def map_argument(self, transform: Callable[["Expression"], "Expression"]) -> "Expression":
        return Expression.function(self.kind, transform(self.argument))

    def export(self) -> Dict:
        return {"function": self.kind.value, "argument": self.argument.export()}

    def __repr__(self) -> str:
        return f"{self.kind.value}({self.argument})"


TermKey = Tuple[Tuple[JetVariable, ...], Tuple[Tuple[JetVariable, int], ...], Tuple[Tuple[FunctionAtom, int], ...]]


@dataclass(frozen=True)
class Monomial:
    """
    One canonical term: a rational coefficient times ordered odd factors, even powers and atom powers.

    Attributes:
        coefficient (Fraction): Nonzero exact coefficient.
        odd_factors (Tuple[JetVariable, ...]): Strictly increasing odd variables.
        even_factors (Tuple[Tuple[JetVariable, int], ...]): Even variables with positive powers.
        atom_factors (Tuple[Tuple[FunctionAtom, int], ...]): Function atoms with positive powers.
    """
    coefficient: Fraction
    odd_factors: Tuple[JetVariable, ...] = ()
    even_factors: Tuple[Tuple[JetVariable, int], ...] = ()
    atom_factors: Tuple[Tuple[FunctionAtom, int], ...] = ()

    @property
    def key(self) -> TermKey:
        return self.odd_factors, self.even_factors, self.atom_factors

    @property
    def odd_degree(self) -> int:
        return len(self.odd_factors)

    @property
    def parity(self) -> int:
        return len(self.odd_factors) % 2

    def power_of(self, variable: JetVariable) -> int:
        return dict(self.even_factors).get(variable, 0)

    def with_atom_power(self, atom: FunctionAtom, power: int) -> "Expression":
        """This monomial with the power of one atom replaced."""
        atoms = dict(self.atom_factors)
        atoms[atom] = power
        builder = ExpressionBuilder()
        builder.add_term(self.coefficient, self.odd_factors, self.even_factors, atoms.items())
        return builder.build()

    def as_expression(self) -> "Expression":
        return Expression({self.key: self.coefficient})


def _term_sort_key(key: TermKey) -> Tuple:
    odd, even, atoms = key
    return (
        tuple(v.key for v in odd),
        tuple((v.key, p) for v, p in even),
        tuple((a.key, p) for a, p in atoms),
    )


class ExpressionBuilder:
    """Mutable accumulator that canonicalises terms as they are added."""

    def __init__(self):
        self._terms: Dict[TermKey, Fraction] = {}

    def add_term(self, coefficient: Scalar, odd: Iterable[JetVariable] = (),
                 even: Iterable[Tuple[JetVariable, int]] = (),
                 atoms: Iterable[Tuple[FunctionAtom, int]] = ()):
        """
        Adds coefficient * odd factors (in the given order) * even powers * atom powers.

        Args:
            coefficient: Exact rational coefficient.
            odd: Odd variables in product order; reordering contributes signs.
            even: (variable, power) pairs; repeated variables add up, zero powers vanish.
            atoms: (atom, power) pairs; repeated atoms add up, zero powers vanish.
        """
        if not coefficient:
            return
        sign, odd_sorted = sort_odd(odd)
        if not sign:
            return
        even_merged = _merge_powers(even)
        atom_merged = _merge_powers(atoms)
        even_key = tuple(sorted(((v, p) for v, p in even_merged.items() if p), key=lambda vp: vp[0].key))
        atom_key = tuple(sorted(((a, p) for a, p in atom_merged.items() if p), key=lambda ap: ap[0].key))
        self._add(Fraction(coefficient) * sign, (odd_sorted, even_key, atom_key))

    def add(self, expression: "Expression", scale: Scalar = 1):
        if not scale:
            return
        for key, coefficient in expression._terms.items():
            self._add(coefficient * scale, key)

    def _add(self, coefficient: Fraction, key: TermKey):
        total = self._terms.get(key, 0) + coefficient
        if total:
            self._terms[key] = total
        else:
            self._terms.pop(key, None)

    def build(self) -> "Expression":
        return Expression(self._terms)


class Expression:
    """
    Canonical sum of graded monomials with exact rational coefficients.

    Expressions are immutable; every operation returns a new canonical value, so equality is
    syntactic. Odd variables anticommute, even variables and function atoms commute.
    """
    def __init__(self, terms: Optional[Mapping[TermKey, Fraction]] = None):
        self._terms: Dict[TermKey, Fraction] = {k: Fraction(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "Expression":
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> "Expression":
        return cls({((), (), ()): Fraction(value)})

    @classmethod
    def variable(cls, variable: JetVariable) -> "Expression":
        if variable.parity:
            return cls({((variable,), (), ()): Fraction(1)})
        return cls({((), ((variable, 1),), ()): Fraction(1)})

    @classmethod
    def atom(cls, atom: FunctionAtom, power: int = 1) -> "Expression":
        return cls({((), (), ((atom, power),)): Fraction(1)})

    @classmethod
    def function(cls, kind: AtomKind, argument: "Expression") -> "Expression":
        """
        Applies exp, sin or cos to an expression.

        A zero argument is evaluated (exp 0 = cos 0 = 1, sin 0 = 0).

        Raises:
            MalformedExpressionError: If the argument is odd or a nonzero constant.
        """
        if argument.is_zero:
            return cls.constant(ATOM_AT_ZERO[kind])
        return cls.atom(FunctionAtom(kind, argument))

    # ------------------------------------------------------------------ views

    def monomials(self) -> List[Monomial]:
        """Returns the terms in canonical order."""
        return [Monomial(self._terms[k], *k) for k in sorted(self._terms, key=_term_sort_key)]

    def items(self) -> Iterator[Tuple[TermKey, Fraction]]:
        return iter(self._terms.items())

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials())

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(key == ((), (), ()) for key in self._terms)

    def constant_part(self) -> Fraction:
        """Coefficient of the jet-free monomial."""
        return self._terms.get(((), (), ()), Fraction(0))

    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        return self._terms[min(self._terms, key=_term_sort_key)]

    @cached_property
    def key(self) -> Tuple:
        return tuple(sorted((_term_sort_key(k), c) for k, c in self._terms.items()))

    def odd_degrees(self) -> Set[int]:
        return {len(odd) for odd, _, _ in self._terms}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.odd_degrees()) <= 1

    @property
    def odd_degree(self) -> int:
        """
        The common odd degree of all monomials (0 for the zero expression).

        Raises:
            InhomogeneousError: If monomials of different odd degrees are present.
        """
        degrees = self.odd_degrees()
        if len(degrees) > 1:
            raise InhomogeneousError(f"Expression has mixed odd degrees {sorted(degrees)}: {self}")
        return degrees.pop() if degrees else 0

    @property
    def parity(self) -> int:
        return self.odd_degree % 2

    @cached_property
    def _variables(self) -> frozenset:
        found: Set[JetVariable] = set()
        for odd, even, atoms in self._terms:
            found.update(odd)
            found.update(v for v, _ in even)
            for atom, _ in atoms:
                found.update(atom.argument.variables())
        return frozenset(found)

    def variables(self) -> Set[JetVariable]:
        """Every jet variable occurring, including those inside function arguments."""
        return set(self._variables)

    def labels(self) -> Set[BaseLabel]:
        return {label for v in self._variables for label in v.deriv.labels()}

    def fields(self) -> Set[Tuple[FieldKind, int]]:
        return {(v.kind, v.index) for v in self._variables}

    def field_indices(self) -> Set[int]:
        return {v.index for v in self._variables}

    # ------------------------------------------------------------ arithmetic

    def __add__(self, other: Union["Expression", Scalar]) -> "Expression":
        builder = ExpressionBuilder()
        builder.add(self)
        builder.add(_coerce(other))
        return builder.build()

    __radd__ = __add__

    def __sub__(self, other: Union["Expression", Scalar]) -> "Expression":
        builder = ExpressionBuilder()
        builder.add(self)
        builder.add(_coerce(other), -1)
        return builder.build()

    def __rsub__(self, other: Scalar) -> "Expression":
        return _coerce(other) - self

    def __neg__(self) -> "Expression":
        return self.scale(-1)

    def scale(self, factor: Scalar) -> "Expression":
        if not factor:
            return Expression()
        return Expression({k: c * factor for k, c in self._terms.items()})

    def __mul__(self, other: Union["Expression", Scalar]) -> "Expression":
        if not isinstance(other, Expression):
            return self.scale(other)
        builder = ExpressionBuilder()
        for (odd_a, even_a, atoms_a), coeff_a in self._terms.items():
            for (odd_b, even_b, atoms_b), coeff_b in other._terms.items():
                builder.add_term(coeff_a * coeff_b, odd_a + odd_b, even_a + even_b, atoms_a + atoms_b)
        return builder.build()

    def __rmul__(self, other: Scalar) -> "Expression":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "Expression":
        if not isinstance(exponent, int) or exponent < 0:
            raise MalformedExpressionError(f"Exponent must be a nonnegative integer, got {exponent!r}")
        result = Expression.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Expression.constant(other)
        return isinstance(other, Expression) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # ---------------------------------------------------------- derivations

    def partial(self, variable: JetVariable, side: Side = Side.LEFT) -> "Expression":
        """
        Graded partial derivative with respect to one jet coordinate.

        For an odd variable the factor is first moved to the front (side=LEFT) or to the back
        (side=RIGHT) of the odd factors, collecting one sign per transposition, and then struck.
        Function atoms are differentiated by the chain rule through their arguments.

        Args:
            variable (JetVariable): The coordinate, treated as independent of all others.
            side (Side): Which side the derivative acts from.

        Returns:
            Expression: The derivative; zero if the variable is absent.
        """
        builder = ExpressionBuilder()
        if variable.parity:
            for (odd, even, atoms), coefficient in self._terms.items():
                if variable not in odd:
                    continue
                position = odd.index(variable)
                passed = position if side is Side.LEFT else len(odd) - 1 - position
                sign = -1 if passed % 2 else 1
                builder.add_term(coefficient * sign, odd[:position] + odd[position + 1:], even, atoms)
            return builder.build()

        for (odd, even, atoms), coefficient in self._terms.items():
            for i, (v, power) in enumerate(even):
                if v == variable:
                    lowered = even[:i] + ((v, power - 1),) + even[i + 1:]
                    builder.add_term(coefficient * power, odd, lowered, atoms)
            for i, (atom, power) in enumerate(atoms):
                inner = atom.argument.partial(variable)
                if inner.is_zero:
                    continue
                rest = Monomial(coefficient, odd, even, atoms).with_atom_power(atom, power - 1)
                builder.add(rest * atom.derivative() * inner, power)
        return builder.build()

    def map_variables(self, transform: Callable[[JetVariable], JetVariable]) -> "Expression":
        """Substitutes every jet variable (also inside function arguments) and re-canonicalises."""
        result = ExpressionBuilder()
        for (odd, even, atoms), coefficient in self._terms.items():
            term = ExpressionBuilder()
            term.add_term(coefficient, [transform(v) for v in odd], [(transform(v), p) for v, p in even])
            value = term.build()
            for atom, power in atoms:
                value = value * atom.map_argument(lambda e: e.map_variables(transform)) ** power
            result.add(value)
        return result.build()

    def restrict_diagonal(self, target: BaseLabel) -> "Expression":
        """
        Collapses every multi-index onto the single label target, keeping total orders.

        Distinct mixed variables such as q_xy and q_yx-type copies may merge; odd duplicates vanish.
        """
        if self.labels() <= {target}:
            return self
        return self.map_variables(lambda v: v.restricted(target))

    # ------------------------------------------------------------------ misc

    def export(self) -> Dict:
        """Structured tree of the canonical form."""
        return {
            "terms": [
                {
                    "coefficient": str(m.coefficient),
                    "odd": [v.export() for v in m.odd_factors],
                    "even": [{"variable": v.export(), "power": p} for v, p in m.even_factors],
                    "atoms": [dict(a.export(), power=p) for a, p in m.atom_factors],
                }
                for m in self.monomials()
            ]
        }

    def __str__(self) -> str:
        from ..dsl.render import render_text  # Lazy import to avoid circular imports
        return render_text(self)

    def __repr__(self) -> str:
        return f"Expression({self})"


def _coerce(value: Union[Expression, Scalar]) -> Expression:
    if isinstance(value, Expression):
        return value
    return Expression.constant(value)
