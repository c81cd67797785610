from fractions import Fraction
from typing import Dict, Optional, Tuple

from ..errors import MalformedExpressionError
from .base import JetVariable
from .expression import AtomKind, Expression

# Node types of the raw (unordered) tree, as produced by the DSL parser.
SUM = "Sum"
PRODUCT = "Product"
POWER = "Power"
NEGATE = "Negate"
RATIONAL = "Rational"
VARIABLE = "Variable"
FUNCTION = "Function"
QUOTIENT = "Quotient"


def normalize(node: Dict) -> Expression:
    """
    Canonicalises a raw expression tree.

    Nodes are dictionaries with a "type" key:

    - {"type": "Sum", "terms": [...]}
    - {"type": "Product", "factors": [...]}, factors multiplied left to right
    - {"type": "Power", "base": node, "exponent": int}
    - {"type": "Negate", "argument": node}
    - {"type": "Quotient", "numerator": node, "denominator": int}
    - {"type": "Rational", "value": Fraction or int}
    - {"type": "Variable", "variable": JetVariable}
    - {"type": "Function", "name": "exp" | "sin" | "cos", "argument": node}

    Any node may carry a "position" (line, column) that is attached to errors raised while
    normalising it.

    Args:
        node (Dict): Root of the tree.

    Returns:
        Expression: The canonical expression.

    Raises:
        MalformedExpressionError: On unknown nodes, negative exponents, zero denominators or
            function atoms with odd arguments.
    """
    try:
        return _normalize(node)
    except MalformedExpressionError as error:
        if error.position is None:
            error.position = _position(node)
        raise


def _position(node: Dict) -> Optional[Tuple[int, int]]:
    return node.get("position") if isinstance(node, dict) else None


def _normalize(node: Dict) -> Expression:
    if not isinstance(node, dict) or "type" not in node:
        raise MalformedExpressionError(f"Not an expression node: {node!r}")
    kind = node["type"]
    try:
        if kind == RATIONAL:
            return Expression.constant(Fraction(node["value"]))
        if kind == VARIABLE:
            variable = node["variable"]
            if not isinstance(variable, JetVariable):
                raise MalformedExpressionError(f"Not a jet variable: {variable!r}")
            return Expression.variable(variable)
        if kind == SUM:
            result = Expression.zero()
            for term in node["terms"]:
                result = result + _normalize(term)
            return result
        if kind == PRODUCT:
            result = Expression.constant(1)
            for factor in node["factors"]:
                result = result * _normalize(factor)
            return result
        if kind == NEGATE:
            return -_normalize(node["argument"])
        if kind == POWER:
            exponent = node["exponent"]
            if not isinstance(exponent, int) or exponent < 0:
                raise MalformedExpressionError(f"Exponent must be a nonnegative integer, got {exponent!r}")
            return _normalize(node["base"]) ** exponent
        if kind == QUOTIENT:
            denominator = node["denominator"]
            if not denominator:
                raise MalformedExpressionError("Division by zero")
            return _normalize(node["numerator"]).scale(Fraction(1, denominator))
        if kind == FUNCTION:
            try:
                function = AtomKind(node["name"])
            except ValueError:
                raise MalformedExpressionError(f"Unknown function: {node['name']!r}") from None
            return Expression.function(function, _normalize(node["argument"]))
    except MalformedExpressionError as error:
        if error.position is None:
            error.position = _position(node)
        raise
    raise MalformedExpressionError(f"Unknown node type: {kind!r}", _position(node))
