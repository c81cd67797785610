import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..errors import InhomogeneousError, MalformedExpressionError, ParseError
from ..expr import Expression, FieldKind, Functional, JetVariable, MultiIndex, normalize
from ..expr.normalize import FUNCTION, NEGATE, POWER, PRODUCT, QUOTIENT, RATIONAL, SUM, VARIABLE

FUNCTIONS = ("exp", "sin", "cos")
INTEGRAL_KEYWORD = "int"
OPERATORS = ("+", "-", "*", "/", "^", "(", ")")

JET_VARIABLE_PATTERN = re.compile(r"^(qd|q)(\d*)(?:_(.+))?$")
UNBRACED_LABEL_PATTERN = re.compile(r"[A-Za-z][0-9]*")

# Token kinds
NUMBER = "number"
NAME = "name"
OPERATOR = "operator"
END = "end of input"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int

    @property
    def position(self) -> Tuple[int, int]:
        return self.line, self.column

    def describe(self) -> str:
        return END if self.kind == END else repr(self.text)


def _end_position(source: str) -> Tuple[int, int]:
    """Position of the last character, or (1, 1) for empty input."""
    if not source:
        return 1, 1
    line = source.count("\n", 0, len(source) - 1) + 1
    start = source.rfind("\n", 0, len(source) - 1) + 1
    return line, len(source) - start


def tokenizer(source: str) -> List[Token]:
    """
    Splits DSL source into tokens.

    - Whitespace separates tokens and is otherwise ignored.
    - Digits form integer literals.
    - Letters, digits and underscores form names; a "_{" opens a braced label list that runs to the
      matching "}" and may contain spaces, e.g. q_{y1 y1}.
    - The characters + - * / ^ ( ) are single operator tokens.

    Args:
        source (str): Input text.

    Returns:
        List[Token]: Tokens with 1-based line and column, terminated by an end token.

    Raises:
        ParseError: On unknown characters or an unterminated brace.
    """
    tokens = []
    line, column = 1, 1
    i = 0

    while i < len(source):
        char = source[i]
        if char == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if char.isspace():
            column += 1
            i += 1
            continue

        start = i
        if char.isdigit():
            while i < len(source) and source[i].isdigit():
                i += 1
            tokens.append(Token(NUMBER, source[start:i], line, column))
        elif char.isalpha():
            while i < len(source) and (source[i].isalnum() or source[i] == "_"):
                if source.startswith("_{", i):
                    end = source.find("}", i)
                    if end == -1 or "\n" in source[i:end]:
                        raise ParseError(line, column + i - start, "Unterminated label braces", ("'}'",))
                    i = end + 1
                    break
                i += 1
            tokens.append(Token(NAME, source[start:i], line, column))
        elif char in OPERATORS:
            i += 1
            tokens.append(Token(OPERATOR, char, line, column))
        else:
            raise ParseError(line, column, f"Unknown character {char!r}")
        column += i - start

    end_line, end_column = _end_position(source)
    tokens.append(Token(END, "", end_line, end_column))
    return tokens


def parse_labels(text: str) -> Tuple[str, ...]:
    """
    Splits a derivative suffix into labels: "xx" -> (x, x), "y1y1" -> (y1, y1), "{ab ab}" -> (ab, ab).

    Raises:
        MalformedExpressionError: If the suffix is not a sequence of labels.
    """
    if text.startswith("{") and text.endswith("}"):
        labels = tuple(text[1:-1].split())
        if not labels:
            raise MalformedExpressionError("Empty label braces")
        return labels
    labels = tuple(UNBRACED_LABEL_PATTERN.findall(text))
    if "".join(labels) != text:
        raise MalformedExpressionError(f"Invalid derivative labels {text!r}")
    return labels


def parse_jet_variable(name: str) -> Optional[JetVariable]:
    """Reads names such as q, qd_x, q2_xy or qd_{y1 z1}; returns None if name is not a jet variable."""
    match = JET_VARIABLE_PATTERN.match(name)
    if not match:
        return None
    field_name, index, suffix = match.groups()
    kind = FieldKind.ODD if field_name == "qd" else FieldKind.EVEN
    labels = parse_labels(suffix) if suffix else ()
    return JetVariable(kind, int(index) if index else 1, MultiIndex.from_labels(labels))


class _Parser:
    """Recursive-descent parser producing the raw tree consumed by normalize."""

    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenizer(source)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != END:
            self.index += 1
        return token

    def at(self, text: str) -> bool:
        return self.current.kind == OPERATOR and self.current.text == text

    def error(self, message: str, expected=()) -> ParseError:
        token = self.current
        return ParseError(token.line, token.column, message, expected)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"Unexpected {self.current.describe()}", (repr(text),))
        return self.advance()

    def integer(self) -> int:
        if self.current.kind != NUMBER:
            raise self.error(f"Unexpected {self.current.describe()}", ("integer",))
        return int(self.advance().text)

    def sum(self) -> Dict:
        start = self.current.position
        terms = [self.product()]
        while self.at("+") or self.at("-"):
            operator = self.advance()
            term = self.product()
            terms.append(term if operator.text == "+" else
                         {"type": NEGATE, "argument": term, "position": operator.position})
        if len(terms) == 1:
            return terms[0]
        return {"type": SUM, "terms": terms, "position": start}

    def product(self) -> Dict:
        start = self.current.position
        node = self.unary()
        factors = [node]
        while self.at("*") or self.at("/"):
            operator = self.advance()
            if operator.text == "*":
                factors.append(self.unary())
            else:
                numerator = {"type": PRODUCT, "factors": factors, "position": start}
                factors = [{"type": QUOTIENT, "numerator": numerator, "denominator": self.integer(),
                            "position": operator.position}]
        if len(factors) == 1:
            return factors[0]
        return {"type": PRODUCT, "factors": factors, "position": start}

    def unary(self) -> Dict:
        if self.at("-"):
            operator = self.advance()
            return {"type": NEGATE, "argument": self.unary(), "position": operator.position}
        if self.at("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Dict:
        base = self.primary()
        if self.at("^"):
            operator = self.advance()
            return {"type": POWER, "base": base, "exponent": self.integer(), "position": operator.position}
        return base

    def primary(self) -> Dict:
        token = self.current
        expected = ("number", "jet variable", "exp", "sin", "cos", "'('")
        if token.kind == NUMBER:
            self.advance()
            return {"type": RATIONAL, "value": Fraction(int(token.text)), "position": token.position}
        if self.at("("):
            self.advance()
            node = self.sum()
            self.expect(")")
            return node
        if token.kind == NAME:
            if token.text in FUNCTIONS:
                self.advance()
                self.expect("(")
                argument = self.sum()
                self.expect(")")
                return {"type": FUNCTION, "name": token.text, "argument": argument, "position": token.position}
            try:
                variable = parse_jet_variable(token.text)
            except MalformedExpressionError as error:
                raise ParseError(token.line, token.column, str(error)) from None
            if variable is not None:
                self.advance()
                return {"type": VARIABLE, "variable": variable, "position": token.position}
            raise self.error(f"Unknown name {token.text!r}", expected)
        raise self.error(f"Unexpected {token.describe()}", expected)

    def end(self):
        if self.current.kind != END:
            raise self.error(f"Unexpected {self.current.describe()}", (END,))


def _build(tree: Dict) -> Expression:
    try:
        return normalize(tree)
    except MalformedExpressionError as error:
        line, column = error.position or tree.get("position", (1, 1))
        raise ParseError(line, column, str(error)) from None


def parse_expression(source: str) -> Expression:
    """
    Parses a density without the integral, e.g. "qd_x*exp(q_x)".

    Raises:
        ParseError: On syntax errors and on malformed expressions such as exp of an odd argument.
    """
    parser = _Parser(source)
    tree = parser.sum()
    parser.end()
    return _build(tree)


def parse_functional(source: str) -> Functional:
    """
    Parses "int <expression> d<label>", e.g. "int qd*q*q_xx dx".

    Raises:
        ParseError: On syntax errors, malformed expressions and inhomogeneous densities.
    """
    parser = _Parser(source)
    keyword = parser.current
    if keyword.kind != NAME or keyword.text != INTEGRAL_KEYWORD:
        raise parser.error(f"Unexpected {keyword.describe()}", (repr(INTEGRAL_KEYWORD),))
    parser.advance()
    tree = parser.sum()
    measure = parser.current
    if measure.kind != NAME or not measure.text.startswith("d") or len(measure.text) < 2:
        raise parser.error(f"Unexpected {measure.describe()}", ("integration measure d<label>",))
    parser.advance()
    parser.end()
    density = _build(tree)
    try:
        return Functional(density, measure.text[1:])
    except InhomogeneousError as error:
        raise ParseError(keyword.line, keyword.column, str(error)) from None
    except MalformedExpressionError as error:
        raise ParseError(measure.line, measure.column, str(error)) from None
