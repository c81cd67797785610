from typing import Optional, Sequence, Tuple


class SchoutenError(ValueError):
    """Base class of every error raised by PySchouten."""


class MalformedExpressionError(SchoutenError):
    """
    Raised when an expression cannot be put into canonical form.

    Attributes:
        position (Optional[Tuple[int, int]]): Line and column of the offending source node, when the
            expression came from the DSL.
    """

    def __init__(self, message: str, position: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.position = position


class InhomogeneousError(SchoutenError):
    """Raised when a grading is requested from an expression whose monomials have different odd degrees."""


class MultiLabelError(SchoutenError):
    """Raised when a single-base query receives a density carrying several base labels."""


class NotExactError(SchoutenError):
    """
    Raised by the primitive finder on densities that are not total derivatives.

    Attributes:
        report: The TrivialityReport of the rejected density, if one was computed.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class UnsupportedAntiderivativeError(SchoutenError):
    """Raised when a coefficient falls outside polynomial x {1, exp, sin, cos} in the integration variable."""


class ParseError(SchoutenError):
    """
    Error raised by the DSL parser.

    Attributes:
        line (int): 1-based line of the offending token.
        column (int): 1-based column of the offending token.
        message (str): Human-readable description.
        expected (Tuple[str, ...]): Descriptions of the tokens that would have been accepted.
    """

    def __init__(self, line: int, column: int, message: str, expected: Sequence[str] = ()):
        self.line = line
        self.column = column
        self.message = message
        self.expected: Tuple[str, ...] = tuple(expected)
        text = f"line {line}, column {column}: {message}"
        if self.expected:
            text += f" (expected {', '.join(self.expected)})"
        super().__init__(text)

    @property
    def position(self) -> Tuple[int, int]:
        return self.line, self.column
