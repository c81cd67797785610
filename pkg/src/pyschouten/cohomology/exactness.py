import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from ..calculus import EulerResult, euler_all, total_derivative
from ..errors import MultiLabelError, NotExactError, UnsupportedAntiderivativeError
from ..expr import DEFAULT_BASE, BaseLabel, Expression, FieldKind, JetVariable, Side
from .antiderivative import antiderivative

logger = logging.getLogger(__name__)

PRIMITIVE_STEP_LIMIT = 10000


@dataclass(frozen=True)
class TrivialityReport:
    """
    Outcome of a horizontal-cohomology query on one density.

    Attributes:
        euler_q (Expression): δ/δq of the density (first field component).
        euler_qdagger (Expression): δ/δq† of the density (first field component).
        constant_part (Fraction): Jet-free part of the density.
        is_trivial (bool): All variational derivatives vanish and the constant part is zero.
        primitive (Optional[Expression]): η with D(η) equal to the density, when requested and found.
        euler (EulerResult): Variational derivatives for every field present.
    """
    euler_q: Expression
    euler_qdagger: Expression
    constant_part: Fraction
    is_trivial: bool
    primitive: Optional[Expression] = None
    euler: EulerResult = field(default_factory=EulerResult)

    def export(self) -> Dict:
        data = {
            "trivial": self.is_trivial,
            "constant_part": str(self.constant_part),
            "euler": self.euler.export(),
        }
        if self.primitive is not None:
            data["primitive"] = self.primitive.export()
        return data


def _check_single_base(d: Expression, base: BaseLabel):
    extra = d.labels() - {base}
    if extra:
        raise MultiLabelError(f"Density carries labels {sorted(extra)} besides {base!r}; restrict it first: {d}")


def is_exact(d: Expression, base: BaseLabel = DEFAULT_BASE, with_primitive: bool = False) -> TrivialityReport:
    """
    Decides whether ∫ d d(base) is cohomologically trivial.

    The density is trivial iff all its variational derivatives vanish and it has no constant part.

    Args:
        d (Expression): Density over the single label base.
        base (str): The base label.
        with_primitive (bool): Also construct a primitive with find_primitive. A primitive outside the
            supported antiderivative class is logged and left empty.

    Returns:
        TrivialityReport: The verdict.

    Raises:
        MultiLabelError: If d carries other labels than base.
    """
    _check_single_base(d, base)
    result = euler_all(d, Side.LEFT)
    constant = d.constant_part()
    trivial = result.is_zero and constant == 0
    logger.debug(f"Exactness of {len(d)} terms over {base}: {'trivial' if trivial else 'nontrivial'}")
    report = TrivialityReport(
        euler_q=result.get(FieldKind.EVEN),
        euler_qdagger=result.get(FieldKind.ODD),
        constant_part=constant,
        is_trivial=trivial,
        euler=result,
    )
    if trivial and with_primitive:
        try:
            primitive = _integrate(d, base)
        except UnsupportedAntiderivativeError as error:
            logger.warning(f"No primitive constructed: {error}")
        else:
            report = TrivialityReport(report.euler_q, report.euler_qdagger, constant, True, primitive, result)
    return report


def _top_variable(d: Expression) -> JetVariable:
    return min(d.variables(), key=lambda v: (-v.order, v.parity, v.index, v.deriv.items))


def _integrate(d: Expression, base: BaseLabel) -> Expression:
    primitive = Expression.zero()
    rem = d
    for step in range(PRIMITIVE_STEP_LIMIT):
        if rem.is_zero:
            break
        if not rem.variables():
            raise NotExactError(f"Constant remainder {rem} has no primitive")
        top = _top_variable(rem)
        order = top.order
        lowered = top.lowered(base)
        if lowered is None:
            raise NotExactError(f"Remainder is not a total derivative in {base}: {rem}")
        coefficient = rem.partial(top, Side.LEFT)
        if any(v.order >= order for v in coefficient.variables()):
            raise NotExactError(f"Remainder is not affine in its top-order variable {top}: {rem}")
        if top.parity:
            piece = Expression.variable(lowered) * coefficient
        else:
            piece = antiderivative(coefficient, lowered)
        primitive = primitive + piece
        rem = rem - total_derivative(piece, base)
        logger.debug(f"Primitive step {step}: integrated {top}, {len(rem)} terms remain")
    else:
        raise NotExactError(f"No primitive found within {PRIMITIVE_STEP_LIMIT} steps")

    if total_derivative(primitive, base) != d:
        raise NotExactError(f"Constructed primitive does not reproduce the density: {primitive}")
    return primitive


def find_primitive(d: Expression, base: BaseLabel = DEFAULT_BASE) -> Expression:
    """
    Constructs η with D_base(η) = d exactly.

    The top-order variable is integrated away one at a time: an exact density is affine in it with a
    coefficient of lower order, which is antidifferentiated with respect to the variable one order
    below.

    Raises:
        NotExactError: If d is not a total derivative.
        UnsupportedAntiderivativeError: If a coefficient falls outside polynomial x {1, exp, sin, cos}.
        MultiLabelError: If d carries other labels than base.
    """
    report = is_exact(d, base)
    if not report.is_trivial:
        raise NotExactError(f"Density is not a total derivative: {d}", report)
    return _integrate(d, base)


def cohomologous(a: Expression, b: Expression, base: BaseLabel = DEFAULT_BASE) -> bool:
    """Tests a ≅ b, i.e. whether a - b is a total derivative in base."""
    return is_exact(a - b, base).is_trivial
