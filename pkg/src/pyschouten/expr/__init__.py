from .base import (DEFAULT_BASE, GEOMETRIC_LABELS, MULTIBASE_LABELS, BaseLabel, FieldKind, JetVariable, MultiIndex,
                   Side, check_label)
from .expression import AtomKind, Expression, ExpressionBuilder, FunctionAtom, Monomial, sort_odd
from .functional import Functional
from .normalize import normalize
