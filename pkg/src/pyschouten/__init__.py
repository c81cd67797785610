"""
.. include:: ../../README.md
"""
from .brackets import bv_laplacian, check_zimes, evolutionary_commutator, jacobiator, schouten_multibase, schouten_old
from .calculus import euler, total_derivative
from .cohomology import cohomologous, find_primitive, is_exact
from .dsl import parse_expression, parse_functional, render
from .errors import (InhomogeneousError, MalformedExpressionError, MultiLabelError, NotExactError, ParseError,
                     SchoutenError, UnsupportedAntiderivativeError)
from .expr import Expression, FieldKind, Functional, JetVariable, Side
from .geometric import expand_jacobi_geometric, geometric_bracket, jacobiator_geometric, lift
