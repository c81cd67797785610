from .bracket import (GeometricJacobiExpansion, evaluate_terminal, expand_jacobi_geometric, geometric_bracket,
                      jacobiator_geometric, lift)
from .composite import (COUPLING_EVEN_ODD, COUPLING_ODD_EVEN, CompositeExpression, CompositeTerm, DeferredFactor,
                        DeferredRecord, ShiftLabel, canonicalize_composite, composite_equal, signature,
                        signature_count)
