from .identities import (IdentityReport, check_zimes, delta_squared, evolutionary_commutator, jacobi_sign, jacobiator,
                         prolonged_action)
from .laplacian import bv_laplacian, laplacian_shortcut
from .schouten import schouten_multibase, schouten_old
