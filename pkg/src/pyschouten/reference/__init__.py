from .fixtures import multibase_residual, reference_functionals, residual_primitive
from .sampling import random_expression, random_functional, random_variable
from .suite import CheckResult, ReproductionSuite, render_suite_table, run_reproduction_suite, suite_passed
