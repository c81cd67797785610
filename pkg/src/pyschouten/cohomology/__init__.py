from .antiderivative import ANTIDERIVATIVES, antiderivative
from .exactness import PRIMITIVE_STEP_LIMIT, TrivialityReport, cohomologous, find_primitive, is_exact
