from .parser import Token, parse_expression, parse_functional, parse_jet_variable, parse_labels, tokenizer
from .render import (FUNCTIONAL_SUFFIX, STRUCTURED_SCHEMA, STRUCTURED_SCHEMA_VERSION, provenance, render, render_latex,
                     render_structured, render_text, render_variable)
