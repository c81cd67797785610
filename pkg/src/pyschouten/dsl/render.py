import hashlib
import json
from fractions import Fraction
from typing import Dict, Iterable, List, Literal, Optional

from ..brackets import IdentityReport
from ..calculus import EulerResult
from ..cohomology import TrivialityReport
from ..expr import Expression, FieldKind, Functional, JetVariable, Monomial
from ..geometric import CompositeExpression, DeferredFactor, DeferredRecord
from .parser import UNBRACED_LABEL_PATTERN

STRUCTURED_SCHEMA = "pyschouten/expression-tree"
STRUCTURED_SCHEMA_VERSION = 1
FUNCTIONAL_SUFFIX = ".fun"

OutputFormat = Literal["text", "structured", "latex"]


def _yes_no(value: bool) -> str:
    return "yes" if value else "no"


# ---------------------------------------------------------------------- text


def render_variable(v: JetVariable) -> str:
    """DSL spelling of a jet variable: q, qd_x, q2_xy, q_{ab ab}."""
    name = v.kind.value + ("" if v.index == 1 else str(v.index))
    labels = v.deriv.expanded()
    if not labels:
        return name
    if all(UNBRACED_LABEL_PATTERN.fullmatch(label) for label in labels):
        return f"{name}_{''.join(labels)}"
    return f"{name}_{{{' '.join(labels)}}}"


def _text_factors(monomial: Monomial) -> List[str]:
    factors = [render_variable(v) for v in monomial.odd_factors]
    factors += [render_variable(v) + (f"^{p}" if p != 1 else "") for v, p in monomial.even_factors]
    factors += [f"{a.kind.value}({_text_expression(a.argument)})" + (f"^{p}" if p != 1 else "")
                for a, p in monomial.atom_factors]
    return factors


def _text_monomial(monomial: Monomial) -> str:
    factors = _text_factors(monomial)
    c = monomial.coefficient
    if not factors:
        return str(c)
    body = "*".join(factors)
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    return f"{c}*{body}"


def _join_terms(terms: Iterable[str], empty: str = "0") -> str:
    text = ""
    for term in terms:
        if not text:
            text = term
        elif term.startswith("-"):
            text += f" - {term[1:]}"
        else:
            text += f" + {term}"
    return text or empty


def _text_expression(e: Expression) -> str:
    return _join_terms(_text_monomial(m) for m in e.monomials())


def _text_record(record: DeferredRecord) -> str:
    sign = "-" if record.sign < 0 else ""
    name = record.label.name
    if record.order == 1:
        return f"[{sign}d/d{name}]"
    return f"[{sign}d^{record.order}/d{name}^{record.order}]"


def _text_factor(factor: DeferredFactor) -> str:
    records = "".join(_text_record(r) for r in reversed(factor.deferred))
    return f"{records}({_text_expression(factor.core)})"


def _text_composite(e: CompositeExpression) -> str:
    if e.is_empty:
        return "0 (empty composite)"
    lines = []
    for term in e.terms:
        scalar = f"+{term.scalar}" if term.scalar > 0 else str(term.scalar)
        lines.append(" ".join([scalar] + [_text_factor(f) for f in term.factors]))
    return "\n".join(lines)


def _text_euler(result: EulerResult) -> str:
    if not result.by_field:
        return "0"
    return "\n".join(f"{kind.value}{'' if index == 1 else index}: {_text_expression(value)}"
                     for (kind, index), value in sorted(result.by_field.items(),
                                                        key=lambda kv: (kv[0][0].parity, kv[0][1])))


def _text_triviality(report: TrivialityReport) -> str:
    if report.is_trivial:
        if report.primitive is None:
            return "trivial"
        return f"trivial; primitive: {_text_expression(report.primitive)}"
    return (f"nontrivial; euler q: {_text_expression(report.euler_q)}; "
            f"euler qd: {_text_expression(report.euler_qdagger)}; constant part: {report.constant_part}")


def _text_identity(report: IdentityReport) -> str:
    return "\n".join([
        f"lhs: {_text_expression(report.lhs_density)}",
        f"rhs: {_text_expression(report.rhs_density)}",
        f"difference: {_text_expression(report.difference)}",
        f"exactly equal: {_yes_no(report.exactly_equal)}",
        f"cohomologically equal: {_yes_no(report.cohomologically_equal)}",
    ])


def render_text(obj) -> str:
    """
    Plain-text rendering. Expressions and functionals use the DSL syntax and parse back to the
    same canonical value.
    """
    if isinstance(obj, Expression):
        return _text_expression(obj)
    if isinstance(obj, Functional):
        return f"int {_text_expression(obj.density)} d{obj.base}"
    if isinstance(obj, CompositeExpression):
        return _text_composite(obj)
    if isinstance(obj, IdentityReport):
        return _text_identity(obj)
    if isinstance(obj, TrivialityReport):
        return _text_triviality(obj)
    if isinstance(obj, EulerResult):
        return _text_euler(obj)
    raise TypeError(f"Cannot render {type(obj).__name__}")


# --------------------------------------------------------------------- latex


def _latex_label(label: str) -> str:
    letters = label.rstrip("0123456789")
    digits = label[len(letters):]
    return letters + (f"_{{{digits}}}" if digits else "")


def _latex_variable(v: JetVariable) -> str:
    head = r"q^{\dagger}" if v.kind is FieldKind.ODD else "q"
    if v.index != 1:
        head = rf"q^{{\dagger ({v.index})}}" if v.kind is FieldKind.ODD else rf"q^{{({v.index})}}"
    labels = "".join(_latex_label(label) for label in v.deriv.expanded())
    return head + (f"_{{{labels}}}" if labels else "")


def _latex_coefficient(c: Fraction) -> str:
    magnitude = abs(c)
    text = str(magnitude.numerator) if magnitude.denominator == 1 else \
        rf"\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"
    return ("-" if c < 0 else "") + text


def _latex_monomial(monomial: Monomial) -> str:
    factors = [_latex_variable(v) for v in monomial.odd_factors]
    factors += [_latex_variable(v) + (f"^{{{p}}}" if p != 1 else "") for v, p in monomial.even_factors]
    factors += [rf"\{a.kind.value}" + (f"^{{{p}}}" if p != 1 else "") + rf"\left({_latex_expression(a.argument)}\right)"
                for a, p in monomial.atom_factors]
    c = monomial.coefficient
    if not factors:
        return _latex_coefficient(c)
    body = r"\,".join(factors)
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    return f"{_latex_coefficient(c)}\\,{body}"


def _latex_expression(e: Expression) -> str:
    return _join_terms(_latex_monomial(m) for m in e.monomials())


def _latex_record(record: DeferredRecord) -> str:
    sign = "-" if record.sign < 0 else ""
    name = _latex_label(record.label.name)
    if record.order == 1:
        return rf"\lceil {sign}\frac{{d}}{{d{name}}} \rceil"
    return rf"\lceil {sign}\frac{{d^{{{record.order}}}}}{{d{name}^{{{record.order}}}}} \rceil"


def _latex_composite(e: CompositeExpression) -> str:
    if e.is_empty:
        return "0"
    lines = []
    for term in e.terms:
        factors = [" ".join(_latex_record(r) for r in reversed(f.deferred)) + rf"\left({_latex_expression(f.core)}\right)"
                   for f in term.factors]
        lines.append(_latex_coefficient(term.scalar) + r"\cdot " + r"\cdot ".join(factors))
    return " \\\\\n".join(lines)


def render_latex(obj) -> str:
    """Display-only LaTeX in the usual notation: q^{\\dagger}_{xx}, \\lceil -\\frac{d}{dy_{1}} \\rceil."""
    if isinstance(obj, Expression):
        return _latex_expression(obj)
    if isinstance(obj, Functional):
        return rf"\int {_latex_expression(obj.density)} \,\mathrm{{d}}{_latex_label(obj.base)}"
    if isinstance(obj, CompositeExpression):
        return _latex_composite(obj)
    if isinstance(obj, IdentityReport):
        relation = "=" if obj.exactly_equal else (r"\cong" if obj.cohomologically_equal else r"\not\cong")
        return f"{_latex_expression(obj.lhs_density)} {relation} {_latex_expression(obj.rhs_density)}"
    if isinstance(obj, TrivialityReport):
        return _latex_expression(obj.primitive) if obj.primitive is not None else (
            r"\cong 0" if obj.is_trivial else r"\not\cong 0")
    if isinstance(obj, EulerResult):
        return r" \\ ".join(_latex_expression(value) for _, value in sorted(
            obj.by_field.items(), key=lambda kv: (kv[0][0].parity, kv[0][1])))
    raise TypeError(f"Cannot render {type(obj).__name__}")


# ---------------------------------------------------------------- structured


def provenance(operation: str, inputs: Iterable = ()) -> Dict:
    """Operation name plus sha256 digests of the text renderings of its inputs."""
    return {
        "operation": operation,
        "inputs": [hashlib.sha256(render_text(i).encode("utf-8")).hexdigest() for i in inputs],
    }


def render_structured(obj, provenance: Optional[Dict] = None) -> str:
    """
    JSON document {"schema", "version", "kind", "value", "provenance"} with sorted keys, where value
    is obj.export().
    """
    document = {
        "schema": STRUCTURED_SCHEMA,
        "version": STRUCTURED_SCHEMA_VERSION,
        "kind": type(obj).__name__,
        "value": obj.export(),
        "provenance": provenance or {},
    }
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False)


def render(obj, format: OutputFormat = "text", provenance: Optional[Dict] = None) -> str:
    if format == "text":
        return render_text(obj)
    if format == "latex":
        return render_latex(obj)
    if format == "structured":
        return render_structured(obj, provenance)
    raise ValueError(f"Unknown output format: {format!r}")
