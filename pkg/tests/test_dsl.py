import json

import pytest
from hypothesis import given, settings

from pyschouten.brackets import check_zimes
from pyschouten.cohomology import is_exact
from pyschouten.dsl import (STRUCTURED_SCHEMA, parse_expression, parse_functional, parse_jet_variable, parse_labels,
                            provenance, render, render_latex, render_structured, render_text, render_variable,
                            tokenizer)
from pyschouten.errors import ParseError
from pyschouten.expr import Expression, FieldKind, JetVariable
from pyschouten.reference import fixtures

from strategies import expressions


def test_tokenizer_positions():
    tokens = tokenizer("q_x +\n  2*exp(qd_{y1 z1})")
    assert [(t.text, t.line, t.column) for t in tokens] == [
        ("q_x", 1, 1), ("+", 1, 5), ("2", 2, 3), ("*", 2, 4), ("exp", 2, 5), ("(", 2, 8),
        ("qd_{y1 z1}", 2, 9), (")", 2, 19), ("", 2, 19),
    ]


@pytest.mark.parametrize("text, labels", [
    ("xx", ("x", "x")),
    ("y1y1", ("y1", "y1")),
    ("xy2", ("x", "y2")),
    ("{ab ab}", ("ab", "ab")),
])
def test_parse_labels(text, labels):
    assert parse_labels(text) == labels


@pytest.mark.parametrize("name, variable", [
    ("q", JetVariable.q()),
    ("qd_xx", JetVariable.qd("x", "x")),
    ("q2_xy", JetVariable.q("x", "y", index=2)),
    ("qd_{y1 z1}", JetVariable.qd("y1", "z1")),
    ("dx", None),
    ("exp", None),
])
def test_parse_jet_variable(name, variable):
    assert parse_jet_variable(name) == variable


@pytest.mark.parametrize("variable, text", [
    (JetVariable.q("x", "x"), "q_xx"),
    (JetVariable.qd("y1", "z1", index=2), "qd2_y1z1"),
    (JetVariable.q("ab", "ab"), "q_{ab ab}"),
])
def test_render_variable(variable, text):
    assert render_variable(variable) == text
    assert parse_jet_variable(text) == variable


@pytest.mark.parametrize("source, text", [
    ("q_x*qd", "qd*q_x"),
    ("-(qd_x)", "-qd_x"),
    ("q/2 - 3/4", "-3/4 + 1/2*q"),
    ("0*q", "0"),
])
def test_render_text(source, text):
    assert render_text(parse_expression(source)) == text


@pytest.mark.parametrize("source, line, column", [
    ("q +", 1, 3),
    ("q @ q", 1, 3),
    ("q^qd", 1, 3),
    ("q/0", 1, 2),
    ("foo*q", 1, 1),
    ("exp(qd)", 1, 1),
    ("(q", 1, 2),
    ("q_{x", 1, 2),
    ("q_x.", 1, 4),
    ("q +\n  )", 2, 3),
    ("q_x$", 1, 4),
])
def test_parse_errors_carry_positions(source, line, column):
    with pytest.raises(ParseError) as info:
        parse_expression(source)
    assert info.value.position == (line, column)
    assert str(info.value).startswith(f"line {line}, column {column}: ")


def test_parse_error_lists_expected_tokens():
    with pytest.raises(ParseError, match=r"expected number, jet variable, exp, sin, cos, '\('"):
        parse_expression("q*")


def test_parse_functional(triple):
    F = parse_functional("int qd*q*q_xx dx")
    assert F == triple[0]
    assert F.base == "x"
    assert parse_functional("int qd_y1 dy1").base == "y1"


@pytest.mark.parametrize("source, line, column", [
    ("qd*q dx", 1, 1),
    ("int qd*q", 1, 8),
    ("int qd + qd*qd_x dx", 1, 1),
    ("int q dx q", 1, 10),
])
def test_parse_functional_errors(source, line, column):
    with pytest.raises(ParseError) as info:
        parse_functional(source)
    assert info.value.position == (line, column)


def test_reference_fixtures_parse():
    for source in (fixtures.F_SOURCE, fixtures.G_SOURCE, fixtures.H_SOURCE, fixtures.BRACKET_FH):
        assert parse_functional(source).grading == 1
    assert len(fixtures.multibase_residual()) > 0


@settings(deadline=None, max_examples=200)
@given(expressions(terms=4, labels=("x", "y", "z1"), fields=2))
def test_text_round_trip(e):
    assert parse_expression(render_text(e)) == e


def test_functional_round_trip(triple):
    for functional in triple:
        assert parse_functional(render_text(functional)) == functional
        assert parse_functional(str(functional)) == functional


def test_render_reports(E):
    assert render_text(is_exact(E("q_x"), with_primitive=True)) == "trivial; primitive: q"
    assert render_text(is_exact(E("q"))) == "nontrivial; euler q: 1; euler qd: 0; constant part: 0"
    report = render_text(check_zimes(*(parse_functional(s) for s in (fixtures.F_SOURCE, fixtures.H_SOURCE))))
    assert report.splitlines()[1] == "rhs: 0"
    assert report.splitlines()[-1] == "cohomologically equal: no"


def test_render_latex(E):
    assert render_latex(E("qd_x*q^2")) == r"q^{\dagger}_{x}\,q^{2}"
    assert render_latex(E("-1/2*sin(q)")) == r"-\frac{1}{2}\,\sin\left(q\right)"
    assert render_latex(parse_functional("int q_y1 dy1")) == r"\int q_{y_{1}} \,\mathrm{d}y_{1}"


def test_render_structured(triple):
    F = triple[0]
    document = json.loads(render_structured(F, provenance("laplacian", [F])))
    assert document["schema"] == STRUCTURED_SCHEMA
    assert document["version"] == 1
    assert document["kind"] == "Functional"
    assert document["value"]["grading"] == 1
    assert document["provenance"]["operation"] == "laplacian"
    assert len(document["provenance"]["inputs"][0]) == 64


def test_render_rejects_unknown_format():
    with pytest.raises(ValueError, match="Unknown output format"):
        render(Expression.zero(), "html")
    with pytest.raises(TypeError):
        render_text(FieldKind.EVEN)
