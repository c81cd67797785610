from fractions import Fraction

import pytest
from hypothesis import given, settings

from pyschouten.calculus import total_derivative
from pyschouten.cohomology import antiderivative, cohomologous, find_primitive, is_exact
from pyschouten.errors import MultiLabelError, NotExactError, UnsupportedAntiderivativeError
from pyschouten.expr import JetVariable

from strategies import expressions


@pytest.mark.parametrize("density, primitive", [
    ("q_x", "q"),
    ("q_x*q_xx", "1/2*q_x^2"),
    ("q_x*exp(q)", "exp(q)"),
    ("qd_x*q + qd*q_x", "qd*q"),
    ("q_xx*cos(q_x)", "sin(q_x)"),
])
def test_primitive(E, density, primitive):
    report = is_exact(E(density), with_primitive=True)
    assert report.is_trivial
    assert report.primitive == E(primitive)
    assert find_primitive(E(density)) == E(primitive)


@pytest.mark.parametrize("density", ["q*q_xx + q_x^2 + 1", "q*q_xx", "qd*q", "sin(q)"])
def test_nontrivial_densities(E, density):
    report = is_exact(E(density), with_primitive=True)
    assert not report.is_trivial
    assert report.primitive is None


def test_report_of_nontrivial_density(E):
    report = is_exact(E("qd*q*q_xx"))
    assert report.euler_q == E("2*qd*q_xx + 2*qd_x*q_x + qd_xx*q")
    assert report.euler_qdagger == E("q*q_xx")
    assert report.constant_part == 0
    assert not report.is_trivial


def test_constant_density_is_not_trivial(E):
    report = is_exact(E("3"))
    assert report.euler.is_zero
    assert report.constant_part == Fraction(3)
    assert not report.is_trivial


def test_single_base_queries_reject_other_labels(E):
    with pytest.raises(MultiLabelError, match="restrict it first"):
        is_exact(E("q_x*q_y"))
    assert is_exact(E("q_y"), "y").is_trivial


def test_find_primitive_of_nontrivial_density(E):
    with pytest.raises(NotExactError) as info:
        find_primitive(E("q*q_xx"))
    assert info.value.report is not None
    assert not info.value.report.is_trivial


def test_cohomologous(E):
    assert cohomologous(E("q*q_xx"), E("-q_x^2"))
    assert not cohomologous(E("q*q_xx"), E("q_x^2"))
    assert cohomologous(E("qd*q_y"), E("-qd_y*q"), "y")


@pytest.mark.parametrize("integrand, u, expected", [
    ("q^2", JetVariable.q(), "1/3*q^3"),
    ("q*exp(q)", JetVariable.q(), "q*exp(q) - exp(q)"),
    ("sin(q)", JetVariable.q(), "-cos(q)"),
    ("q*cos(q)", JetVariable.q(), "q*sin(q) + cos(q)"),
    ("q_x*exp(q)*qd", JetVariable.q("x"), "1/2*q_x^2*exp(q)*qd"),
])
def test_antiderivative(E, integrand, u, expected):
    assert antiderivative(E(integrand), u) == E(expected)


@pytest.mark.parametrize("integrand", ["exp(q^2)", "exp(q)^2", "exp(q)*sin(q)"])
def test_unsupported_antiderivatives(E, integrand):
    with pytest.raises(UnsupportedAntiderivativeError):
        antiderivative(E(integrand), JetVariable.q())


def test_primitive_outside_supported_class_is_left_empty(E, caplog):
    density = total_derivative(E("exp(q)*sin(q)"), "x")
    report = is_exact(density, with_primitive=True)
    assert report.is_trivial
    assert report.primitive is None
    assert "No primitive constructed" in caplog.text
    with pytest.raises(UnsupportedAntiderivativeError):
        find_primitive(density)


@settings(deadline=None, max_examples=100)
@given(expressions(terms=3, atoms=False))
def test_primitive_inverts_total_derivative(e):
    d = total_derivative(e, "x")
    primitive = find_primitive(d)
    assert total_derivative(primitive, "x") == d
    assert (primitive - e).is_constant


@settings(deadline=None, max_examples=100)
@given(expressions(terms=2))
def test_total_derivatives_are_trivial(e):
    assert is_exact(total_derivative(e, "x")).is_trivial
