import logging

import pytest
from hypothesis import given, settings

from pyschouten.calculus import euler, euler_all, highest_order, iterated_total_derivative, total_derivative
from pyschouten.errors import InhomogeneousError, MalformedExpressionError
from pyschouten.expr import FieldKind, JetVariable, MultiIndex, Side
from pyschouten.reference.fixtures import EULER_TABLE

from strategies import expressions

q, qd = JetVariable.q, JetVariable.qd


@pytest.mark.parametrize("source, expected", [
    ("q", "q_x"),
    ("qd*q", "qd_x*q + qd*q_x"),
    ("q_x^2", "2*q_x*q_xx"),
    ("exp(q)", "q_x*exp(q)"),
    ("sin(q_x)*qd", "q_xx*cos(q_x)*qd + sin(q_x)*qd_x"),
    ("7", "0"),
])
def test_total_derivative(E, source, expected):
    assert total_derivative(E(source), "x") == E(expected)


def test_total_derivative_in_other_label(E):
    assert total_derivative(E("q_x*qd"), "y") == E("q_xy*qd + q_x*qd_y")
    with pytest.raises(MalformedExpressionError):
        total_derivative(E("q"), "1")


def test_iterated_total_derivative(E):
    mi = MultiIndex({"x": 2, "y": 1})
    assert iterated_total_derivative(E("q"), mi) == E("q_xxy")
    assert iterated_total_derivative(E("q"), MultiIndex({"x": 3}), signed=True) == E("-q_xxx")
    assert iterated_total_derivative(E("q"), None) == E("q")


@pytest.mark.parametrize("density, field, expected", EULER_TABLE)
def test_euler_table(E, density, field, expected):
    kind = FieldKind.ODD if field == "qd" else FieldKind.EVEN
    assert euler(E(density), kind) == E(expected)


def test_euler_of_lagrangian(E):
    # q_x^2/2 - q^4/4 gives the static nonlinear wave operator
    assert euler(E("1/2*q_x^2 - 1/4*q^4"), FieldKind.EVEN) == E("-q_xx - q^3")


def test_euler_respects_field_index(E):
    density = E("qd*q2_x + qd2*q")
    assert euler(density, FieldKind.EVEN, 2) == E("-qd_x")
    assert euler(density, FieldKind.ODD, 2) == E("q")
    assert euler(density, FieldKind.EVEN, 3).is_zero


def test_euler_side_for_odd_fields(E):
    density = E("qd*qd_x*q")
    left = euler(density, FieldKind.ODD, side=Side.LEFT)
    right = euler(density, FieldKind.ODD, side=Side.RIGHT)
    assert right == -left


def test_euler_is_label_aware(E):
    assert euler(E("q_y*q_x"), FieldKind.EVEN) == E("-2*q_xy")


def test_euler_all(E):
    result = euler_all(E("qd*q*q_xx"))
    assert set(result.by_field) == {(FieldKind.EVEN, 1), (FieldKind.ODD, 1)}
    assert result.get(FieldKind.ODD) == E("q*q_xx")
    assert result.get(FieldKind.ODD, 2).is_zero
    assert not result.is_zero
    assert euler_all(E("q_x")).is_zero


def test_highest_order(E):
    assert highest_order(E("q_xxx*qd_y + exp(q_xy)"), "x") == 3
    assert highest_order(E("q"), "y") == 0


def test_odd_degree_of_inhomogeneous_density(E):
    with pytest.raises(InhomogeneousError):
        E("qd*q + q").odd_degree


@settings(deadline=None, max_examples=100)
@given(expressions(terms=2))
def test_euler_annihilates_total_derivatives(e):
    d = total_derivative(e, "x")
    assert euler_all(d).is_zero


@settings(deadline=None, max_examples=100)
@given(expressions(terms=2, odd_degree=2, atoms=False))
def test_sides_differ_by_degree_sign(e):
    # k odd factors: moving one to the front versus the back differs by (-1)^(k-1)
    assert euler(e, FieldKind.ODD, side=Side.RIGHT) == -euler(e, FieldKind.ODD, side=Side.LEFT)


@settings(deadline=None, max_examples=100)
@given(expressions(terms=2))
def test_total_derivatives_commute(e):
    assert total_derivative(total_derivative(e, "x"), "y") == total_derivative(total_derivative(e, "y"), "x")


@pytest.mark.parametrize("variable, label, lowered", [
    (q(), "x", None),
    (q("x"), "x", q()),
    (q("x", "x"), "x", q("x")),
    (q("x", "y"), "x", q("y")),
    (q("x", "x"), "y", None),
    (qd("x"), "x", qd()),
    (qd(), "y", None),
])
def test_partial_commutes_with_total_derivative_up_to_lowering(E, variable, label, lowered):
    e = E("qd*q_xx*exp(q_x) + q_y*qd_x*q^2 + sin(q_xy)*qd_y")
    commutator = total_derivative(e, label).partial(variable) - total_derivative(e.partial(variable), label)
    assert commutator == (e.partial(lowered) if lowered is not None else 0)


@settings(deadline=None, max_examples=100)
@given(expressions(terms=3, labels=("x", "y")))
def test_partial_by_q_commutes_with_total_derivative(e):
    assert total_derivative(e, "x").partial(q()) == total_derivative(e.partial(q()), "x")
    assert total_derivative(e, "y").partial(q("y")) - total_derivative(e.partial(q("y")), "y") == e.partial(q())


def test_term_counts_are_logged(E, caplog):
    with caplog.at_level(logging.DEBUG, logger="pyschouten.calculus"):
        euler(E("qd*q*q_xx"), FieldKind.EVEN)
    assert "Euler derivative by q1 of 1 terms has 3 terms" in caplog.text
    assert "D^2 took" in caplog.text
