import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pyschouten.brackets import (bv_laplacian, check_zimes, delta_squared, evolutionary_commutator, jacobi_sign,
                                 jacobiator, laplacian_shortcut, prolonged_action, schouten_multibase, schouten_old)
from pyschouten.calculus import total_derivative
from pyschouten.cohomology import cohomologous, is_exact
from pyschouten.dsl import parse_functional
from pyschouten.errors import MalformedExpressionError
from pyschouten.expr import Functional
from pyschouten.reference import fixtures, residual_primitive

from strategies import functionals

graded_functionals = st.integers(min_value=0, max_value=3).flatmap(lambda k: functionals(grading=k))


@pytest.mark.parametrize("first, second, expected", [
    (0, 1, fixtures.BRACKET_FG),
    (1, 2, fixtures.BRACKET_GH),
    (0, 2, fixtures.BRACKET_FH),
])
def test_golden_brackets(triple, first, second, expected):
    result = schouten_old(triple[first], triple[second])
    assert result.density == parse_functional(expected).density
    assert result.grading == 1


def test_bracket_of_evolutionary_fields(E):
    F, G = parse_functional("int q*qd dx"), parse_functional("int q_x*qd dx")
    assert schouten_old(F, G).density == E("qd*q_x + q*qd_x")


def test_bracket_lives_on_second_base(E):
    result = schouten_multibase(parse_functional("int qd*q_x dx"), parse_functional("int qd_x*q dx"))
    assert result.base == "y"
    assert result.density == E("qd_x*q_y - qd_y*q_x")
    assert result.rebase("x").is_zero


def test_naive_laplacian(triple, E):
    F, G, H = triple
    assert bv_laplacian(F).density == E("2*q_xx")
    assert bv_laplacian(F).grading == 0
    assert is_exact(bv_laplacian(F).density).is_trivial
    assert is_exact(bv_laplacian(H).density).is_trivial
    assert laplacian_shortcut(F).density == E("q_xx")


def test_laplacian_of_even_functional_vanishes():
    assert bv_laplacian(parse_functional("int q_x^2*exp(q) dx")).is_zero


def test_jacobi_sign(triple):
    F, G, H = triple
    assert jacobi_sign(F, G) == 1
    assert jacobi_sign(parse_functional("int qd*qd_x dx"), parse_functional("int qd*qd_x dx")) == -1
    assert jacobi_sign(parse_functional("int q dx"), parse_functional("int q_x dx")) == -1


def test_jacobi_residual_is_trivial_but_nonzero(triple):
    residual = jacobiator(*triple)
    assert not residual.is_zero
    assert is_exact(residual.density).is_trivial
    assert cohomologous(residual.density, -total_derivative(residual_primitive(), "x"))


def test_multibase_jacobi_agrees_on_the_diagonal(triple):
    single = jacobiator(*triple)
    multibase = jacobiator(*triple, mode="multibase")
    assert multibase.density.labels() <= {"x", "y", "z"}
    assert cohomologous(multibase.rebase("x").density, single.density)


def test_jacobiator_rejects_unknown_mode(triple):
    with pytest.raises(ValueError, match="Unknown Jacobi mode"):
        jacobiator(*triple, mode="geometric")


def test_zimes_counterexample(triple, E):
    F, G, H = triple
    report = check_zimes(F, H)
    assert report.rhs_density.is_zero
    assert not report.holds
    assert not report.exactly_equal
    assert cohomologous(report.lhs_density, E(fixtures.ZIMES_LHS_CLASS))


def test_delta_squared_of_laplacian_free_functional():
    report = delta_squared(parse_functional("int qd*q_x dx"))
    assert report.exactly_equal
    assert report.holds


def test_zimes_on_first_pair_is_consistent(triple):
    F, G, H = triple
    report = check_zimes(F, G)
    assert report.difference == report.lhs_density - report.rhs_density
    assert report.holds == is_exact(report.difference).is_trivial
    assert report.base == G.base


def test_zimes_on_constant_linear_functionals():
    q = parse_functional("int q dx")
    report = check_zimes(q, q)
    assert report.lhs_density.is_zero
    assert report.rhs_density.is_zero
    assert report.holds


@pytest.mark.parametrize("source", ["int q dx", "int qd*q*q_xx dx"])
def test_delta_squared_vanishes_exactly(source):
    report = delta_squared(parse_functional(source))
    assert report.lhs_density.is_zero
    assert report.exactly_equal


def test_delta_squared_of_two_vector(E):
    F = parse_functional("int qd*qd_x*q*q_x dx")
    assert bv_laplacian(F).density == E("-qd_xx*q")
    report = delta_squared(F)
    assert report.exactly_equal
    assert report.holds


@pytest.mark.parametrize("X, Y", [("q_x", "q_x"), ("q", "q_x"), ("q_xx", "q^2")])
def test_bracket_matches_commutator(E, X, Y):
    assert evolutionary_commutator(E(X), E(Y)).holds


def test_prolonged_action(E):
    assert prolonged_action(E("q_xx"), E("q^2")) == E("2*q*q_xx")
    assert prolonged_action(E("q^2"), E("q_xx")) == E("2*q*q_xx + 2*q_x^2")


@pytest.mark.parametrize("characteristic", ["qd", "q2", "q_y"])
def test_commutator_rejects_non_evolutionary_input(E, characteristic):
    with pytest.raises(MalformedExpressionError):
        evolutionary_commutator(E(characteristic), E("q"))


@settings(deadline=None, max_examples=100)
@given(graded_functionals, graded_functionals)
def test_bracket_is_shifted_antisymmetric(F, G):
    assert cohomologous(schouten_old(F, G).density, -schouten_old(G, F).density.scale(jacobi_sign(F, G)))


@settings(deadline=None, max_examples=25)
@given(functionals(grading=2, terms=1, max_order=1, atoms=False))
def test_laplacian_shortcut_is_cohomologous(F):
    assert cohomologous(bv_laplacian(F).density, laplacian_shortcut(F).density)


scalars = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@settings(deadline=None, max_examples=50)
@given(functionals(), functionals(), graded_functionals, scalars, scalars)
def test_bracket_is_bilinear(F, G, H, a, b):
    combined = Functional(F.density.scale(a) + G.density.scale(b), F.base)
    expected = schouten_old(F, H).density.scale(a) + schouten_old(G, H).density.scale(b)
    assert schouten_old(combined, H).density == expected
    swapped = schouten_old(H, F).density.scale(a) + schouten_old(H, G).density.scale(b)
    assert schouten_old(H, combined).density == swapped


one_vectors = functionals(terms=2, max_order=2, atoms=False)


@settings(deadline=None, max_examples=25)
@given(one_vectors, one_vectors, one_vectors)
def test_jacobi_residual_of_one_vectors_is_trivial(F, G, H):
    assert is_exact(jacobiator(F, G, H).density).is_trivial


@settings(deadline=None, max_examples=25)
@given(one_vectors, one_vectors, one_vectors)
def test_multibase_residual_restricts_to_single_base_class(F, G, H):
    single = jacobiator(F, G, H).density
    multibase = jacobiator(F, G, H, mode="multibase")
    assert cohomologous(multibase.rebase("x").density, single)
