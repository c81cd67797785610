from fractions import Fraction

import pytest
from hypothesis import given, settings

from pyschouten.brackets import schouten_old
from pyschouten.dsl import parse_expression, parse_functional, render_text
from pyschouten.errors import InhomogeneousError
from pyschouten.geometric import (CompositeExpression, CompositeTerm, DeferredFactor, DeferredRecord, ShiftLabel,
                                  canonicalize_composite, composite_equal, evaluate_terminal, expand_jacobi_geometric,
                                  geometric_bracket, jacobiator_geometric, lift, signature_count)

from strategies import functionals


def factor(source, base="x1", *records):
    return DeferredFactor(parse_expression(source), base, tuple(records))


def single(scalar, *factors):
    return CompositeExpression((CompositeTerm(Fraction(scalar), tuple(factors)),))


@pytest.fixture
def small_bracket():
    return geometric_bracket(lift(parse_functional("int qd*q_x dx")), lift(parse_functional("int qd*q dx")))


def test_lift():
    lifted = lift(parse_functional("int qd*q_x dx"))
    assert len(lifted) == 1
    assert lifted.applications == 0
    assert lifted.grading == 1
    assert lift(parse_functional("int 0 dx")).is_empty


def test_bracket_defers_derivatives(small_bracket):
    assert render_text(small_bracket) == "+1 [-d/dy1](qd) (q)\n-1 (q_x) (qd)"
    assert small_bracket.applications == 1
    assert small_bracket.depth == 1


def test_terminal_evaluation(small_bracket, E):
    assert evaluate_terminal(small_bracket) == E("-qd_x*q - qd*q_x")


def test_nested_brackets_number_their_labels(triple):
    F, G, H = (lift(X) for X in triple)
    inner = geometric_bracket(G, H)
    outer = geometric_bracket(F, inner)
    assert (outer.applications, outer.depth) == (2, 2)
    names = {r.label.name for t in outer.terms for f in t.factors for r in f.deferred}
    assert names <= {"y1", "z1", "y2", "z2"}
    assert {"y2", "z2"} & names


def test_bracket_with_empty_argument(triple):
    result = geometric_bracket(CompositeExpression(), lift(triple[0]))
    assert result.is_empty
    assert result.applications == 1


def test_shift_label_renumbering():
    assert ShiftLabel("y1", 1).renumbered(2) == ShiftLabel("y3", 1)
    assert ShiftLabel("z12", 2).renumbered(0) == ShiftLabel("z12", 2)


def test_canonical_form_makes_cores_monic():
    assert composite_equal(single(1, factor("2*q")), single(2, factor("q")))
    assert not composite_equal(single(1, factor("2*q")), single(1, factor("q")))


def test_canonical_form_folds_record_signs():
    minus = DeferredRecord(-1, 1, ShiftLabel("y1", 1))
    plus = DeferredRecord(1, 1, ShiftLabel("y1", 1))
    assert composite_equal(single(1, factor("q", "x1", minus)), single(-1, factor("q", "x1", plus)))


def test_canonical_form_merges_records_per_level():
    split = factor("q", "x1", DeferredRecord(1, 1, ShiftLabel("y1", 1)), DeferredRecord(1, 2, ShiftLabel("z1", 1)))
    merged = factor("q", "x1", DeferredRecord(1, 3, ShiftLabel("y1", 1)))
    assert composite_equal(single(1, split), single(1, merged))


def test_canonical_form_erases_label_names():
    y = factor("q", "x1", DeferredRecord(1, 1, ShiftLabel("y1", 1)))
    z = factor("q", "x1", DeferredRecord(1, 1, ShiftLabel("z4", 1)))
    assert composite_equal(single(1, y), single(1, z))


def test_canonical_form_relabels_levels():
    first = single(1, factor("q", "x1", DeferredRecord(1, 1, ShiftLabel("y1", 1))),
                   factor("q", "x2", DeferredRecord(1, 1, ShiftLabel("y2", 2))))
    second = single(1, factor("q", "x1", DeferredRecord(1, 1, ShiftLabel("y2", 2))),
                    factor("q", "x2", DeferredRecord(1, 1, ShiftLabel("y1", 1))))
    assert composite_equal(first, second)


def test_canonical_form_compacts_unused_levels():
    deep = single(1, factor("q", "x1", DeferredRecord(1, 2, ShiftLabel("z12", 2))), factor("qd", "x2"))
    shallow = single(1, factor("q", "x1", DeferredRecord(1, 2, ShiftLabel("y1", 1))), factor("qd", "x2"))
    assert composite_equal(deep, shallow)
    assert signature_count(deep + shallow) == 1
    assert canonicalize_composite(deep - shallow).is_empty


def test_koszul_sign_of_odd_factors():
    a, b = factor("qd", "x1"), factor("qd", "x2")
    assert composite_equal(single(1, a, b), single(-1, b, a))
    assert not composite_equal(single(1, a, b), single(1, b, a))
    assert canonicalize_composite(single(1, a, a)).is_empty


def test_canonicalize_merges_and_cancels():
    a, b = factor("q", "x1"), factor("qd", "x2")
    e = single(1, a, b) + single(3, a, b) - single(4, b, a)
    assert canonicalize_composite(e).is_empty
    assert len(canonicalize_composite(single(1, a, b) + single(1, b, a))) == 1
    assert signature_count(single(1, a, b) + single(1, b, a)) == 1


def test_mixed_grading_is_rejected():
    e = single(1, factor("qd")) + single(1, factor("q"))
    with pytest.raises(InhomogeneousError):
        e.grading


def test_geometric_jacobi_identity(triple):
    expansion = expand_jacobi_geometric(*triple)
    counts = expansion.counts()
    assert counts["lhs"] == 8
    assert counts["rhs"] == 20
    assert counts["rhs_signatures"] == 14
    assert counts["rhs_canonical"] == 8
    assert expansion.residual().is_empty
    assert jacobiator_geometric(*triple).is_empty
    assert render_text(jacobiator_geometric(*triple)) == "0 (empty composite)"


@pytest.mark.parametrize("first, second", [(0, 1), (1, 2), (0, 2)])
def test_terminal_evaluation_matches_old_bracket(triple, first, second):
    F, G = triple[first], triple[second]
    assert evaluate_terminal(geometric_bracket(lift(F), lift(G))) == schouten_old(F, G).density


@settings(deadline=None, max_examples=25)
@given(functionals(), functionals())
def test_terminal_oracle(F, G):
    assert evaluate_terminal(geometric_bracket(lift(F), lift(G))) == schouten_old(F, G).density


@settings(deadline=None, max_examples=25)
@given(*[functionals(terms=2, max_order=2, atoms=True)] * 3)
def test_geometric_jacobi_identity_on_random_one_vectors(F, G, H):
    assert jacobiator_geometric(F, G, H).is_empty
