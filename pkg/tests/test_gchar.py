import pytest

from silc.afweyl import element_of, identity, translation
from silc.errors import InexactDivision
from silc.gchar import (
    GradedCharacter, GroupAlgebraElement, demazure_op, demazure_word, divide_one_minus,
    finite_demazure_char, gch_demazure, verify_gch_translation, weyl_character,
)
from silc.rootdata import build_cartan

A1 = build_cartan("A", 1)
A2 = build_cartan("A", 2)
M = GroupAlgebraElement.monomial


def test_gch_a1_straight():
    g = gch_demazure(A1, (1,), identity(A1), -1)
    assert g.terms == {((1,), 0): 1, ((-1,), 0): 1, ((1,), -1): 1, ((-1,), -1): 1}
    assert gch_demazure(A1, (1,), element_of(A1, [1], [0]), 0).terms == {((-1,), 0): 1}


def test_graded_arithmetic():
    a = GradedCharacter(-2, {((1,), 0): 1, ((0,), -3): 5})
    assert a.terms == {((1,), 0): 1}
    assert (a + a).terms == {((1,), 0): 2}
    assert (a - a).terms == {}
    assert a.shift_q(-1).q_min == -3


def test_demazure_operator_values():
    assert demazure_op(A1, 1, M((1,))) == M((1,)) + M((-1,))
    assert demazure_op(A1, 1, M((0,))) == M((0,))
    assert demazure_op(A1, 1, M((-1,))) == GroupAlgebraElement()


def test_weyl_characters():
    assert weyl_character(A2, (1, 1)).dimension() == 8
    assert finite_demazure_char(A2.w0, (1, 1)) == M((1, 1))
    assert finite_demazure_char(A2.identity, (1, 1)) == weyl_character(A2, (1, 1))
    # in rank one s_1 is the longest element
    assert finite_demazure_char(A1.simple[0], (1,)) == M((1,))
    assert finite_demazure_char(A1.identity, (1,)) == M((1,)) + M((-1,))


def test_divide_exact_and_inexact():
    # (1 - e^beta) / (1 - e^beta) = 1
    assert divide_one_minus({((0,), 0): 1, ((2,), 0): -1}, (2,)) == {((0,), 0): 1}
    with pytest.raises(InexactDivision):
        divide_one_minus({((0,), 0): 1}, (2,))


def test_translation_identity_examples():
    assert verify_gch_translation(A1, (1,), identity(A1), (0,), -2).ok
    r = verify_gch_translation(A1, (1,), identity(A1), (1,), -2)
    assert r.ok and r.details["shift"] == -1
    r = verify_gch_translation(A2, (1, 0), element_of(A2, [1], [0, 0]), (1, 1), -2)
    assert r.ok and r.details["shift"] == -1


def test_translation_moves_character():
    base = gch_demazure(A1, (1,), identity(A1), -3)
    moved = gch_demazure(A1, (1,), translation(A1, (1,)), -2)
    assert moved.terms == base.shift_q(-1).truncate(-2).terms


def test_demazure_word_matches_element():
    w = A2.from_word([0, 1])
    assert demazure_word(A2, [1, 2], M((1, 1))) == demazure_op(A2, 1, demazure_op(A2, 2, M((1, 1))))
    assert w.length == 2
