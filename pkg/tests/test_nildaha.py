import pytest

from silc.errors import InputError
from silc.nildaha import (
    DELTA_EXP, LaurentCharacter, TranslationKClass, alpha, bfu_translation_action, bfu_twist,
    braid_order, e_op_mult, expand_classes, s0_act, t_op, verify_nildaha,
)
from silc.rootdata import build_cartan

A1 = build_cartan("A", 1)
L = LaurentCharacter


def test_affine_reflection_twist():
    assert s0_act(A1, L.monomial((1,))) == L.monomial((-1,), DELTA_EXP)
    assert alpha(A1, 0) == ((-2,), DELTA_EXP)


def test_t_operator_values():
    assert t_op(A1, 1, L.one(1)).is_zero()
    # D_1 e^w = e^w + e^-w, so T_1 e^w = e^-w
    assert t_op(A1, 1, L.monomial((1,))) == L.monomial((-1,))


def test_lattice_action():
    f = L.monomial((2,), 1)
    assert e_op_mult((1,), f) == L.monomial((3,), 1)
    assert e_op_mult((0,), f) == f


def test_braid_orders():
    assert braid_order(build_cartan("A", 2), 1, 2) == 3
    assert braid_order(build_cartan("C", 2), 1, 2) == 4
    assert braid_order(build_cartan("G", 2), 1, 2) == 6
    assert braid_order(A1, 0, 1) is None


@pytest.mark.parametrize("t", [("A", 1), ("A", 2), ("C", 2), ("G", 2)])
def test_relations_hold(t):
    r = verify_nildaha(build_cartan(*t), samples=60, seed=3)
    assert r.ok, r.witness
    assert r.details["failed"] == []


@pytest.mark.parametrize("t", [("A", 1), ("A", 2), ("C", 2)])
def test_corruption_is_detected(t):
    r = verify_nildaha(build_cartan(*t), samples=60, seed=3, corrupt=True)
    assert not r.ok
    assert "cross[0]" in r.details["failed"]


def test_translation_action_finite_index():
    c = TranslationKClass("plain", (1,), (0,), (0,))
    out = bfu_translation_action(A1, 1, c)
    assert out == {c: L.one(1)}


def test_translation_action_affine_index():
    c = TranslationKClass("plain", (1,), (0,), (1,))
    out = bfu_translation_action(A1, 0, c)
    assert len(out) == 2
    assert {k.tag for k in out} == {"plain", "s0"}
    assert all(k.character_twist == (0,) for k in out)


def test_s0_tag_rejected():
    with pytest.raises(InputError):
        bfu_translation_action(A1, 0, TranslationKClass("s0", (0,), (0,), (0,)))
    with pytest.raises(InputError):
        TranslationKClass("other", (0,), (0,), (0,))


def test_twist_and_expansion():
    c = TranslationKClass("plain", (0,), (0,), (2,))
    assert bfu_twist((1,), c).character_twist == (1,)
    combo = {c: L.monomial((1,), 0) + L.monomial((0,), 1)}
    assert expand_classes(combo) == {(bfu_twist((1,), c), 0): 1, (c, 1): 1}
