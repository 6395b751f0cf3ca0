import pytest

from silc.afweyl import (
    AffineRoot, act_affine_root, bruhat_leq, element_of, identity, in_parabolic_quotient,
    length, lift_contains, min_lift, pij, reflection, sell, si_covers, si_leq,
    si_leq_translation, translation,
)
from silc.errors import InputError
from silc.oracles import BruteGraph, brute_lifts, is_quotient_member
from silc.rootdata import build_cartan

A1 = build_cartan("A", 1)
A2 = build_cartan("A", 2)


def el(d, word, trans):
    return element_of(d, word, trans)


def test_affine_root_action():
    a = AffineRoot((1,), 0)
    assert act_affine_root(identity(A1), a) == a
    assert act_affine_root(translation(A1, (1,)), a) == AffineRoot((1,), -2)
    assert act_affine_root(el(A1, [1], [0]), AffineRoot((-1,), 1)) == AffineRoot((1,), 1)


def test_affine_reflection():
    assert reflection(A1, AffineRoot((1,), 0)) == el(A1, [1], [0])
    assert reflection(A1, AffineRoot((-1,), 1)) == el(A1, [1], [-1])
    with pytest.raises(InputError):
        reflection(A1, AffineRoot((0,), 1))


def test_sell_and_length():
    assert sell(identity(A1)) == 0
    assert sell(el(A1, [1], [1])) == 3
    assert sell(translation(A1, (-1,))) == -2
    assert length(translation(A1, (-1,))) == 2
    assert length(el(A1, [1], [-1])) == 1
    # sum over positive roots of |<alpha, alpha_1^vee>| = 2 + 1 + 1
    assert length(translation(A2, (1, 0))) == 4


def test_bruhat():
    e = identity(A1)
    s = el(A1, [1], [0])
    t = translation(A1, (-1,))
    assert bruhat_leq(e, t)
    assert bruhat_leq(s, t)
    assert not bruhat_leq(t, s)


def test_covers_a1():
    e = identity(A1)
    s = el(A1, [1], [0])
    assert [(b, y) for b, y in si_covers(e, ())] == [(AffineRoot((1,), 0), s)]
    assert [(b, y) for b, y in si_covers(s, ())] == [(AffineRoot((-1,), 1), translation(A1, (1,)))]


def test_covers_stay_in_quotient():
    for b, y in si_covers(identity(A2), (1,)):
        assert in_parabolic_quotient(y, (1,))


def test_si_leq_examples():
    e = identity(A1)
    assert si_leq(e, e)
    assert si_leq(e, translation(A1, (1,)))
    assert si_leq(e, el(A1, [1], [1]))
    assert si_leq_translation(e, el(A1, [1], [0]))
    assert not si_leq_translation(el(A1, [1], [0]), e)
    # projected translations: bigger translation sits higher
    J = (1,)
    lo, hi = pij(translation(A2, (0, 0)), J), pij(translation(A2, (0, 1)), J)
    assert si_leq(lo, hi, J)
    assert not si_leq(hi, lo, J)


def test_si_leq_rejects_non_members():
    with pytest.raises(InputError):
        si_leq(el(A2, [1], [0]), identity(A2), (1,))


def test_pij_examples():
    e = identity(A1)
    assert pij(translation(A1, (1,)), (1,)) == e
    assert pij(el(A2, [1], [0, 0]), (1,)) == identity(A2)
    assert pij(el(A2, [2, 1], [0, 0]), (1,)) == el(A2, [2], [0, 0])
    x = el(A2, [2, 1], [1, 2])
    assert pij(x, ()) == x


def test_lift_membership():
    e = identity(A2)
    assert lift_contains(el(A2, [1], [1, 0]), e, (1,))
    assert not lift_contains(el(A2, [2], [0, 0]), e, (1,))


def test_min_lift_trivial_J():
    e = identity(A1)
    y = el(A1, [1], [1])
    assert min_lift(e, y, ()) == y


def test_quotient_membership_agrees_with_definition():
    for d in (A1, A2, build_cartan("C", 2)):
        for J in [(), (1,), tuple(range(1, d.rank + 1))]:
            J0 = [j - 1 for j in J]
            for w in d.enumerate_weyl_group():
                for xi in [(0,) * d.rank, (1,) * d.rank, tuple(range(d.rank)), tuple(-v for v in range(d.rank))]:
                    x = el(d, [i + 1 for i in w.word], xi)
                    assert in_parabolic_quotient(x, J) == is_quotient_member(x, J0)


def test_order_against_graph_oracle():
    for J in [(), (1,)]:
        G = BruteGraph(A2, [j - 1 for j in J], -2, 2)
        inner = [x for x in G.nodes if all(-1 <= c <= 1 for c in x.trans)]
        for x in inner:
            for y in inner:
                if abs(sell(x) - sell(y)) <= 3:
                    assert si_leq(x, y, J) == G.leq(x, y), (x, y, J)


def test_min_lift_against_brute_force():
    J = (1,)
    e = identity(A2)
    for y in [pij(el(A2, [2], [0, 0]), J), pij(el(A2, [2], [1, 1]), J), pij(translation(A2, (0, 1)), J)]:
        for x in [e, el(A2, [1], [0, 0]), el(A2, [1, 2], [0, 1])]:
            if not si_leq(pij(x, J), y, J):
                continue
            m = min_lift(x, y, J)
            lifts = [z for z in brute_lifts(y, [0], 3) if si_leq(x, z)]
            assert m in lifts
            assert all(si_leq(m, z) for z in lifts)
