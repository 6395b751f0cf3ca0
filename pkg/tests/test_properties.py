"""Randomized invariants."""

from hypothesis import given, settings, strategies as st

from silc.afweyl import (
    AffineWeylElement, box_elements, min_lift, pij, sell, si_covers, si_leq, si_leq_translation,
)
from silc.gchar import GroupAlgebraElement, demazure_op, gch_demazure, verify_gch_translation
from silc.nildaha import LaurentCharacter, t_op
from silc.rootdata import build_cartan
from silc.silspath import e_op, enumerate_sils, eps, f_op, phi, t_shift, validate, wt

TYPES = [("A", 1), ("A", 2), ("C", 2)]
datum = st.sampled_from(TYPES).map(lambda t: build_cartan(*t))
SMALL = settings(max_examples=40, deadline=None)


@st.composite
def affine_elements(draw, d=None, bound=2):
    d = d or draw(datum)
    w = draw(st.sampled_from(d.enumerate_weyl_group()))
    xi = tuple(draw(st.integers(-bound, bound)) for _ in range(d.rank))
    return AffineWeylElement(w, xi)


@SMALL
@given(affine_elements(), affine_elements())
def test_group_law(x, y):
    if x.datum is not y.datum:
        return
    e = x * x.inverse()
    assert not any(e.trans) and e.fin.length == 0
    assert (x * y).inverse() == y.inverse() * x.inverse()


@SMALL
@given(st.data())
def test_projection_idempotent(data):
    d = data.draw(datum)
    x = data.draw(affine_elements(d))
    J = tuple(sorted(data.draw(st.sets(st.integers(1, d.rank)))))
    p = pij(x, J)
    assert pij(p, J) == p
    # x lies in the coset p (W_J)_af
    r = p.inverse() * x
    assert set(i + 1 for i in r.fin.word) <= set(J)
    assert all(c == 0 or k + 1 in J for k, c in enumerate(r.trans))


@SMALL
@given(st.data())
def test_covers_raise_sell_by_one(data):
    d = data.draw(datum)
    J = tuple(sorted(data.draw(st.sets(st.integers(1, d.rank)))))
    x = pij(data.draw(affine_elements(d)), J)
    for _, y in si_covers(x, J):
        assert sell(y) == sell(x) + 1
        assert si_leq(x, y, J)


@SMALL
@given(st.data())
def test_two_order_tests_agree(data):
    d = data.draw(datum)
    x = data.draw(affine_elements(d, bound=2))
    y = data.draw(affine_elements(d, bound=2))
    assert si_leq(x, y) == si_leq_translation(x, y)


@SMALL
@given(st.data())
def test_min_lift_is_a_lift_above_x(data):
    d = data.draw(datum)
    J = tuple(sorted(data.draw(st.sets(st.integers(1, d.rank)))))
    x = data.draw(affine_elements(d, bound=1))
    ys = [y for y in box_elements(d, J, 1) if si_leq(pij(x, J), y, J)]
    if not ys:
        return
    y = data.draw(st.sampled_from(ys))
    m = min_lift(x, y, J)
    assert pij(m, J) == y
    assert si_leq(x, m)


PATHS = {}


def paths_of(t, lam, q):
    key = (t, lam, q)
    if key not in PATHS:
        d = build_cartan(*t)
        PATHS[key] = enumerate_sils(d, lam, None, q)
    return PATHS[key]


SHAPES = [(("A", 1), (2,)), (("A", 2), (1, 1)), (("C", 2), (1, 0)), (("C", 2), (0, 1))]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SHAPES), st.data())
def test_root_operators_are_inverse(shape, data):
    t, lam = shape
    paths = paths_of(t, lam, -1)
    p = data.draw(st.sampled_from(paths))
    i = data.draw(st.integers(0, len(lam)))
    f = f_op(i, p)
    if f is not None:
        assert validate(f)
        assert e_op(i, f) == p
        assert phi(i, f) == phi(i, p) - 1 and eps(i, f) == eps(i, p) + 1
    e = e_op(i, p)
    if e is not None:
        assert f_op(i, e) == p


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SHAPES), st.data())
def test_translation_commutes_with_operators(shape, data):
    t, lam = shape
    p = data.draw(st.sampled_from(paths_of(t, lam, -1)))
    xi = tuple(data.draw(st.integers(-2, 2)) for _ in lam)
    i = data.draw(st.integers(0, len(lam)))
    T = t_shift(xi, p)
    f = f_op(i, p)
    assert f_op(i, T) == (None if f is None else t_shift(xi, f))
    assert wt(T).finite == wt(p).finite
    assert wt(T).delta == wt(p).delta - sum(a * b for a, b in zip(lam, xi))


@SMALL
@given(st.data())
def test_gch_translation_random(data):
    d = build_cartan(*data.draw(st.sampled_from(TYPES[:2])))
    lam = tuple(data.draw(st.integers(0, 1)) for _ in range(d.rank))
    if not any(lam):
        return
    x = data.draw(affine_elements(d, bound=1))
    xi = tuple(data.draw(st.integers(-1, 2)) for _ in range(d.rank))
    assert verify_gch_translation(d, lam, x, xi, -1).ok


@SMALL
@given(st.data())
def test_character_window_is_monotone(data):
    d = build_cartan("A", 1)
    k = data.draw(st.integers(1, 3))
    lam = (data.draw(st.integers(1, 2)),)
    wide = gch_demazure(d, lam, None, -k - 1)
    narrow = gch_demazure(d, lam, None, -k)
    assert wide.truncate(-k).terms == narrow.terms


@SMALL
@given(st.data())
def test_demazure_idempotent(data):
    d = data.draw(datum)
    nu = tuple(data.draw(st.integers(-3, 3)) for _ in range(d.rank))
    i = data.draw(st.integers(1, d.rank))
    f = demazure_op(d, i, GroupAlgebraElement.monomial(nu))
    assert demazure_op(d, i, f) == f


@SMALL
@given(st.data())
def test_nil_hecke_quadratic(data):
    d = data.draw(datum)
    nu = tuple(data.draw(st.integers(-3, 3)) for _ in range(d.rank))
    k = data.draw(st.integers(-2, 2))
    i = data.draw(st.integers(0, d.rank))
    f = LaurentCharacter.monomial(nu, k)
    g = t_op(d, i, f)
    assert t_op(d, i, g + f).is_zero()
