from fractions import Fraction

import pytest

from silc.afweyl import element_of, identity, translation
from silc.errors import InputError
from silc.oracles import brute_sils
from silc.rootdata import build_cartan
from silc.silspath import (
    AffineWeight, SiLSPath, crystal_component_reps, e_op, enumerate_sils, eps, f_op,
    h_function, m_value, par_elements, par_to_path, path_to_par, phi,
    simple_affine_root_weight, straight_path, t_shift, validate, wt,
)

A1 = build_cartan("A", 1)
A2 = build_cartan("A", 2)
F = Fraction


def path(d, lam, dirs, breaks):
    return SiLSPath(lam, dirs, [F(b) for b in breaks])


def test_validate_examples():
    e = identity(A1)
    assert validate(straight_path(A1, (1,)))
    assert validate(path(A1, (2,), [translation(A1, (1,)), e], [0, F(1, 2), 1]))
    assert not validate(path(A1, (1,), [element_of(A1, [1], [0]), e], [0, F(1, 2), 1]))


def test_bad_breaks_rejected():
    with pytest.raises(InputError):
        validate(path(A1, (1,), [identity(A1)], [0, F(1, 2)]))


def test_height_function():
    pi = straight_path(A1, (1,))
    assert h_function(pi, 1) == [(0, 0), (1, 1)]
    assert m_value(pi, 1) == 0
    assert h_function(pi, 0) == [(0, 0), (1, -1)]
    assert m_value(pi, 0) == -1


def test_root_operators_on_straight_path():
    pi = straight_path(A1, (1,))
    assert f_op(1, pi) == straight_path(A1, (1,), element_of(A1, [1], [0]))
    assert e_op(1, pi) is None
    up = e_op(0, pi)
    assert up is not None and len(up.directions) == 1
    assert wt(up) == wt(pi) + simple_affine_root_weight(A1, 0)


def test_weight_and_shift():
    pi = straight_path(A1, (1,), translation(A1, (1,)))
    assert wt(pi) == AffineWeight((1,), -1)
    shifted = t_shift((1,), straight_path(A1, (1,)))
    assert shifted == pi


def test_par_elements():
    assert par_elements((1,), 3) == [((),)]
    assert par_elements((2,), 2) == [((),), ((1,),), ((2,),)]
    # every part would need length below 1
    assert par_elements((1, 1), 1) == [((), ())]


def test_par_to_path():
    e = identity(A1)
    assert par_to_path(A1, ((),), (1,)) == straight_path(A1, (1,))
    p1 = par_to_path(A1, ((1,),), (2,))
    assert p1 == path(A1, (2,), [translation(A1, (1,)), e], [0, F(1, 2), 1])
    assert validate(p1)
    p2 = par_to_path(A1, ((2,),), (2,))
    assert p2 == path(A1, (2,), [translation(A1, (2,)), e], [0, F(1, 2), 1])
    assert path_to_par(p2) == ((2,),)


def test_component_reps():
    assert list(crystal_component_reps(A1, (1,), -3)) == [((),)]
    reps = crystal_component_reps(A1, (2,), -2)
    assert len(set(reps.values())) == 3
    assert all(validate(p) for p in reps.values())


def test_enumerate_examples():
    e = identity(A1)
    s = element_of(A1, [1], [0])
    assert enumerate_sils(A1, (1,), e, 0) == sorted(
        [straight_path(A1, (1,)), straight_path(A1, (1,), s)], key=SiLSPath.sort_key)
    got = enumerate_sils(A1, (1,), e, -1)
    assert sorted((wt(p).finite, wt(p).delta) for p in got) == [((-1,), -1), ((-1,), 0), ((1,), -1), ((1,), 0)]
    assert enumerate_sils(A1, (1,), s, 0) == [straight_path(A1, (1,), s)]


def test_enumerate_rejects_bad_shape():
    with pytest.raises(InputError):
        enumerate_sils(A1, (-1,), identity(A1), 0)


@pytest.mark.parametrize("d,lam,q", [(A1, (1,), -2), (A1, (3,), -1), (A2, (1, 0), -2), (A2, (0, 2), -1)])
def test_enumerate_matches_brute_force(d, lam, q):
    fast = {(p.directions, p.breaks) for p in enumerate_sils(d, lam, identity(d), q)}
    assert fast == brute_sils(d, lam, q)


def test_phi_eps_on_enumeration():
    for p in enumerate_sils(A2, (1, 1), identity(A2), -1):
        for i in range(3):
            assert phi(i, p) >= 0 and eps(i, p) >= 0
