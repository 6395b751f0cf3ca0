import pytest

from silc.afweyl import element_of, identity, parabolic_of_weight, pij, si_leq_translation, translation
from silc.errors import InputError
from silc.oracles import brute_standard
from silc.rootdata import build_cartan
from silc.silspath import enumerate_sils, straight_path
from silc.smt import (
    TensorPair, demazure_membership, deo, extremal_pair, find_defining_chain, is_defining_chain,
    is_standard, tensor_e, tensor_f, theta, theta_admissible, theta_domain,
    verify_dem_decomposition, verify_smt_iso,
)

A1 = build_cartan("A", 1)
A2 = build_cartan("A", 2)


def sp(d, lam, x=None):
    return straight_path(d, lam, x)


def test_tensor_rule_examples():
    pi = sp(A1, (1,))
    pair = TensorPair(pi, pi)
    s = element_of(A1, [1], [0])
    assert tensor_f(1, pair) == TensorPair(sp(A1, (1,), s), pi)
    assert tensor_e(1, pair) is None


def test_unknown_rule():
    pi = sp(A1, (1,))
    with pytest.raises(InputError):
        tensor_f(1, TensorPair(pi, pi), rule="other")


def test_standard_examples():
    e, s = identity(A1), element_of(A1, [1], [0])
    assert is_standard(TensorPair(sp(A1, (1,)), sp(A1, (2,))))
    assert is_standard(TensorPair(sp(A1, (1,), s), sp(A1, (1,))))
    assert not is_standard(TensorPair(sp(A1, (1,)), sp(A1, (1,), element_of(A1, [1], [1]))))


def test_defining_chain_example():
    e, s = identity(A1), element_of(A1, [1], [0])
    pair = TensorPair(sp(A1, (1,), s), sp(A1, (1,)))
    chain = find_defining_chain(pair)
    assert chain.elements == (s, e)
    assert is_defining_chain(pair, chain)
    assert find_defining_chain(TensorPair(sp(A1, (1,)), sp(A1, (1,), s))) is None


def test_deo_examples():
    e = identity(A1)
    t = translation(A1, (1,))
    assert deo(sp(A1, (1,), t), e) == t
    K = parabolic_of_weight(A2, (0, 1))
    eta = sp(A2, (0, 1), translation(A2, (0, 1)))
    assert eta.directions[0] == pij(translation(A2, (0, 1)), K)
    assert deo(eta, identity(A2)) == translation(A2, (0, 1))


def test_deo_precondition():
    with pytest.raises(InputError):
        deo(sp(A1, (1,)), element_of(A1, [1], [0]))


def test_demazure_membership_examples():
    e, s = identity(A1), element_of(A1, [1], [0])
    pi = sp(A1, (1,))
    assert demazure_membership(TensorPair(pi, pi), e)
    ps = sp(A1, (1,), s)
    assert demazure_membership(TensorPair(ps, ps), s)
    assert not demazure_membership(TensorPair(pi, pi), s)


def test_theta_small():
    assert theta(((),), ((),), (0,), (1,), (1,)) == ((),)
    for c in range(0, 4):
        assert theta(((),), ((),), (c,), (1,), (1,)) == (((c,) if c else ()),)
    assert not theta_admissible(((),), (-1,), (1,), (1,))
    with pytest.raises(InputError):
        theta(((),), ((),), (-1,), (1,), (1,))


def test_theta_domain_nonempty():
    dom = theta_domain((1,), (2,), 2)
    assert dom and len(set(dom)) == len(dom)


def test_extremal_pair_is_standard():
    for xi in range(0, 3):
        assert is_standard(extremal_pair(A1, ((),), ((),), (xi,), (1,), (1,)))


def _adaptive_bound(pair):
    return 3 + max(abs(c) for x in (pair.left.kappa(), pair.right.iota()) for c in x.trans)


@pytest.mark.parametrize("d,lam,mu", [(A1, (1,), (1,)), (A1, (1,), (2,)), (A2, (1, 0), (0, 1)), (A2, (0, 1), (1, 0))])
def test_standard_matches_brute_force(d, lam, mu):
    L = enumerate_sils(d, lam, identity(d), -1)[:15]
    R = enumerate_sils(d, mu, identity(d), -1)[:15]
    J0 = sorted(parabolic_of_weight(d, lam).members)
    K0 = sorted(parabolic_of_weight(d, mu).members)
    for p in L:
        for h in R:
            pair = TensorPair(p, h)
            want = brute_standard(p.kappa(), J0, h.iota(), K0, _adaptive_bound(pair), si_leq_translation)
            assert is_standard(pair) == want, pair
            if want:
                assert is_defining_chain(pair, find_defining_chain(pair))


@pytest.mark.parametrize("d,lam,mu,x,q", [
    (A1, (1,), (1,), None, -2),
    (A1, (2,), (1,), element_of(A1, [1], [0]), -2),
    (A2, (1, 0), (0, 1), None, -1),
])
def test_dem_decomposition(d, lam, mu, x, q):
    assert verify_dem_decomposition(d, lam, mu, x, q).ok


def test_smt_iso_and_negative_control():
    assert verify_smt_iso(A1, (1,), (1,), -2).ok
    assert verify_smt_iso(A2, (1, 0), (0, 1), -1).ok
    bad = verify_smt_iso(A1, (1,), (1,), -2, rule="reversed")
    assert not bad.ok and bad.witness is not None
