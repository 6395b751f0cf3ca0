"""Sanity checks for the brute-force references themselves."""

from fractions import Fraction

from silc.afweyl import element_of, identity
from silc.oracles import (
    BruteGraph, brute_lifts, brute_sils, finite_bruhat_leq, finite_ls_paths, finite_min_lift,
    is_quotient_member,
)
from silc.rootdata import build_cartan

A1 = build_cartan("A", 1)
A2 = build_cartan("A", 2)


def test_finite_bruhat_is_a_partial_order():
    W = A2.enumerate_weyl_group()
    for u in W:
        assert finite_bruhat_leq(A2.identity, u) and finite_bruhat_leq(u, A2.w0)
        for v in W:
            if finite_bruhat_leq(u, v) and finite_bruhat_leq(v, u):
                assert u == v
            if finite_bruhat_leq(u, v):
                assert u.length <= v.length


def test_finite_ls_paths_count_dimension():
    for lam in [(1, 0), (1, 1), (2, 0)]:
        assert len(finite_ls_paths(A2, lam)) == A2.weyl_dimension(lam)


def test_finite_min_lift():
    s1, s2 = A2.simple
    assert finite_min_lift(A2.identity, s2, [0]) == s2
    assert finite_min_lift(s1, s2, [0]) == s2 * s1


def test_brute_sils_a1():
    e = identity(A1)
    s = element_of(A1, [1], [0])
    got = brute_sils(A1, (1,), 0)
    assert got == {((e,), (Fraction(0), Fraction(1))), ((s,), (Fraction(0), Fraction(1)))}
    assert len(brute_sils(A1, (1,), -1)) == 4


def test_graph_edges_raise_sell():
    G = BruteGraph(A1, [], -1, 1)
    for x, out in G.edges.items():
        for y, _ in out:
            assert y.fin.length + 2 * sum(y.trans) == x.fin.length + 2 * sum(x.trans) + 1


def test_lifts_are_in_the_coset():
    y = identity(A2)
    lifts = brute_lifts(y, [0], 1)
    assert len(lifts) == 2 * 3
    assert all(not is_quotient_member(z, [0]) or z == y for z in lifts)
