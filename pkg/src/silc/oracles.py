"""Brute-force reference implementations used to cross-check the fast algorithms.

Nothing here calls the order, projection, lift or enumeration code of the
main modules; only root data and the group law are shared.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import product

from .afweyl import AffineWeylElement
from .rootdata import CartanDatum, FiniteWeylElement


# -- affine Weyl group by definition ----------------------------------------------------------

def levi_roots(datum: CartanDatum, J0) -> list:
    """Roots (both signs) supported on the 0-based index set ``J0``."""
    J0 = set(J0)
    return [r for r in datum.roots if all(c == 0 or k in J0 for k, c in enumerate(r))]


def _root_positive(r) -> bool:
    return all(c >= 0 for c in r) and any(r)


def is_quotient_member(x: AffineWeylElement, J0) -> bool:
    """``x beta > 0`` for every positive affine root ``beta`` of the Levi of ``J0``."""
    d = x.fin.datum
    for a in levi_roots(d, J0):
        k = d.root_pair(a, x.trans)
        top = max(abs(k) + 2, 2)
        for n in range(0, top):
            if n == 0 and not _root_positive(a):
                continue
            c = n - k
            wa = x.fin.act_root(a)
            if c < 0 or (c == 0 and not _root_positive(wa)):
                return False
    return True


def brute_sell(x: AffineWeylElement) -> int:
    return x.fin.length + 2 * sum(x.trans)


def affine_reflection(datum: CartanDatum, alpha, n: int) -> AffineWeylElement:
    """``s_{alpha + n delta} = s_alpha t_{n alpha^vee}``."""
    return AffineWeylElement(datum.reflection(alpha), tuple(n * c for c in datum.coroot_of[tuple(alpha)]))


class BruteGraph:
    """The parabolic semi-infinite Bruhat graph restricted to a box of translations."""

    def __init__(self, datum: CartanDatum, J0, lo: int, hi: int, lam=None, nmax: int | None = None):
        self.datum = datum
        self.J0 = frozenset(J0)
        self.lam = tuple(lam) if lam is not None else None
        self.nodes = set()
        for w in datum.enumerate_weyl_group():
            for xi in product(range(lo, hi + 1), repeat=datum.rank):
                x = AffineWeylElement(w, xi)
                if is_quotient_member(x, self.J0):
                    self.nodes.add(x)
        if nmax is None:
            nmax = 2 * (hi - lo) + 2
        self.edges = {x: [] for x in self.nodes}
        for x in self.nodes:
            s0 = brute_sell(x)
            for a in datum.roots:
                for n in range(0, nmax + 1):
                    if n == 0 and not _root_positive(a):
                        continue
                    y = affine_reflection(datum, a, n) * x
                    if y in self.nodes and brute_sell(y) == s0 + 1:
                        label = None
                        if self.lam is not None:
                            wl = x.fin.act_weight(self.lam)
                            label = sum(p * q for p, q in zip(wl, datum.coroot_of[tuple(a)]))
                        self.edges[x].append((y, label))
        self._reach: dict = {}

    def reach(self, x, den: int = 1) -> frozenset:
        """Nodes reachable from ``x`` using edges whose label is divisible by ``den``."""
        key = (x, den)
        r = self._reach.get(key)
        if r is None:
            seen = {x}
            queue = deque([x])
            while queue:
                z = queue.popleft()
                for y, label in self.edges[z]:
                    if den > 1 and label % den:
                        continue
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            r = frozenset(seen)
            self._reach[key] = r
        return r

    def leq(self, x, y) -> bool:
        return y in self.reach(x)


def weyl_subgroup(datum: CartanDatum, J0) -> list[FiniteWeylElement]:
    J0 = set(J0)
    return [w for w in datum.enumerate_weyl_group() if set(w.word) <= J0]


def brute_lifts(y: AffineWeylElement, J0, bound: int) -> list[AffineWeylElement]:
    """``y u t_gamma`` for ``u`` in ``W_J`` and ``gamma`` in the J-coroot box."""
    d = y.fin.datum
    mem = sorted(J0)
    out = []
    for u in weyl_subgroup(d, J0):
        for cs in product(range(-bound, bound + 1), repeat=len(mem)):
            g = [0] * d.rank
            for k, c in zip(mem, cs):
                g[k] = c
            out.append(y * AffineWeylElement(u, tuple(g)))
    return out


def brute_standard(left_kappa, left_J0, right_iota, right_K0, bound: int, leq) -> bool:
    """Some lift of ``right_iota`` lies below some lift of ``left_kappa`` (lifts from a box).

    ``leq`` is the order test to use on ``W_af``.
    """
    X = brute_lifts(left_kappa, left_J0, bound)
    Y = brute_lifts(right_iota, right_K0, bound)
    return any(leq(y, x) for x in X for y in Y)


# -- semi-infinite LS paths from the definition ---------------------------------------------------

def _fractions(N: int):
    return sorted({Fraction(k, q) for q in range(1, N + 1) for k in range(1, q)})


def brute_sils(datum: CartanDatum, lam, q_min: int) -> set:
    """All ``(directions, breaks)`` of shape ``lam`` above ``e`` with q-degree at least ``q_min``.

    Directions are searched in a translation box large enough for the window:
    every segment has length at least the smallest gap between admissible
    breaks, and the pairing with ``lam`` is nonnegative above ``e``.
    """
    lam = tuple(lam)
    J0 = [i for i, c in enumerate(lam) if c == 0]
    N = max(1, max(sum(a * b for a, b in zip(lam, datum.coroot_of[r])) for r in datum.positive_roots))
    fr = _fractions(N)
    pts = [Fraction(0)] + fr + [Fraction(1)]
    gap = min(b - a for a, b in zip(pts, pts[1:]))
    pmax = int(-q_min / gap)
    G = BruteGraph(datum, J0, -2, pmax + 2, lam)
    e = AffineWeylElement(datum.identity, (0,) * datum.rank)
    above = G.reach(e)

    def p(x):
        return sum(a * b for a, b in zip(lam, x.trans))

    out = set()

    def grow(y, right, partial, tail_d, tail_b):
        if partial - right * p(y) >= q_min:
            out.add(((y,) + tail_d, (Fraction(0), right) + tail_b))
        for a in fr:
            if a >= right:
                break
            newp = partial - (right - a) * p(y)
            if newp < q_min:
                continue
            for z in G.reach(y, a.denominator):
                if z != y and newp - a * p(z) >= q_min:
                    grow(z, a, newp, (y,) + tail_d, (right,) + tail_b)

    for k in above:
        if -p(k) >= q_min:
            grow(k, Fraction(1), Fraction(0), (), ())
    return out


# -- finite LS paths and the classical Pieri-Chevalley data -----------------------------------------

def _subword_set(w: FiniteWeylElement) -> frozenset:
    """Indices of all products of subwords of a reduced word of ``w``."""
    d = w.datum
    cache = d.__dict__.setdefault("_oracle_subwords", {})
    r = cache.get(w.index)
    if r is None:
        if w.length == 0:
            r = frozenset([w.index])
        else:
            s = d.simple[w.word[0]]
            group = d.enumerate_weyl_group()
            by_index = {v.index: v for v in group}
            sub = _subword_set(s * w)
            r = sub | frozenset((s * by_index[i]).index for i in sub)
        cache[w.index] = r
    return r


def finite_bruhat_leq(u: FiniteWeylElement, v: FiniteWeylElement) -> bool:
    """``u <= v`` iff ``u`` is a subword product of a reduced word of ``v``."""
    return u.index in _subword_set(v)


def _min_coset_reps(datum, K0):
    return [w for w in datum.enumerate_weyl_group()
            if all((w * datum.simple[k]).length > w.length for k in K0)]


def finite_ls_paths(datum: CartanDatum, mu) -> list:
    """All finite LS paths of shape ``mu`` as ``(directions, breaks)``."""
    mu = tuple(mu)
    K0 = [i for i, c in enumerate(mu) if c == 0]
    reps = _min_coset_reps(datum, K0)
    rep_idx = {w.index for w in reps}
    N = max(1, max(sum(a * b for a, b in zip(mu, datum.coroot_of[r])) for r in datum.positive_roots))
    fr = _fractions(N)
    edges = {}
    for z in reps:
        out = []
        for a in datum.positive_roots:
            y = datum.reflection(a) * z
            if y.index in rep_idx and y.length == z.length + 1:
                wl = z.act_weight(mu)
                out.append((y, sum(p * q for p, q in zip(wl, datum.coroot_of[a]))))
        edges[z.index] = out

    def reach(z, den):
        seen = {z.index: z}
        queue = deque([z])
        while queue:
            v = queue.popleft()
            for y, label in edges[v.index]:
                if label % den == 0 and y.index not in seen:
                    seen[y.index] = y
                    queue.append(y)
        return [v for i, v in seen.items() if i != z.index]

    paths = []

    def grow(y, right, tail_d, tail_b):
        paths.append(((y,) + tail_d, (Fraction(0), right) + tail_b))
        for a in fr:
            if a >= right:
                break
            for z in reach(y, a.denominator):
                grow(z, a, (y,) + tail_d, (right,) + tail_b)

    for k in reps:
        grow(k, Fraction(1), (), ())
    return paths


def finite_min_lift(x: FiniteWeylElement, y: FiniteWeylElement, K0):
    """Minimum of ``{y u : u in W_K, y u >= x}`` by exhaustion, or None if empty."""
    d = x.datum
    coset = [y * u for u in weyl_subgroup(d, K0)]
    above = [z for z in coset if finite_bruhat_leq(x, z)]
    if not above:
        return None
    mins = [z for z in above if all(finite_bruhat_leq(z, o) for o in above)]
    assert len(mins) == 1, "no unique minimum in the coset"
    return mins[0]


def finite_pieri_data(datum: CartanDatum, lam, x: FiniteWeylElement) -> dict:
    """``{y: {weight: count}}`` over finite LS paths of shape ``-w0 lam`` bucketed by initial lift."""
    mu = tuple(-v for v in datum.w0.act_weight(tuple(lam)))
    K0 = [i for i, c in enumerate(mu) if c == 0]
    out: dict = {}
    for ds, bs in finite_ls_paths(datum, mu):
        cur = x
        ok = True
        for y in reversed(ds):
            cur = finite_min_lift(cur, y, K0)
            if cur is None:
                ok = False
                break
        if not ok:
            continue
        fin = [Fraction(0)] * datum.rank
        for k, y in enumerate(ds):
            wl = y.act_weight(mu)
            for j in range(datum.rank):
                fin[j] += (bs[k + 1] - bs[k]) * wl[j]
        nu = tuple(int(v) for v in fin)
        bucket = out.setdefault(cur, {})
        bucket[nu] = bucket.get(nu, 0) + 1
    return out


__all__ = [
    "BruteGraph", "affine_reflection", "brute_lifts", "brute_sell", "brute_sils", "brute_standard",
    "finite_bruhat_leq", "finite_ls_paths", "finite_min_lift", "finite_pieri_data",
    "is_quotient_member", "levi_roots", "weyl_subgroup",
]
