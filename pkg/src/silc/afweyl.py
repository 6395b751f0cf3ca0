"""Affine Weyl group ``W_af = W x| Q^vee`` and the semi-infinite Bruhat order.

An element ``(w, xi)`` stands for ``w t_xi``.  Affine simple indices are
``0..rank`` with ``0`` the affine node; parabolic subsets are given with
1-based finite indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InputError, ResourceError
from .rootdata import CartanDatum, Coweight, FiniteWeylElement, Root, Weight

SI_M_CEILING = 64


class AffineWeylElement:
    """``w t_xi`` with ``w`` finite and ``xi`` in the coroot lattice."""

    __slots__ = ("fin", "trans", "_hash")

    def __init__(self, fin: FiniteWeylElement, trans):
        self.fin = fin
        self.trans = tuple(trans)
        self._hash = hash((fin._hash, self.trans))

    @property
    def datum(self) -> CartanDatum:
        return self.fin.datum

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, AffineWeylElement):
            return NotImplemented
        return self.trans == other.trans and self.fin == other.fin

    def __mul__(self, other: AffineWeylElement) -> AffineWeylElement:
        v = other.fin
        vinv = v.inverse()
        t = vinv.act_coweight(self.trans)
        return AffineWeylElement(self.fin * v, tuple(a + b for a, b in zip(t, other.trans)))

    def inverse(self) -> AffineWeylElement:
        w = self.fin
        return AffineWeylElement(w.inverse(), tuple(-c for c in w.act_coweight(self.trans)))

    def is_translation(self) -> bool:
        return self.fin.index == 0

    def __repr__(self):
        w = " ".join(str(i + 1) for i in self.fin.word)
        t = " ".join(str(c) for c in self.trans)
        return f"<{w} ; {t}>"

    def sort_key(self):
        return (self.fin.word, self.trans)


@dataclass(frozen=True)
class AffineRoot:
    """``alpha + n delta`` for a finite root ``alpha``."""

    finite_part: tuple
    delta_coeff: int

    def is_positive(self) -> bool:
        n = self.delta_coeff
        return n > 0 or (n == 0 and all(v >= 0 for v in self.finite_part) and any(self.finite_part))

    def __neg__(self):
        return AffineRoot(tuple(-v for v in self.finite_part), -self.delta_coeff)


class Parabolic:
    """A subset ``J`` of the finite simple indices with its cached data."""

    def __init__(self, datum: CartanDatum, members):
        self.datum = datum
        self.members = frozenset(members)
        n = datum.rank
        self.comps = datum.components(self.members)
        self.affine_simples = [
            (tuple(int(k == j) for k in range(n)), 0) for j in sorted(self.members)
        ] + [
            (tuple(-v for v in datum.highest_root_of(c)), 1) for c in self.comps
        ]
        self.lam = Weight(0 if i in self.members else 1 for i in range(n))
        self.is_full = len(self.members) == n
        self.pij_cache: dict = {}
        self.cover_cache: dict = {}
        self.up_cache: dict = {}
        self.floor_cache: dict = {}

    def __repr__(self):
        return "J{" + ",".join(str(j + 1) for j in sorted(self.members)) + "}"

    def one_based(self) -> tuple[int, ...]:
        return tuple(sorted(j + 1 for j in self.members))


def parabolic(datum: CartanDatum, J=()) -> Parabolic:
    """Normalize ``J`` (1-based indices or a Parabolic) to a cached Parabolic."""
    if isinstance(J, Parabolic):
        if J.datum is not datum:
            raise InputError("parabolic set belongs to another root datum")
        return J
    members = set()
    for j in J:
        if not isinstance(j, int) or not 1 <= j <= datum.rank:
            raise InputError(f"parabolic index {j!r} out of range 1..{datum.rank}")
        members.add(j - 1)
    key = frozenset(members)
    cache = datum.__dict__.setdefault("_parabolics", {})
    p = cache.get(key)
    if p is None:
        p = Parabolic(datum, key)
        cache[key] = p
    return p


def parabolic_of_weight(datum: CartanDatum, lam) -> Parabolic:
    """``J = {i : <lam, alpha_i^vee> = 0}``."""
    return parabolic(datum, [i + 1 for i, c in enumerate(lam) if c == 0])


# -- constructors ------------------------------------------------------------

def identity(datum: CartanDatum) -> AffineWeylElement:
    return AffineWeylElement(datum.identity, (0,) * datum.rank)


def translation(datum: CartanDatum, xi) -> AffineWeylElement:
    if len(xi) != datum.rank:
        raise InputError("translation vector has wrong length")
    return AffineWeylElement(datum.identity, tuple(int(c) for c in xi))


def finite(w: FiniteWeylElement) -> AffineWeylElement:
    return AffineWeylElement(w, (0,) * w.datum.rank)


def simple_reflection(datum: CartanDatum, a: int) -> AffineWeylElement:
    """``s_a`` for an affine simple index ``a`` in ``0..rank``."""
    if a == 0:
        return AffineWeylElement(datum.reflection(datum.theta), tuple(-c for c in datum.theta_check))
    if not 1 <= a <= datum.rank:
        raise InputError(f"affine simple index {a} out of range")
    return AffineWeylElement(datum.simple[a - 1], (0,) * datum.rank)


def from_word(datum: CartanDatum, word, trans=None) -> AffineWeylElement:
    """``s_{a_1} ... s_{a_k} t_trans`` with affine simple indices."""
    x = identity(datum)
    for a in word:
        x = x * simple_reflection(datum, a)
    if trans is not None:
        x = x * translation(datum, trans)
    return x


def left_simple(a: int, x: AffineWeylElement) -> AffineWeylElement:
    """``s_a x`` without building the reflection element."""
    d = x.fin.datum
    if a == 0:
        w = x.fin
        shift = w.inverse().act_coweight(d.theta_check)
        return AffineWeylElement(d.reflection(d.theta) * w, tuple(t - s for t, s in zip(x.trans, shift)))
    return AffineWeylElement(d.simple[a - 1] * x.fin, x.trans)


def right_simple(x: AffineWeylElement, a: int) -> AffineWeylElement:
    """``x s_a``."""
    d = x.fin.datum
    xi = x.trans
    if a == 0:
        k = d.root_pair(d.theta, xi)
        tc = d.theta_check
        return AffineWeylElement(x.fin * d.reflection(d.theta), tuple(c - (k + 1) * t for c, t in zip(xi, tc)))
    i = a - 1
    k = sum(d.cartan[j][i] * xi[j] for j in range(d.rank))
    return AffineWeylElement(x.fin * d.simple[i], tuple(c - (k if j == i else 0) for j, c in enumerate(xi)))


# -- actions -------------------------------------------------------------------

def act_affine_root(x: AffineWeylElement, beta: AffineRoot) -> AffineRoot:
    d = x.fin.datum
    alpha = beta.finite_part
    return AffineRoot(tuple(x.fin.act_root(alpha)), beta.delta_coeff - d.root_pair(alpha, x.trans))


def _maps_negative(x: AffineWeylElement, alpha, n) -> bool:
    d = x.fin.datum
    n2 = n - d.root_pair(alpha, x.trans)
    if n2 != 0:
        return n2 < 0
    for r in x.fin.rmat:
        s = 0
        for rv, av in zip(r, alpha):
            s += rv * av
        if s != 0:
            return s < 0
    raise AssertionError("image of a root vanished")


def reflection(datum: CartanDatum, beta: AffineRoot) -> AffineWeylElement:
    """``s_beta = s_alpha t_{n alpha^vee}`` for ``beta = alpha + n delta``."""
    alpha = tuple(beta.finite_part)
    if not any(alpha) or not datum.is_root(alpha):
        raise InputError(f"{alpha} is not a root")
    c = datum.coroot_of[Root(alpha)]
    n = beta.delta_coeff
    return AffineWeylElement(datum.reflection(alpha), tuple(n * v for v in c))


def act_weight(x: AffineWeylElement, mu) -> tuple[Weight, int]:
    """Level-zero action: ``x mu = w mu - <mu, xi> delta`` as (finite, delta)."""
    return Weight(x.fin.act_weight(mu)), -sum(a * b for a, b in zip(mu, x.trans))


def level_zero_pair(x: AffineWeylElement, lam, a: int) -> int:
    """``<x lam, alpha_a^vee>`` for an affine simple index ``a``."""
    wl = x.fin.act_weight(lam)
    if a == 0:
        return -sum(u * v for u, v in zip(wl, x.fin.datum.theta_check))
    return wl[a - 1]


# -- lengths -------------------------------------------------------------------

def sell(x: AffineWeylElement) -> int:
    """Semi-infinite length ``l(w) + 2 <rho, xi>``."""
    return x.fin.length + 2 * sum(x.trans)


def length(x: AffineWeylElement) -> int:
    """Coxeter length in the affine generators."""
    d = x.fin.datum
    w = x.fin
    xi = x.trans
    total = 0
    for a in d.positive_roots:
        k = d.root_pair(a, xi)
        neg = _root_negative(w, a)
        if k >= 0:
            total += k + neg
        else:
            total += -k - neg
    return total


def _root_negative(w: FiniteWeylElement, alpha) -> int:
    for r in w.rmat:
        s = 0
        for rv, av in zip(r, alpha):
            s += rv * av
        if s != 0:
            return int(s < 0)
    raise AssertionError("image of a root vanished")


def _is_right_descent(d, x: AffineWeylElement, a: int) -> bool:
    xi = x.trans
    if a == 0:
        k = 1 + d.root_pair(d.theta, xi)
        if k != 0:
            return k < 0
        return not _root_negative(x.fin, d.theta)
    i = a - 1
    k = sum(d.cartan[j][i] * xi[j] for j in range(d.rank))
    if k != 0:
        return k > 0
    return x.fin.is_descent(i)


def affine_word(x: AffineWeylElement) -> tuple[int, ...]:
    """A reduced word in the affine simple reflections."""
    d = x.fin.datum
    rev = []
    e = identity(d)
    while x != e:
        for a in range(d.rank + 1):
            if _is_right_descent(d, x, a):
                break
        else:
            raise AssertionError("non-identity element without descent")
        rev.append(a)
        x = right_simple(x, a)
    return tuple(reversed(rev))


# -- ordinary Bruhat order -----------------------------------------------------

class _Fast:
    """Integer tables for the descent recursion."""

    def __init__(self, d: CartanDatum):
        n = d.rank
        self.d = d
        self.n = n
        self.cols = tuple(tuple(d.cartan[j][i] for j in range(n)) for i in range(n))
        self.theta_w = d.theta_weight
        self.theta_c = d.theta_check
        self.s_theta = d.reflection(d.theta)
        self.desc: dict = {}
        self.rmul: dict = {}
        self.words: dict = {}
        self.tabs: dict = {}

    def fin_data(self, w):
        r = self.desc.get(w)
        if r is None:
            r = (tuple(w.is_descent(i) for i in range(self.n)), not _root_negative(w, self.d.theta))
            self.desc[w] = r
        return r

    def table(self, w):
        """(descent flags, theta stays positive, right products by s_0..s_n)."""
        r = self.tabs.get(w)
        if r is None:
            neg, thpos = self.fin_data(w)
            r = (neg, thpos, tuple(self.mulr(w, a) for a in range(self.n + 1)))
            self.tabs[w] = r
        return r

    def mulr(self, w, a):
        key = (w, a)
        r = self.rmul.get(key)
        if r is None:
            r = w * (self.s_theta if a == 0 else self.d.simple[a - 1])
            self.rmul[key] = r
        return r


def _fast(d: CartanDatum) -> _Fast:
    f = d.__dict__.get("_fast")
    if f is None:
        f = _Fast(d)
        d._fast = f
    return f


def _descent_word(F, y: AffineWeylElement) -> tuple[int, ...]:
    """Right-descent letters of ``y`` read from the right (cached)."""
    r = F.words.get(y)
    if r is not None:
        return r
    n = F.n
    cols = F.cols
    thw = F.theta_w
    thc = F.theta_c
    vw, vxi = y.fin, y.trans
    out = []
    for _ in range(length(y)):
        vneg = F.fin_data(vw)[0]
        a = -1
        for i in range(n):
            c = cols[i]
            k = 0
            for j in range(n):
                k += c[j] * vxi[j]
            if k > 0 or (k == 0 and vneg[i]):
                a = i + 1
                break
        if a < 0:
            a = 0
            k = 0
            for j in range(n):
                k += thw[j] * vxi[j]
            vxi = tuple(vxi[j] - (k + 1) * thc[j] for j in range(n))
        else:
            vxi = tuple(vxi[j] - (k if j == a - 1 else 0) for j in range(n))
        vw = F.mulr(vw, a)
        out.append(a)
    assert vw.index == 0 and not any(vxi)
    r = tuple(out)
    if len(F.words) > 200000:
        F.words.clear()
    F.words[y] = r
    return r


def bruhat_leq(x: AffineWeylElement, y: AffineWeylElement) -> bool:
    """Ordinary Bruhat order on ``W_af`` by the right-descent recursion.

    Walk a reduced word of ``y`` from the right; ``x`` drops a letter
    whenever that letter is a right descent of the current ``x``.
    """
    lu = length(x)
    lv = length(y)
    if lu > lv:
        return False
    if lu == lv:
        return x == y
    F = _fast(x.fin.datum)
    rng = range(F.n)
    cols = F.cols
    thw = F.theta_w
    thc = F.theta_c
    tab = F.table
    uw = x.fin
    uxi = list(x.trans)
    ut = tab(uw)
    left = lv
    for a in _descent_word(F, y):
        if lu == 0:
            return True
        if lu > left:
            return False
        left -= 1
        if a == 0:
            k = 0
            for j in rng:
                k += thw[j] * uxi[j]
            if k < -1 or (k == -1 and ut[1]):
                uw = ut[2][0]
                ut = tab(uw)
                k += 1
                for j in rng:
                    uxi[j] -= k * thc[j]
                lu -= 1
        else:
            i = a - 1
            c = cols[i]
            k = 0
            for j in rng:
                k += c[j] * uxi[j]
            if k > 0 or (k == 0 and ut[0][i]):
                uw = ut[2][a]
                ut = tab(uw)
                uxi[i] -= k
                lu -= 1
    return lu == 0


# -- parabolic projection --------------------------------------------------------

def in_parabolic_quotient(x: AffineWeylElement, J) -> bool:
    """Membership in ``(W^J)_af``."""
    P = parabolic(x.fin.datum, J)
    return all(not _maps_negative(x, a, n) for a, n in P.affine_simples)


def pij(x: AffineWeylElement, J) -> AffineWeylElement:
    """Projection ``W_af -> (W^J)_af`` by descent in the J-affine simple roots."""
    d = x.fin.datum
    P = parabolic(d, J)
    if not P.members:
        return x
    r = P.pij_cache.get(x)
    if r is not None:
        return r
    y = x
    while True:
        for a, n in P.affine_simples:
            if _maps_negative(y, a, n):
                y = y * AffineWeylElement(d.reflection(a), tuple(n * v for v in d.coroot_of[Root(a)]))
                break
        else:
            break
    P.pij_cache[x] = y
    return y


def lift_contains(xp: AffineWeylElement, x: AffineWeylElement, J) -> bool:
    return pij(xp, J) == x


def floor_coset(w: FiniteWeylElement, J) -> FiniteWeylElement:
    """Minimal representative of ``w W_J``."""
    P = parabolic(w.datum, J)
    r = P.floor_cache.get(w.index)
    if r is None:
        r = w
        changed = True
        while changed:
            changed = False
            for j in P.members:
                if r.is_descent(j):
                    r = r * w.datum.simple[j]
                    changed = True
        P.floor_cache[w.index] = r
    return r


def _require_member(x, P):
    if not in_parabolic_quotient(x, P):
        raise InputError(f"{x!r} is not in the parabolic quotient for {P!r}")


# -- semi-infinite Bruhat graph ---------------------------------------------------

def si_covers(x: AffineWeylElement, J, check: bool = True):
    """Edges ``x -> s_beta x`` of the parabolic semi-infinite Bruhat graph."""
    d = x.fin.datum
    P = parabolic(d, J)
    r = P.cover_cache.get(x)
    if r is not None:
        return r
    if check:
        _require_member(x, P)
    target = sell(x) + 1
    w = x.fin
    winv = w.inverse()
    out = []
    for alpha in d.positive_roots:
        s = d.reflection(alpha)
        sw = s * w
        c = winv.act_coweight(d.coroot_of[alpha])
        base = sw.length + 2 * sum(x.trans)
        csum = 2 * sum(c)
        for n, fa in ((0, alpha), (1, tuple(-v for v in alpha))):
            # s_beta = s_alpha t_{n' alpha^vee}; for -alpha + delta, n' alpha^vee = -alpha^vee
            shift = 0 if n == 0 else -1
            if base + shift * csum != target:
                continue
            trans = x.trans if n == 0 else tuple(t - v for t, v in zip(x.trans, c))
            y = AffineWeylElement(sw, trans)
            if P.members and not in_parabolic_quotient(y, P):
                continue
            out.append((AffineRoot(tuple(fa), n), y))
    r = tuple(out)
    P.cover_cache[x] = r
    return r


def _upset_through(x, P, level):
    """Elements reachable from ``x`` with semi-infinite length up to ``level``."""
    st = P.up_cache.get(x)
    if st is None:
        st = [sell(x), {x}, [x]]
        P.up_cache[x] = st
    done, seen, frontier = st
    while done < level and frontier:
        nxt = []
        for z in frontier:
            for _, c in si_covers(z, P, check=False):
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
        done += 1
    st[0], st[2] = done, frontier
    return seen


def si_leq(x: AffineWeylElement, y: AffineWeylElement, J=()) -> bool:
    """Semi-infinite Bruhat order ``x <= y`` on ``(W^J)_af``."""
    d = x.fin.datum
    P = parabolic(d, J)
    if x not in P.up_cache:
        _require_member(x, P)
    if y not in P.cover_cache and y not in P.up_cache:
        _require_member(y, P)
    ly = sell(y)
    if sell(x) > ly:
        return False
    if x == y:
        return True
    return y in _upset_through(x, P, ly)


def si_upset(x: AffineWeylElement, J, level: int) -> set:
    """All ``z >= x`` with ``sell(z) <= level``."""
    P = parabolic(x.fin.datum, J)
    _require_member(x, P)
    return {z for z in _upset_through(x, P, level) if sell(z) <= level}


def _antidominance_threshold(x):
    d = x.fin.datum
    top = max(sum(d.cartan[j][i] * x.trans[j] for j in range(d.rank)) for i in range(d.rank))
    return top // 2 + 1


def si_leq_translation(x: AffineWeylElement, y: AffineWeylElement, ceiling: int = SI_M_CEILING) -> bool:
    """``x <= y`` via the ordinary Bruhat order after a deep antidominant shift."""
    d = x.fin.datum
    span = abs(sell(y) - sell(x))
    m = max(1, -(-span // 2), _antidominance_threshold(x), _antidominance_threshold(y))
    tr = d.two_rho_check

    def test(m):
        t = translation(d, tuple(-m * c for c in tr))
        return bruhat_leq(y * t, x * t)

    prev = test(m)
    while m <= ceiling:
        cur = test(m + 1)
        if cur == prev:
            return cur
        m += 1
        prev = cur
    raise ResourceError(f"order test for {x!r}, {y!r} did not stabilize below m = {ceiling}")


# -- Deodhar lifts ------------------------------------------------------------------

def _ascent_table(d: CartanDatum):
    """For each finite ``w`` the first affine index on a shortest ascent path to ``e``.

    Edges ``w -> s_i w`` need ``w^{-1} alpha_i > 0`` and ``w -> s_theta w``
    needs ``w^{-1} theta < 0``; both make ``<x Lambda, alpha_a^vee> > 0`` for
    every ``x`` with finite part ``w`` and regular dominant ``Lambda``.
    """
    tab = d.__dict__.get("_ascent")
    if tab is not None:
        return tab
    group = d.enumerate_weyl_group()
    st = d.reflection(d.theta)
    nxt = {d.identity.index: None}
    queue = deque([d.identity])
    while queue:
        v = queue.popleft()
        for a in range(d.rank + 1):
            u = (st if a == 0 else d.simple[a - 1]) * v
            if u.index in nxt:
                continue
            uinv = u.inverse()
            if a == 0:
                ok = bool(_root_negative(uinv, d.theta))
            else:
                ok = not uinv.is_descent(a - 1)
            if ok:
                nxt[u.index] = a
                queue.append(u)
    if len(nxt) != len(group):
        raise AssertionError("ascent graph does not reach the identity from every element")
    d._ascent = nxt
    return nxt


def _step1(x, y, P):
    xi = x.trans
    zeta = y.trans
    res = tuple(z if j not in P.members else z - (z - c) for j, (z, c) in enumerate(zip(zeta, xi)))
    return translation(x.fin.datum, res)


def _minlift(x, y, P, asc, memo):
    key = (x, y)
    r = memo.get(key)
    if r is not None:
        return r
    d = x.fin.datum
    lam = P.lam
    rho = d.rho
    if x.fin.index == 0:
        v = floor_coset(y.fin, P)
        if v.index == 0:
            r = _step1(x, y, P)
        else:
            wl = y.fin.act_weight(lam)
            i = next(k for k in range(d.rank) if wl[k] < 0)
            r = left_simple(i + 1, _minlift(x, left_simple(i + 1, y), P, asc, memo))
    else:
        a = asc[x.fin.index]
        p = level_zero_pair(y, lam, a)
        sx = left_simple(a, x)
        if p > 0:
            r = left_simple(a, _minlift(sx, left_simple(a, y), P, asc, memo))
        elif p == 0:
            y2 = _minlift(sx, y, P, asc, memo)
            r = y2 if level_zero_pair(y2, rho, a) > 0 else left_simple(a, y2)
        else:
            r = _minlift(sx, y, P, asc, memo)
    memo[key] = r
    return r


def min_lift(x: AffineWeylElement, y: AffineWeylElement, J, check: bool = True) -> AffineWeylElement:
    """Minimum of ``{y' : pij(y') = y, y' >= x}`` in the semi-infinite order."""
    d = x.fin.datum
    P = parabolic(d, J)
    if check:
        _require_member(y, P)
        if not si_leq(pij(x, P), y, P):
            raise InputError(f"{y!r} is not above the projection of {x!r}")
    if P.is_full:
        return x
    if not P.members:
        return y
    memo = d.__dict__.setdefault("_minlift_memo", {}).setdefault(P.members, {})
    return _minlift(x, y, P, _ascent_table(d), memo)


# -- enumeration helpers ------------------------------------------------------------

def box_elements(datum: CartanDatum, J, bound: int):
    """Elements of ``(W^J)_af`` whose translation part lies in ``[-bound, bound]^rank``."""
    from itertools import product

    P = parabolic(datum, J)
    out = []
    for w in datum.enumerate_weyl_group():
        for xi in product(range(-bound, bound + 1), repeat=datum.rank):
            x = AffineWeylElement(w, xi)
            if in_parabolic_quotient(x, P):
                out.append(x)
    out.sort(key=lambda z: (sell(z), z.sort_key()))
    return out


def element_of(datum: CartanDatum, word, trans) -> AffineWeylElement:
    """``w t_trans`` with ``w`` given by a finite word (1-based)."""
    return AffineWeylElement(datum.from_word([i - 1 for i in word]), tuple(trans))


__all__ = [
    "AffineRoot", "AffineWeylElement", "Parabolic", "act_affine_root", "act_weight",
    "affine_word", "box_elements", "bruhat_leq", "element_of", "finite", "floor_coset",
    "from_word", "identity", "in_parabolic_quotient", "left_simple", "length",
    "level_zero_pair", "lift_contains", "min_lift", "parabolic", "parabolic_of_weight",
    "pij", "reflection", "right_simple", "sell", "si_covers", "si_leq",
    "si_leq_translation", "si_upset", "simple_reflection", "translation",
]
