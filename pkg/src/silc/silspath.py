"""Semi-infinite LS paths: validation, root operators, enumeration."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .afweyl import (
    AffineWeylElement, floor_coset, identity, in_parabolic_quotient, left_simple,
    level_zero_pair, parabolic_of_weight, pij, sell, si_covers, si_leq, translation,
    affine_word,
)
from .errors import InputError, ResourceError
from .rootdata import CartanDatum, FiniteWeylElement, Weight

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class AffineWeight:
    """``finite + delta * delta`` at level zero."""

    finite: tuple
    delta: int

    def __add__(self, other):
        return AffineWeight(tuple(a + b for a, b in zip(self.finite, other.finite)), self.delta + other.delta)

    def __sub__(self, other):
        return AffineWeight(tuple(a - b for a, b in zip(self.finite, other.finite)), self.delta - other.delta)

    @property
    def fwt(self) -> Weight:
        return Weight(self.finite)

    @property
    def qwt(self) -> int:
        return self.delta


def simple_affine_root_weight(datum: CartanDatum, i: int) -> AffineWeight:
    """``alpha_i`` as a level-zero weight; ``alpha_0 = -theta + delta``."""
    if i == 0:
        return AffineWeight(tuple(-v for v in datum.theta_weight), 1)
    return AffineWeight(tuple(datum.cartan[k][i - 1] for k in range(datum.rank)), 0)


def pair_simple_coroot(datum: CartanDatum, mu, i: int):
    """``<mu, alpha_i^vee>`` for a finite weight, with ``alpha_0^vee = -theta^vee`` at level zero."""
    if i == 0:
        return -sum(a * b for a, b in zip(mu, datum.theta_check))
    return mu[i - 1]


class SiLSPath:
    """``(x_1, ..., x_s ; a_0, ..., a_s)`` with directions in ``(W^J)_af``."""

    __slots__ = ("shape", "directions", "breaks", "_hash")

    def __init__(self, shape, directions, breaks):
        self.shape = Weight(shape)
        self.directions = tuple(directions)
        self.breaks = tuple(Fraction(b) for b in breaks)
        self._hash = hash((self.shape, self.directions, self.breaks))

    @property
    def datum(self) -> CartanDatum:
        return self.directions[0].fin.datum

    @property
    def J(self):
        return parabolic_of_weight(self.datum, self.shape)

    def __eq__(self, other):
        if not isinstance(other, SiLSPath):
            return NotImplemented
        return (self.shape == other.shape and self.breaks == other.breaks
                and self.directions == other.directions)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        ds = ", ".join(repr(x) for x in self.directions)
        bs = ", ".join(str(b) for b in self.breaks)
        return f"SiLSPath({ds} ; {bs})"

    def iota(self) -> AffineWeylElement:
        return self.directions[0]

    def kappa(self) -> AffineWeylElement:
        return self.directions[-1]

    def sort_key(self):
        return (
            tuple(self.shape),
            tuple(x.sort_key() for x in self.directions),
            tuple((b.numerator, b.denominator) for b in self.breaks),
        )


def straight_path(datum: CartanDatum, lam, x: AffineWeylElement | None = None) -> SiLSPath:
    """``(x ; 0, 1)``; with ``x`` omitted this is ``pi_lambda``."""
    lam = Weight(lam)
    if x is None:
        x = identity(datum)
    return SiLSPath(lam, (pij(x, parabolic_of_weight(datum, lam)),), (0, 1))


def _check_structure(pi: SiLSPath):
    b = pi.breaks
    if len(b) != len(pi.directions) + 1 or len(pi.directions) == 0:
        raise InputError("a path needs s directions and s+1 breaks")
    if b[0] != 0 or b[-1] != 1:
        raise InputError("breaks must start at 0 and end at 1")
    if any(b[k] >= b[k + 1] for k in range(len(b) - 1)):
        raise InputError("breaks must be strictly increasing")
    if any(v < 0 for v in pi.shape):
        raise InputError("shape must be dominant")


def _edge_pair(y: AffineWeylElement, lam, beta) -> int:
    d = y.fin.datum
    c = d.coroot_of[tuple(beta.finite_part)]
    wl = y.fin.act_weight(lam)
    return sum(a * b for a, b in zip(wl, c))


def _covers_a(y, J, lam, den: int):
    """Edges out of ``y`` kept in the integrality subgraph for denominator ``den``."""
    cache = J.__dict__.setdefault("_covers_a", {})
    key = (y, den, tuple(lam))
    r = cache.get(key)
    if r is None:
        r = tuple(z for beta, z in si_covers(y, J, check=False) if _edge_pair(y, lam, beta) % den == 0)
        cache[key] = r
    return r


def chain_exists(lo: AffineWeylElement, hi: AffineWeylElement, a, lam) -> bool:
    """Directed path ``lo -> ... -> hi`` whose edges satisfy ``a <x lam, beta^vee> in Z``."""
    d = lo.fin.datum
    J = parabolic_of_weight(d, lam)
    den = Fraction(a).denominator
    top = sell(hi)
    if sell(lo) > top:
        return False
    seen = {lo}
    frontier = [lo]
    while frontier:
        if hi in seen:
            return True
        nxt = []
        for z in frontier:
            if sell(z) >= top:
                continue
            for c in _covers_a(z, J, lam, den):
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return hi in seen


def validate(pi: SiLSPath) -> bool:
    """Both defining conditions of a semi-infinite LS path."""
    _check_structure(pi)
    d = pi.datum
    lam = pi.shape
    J = parabolic_of_weight(d, lam)
    xs = pi.directions
    if any(not in_parabolic_quotient(x, J) for x in xs):
        return False
    for u in range(len(xs) - 1):
        if xs[u] == xs[u + 1]:
            return False
        if not chain_exists(xs[u + 1], xs[u], pi.breaks[u + 1], lam):
            return False
    return True


# -- height function and root operators --------------------------------------------

def _slopes(pi: SiLSPath, i: int):
    d = pi.datum
    return [level_zero_pair(x, pi.shape, i) for x in pi.directions]


def _heights(breaks, slopes):
    h = [Fraction(0)]
    for k, s in enumerate(slopes):
        h.append(h[-1] + (breaks[k + 1] - breaks[k]) * s)
    return h


def h_function(pi: SiLSPath, i: int):
    """Breakpoint/value list ``[(a_u, H_i(a_u))]`` of the height function."""
    return list(zip(pi.breaks, _heights(pi.breaks, _slopes(pi, i))))


def m_value(pi: SiLSPath, i: int) -> int:
    m = min(_heights(pi.breaks, _slopes(pi, i)))
    assert m.denominator == 1, "local minima must be integers"
    return int(m)


def eps(i: int, pi: SiLSPath) -> int:
    return -m_value(pi, i)


def phi(i: int, pi: SiLSPath) -> int:
    h = _heights(pi.breaks, _slopes(pi, i))
    m = min(h)
    r = h[-1] - m
    assert r.denominator == 1
    return int(r)


def _reflect_window(directions, breaks, t0, t1, reflect):
    """Apply ``reflect`` to the part of the path on ``[t0, t1]`` and renormalize."""
    segs = []
    for k, x in enumerate(directions):
        lo, hi = breaks[k], breaks[k + 1]
        cuts = sorted({lo, hi} | {t for t in (t0, t1) if lo < t < hi})
        for a, b in zip(cuts, cuts[1:]):
            inside = t0 <= a and b <= t1
            segs.append((reflect(x) if inside else x, a, b))
    out_d = []
    out_b = [Fraction(0)]
    for x, a, b in segs:
        if a == b:
            continue
        if out_d and out_d[-1] == x:
            out_b[-1] = b
        else:
            out_d.append(x)
            out_b.append(b)
    return out_d, out_b


def _crossing(breaks, h, k, level, want_largest):
    """Extreme ``t`` in segment ``k`` where the height equals ``level``, or None."""
    lo, hi = breaks[k], breaks[k + 1]
    h0, h1 = h[k], h[k + 1]
    if h0 == h1:
        if h0 == level:
            return hi if want_largest else lo
        return None
    if min(h0, h1) <= level <= max(h0, h1):
        return lo + (level - h0) * (hi - lo) / (h1 - h0)
    return None


def _e_core(directions, breaks, slopes, reflect):
    h = _heights(breaks, slopes)
    m = min(h)
    if m > -1:
        return None
    q = h.index(m)
    t1 = breaks[q]
    t0 = None
    for k in range(q - 1, -1, -1):
        t = _crossing(breaks, h, k, m + 1, True)
        if t is not None and t <= t1:
            t0 = t
            break
    assert t0 is not None
    return _reflect_window(directions, breaks, t0, t1, reflect)


def _f_core(directions, breaks, slopes, reflect):
    h = _heights(breaks, slopes)
    m = min(h)
    if h[-1] - m < 1:
        return None
    p = len(h) - 1 - h[::-1].index(m)
    t0 = breaks[p]
    t1 = None
    for k in range(p, len(directions)):
        t = _crossing(breaks, h, k, m + 1, False)
        if t is not None and t >= t0:
            t1 = t
            break
    assert t1 is not None
    return _reflect_window(directions, breaks, t0, t1, reflect)


def e_op(i: int, pi: SiLSPath) -> SiLSPath | None:
    """Root operator ``e_i``; ``None`` stands for the zero element."""
    r = _e_core(pi.directions, pi.breaks, _slopes(pi, i), lambda x: left_simple(i, x))
    return None if r is None else SiLSPath(pi.shape, r[0], r[1])


def f_op(i: int, pi: SiLSPath) -> SiLSPath | None:
    """Root operator ``f_i``; ``None`` stands for the zero element."""
    r = _f_core(pi.directions, pi.breaks, _slopes(pi, i), lambda x: left_simple(i, x))
    return None if r is None else SiLSPath(pi.shape, r[0], r[1])


def wt(pi: SiLSPath) -> AffineWeight:
    lam = pi.shape
    n = len(lam)
    fin = [Fraction(0)] * n
    dl = Fraction(0)
    for k, x in enumerate(pi.directions):
        ln = pi.breaks[k + 1] - pi.breaks[k]
        wl = x.fin.act_weight(lam)
        for j in range(n):
            fin[j] += ln * wl[j]
        dl -= ln * sum(a * b for a, b in zip(lam, x.trans))
    assert all(v.denominator == 1 for v in fin) and dl.denominator == 1, "non-integral weight"
    return AffineWeight(tuple(int(v) for v in fin), int(dl))


def qwt_of(pi: SiLSPath) -> int:
    lam = pi.shape
    dl = Fraction(0)
    for k, x in enumerate(pi.directions):
        dl -= (pi.breaks[k + 1] - pi.breaks[k]) * sum(a * b for a, b in zip(lam, x.trans))
    assert dl.denominator == 1
    return int(dl)


def _apply_simple(i: int, pi, wt_fn, e_fn, f_fn, datum):
    n = pair_simple_coroot(datum, wt_fn(pi).finite, i)
    if n >= 0:
        for _ in range(n):
            pi = f_fn(i, pi)
    else:
        for _ in range(-n):
            pi = e_fn(i, pi)
    assert pi is not None
    return pi


def simple_act_path(i: int, pi: SiLSPath) -> SiLSPath:
    """``s_i . pi`` through the root operators."""
    return _apply_simple(i, pi, wt, e_op, f_op, pi.datum)


def weyl_act_path(x: AffineWeylElement, pi: SiLSPath) -> SiLSPath:
    """``x . pi`` along a reduced word of ``x``."""
    for a in reversed(affine_word(x)):
        pi = simple_act_path(a, pi)
    return pi


def t_shift(xi, pi: SiLSPath) -> SiLSPath:
    """``T_xi``: right-translate every direction and reproject."""
    d = pi.datum
    J = parabolic_of_weight(d, pi.shape)
    t = translation(d, xi)
    ds = [pij(x * t, J) for x in pi.directions]
    assert all(ds[k] != ds[k + 1] for k in range(len(ds) - 1))
    return SiLSPath(pi.shape, ds, pi.breaks)


# -- partitions and extremal paths --------------------------------------------------

def _partitions(total: int, max_len: int, max_part: int | None = None):
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, max_len - 1, first):
            yield (first,) + rest


def par_elements(lam, size_bound: int):
    """All tuples of partitions with ``len(rho_i) < lam_i`` and total size at most ``size_bound``."""
    lam = tuple(lam)
    if any(v < 0 for v in lam):
        raise InputError("shape must be dominant")
    per = []
    for m in lam:
        opts = []
        for s in range(size_bound + 1):
            opts.extend(_partitions(s, max(m - 1, 0)))
        per.append(opts)
    out = []
    for combo in product(*per):
        if sum(sum(p) for p in combo) <= size_bound:
            out.append(tuple(combo))
    out.sort(key=lambda r: (sum(sum(p) for p in r), r))
    return out


def par_size(rho) -> int:
    return sum(sum(p) for p in rho)


def turning_points(lam) -> list[Fraction]:
    pts = {Fraction(0), Fraction(1)}
    for m in lam:
        if m > 0:
            pts.update(Fraction(k, m) for k in range(m + 1))
    return sorted(pts)


def par_to_path(datum: CartanDatum, rho, lam) -> SiLSPath:
    """The extremal element ``pi_rho`` of its connected component."""
    lam = Weight(lam)
    rho = tuple(tuple(p) for p in rho)
    if len(rho) != datum.rank or len(lam) != datum.rank:
        raise InputError("partition tuple and shape must have one entry per simple index")
    for p, m in zip(rho, lam):
        if p and len(p) >= m:
            raise InputError("partition too long for the shape")
        if any(p[k] < p[k + 1] for k in range(len(p) - 1)) or any(v <= 0 for v in p):
            raise InputError("partition parts must be positive and weakly decreasing")
    J = parabolic_of_weight(datum, lam)
    pts = turning_points(lam)
    ds = []
    bs = [Fraction(0)]
    for t in pts[1:]:
        xi = []
        for p, m in zip(rho, lam):
            if m == 0:
                xi.append(0)
                continue
            k = -(-t.numerator * m // t.denominator)
            xi.append(p[k - 1] if k - 1 < len(p) else 0)
        x = pij(translation(datum, xi), J)
        if ds and ds[-1] == x:
            bs[-1] = t
        else:
            ds.append(x)
            bs.append(t)
    return SiLSPath(lam, ds, bs)


def path_to_par(pi: SiLSPath):
    """Read off the partition tuple of a path of extremal form, or None."""
    d = pi.datum
    lam = pi.shape
    J = parabolic_of_weight(d, lam)
    xis = []
    for x in pi.directions:
        # recover a translation whose projection is x
        if x.fin != floor_coset(x.fin, J) or pij(translation(d, x.trans), J) != x:
            return None
        xis.append(x.trans)
    tp = set(turning_points(lam))
    if any(b not in tp for b in pi.breaks):
        return None
    rho = []
    for i, m in enumerate(lam):
        if m <= 1:
            rho.append(())
            continue
        parts = []
        for k in range(1, m + 1):
            edge = Fraction(k, m)
            u = next(u for u in range(1, len(pi.breaks)) if pi.breaks[u] >= edge)
            parts.append(xis[u - 1][i])
        if parts[-1] != 0 or any(parts[k] < parts[k + 1] for k in range(m - 1)):
            return None
        rho.append(tuple(v for v in parts if v > 0))
    rho = tuple(rho)
    if par_to_path(d, rho, lam) != pi:
        return None
    return rho


def crystal_component_reps(datum: CartanDatum, lam, q_min: int):
    """``{rho: pi_rho}`` for all components meeting the window ``qwt >= q_min``."""
    reps = {}
    seen = set()
    for rho in par_elements(lam, -q_min):
        pi = par_to_path(datum, rho, lam)
        assert pi not in seen
        seen.add(pi)
        reps[rho] = pi
    return reps


# -- quantum LS projection ------------------------------------------------------------

class QLSPath:
    """Directions in ``W^J`` with rational breaks."""

    __slots__ = ("shape", "directions", "breaks", "_hash")

    def __init__(self, shape, directions, breaks):
        self.shape = Weight(shape)
        self.directions = tuple(directions)
        self.breaks = tuple(Fraction(b) for b in breaks)
        self._hash = hash((self.shape, self.directions, self.breaks))

    def __eq__(self, other):
        if not isinstance(other, QLSPath):
            return NotImplemented
        return (self.shape, self.directions, self.breaks) == (other.shape, other.directions, other.breaks)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        ds = ", ".join(repr(w) for w in self.directions)
        return f"QLSPath({ds} ; {', '.join(map(str, self.breaks))})"

    @property
    def datum(self):
        return self.directions[0].datum


def _merge(shape, ds, bs, cls):
    out_d, out_b = [], [bs[0]]
    for k, x in enumerate(ds):
        if out_d and out_d[-1] == x:
            out_b[-1] = bs[k + 1]
        else:
            out_d.append(x)
            out_b.append(bs[k + 1])
    return cls(shape, out_d, out_b)


def cl_project(pi: SiLSPath) -> QLSPath:
    J = parabolic_of_weight(pi.datum, pi.shape)
    ds = [floor_coset(x.fin, J) for x in pi.directions]
    return _merge(pi.shape, ds, pi.breaks, QLSPath)


def _qls_slopes(eta: QLSPath, i: int):
    d = eta.datum
    return [pair_simple_coroot(d, w.act_weight(eta.shape), i) for w in eta.directions]


def _qls_reflect(eta: QLSPath, i: int):
    d = eta.datum
    J = parabolic_of_weight(d, eta.shape)
    s = d.reflection(d.theta) if i == 0 else d.simple[i - 1]
    return lambda w: floor_coset(s * w, J)


def qls_e(i: int, eta: QLSPath) -> QLSPath | None:
    r = _e_core(eta.directions, eta.breaks, _qls_slopes(eta, i), _qls_reflect(eta, i))
    return None if r is None else _merge(eta.shape, r[0], r[1], QLSPath)


def qls_f(i: int, eta: QLSPath) -> QLSPath | None:
    r = _f_core(eta.directions, eta.breaks, _qls_slopes(eta, i), _qls_reflect(eta, i))
    return None if r is None else _merge(eta.shape, r[0], r[1], QLSPath)


def qls_eps(i: int, eta: QLSPath) -> int:
    return -int(min(_heights(eta.breaks, _qls_slopes(eta, i))))


def qls_phi(i: int, eta: QLSPath) -> int:
    h = _heights(eta.breaks, _qls_slopes(eta, i))
    return int(h[-1] - min(h))


# -- enumeration --------------------------------------------------------------------------

def _lam_pair(lam, y: AffineWeylElement) -> int:
    return sum(a * b for a, b in zip(lam, y.trans))


def max_denominator(datum: CartanDatum, lam) -> int:
    return max(1, max(sum(a * b for a, b in zip(lam, datum.coroot_of[r])) for r in datum.positive_roots))


def _bounded_up(start, J, lam, den, bound, budget):
    """Nodes strictly above ``start`` reachable in the integrality subgraph with pairing at most ``bound``."""
    cache = J.__dict__.setdefault("_bounded_up", {})
    key = (start, den, tuple(lam), bound)
    r = cache.get(key)
    if r is not None:
        return r
    seen = {start}
    queue = deque([start])
    out = []
    while queue:
        z = queue.popleft()
        for c in _covers_a(z, J, lam, den):
            if c in seen or _lam_pair(lam, c) > bound:
                continue
            seen.add(c)
            out.append(c)
            queue.append(c)
            if len(seen) > budget[0]:
                raise ResourceError("enumeration frontier budget exceeded")
    r = tuple(out)
    cache[key] = r
    return r


def enumerate_sils(datum: CartanDatum, lam, x: AffineWeylElement | None = None, q_min: int = 0,
                   budget: int | None = None) -> list[SiLSPath]:
    """All paths with ``kappa >= Pi^J(x)`` and ``qwt >= q_min``, sorted.

    ``budget`` caps both the search frontier and the output size; it defaults
    to the module-level ``DEFAULT_BUDGET``.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    lam = Weight(lam)
    if len(lam) != datum.rank or any(v < 0 for v in lam):
        raise InputError("shape must be a dominant weight of the right rank")
    if x is None:
        x = identity(datum)
    J = parabolic_of_weight(datum, lam)
    start = pij(x, J)
    N = max_denominator(datum, lam)
    fracs = sorted({Fraction(k, dd) for dd in range(1, N + 1) for k in range(1, dd)})
    box = [budget]
    kappas = [start] + list(_bounded_up(start, J, lam, 1, -q_min, box))
    out = []

    def grow(y, right, partial, tail_d, tail_b):
        p = _lam_pair(lam, y)
        # close the path at 0
        q = partial - right * p
        if q >= q_min:
            out.append(SiLSPath(lam, (y,) + tail_d, (Fraction(0), right) + tail_b))
            if len(out) > budget:
                raise ResourceError("enumeration budget exceeded")
        for a in fracs:
            if a >= right:
                break
            newp = partial - (right - a) * p
            if newp - a * p < q_min:
                continue
            bound = (newp - q_min) / a
            bound = bound.numerator // bound.denominator
            for z in _bounded_up(y, J, lam, a.denominator, bound, box):
                grow(z, a, newp, (y,) + tail_d, (right,) + tail_b)

    for k in kappas:
        grow(k, Fraction(1), Fraction(0), (), ())
    out.sort(key=SiLSPath.sort_key)
    return out


__all__ = [
    "AffineWeight", "QLSPath", "SiLSPath", "chain_exists", "cl_project",
    "crystal_component_reps", "e_op", "enumerate_sils", "eps", "f_op", "h_function",
    "m_value", "max_denominator", "par_elements", "par_size", "par_to_path", "path_to_par",
    "phi", "qls_e", "qls_eps", "qls_f", "qls_phi", "qwt_of", "simple_act_path",
    "simple_affine_root_weight", "straight_path", "t_shift", "turning_points", "validate",
    "weyl_act_path", "wt",
]
