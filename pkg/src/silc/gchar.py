"""Truncated graded characters and finite Demazure operators."""

from __future__ import annotations

from .afweyl import AffineWeylElement, identity, translation
from .errors import InexactDivision, InputError
from .report import Report, first_difference
from .rootdata import CartanDatum, FiniteWeylElement, Weight
from .silspath import enumerate_sils, wt


def _clean(d):
    return {k: v for k, v in d.items() if v}


def divide_one_minus(terms: dict, beta, a: int = 0) -> dict:
    """Exact quotient of ``sum c (nu, k)`` by ``1 - q^a e^beta``.

    Keys are ``(weight, q-exponent)``.  Monomials are grouped into strings
    ``nu + t beta``; along each string the quotient is a prefix sum, and a
    nonzero string total means the division is not exact.
    """
    beta = tuple(beta)
    j = next((j for j, b in enumerate(beta) if b != 0), None)
    if j is None:
        if a == 0:
            raise ZeroDivisionError("division by zero")
    strings: dict = {}
    for (nu, k), c in terms.items():
        if not c:
            continue
        t = nu[j] // beta[j] if j is not None else k // a
        rep = (tuple(v - t * b for v, b in zip(nu, beta)), k - t * a)
        strings.setdefault(rep, {})[t] = strings.setdefault(rep, {}).get(t, 0) + c
    out = {}
    for (r, rk), coeffs in strings.items():
        acc = 0
        ts = sorted(coeffs)
        if sum(coeffs.values()) != 0:
            raise InexactDivision(f"remainder along the string through {r}")
        for idx, t in enumerate(ts):
            acc += coeffs[t]
            stop = ts[idx + 1] if idx + 1 < len(ts) else t
            if acc:
                for u in range(t, stop):
                    key = (tuple(v + u * b for v, b in zip(r, beta)), rk + u * a)
                    out[key] = out.get(key, 0) + acc
    return _clean(out)


class GroupAlgebraElement:
    """Finitely supported element of ``Z[P]``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {Weight(k): v for k, v in (terms or {}).items() if v}

    @classmethod
    def monomial(cls, nu, c: int = 1):
        return cls({tuple(nu): c})

    def __add__(self, other):
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return GroupAlgebraElement(t)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int):
        return GroupAlgebraElement({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        t = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                t[k] = t.get(k, 0) + v1 * v2
        return GroupAlgebraElement(t)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return " + ".join(f"{v}*e{tuple(k)}" for k, v in self.items()) or "0"

    def items(self):
        return sorted(self.terms.items())

    def dimension(self) -> int:
        return sum(self.terms.values())

    def relabel(self, fn):
        t = {}
        for k, v in self.terms.items():
            k2 = tuple(fn(k))
            t[k2] = t.get(k2, 0) + v
        return GroupAlgebraElement(t)

    def negate_weights(self):
        return self.relabel(lambda k: tuple(-v for v in k))


class GradedCharacter:
    """Element of ``Z[P]((q^-1))`` known in q-degrees ``>= q_min``."""

    __slots__ = ("q_min", "terms")

    def __init__(self, q_min: int, terms=None):
        self.q_min = q_min
        self.terms = {}
        for (nu, k), v in (terms or {}).items():
            if v and k >= q_min:
                key = (Weight(nu), k)
                self.terms[key] = self.terms.get(key, 0) + v
        self.terms = _clean(self.terms)

    def __add__(self, other):
        qm = max(self.q_min, other.q_min)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return GradedCharacter(qm, t)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int):
        return GradedCharacter(self.q_min, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        """Product; the result is exact down to the weaker of the two windows."""
        top1 = max((k for _, k in self.terms), default=self.q_min)
        top2 = max((k for _, k in other.terms), default=other.q_min)
        qm = max(self.q_min + top2, other.q_min + top1)
        t = {}
        for (n1, k1), v1 in self.terms.items():
            for (n2, k2), v2 in other.terms.items():
                k = k1 + k2
                if k < qm:
                    continue
                key = (tuple(a + b for a, b in zip(n1, n2)), k)
                t[key] = t.get(key, 0) + v1 * v2
        return GradedCharacter(qm, t)

    def shift_q(self, s: int):
        """Multiply by ``q^s``."""
        return GradedCharacter(self.q_min + s, {(nu, k + s): v for (nu, k), v in self.terms.items()})

    def truncate(self, q_min: int):
        if q_min < self.q_min:
            raise InputError("cannot widen a truncated character")
        return GradedCharacter(q_min, self.terms)

    def layer(self, k: int) -> GroupAlgebraElement:
        return GroupAlgebraElement({nu: v for (nu, kk), v in self.terms.items() if kk == k})

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], tuple(kv[0][0])))

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.q_min == other.q_min and self.terms == other.terms

    def agrees_with(self, other) -> bool:
        qm = max(self.q_min, other.q_min)
        return self.truncate(qm).terms == other.truncate(qm).terms

    def __repr__(self):
        body = " + ".join(f"{v}*e{tuple(nu)}q^{k}" for (nu, k), v in self.items()) or "0"
        return f"[{body}]_(q>={self.q_min})"


# -- graded Demazure characters ---------------------------------------------------------

_GCH_CACHE: dict = {}


def gch_demazure(datum: CartanDatum, lam, x: AffineWeylElement | None = None, q_min: int = 0) -> GradedCharacter:
    """``sum e^{fwt} q^{qwt}`` over paths above ``x`` in the window."""
    lam = Weight(lam)
    if x is None:
        x = identity(datum)
    key = (datum.series, datum.rank, lam, x, q_min)
    r = _GCH_CACHE.get(key)
    if r is None:
        t = {}
        for pi in enumerate_sils(datum, lam, x, q_min):
            w = wt(pi)
            k = (w.finite, w.delta)
            t[k] = t.get(k, 0) + 1
        r = GradedCharacter(q_min, t)
        _GCH_CACHE[key] = r
    return r


def clear_cache():
    _GCH_CACHE.clear()


def verify_gch_translation(datum: CartanDatum, lam, x: AffineWeylElement, xi, q_min: int) -> Report:
    """``gch V_{x t_xi}(lam) = q^{-<lam, xi>} gch V_x(lam)`` on the window."""
    lam = Weight(lam)
    s = -sum(a * b for a, b in zip(lam, xi))
    left = gch_demazure(datum, lam, x * translation(datum, xi), q_min)
    right = gch_demazure(datum, lam, x, q_min - s).shift_q(s)
    diff = first_difference(left.terms, right.terms)
    return Report(
        "gch-translation",
        diff is None,
        {"shift": s, "q_min": q_min, "terms": len(left.terms)},
        None if diff is None else {"cell": [list(diff[0][0]), diff[0][1]], "left": diff[1], "right": diff[2]},
    )


# -- finite Demazure operators ---------------------------------------------------------------

def _simple_root_weight(datum: CartanDatum, i: int):
    return tuple(datum.cartan[k][i - 1] for k in range(datum.rank))


def demazure_op(datum: CartanDatum, i: int, f: GroupAlgebraElement) -> GroupAlgebraElement:
    """``D_i(e^mu) = (e^mu - e^{s_i mu - alpha_i}) / (1 - e^{-alpha_i})`` extended linearly."""
    if not 1 <= i <= datum.rank:
        raise InputError(f"simple index {i} out of range")
    a = _simple_root_weight(datum, i)
    num = {}
    for mu, c in f.terms.items():
        num[(mu, 0)] = num.get((mu, 0), 0) + c
        n = mu[i - 1]
        nu = tuple(m - (n + 1) * v for m, v in zip(mu, a))
        num[(nu, 0)] = num.get((nu, 0), 0) - c
    q = divide_one_minus(num, tuple(-v for v in a))
    return GroupAlgebraElement({nu: c for (nu, _), c in q.items()})


def demazure_word(datum: CartanDatum, word, f: GroupAlgebraElement) -> GroupAlgebraElement:
    """``D_{i_1} ... D_{i_k} f`` for a word of 1-based indices."""
    for i in reversed(list(word)):
        f = demazure_op(datum, i, f)
    return f


def demazure_element(w: FiniteWeylElement, f: GroupAlgebraElement) -> GroupAlgebraElement:
    return demazure_word(w.datum, [i + 1 for i in w.word], f)


def finite_demazure_char(w: FiniteWeylElement, lam) -> GroupAlgebraElement:
    """``D_{w w0}(e^lam)``."""
    d = w.datum
    return demazure_element(w * d.w0, GroupAlgebraElement.monomial(lam))


def weyl_character(datum: CartanDatum, lam) -> GroupAlgebraElement:
    return demazure_element(datum.w0, GroupAlgebraElement.monomial(lam))


__all__ = [
    "GradedCharacter", "GroupAlgebraElement", "clear_cache", "demazure_element",
    "demazure_op", "demazure_word", "divide_one_minus", "finite_demazure_char",
    "gch_demazure", "verify_gch_translation", "weyl_character",
]
