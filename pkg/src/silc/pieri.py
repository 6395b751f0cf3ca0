"""Pieri-Chevalley coefficients on the semi-infinite flag, truncated in q-degree."""

from __future__ import annotations

from .afweyl import AffineWeylElement
from .errors import InputError
from .gchar import GradedCharacter, gch_demazure
from .report import Report, first_difference
from .rootdata import CartanDatum, Weight
from .silspath import enumerate_sils, wt
from .smt import deo


def is_w_af_ge0(x: AffineWeylElement) -> bool:
    return all(c >= 0 for c in x.trans)


def lowest_dual(datum: CartanDatum, lam) -> Weight:
    """``-w0 lam``."""
    return Weight(-v for v in datum.w0.act_weight(tuple(lam)))


class KClassCombo:
    """``sum_y c_y [O_{Q(y)}]`` with truncated coefficients, for the twist ``base_twist``."""

    def __init__(self, base_twist, q_min: int, terms: dict):
        self.base_twist = Weight(base_twist)
        self.q_min = q_min
        self.terms = {y: c for y, c in terms.items() if c.terms}
        bad = [y for y in self.terms if not is_w_af_ge0(y)]
        assert not bad, f"keys outside the nonnegative part: {bad}"

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def keys(self):
        return [y for y, _ in self.items()]

    def total(self) -> GradedCharacter:
        out = GradedCharacter(self.q_min)
        for _, c in self.items():
            out = out + c
        return out

    def layer(self, k: int) -> dict:
        """``{y: coefficient of q^k}`` with empty entries dropped."""
        out = {}
        for y, c in self.items():
            g = c.layer(k)
            if g.terms:
                out[y] = g
        return out


def _check(datum, lam, x):
    lam = Weight(lam)
    if len(lam) != datum.rank or any(v < 0 for v in lam):
        raise InputError("weight must be dominant of the right rank")
    if not is_w_af_ge0(x):
        raise InputError(f"{x!r} has a translation part outside the positive coroot cone")
    return lam


def pieri_coeffs(datum: CartanDatum, lam, x: AffineWeylElement, q_min: int) -> KClassCombo:
    """Bucket the paths of shape ``-w0 lam`` above ``x`` by their initial direction."""
    lam = _check(datum, lam, x)
    mu = lowest_dual(datum, lam)
    buckets: dict = {}
    for eta in enumerate_sils(datum, mu, x, q_min):
        y = deo(eta, x)
        w = wt(eta)
        t = buckets.setdefault(y, {})
        key = (w.finite, w.delta)
        t[key] = t.get(key, 0) + 1
    return KClassCombo(lam, q_min, {y: GradedCharacter(q_min, t) for y, t in buckets.items()})


def verify_pieri(datum: CartanDatum, lam, x: AffineWeylElement, mu, q_min: int, drop=None) -> Report:
    """Compare both sides of the character identity behind the Pieri-Chevalley formula.

    ``drop`` removes one key from the coefficient table; used as a negative control.
    """
    lam = _check(datum, lam, x)
    mu = Weight(mu)
    if len(mu) != datum.rank or any(v < 0 for v in mu):
        raise InputError("weight must be dominant of the right rank")
    combo = pieri_coeffs(datum, lam, x, q_min)
    shape = lowest_dual(datum, mu)
    left = gch_demazure(datum, lowest_dual(datum, tuple(a + b for a, b in zip(lam, mu))), x, q_min)
    terms: dict = {}
    for y, coeff in combo.items():
        if drop is not None and y == drop:
            continue
        for (nu, a), c in coeff.terms.items():
            inner = gch_demazure(datum, shape, y, q_min - a)
            for (nu2, k), c2 in inner.terms.items():
                key = (tuple(p + r for p, r in zip(nu, nu2)), k + a)
                terms[key] = terms.get(key, 0) + c * c2
    right = GradedCharacter(q_min, terms)
    diff = first_difference(left.terms, right.terms)
    return Report(
        "pieri",
        diff is None,
        {"lambda": list(lam), "mu": list(mu), "x": repr(x), "q_min": q_min,
         "keys": len(combo.terms), "dropped": None if drop is None else repr(drop)},
        None if diff is None else {"cell": [list(diff[0][0]), diff[0][1]], "left": diff[1], "right": diff[2]},
    )


__all__ = ["KClassCombo", "is_w_af_ge0", "lowest_dual", "pieri_coeffs", "verify_pieri"]
