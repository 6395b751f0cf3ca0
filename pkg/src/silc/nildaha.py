"""Nil-DAHA operators on ``Z[q, q^-1][P]`` and the translation-class formulas.

Convention: ``e^delta`` is realized as ``q**DELTA_EXP``.  Hence
``s_0(e^nu) = q^{DELTA_EXP <nu, theta^vee>} e^{s_theta nu}`` and
``e(alpha_0) = q^{DELTA_EXP} e^{-theta}``.  The choice is certified by
``verify_nildaha``, not assumed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InexactDivision, InputError
from .gchar import divide_one_minus
from .report import Report
from .rootdata import CartanDatum, Weight

DELTA_EXP = 1


class LaurentCharacter:
    """Finitely supported ``sum c e^nu q^k``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        for (nu, k), c in (terms or {}).items():
            if c:
                key = (Weight(nu), int(k))
                t[key] = t.get(key, 0) + c
        self.terms = {key: c for key, c in t.items() if c}

    @classmethod
    def monomial(cls, nu, k: int = 0, c: int = 1):
        return cls({(tuple(nu), k): c})

    @classmethod
    def one(cls, rank: int):
        return cls.monomial((0,) * rank)

    def __add__(self, other):
        t = dict(self.terms)
        for key, c in other.terms.items():
            t[key] = t.get(key, 0) + c
        return LaurentCharacter(t)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int):
        return LaurentCharacter({key: c * v for key, v in self.terms.items()})

    def __mul__(self, other):
        t = {}
        for (n1, k1), c1 in self.terms.items():
            for (n2, k2), c2 in other.terms.items():
                key = (tuple(a + b for a, b in zip(n1, n2)), k1 + k2)
                t[key] = t.get(key, 0) + c1 * c2
        return LaurentCharacter(t)

    def __eq__(self, other):
        if not isinstance(other, LaurentCharacter):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], tuple(kv[0][0])))

    def __repr__(self):
        return " + ".join(f"{c}*e{tuple(nu)}q^{k}" for (nu, k), c in self.items()) or "0"


# -- the affine Weyl group on Z[q^{+-1}][P] -------------------------------------------------

def _pair_theta_check(datum: CartanDatum, nu) -> int:
    return sum(a * b for a, b in zip(nu, datum.theta_check))


def _reflect(datum: CartanDatum, nu, alpha_w, coroot) -> tuple:
    n = sum(a * b for a, b in zip(nu, coroot))
    return tuple(v - n * a for v, a in zip(nu, alpha_w))


def _simple_weight(datum: CartanDatum, i: int) -> tuple:
    return tuple(datum.cartan[k][i - 1] for k in range(datum.rank))


def _simple_coroot(datum: CartanDatum, i: int) -> tuple:
    return tuple(int(k == i - 1) for k in range(datum.rank))


def s_weight(datum: CartanDatum, i: int, nu, twist: int = DELTA_EXP) -> tuple[tuple, int]:
    """``s_i nu`` as ``(finite weight, q-exponent)``."""
    if i == 0:
        n = _pair_theta_check(datum, nu)
        return _reflect(datum, nu, datum.theta_weight, datum.theta_check), twist * n
    return _reflect(datum, nu, _simple_weight(datum, i), _simple_coroot(datum, i)), 0


def alpha(datum: CartanDatum, i: int) -> tuple[tuple, int]:
    """``alpha_i`` as ``(finite weight, q-exponent)``."""
    if i == 0:
        return tuple(-v for v in datum.theta_weight), DELTA_EXP
    return _simple_weight(datum, i), 0


def _check_index(datum, i):
    if not isinstance(i, int) or not 0 <= i <= datum.rank:
        raise InputError(f"affine simple index {i!r} out of range 0..{datum.rank}")


def s_act(datum: CartanDatum, i: int, f: LaurentCharacter, twist: int = DELTA_EXP) -> LaurentCharacter:
    _check_index(datum, i)
    t = {}
    for (nu, k), c in f.terms.items():
        nu2, dk = s_weight(datum, i, nu, twist)
        key = (nu2, k + dk)
        t[key] = t.get(key, 0) + c
    return LaurentCharacter(t)


def s0_act(datum: CartanDatum, f: LaurentCharacter, twist: int = DELTA_EXP) -> LaurentCharacter:
    return s_act(datum, 0, f, twist)


def e_op_mult(nu, f: LaurentCharacter, k: int = 0) -> LaurentCharacter:
    """Multiplication by ``e^nu q^k``."""
    return LaurentCharacter({(tuple(a + b for a, b in zip(nu, n2)), k + k2): c
                             for (n2, k2), c in f.terms.items()})


def demazure_affine(datum: CartanDatum, i: int, f: LaurentCharacter, twist: int = DELTA_EXP) -> LaurentCharacter:
    """``(f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i})``."""
    a, ka = alpha(datum, i)
    neg = tuple(-v for v in a)
    num = dict(f.terms)
    for (nu, k), c in e_op_mult(neg, s_act(datum, i, f, twist), -ka).terms.items():
        num[(nu, k)] = num.get((nu, k), 0) - c
    return LaurentCharacter(divide_one_minus(num, neg, -ka))


def t_op(datum: CartanDatum, i: int, f: LaurentCharacter, twist: int = DELTA_EXP) -> LaurentCharacter:
    return demazure_affine(datum, i, f, twist) - f


def cross_term(datum: CartanDatum, i: int, nu, twist: int = DELTA_EXP) -> LaurentCharacter:
    """``(e(s_i nu) - e(nu)) / (1 - e(alpha_i))`` as a Laurent polynomial."""
    snu, k = s_weight(datum, i, nu, twist)
    a, ka = alpha(datum, i)
    num = {(snu, k): 1}
    key = (tuple(nu), 0)
    num[key] = num.get(key, 0) - 1
    return LaurentCharacter(divide_one_minus(num, a, ka))


def affine_cartan(datum: CartanDatum) -> list[list[int]]:
    """``A[i][j] = <alpha_j, alpha_i^vee>`` over ``0..rank``."""
    n = datum.rank
    A = [[0] * (n + 1) for _ in range(n + 1)]
    A[0][0] = 2
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            A[i][j] = datum.cartan[i - 1][j - 1]
        A[i][0] = -datum.theta_weight[i - 1]
        A[0][i] = -sum(c * datum.cartan[k][i - 1] for k, c in enumerate(datum.theta_check))
    return A


def braid_order(datum: CartanDatum, i: int, j: int) -> int | None:
    """Order of ``s_i s_j``; None when infinite."""
    A = affine_cartan(datum)
    return {0: 2, 1: 3, 2: 4, 3: 6}.get(A[i][j] * A[j][i])


# -- relation checks ------------------------------------------------------------------------

def _random_weight(rng, rank, r=3):
    return tuple(rng.randint(-r, r) for _ in range(rank))


def verify_nildaha(datum: CartanDatum, samples: int = 100, seed: int = 0, corrupt: bool = False) -> Report:
    """Check the defining relations on seeded random monomials.

    ``corrupt`` flips the q-twist of ``s_0`` while keeping ``e(alpha_0)``.
    """
    twist = -DELTA_EXP if corrupt else DELTA_EXP
    rng = random.Random(seed)
    n = datum.rank
    idx = range(n + 1)
    pairs = [(i, j, braid_order(datum, i, j)) for i in idx for j in idx if i < j]
    pairs = [p for p in pairs if p[2] is not None]
    counts = {"quadratic": 0, "braid": 0, "lattice": 0, "cross": 0}
    failed: dict = {}

    def T(i, f):
        return t_op(datum, i, f, twist)

    def record(rel, i, nu, f, exc=None):
        name = f"{rel}[{i}]"
        if name not in failed:
            w = {"relation": rel, "index": i, "nu": list(nu) if nu is not None else None,
                 "monomial": repr(f)}
            if exc is not None:
                w["error"] = str(exc)
            failed[name] = w

    def check(rel, i, nu, f, fn):
        counts[rel] += 1
        try:
            ok = fn()
        except InexactDivision as exc:
            record(rel, i, nu, f, exc)
            return
        if not ok:
            record(rel, i, nu, f)

    for _ in range(samples):
        f = LaurentCharacter.monomial(_random_weight(rng, n), rng.randint(-2, 2))
        nu = _random_weight(rng, n)
        nu2 = _random_weight(rng, n)
        for i in idx:
            check("quadratic", i, None, f, lambda: (lambda g: T(i, g + f).is_zero())(T(i, f)))
        for i, j, m in pairs:
            def braid(i=i, j=j, m=m):
                a, b = f, f
                for k in range(m):
                    a = T(i if k % 2 == 0 else j, a)
                    b = T(j if k % 2 == 0 else i, b)
                return a == b
            check("braid", (i, j), None, f, braid)
        check("lattice", None, nu, f,
              lambda: e_op_mult(nu, e_op_mult(nu2, f)) == e_op_mult(tuple(a + b for a, b in zip(nu, nu2)), f)
              and e_op_mult((0,) * n, f) == f)
        for i in idx:
            def cross(i=i):
                snu, k = s_weight(datum, i, nu, twist)
                left = T(i, e_op_mult(nu, f)) - e_op_mult(snu, T(i, f), k)
                return left == cross_term(datum, i, nu, twist) * f
            check("cross", i, nu, f, cross)

    first = next(iter(failed.values()), None)
    return Report(
        "nildaha",
        not failed,
        {"series": datum.series, "rank": n, "samples": samples, "seed": seed, "corrupt": corrupt,
         "checks": counts, "failed": sorted(failed), "delta_exponent": DELTA_EXP},
        first,
    )


# -- translation classes -----------------------------------------------------------------------

TAGS = ("plain", "s0")


@dataclass(frozen=True)
class TranslationKClass:
    """``[C_lam (x) O_{Q(y)}(mu)]`` with ``y = t_xi`` (plain) or ``s_0 t_xi``."""

    tag: str
    xi: tuple
    bundle_twist: tuple
    character_twist: tuple

    def __post_init__(self):
        if self.tag not in TAGS:
            raise InputError(f"unknown class tag {self.tag!r}")


def bfu_translation_action(datum: CartanDatum, i: int, c: TranslationKClass) -> dict:
    """Image of a translation class under ``T~_i``.

    Returns ``{class: coefficient}``; coefficients are Laurent polynomials in
    the character twists ``te(nu)``, stored as ``e^nu q^k``, and each target
    class carries character twist zero.
    """
    _check_index(datum, i)
    if c.tag != "plain":
        raise InputError("the translation formulas apply to plain translation classes only")
    n = datum.rank
    lam = tuple(c.character_twist)
    base = TranslationKClass("plain", tuple(c.xi), tuple(c.bundle_twist), (0,) * n)
    a, ka = alpha(datum, i)
    neg_lam = tuple(-v for v in lam)
    s_lam, k = s_weight(datum, i, lam)
    neg_s = (tuple(-v for v in s_lam), -k)
    if i == 0:
        num = {(neg_lam, 0): 1}
        num[neg_s] = num.get(neg_s, 0) - 1
        out = {base: LaurentCharacter(divide_one_minus(num, a, ka))}
        out[TranslationKClass("s0", tuple(c.xi), tuple(c.bundle_twist), (0,) * n)] = \
            LaurentCharacter({neg_s: 1})
    else:
        top = (tuple(u + v for u, v in zip(neg_s[0], a)), neg_s[1] + ka)
        num = {(neg_lam, 0): 1}
        num[top] = num.get(top, 0) - 1
        out = {base: LaurentCharacter(divide_one_minus(num, a, ka))}
    return {cls: coef for cls, coef in out.items() if not coef.is_zero()}


def bfu_twist(nu, c: TranslationKClass) -> TranslationKClass:
    """``te(nu)`` on a class: the character twist moves by ``-nu``."""
    return TranslationKClass(c.tag, c.xi, c.bundle_twist,
                             tuple(a - b for a, b in zip(c.character_twist, nu)))


def expand_classes(combo: dict) -> dict:
    """Absorb the ``te``-coefficients into character twists: ``{(class, q-power): int}``."""
    out: dict = {}
    for cls, coef in combo.items():
        for (nu, k), v in coef.terms.items():
            key = (bfu_twist(nu, cls), k)
            out[key] = out.get(key, 0) + v
    return {key: v for key, v in out.items() if v}


__all__ = [
    "DELTA_EXP", "LaurentCharacter", "TranslationKClass", "affine_cartan", "alpha",
    "bfu_translation_action", "bfu_twist", "braid_order", "cross_term", "demazure_affine",
    "e_op_mult", "expand_classes", "s0_act", "s_act", "s_weight", "t_op", "verify_nildaha",
]
