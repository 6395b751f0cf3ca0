"""Standard monomials in tensor products of semi-infinite LS path crystals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .afweyl import (
    AffineWeylElement, identity, min_lift, parabolic_of_weight, pij, si_leq,
    si_leq_translation, translation,
)
from .errors import InputError
from .gchar import GradedCharacter, gch_demazure
from .report import Report, first_difference
from .rootdata import CartanDatum, Weight
from .silspath import (
    AffineWeight, SiLSPath, e_op, enumerate_sils, eps, f_op, par_elements, par_size,
    par_to_path, phi, t_shift, wt,
)

RULES = ("kashiwara", "reversed")


@dataclass(frozen=True)
class TensorPair:
    left: SiLSPath
    right: SiLSPath

    @property
    def datum(self) -> CartanDatum:
        return self.left.datum

    def wt(self) -> AffineWeight:
        return wt(self.left) + wt(self.right)

    def __repr__(self):
        return f"{self.left!r} (x) {self.right!r}"


@dataclass(frozen=True)
class DefiningChain:
    left: tuple
    right: tuple

    @property
    def elements(self) -> tuple:
        return self.left + self.right


# -- tensor product rule ----------------------------------------------------------------

def _acts_left(i, pair, strict, rule):
    a = phi(i, pair.left)
    b = eps(i, pair.right)
    left = a > b if strict else a >= b
    if rule == "reversed":
        return not left
    if rule != "kashiwara":
        raise InputError(f"unknown tensor rule {rule!r}")
    return left


def tensor_e(i: int, pair: TensorPair, rule: str = "kashiwara") -> TensorPair | None:
    if _acts_left(i, pair, False, rule):
        p = e_op(i, pair.left)
        return None if p is None else TensorPair(p, pair.right)
    p = e_op(i, pair.right)
    return None if p is None else TensorPair(pair.left, p)


def tensor_f(i: int, pair: TensorPair, rule: str = "kashiwara") -> TensorPair | None:
    if _acts_left(i, pair, True, rule):
        p = f_op(i, pair.left)
        return None if p is None else TensorPair(p, pair.right)
    p = f_op(i, pair.right)
    return None if p is None else TensorPair(pair.left, p)


# -- initial direction ---------------------------------------------------------------------

def deo_chain(eta: SiLSPath, x: AffineWeylElement) -> list[AffineWeylElement]:
    """Minimal lifts of the directions of ``eta``, built from the last one back to the first."""
    d = eta.datum
    K = parabolic_of_weight(d, eta.shape)
    if not si_leq(pij(x, K), eta.kappa(), K):
        raise InputError(f"final direction of the path is not above the projection of {x!r}")
    out = []
    cur = x
    for y in reversed(eta.directions):
        cur = min_lift(cur, y, K, check=False)
        out.append(cur)
    out.reverse()
    return out


def deo(eta: SiLSPath, x: AffineWeylElement) -> AffineWeylElement:
    """Initial direction of ``eta`` with respect to ``x``."""
    return deo_chain(eta, x)[0]


# -- standardness -------------------------------------------------------------------------

def _margin(d: CartanDatum) -> int:
    return sum(d.two_rho_check) + 1


_WITNESS_CACHE: dict = {}


def _standard_witness(pair: TensorPair, margin: int | None = None):
    """Smallest ``N`` such that ``x_N = kappa(right) t_{-N gamma}`` works, or None.

    ``gamma`` is the sum of the simple coroots in ``K``.  The lifts for
    ``x_N`` are those for ``x_0`` right-translated, so only ``x_0`` is lifted.
    """
    pi, eta = pair.left, pair.right
    d = pi.datum
    if margin is None:
        margin = _margin(d)
    key = (pi.shape, eta.shape, pi.kappa(), eta.directions, eta.breaks, margin)
    if key in _WITNESS_CACHE:
        return _WITNESS_CACHE[key]
    J = parabolic_of_weight(d, pi.shape)
    K = parabolic_of_weight(d, eta.shape)
    kp = pi.kappa()
    d0 = deo(eta, eta.kappa())
    gamma = tuple(1 if k in K.members else 0 for k in range(d.rank))
    outside = [k for k in range(d.rank) if k not in J.members and k not in K.members]
    moving = [k for k in range(d.rank) if k in K.members and k not in J.members]
    result = None
    n = 0
    while True:
        z = pij(d0 * translation(d, tuple(-n * g for g in gamma)), J)
        if any(z.trans[k] > kp.trans[k] for k in outside):
            break
        if all(z.trans[k] <= kp.trans[k] for k in moving) and si_leq_translation(z, kp):
            result = n
            break
        if not moving or all(z.trans[k] <= kp.trans[k] - margin for k in moving):
            break
        n += 1
    _WITNESS_CACHE[key] = result
    return result


def is_standard(pair: TensorPair) -> bool:
    """Whether some ``x >= y`` projects to the final direction of the left and initial direction of the right."""
    return _standard_witness(pair) is not None


def is_defining_chain(pair: TensorPair, chain: DefiningChain) -> bool:
    pi, eta = pair.left, pair.right
    d = pi.datum
    J = parabolic_of_weight(d, pi.shape)
    K = parabolic_of_weight(d, eta.shape)
    if len(chain.left) != len(pi.directions) or len(chain.right) != len(eta.directions):
        return False
    if any(pij(a, J) != b for a, b in zip(chain.left, pi.directions)):
        return False
    if any(pij(a, K) != b for a, b in zip(chain.right, eta.directions)):
        return False
    seq = chain.elements
    return all(si_leq_translation(seq[k + 1], seq[k]) for k in range(len(seq) - 1))


def find_defining_chain(pair: TensorPair) -> DefiningChain | None:
    pi, eta = pair.left, pair.right
    n = _standard_witness(pair)
    if n is None:
        return None
    d = pi.datum
    J = parabolic_of_weight(d, pi.shape)
    K = parabolic_of_weight(d, eta.shape)
    gamma = tuple(-n if k in K.members else 0 for k in range(d.rank))
    ys = deo_chain(eta, eta.kappa() * translation(d, gamma))
    xs = []
    cur = ys[0]
    for x in reversed(pi.directions):
        cur = min_lift(cur, x, J, check=False)
        xs.append(cur)
    xs.reverse()
    chain = DefiningChain(tuple(xs), tuple(ys))
    if not is_defining_chain(pair, chain):
        raise AssertionError(f"constructed chain for {pair!r} is not a defining chain")
    return chain


def demazure_membership(pair: TensorPair, x: AffineWeylElement) -> bool:
    """Both lifting conditions of the Demazure-type subset above ``x``."""
    pi, eta = pair.left, pair.right
    d = pi.datum
    J = parabolic_of_weight(d, pi.shape)
    K = parabolic_of_weight(d, eta.shape)
    if not si_leq(pij(x, K), eta.kappa(), K):
        return False
    return si_leq(pij(deo(eta, x), J), pi.kappa(), J)


# -- component labels -------------------------------------------------------------------

def _check_par(rho, shape, what):
    if len(rho) != len(shape):
        raise InputError(f"{what}: one partition per simple index expected")
    for p, m in zip(rho, shape):
        if any(v <= 0 for v in p) or any(p[k] < p[k + 1] for k in range(len(p) - 1)):
            raise InputError(f"{what}: parts must be positive and weakly decreasing")
        if p and len(p) >= m:
            raise InputError(f"{what}: partition too long for the shape")


def theta_admissible(chi, xi, lam, mu) -> bool:
    for i, (m, n) in enumerate(zip(lam, mu)):
        if m == 0 or n == 0:
            if xi[i] != 0:
                return False
        elif xi[i] < (chi[i][0] if chi[i] else 0):
            return False
    return True


def theta(rho, chi, xi, lam, mu):
    """Merge two partition tuples and a translation into a label for ``lam + mu``."""
    rho = tuple(tuple(p) for p in rho)
    chi = tuple(tuple(p) for p in chi)
    xi = tuple(xi)
    _check_par(rho, lam, "left partitions")
    _check_par(chi, mu, "right partitions")
    if len(xi) != len(lam) or not theta_admissible(chi, xi, lam, mu):
        raise InputError("translation is not admissible for these partitions")
    out = []
    for i, (m, n) in enumerate(zip(lam, mu)):
        if m == 0:
            out.append(chi[i])
        elif n == 0:
            out.append(rho[i])
        else:
            c = xi[i]
            padded = list(rho[i]) + [0] * (m - 1 - len(rho[i]))
            parts = [v + c for v in padded] + [c] + list(chi[i])
            out.append(tuple(v for v in parts if v > 0))
    return tuple(out)


def theta_domain(lam, mu, size_bound: int):
    """All admissible ``(rho, chi, xi)`` whose merged label has size at most ``size_bound``."""
    lam, mu = tuple(lam), tuple(mu)
    free = [i for i in range(len(lam)) if lam[i] and mu[i]]
    out = []
    for rho in par_elements(lam, size_bound):
        for chi in par_elements(mu, size_bound - par_size(rho)):
            rest = size_bound - par_size(rho) - par_size(chi)
            ranges = []
            for i in free:
                lo = chi[i][0] if chi[i] else 0
                ranges.append(range(lo, rest // lam[i] + 1))
            for cs in product(*ranges):
                if sum(lam[i] * c for i, c in zip(free, cs)) > rest:
                    continue
                xi = [0] * len(lam)
                for i, c in zip(free, cs):
                    xi[i] = c
                out.append((rho, chi, tuple(xi)))
    return out


def extremal_pair(datum: CartanDatum, rho, chi, xi, lam, mu) -> TensorPair:
    return TensorPair(t_shift(xi, par_to_path(datum, rho, lam)), par_to_path(datum, chi, mu))


# -- verification ---------------------------------------------------------------------------

def _pair_json(pair):
    return {"left": repr(pair.left), "right": repr(pair.right)}


def verify_dem_decomposition(datum: CartanDatum, lam, mu, x: AffineWeylElement | None = None,
                             q_min: int = 0) -> Report:
    """Graded character of ``lam + mu`` above ``x`` as a sum over right factors."""
    lam, mu = Weight(lam), Weight(mu)
    if x is None:
        x = identity(datum)
    total = tuple(a + b for a, b in zip(lam, mu))
    left = gch_demazure(datum, total, x, q_min)
    # a left factor above deo(eta, x) has q-degree at most -<lam, xi_x>
    lo = q_min + min(0, sum(a * b for a, b in zip(lam, x.trans)))
    terms: dict = {}
    count = 0
    for eta in enumerate_sils(datum, mu, x, lo):
        w = wt(eta)
        inner = gch_demazure(datum, lam, deo(eta, x), q_min - w.delta)
        count += 1
        for (nu, k), c in inner.terms.items():
            key = (tuple(a + b for a, b in zip(nu, w.finite)), k + w.delta)
            terms[key] = terms.get(key, 0) + c
    right = GradedCharacter(q_min, terms)
    diff = first_difference(left.terms, right.terms)
    return Report(
        "dem-decomposition",
        diff is None,
        {"lambda": list(lam), "mu": list(mu), "x": repr(x), "q_min": q_min,
         "right_paths": count, "terms": len(left.terms)},
        None if diff is None else {"cell": [list(diff[0][0]), diff[0][1]], "left": diff[1], "right": diff[2]},
    )


def _closure(pairs, rank, rule, test):
    for pair in pairs:
        for i in range(rank + 1):
            for name, op in (("e", tensor_e), ("f", tensor_f)):
                r = op(i, pair, rule)
                if r is not None and not test(r):
                    return {"pair": _pair_json(pair), "op": f"{name}{i}", "result": _pair_json(r)}
    return None


def verify_smt_iso(datum: CartanDatum, lam, mu, q_min: int, rule: str = "kashiwara",
                   xi_bound: int = 3) -> Report:
    """Closure, character and component checks for standard pairs on a q-window."""
    lam, mu = Weight(lam), Weight(mu)
    n = datum.rank
    e = identity(datum)
    details: dict = {"lambda": list(lam), "mu": list(mu), "q_min": q_min, "rule": rule}

    def fail(stage, witness):
        return Report("smt-iso", False, dict(details, stage=stage), witness)

    # closure of standard pairs under the root operators
    L = enumerate_sils(datum, lam, e, q_min)
    R = enumerate_sils(datum, mu, e, q_min)
    pairs = [TensorPair(p, h) for p in L for h in R if wt(p).delta + wt(h).delta >= q_min]
    std = [p for p in pairs if is_standard(p)]
    details["pairs"] = len(pairs)
    details["standard"] = len(std)
    w = _closure(std, n, rule, is_standard)
    if w is not None:
        return fail("closure", w)

    # the Demazure-type subset above e: character, standardness and f-stability
    rep = verify_dem_decomposition(datum, lam, mu, e, q_min)
    if not rep.ok:
        return fail("character", rep.witness)
    dem = []
    for h in R:
        y = deo(h, e)
        for p in enumerate_sils(datum, lam, y, q_min - wt(h).delta):
            dem.append(TensorPair(p, h))
    details["demazure_pairs"] = len(dem)
    for pair in dem:
        if not is_standard(pair):
            return fail("demazure-standard", {"pair": _pair_json(pair)})
        for i in range(n + 1):
            r = tensor_f(i, pair, rule)
            if r is not None and not demazure_membership(r, e):
                return fail("demazure-f-stable", {"pair": _pair_json(pair), "op": f"f{i}",
                                                  "result": _pair_json(r)})

    # extremal pairs: standardness criterion over a box of translations
    bound = max(1, -q_min)
    free = [i for i in range(n) if lam[i] and mu[i]]
    checked = 0
    for rho in par_elements(lam, bound):
        for chi in par_elements(mu, bound):
            for cs in product(range(-xi_bound, xi_bound + 1), repeat=len(free)):
                xi = [0] * n
                for i, c in zip(free, cs):
                    xi[i] = c
                pair = extremal_pair(datum, rho, chi, xi, lam, mu)
                want = theta_admissible(chi, xi, lam, mu)
                checked += 1
                if is_standard(pair) != want:
                    return fail("extremal-criterion", {"rho": rho, "chi": chi, "xi": xi, "expected": want})
    details["extremal_checked"] = checked

    # labels: the merge is a size-preserving bijection onto the labels of lam + mu
    total = tuple(a + b for a, b in zip(lam, mu))
    target = set(par_elements(total, bound))
    image = {}
    for rho, chi, xi in theta_domain(lam, mu, bound):
        lab = theta(rho, chi, xi, lam, mu)
        if lab in image:
            return fail("label-injective", {"label": lab, "first": image[lab], "second": (rho, chi, xi)})
        image[lab] = (rho, chi, xi)
        pw = extremal_pair(datum, rho, chi, xi, lam, mu).wt()
        if pw != AffineWeight(total, -par_size(lab)) or wt(par_to_path(datum, lab, total)) != pw:
            return fail("label-weight", {"label": lab, "triple": (rho, chi, xi)})
    if set(image) != target:
        missing = sorted(target - set(image))
        return fail("label-surjective", {"missing": missing[:1], "extra": sorted(set(image) - target)[:1]})
    details["labels"] = len(target)
    return Report("smt-iso", True, details)


__all__ = [
    "DefiningChain", "TensorPair", "deo", "deo_chain", "demazure_membership",
    "extremal_pair", "find_defining_chain", "is_defining_chain", "is_standard",
    "tensor_e", "tensor_f", "theta", "theta_admissible", "theta_domain",
    "verify_dem_decomposition", "verify_smt_iso",
]
