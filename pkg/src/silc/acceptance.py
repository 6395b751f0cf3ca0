"""The acceptance suite: one runner per criterion, each returning a Report.

Runners take the types and windows as arguments so the command-line
``selftest`` can run them on a single root system.  Reports never contain
timings, so repeated runs are byte-identical.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from .afweyl import (
    AffineWeylElement, box_elements, element_of, identity, min_lift, parabolic, pij, sell,
    si_leq, si_leq_translation,
)
from .gchar import GroupAlgebraElement, demazure_op, demazure_word, verify_gch_translation
from .nildaha import verify_nildaha
from .oracles import brute_lifts, brute_sils, finite_pieri_data
from .pieri import is_w_af_ge0, pieri_coeffs, verify_pieri
from .report import Report
from .rootdata import build_cartan, dominant_weights
from .silspath import (
    AffineWeight, e_op, enumerate_sils, eps, f_op, pair_simple_coroot, phi,
    simple_affine_root_weight, t_shift, validate, wt,
)
from .smt import verify_dem_decomposition, verify_smt_iso


def _fundamentals(n):
    return [tuple(int(k == i) for k in range(n)) for i in range(n)]


def _subsets(n):
    return [J for r in range(n + 1) for J in combinations(range(1, n + 1), r)]


def _merge(name, reports, details=None):
    bad = next((r for r in reports if not r.ok), None)
    out = dict(details or {})
    out["checks"] = len(reports)
    out["parts"] = [r.details for r in reports]
    return Report(name, bad is None, out, None if bad is None else bad.witness)


# -- 1. order oracle -----------------------------------------------------------------------------

def order_oracle(types, bound: int = 3, Js=None, max_gap=None, sample=None) -> Report:
    """Compare the two order tests on a box.

    ``max_gap`` skips pairs far apart in ``sell``; ``sample`` limits the left
    element to a seeded random subset of the box.
    """
    details = {}
    for s, n in types:
        d = build_cartan(s, n)
        for J in (_subsets(n) if Js is None else Js):
            els = box_elements(d, J, bound)
            left = els if sample is None else random.Random(0).sample(els, min(sample, len(els)))
            for x in left:
                for y in els:
                    if max_gap is not None and abs(sell(x) - sell(y)) > max_gap:
                        continue
                    if si_leq(x, y, J) != si_leq_translation(x, y):
                        return Report("order-oracle", False, details,
                                      {"type": f"{s}{n}", "J": list(J), "x": repr(x), "y": repr(y)})
            details[f"{s}{n} J={list(J)}"] = len(left) * len(els)
    return Report("order-oracle", True, details)


# -- 2. Deodhar lifts -----------------------------------------------------------------------------

def lift_minimality(series: str = "A", rank: int = 2, Js=None, sell_range=(-4, 4), bound: int = 3,
                    sample=None) -> Report:
    d = build_cartan(series, rank)
    if Js is None:
        Js = [tuple(range(1, k + 1)) for k in range(rank + 1)]
    xs = [x for x in box_elements(d, (), bound) if sell_range[0] <= sell(x) <= sell_range[1]]
    if sample is not None:
        xs = random.Random(0).sample(xs, min(sample, len(xs)))
    details = {"type": f"{series}{rank}", "x_count": len(xs)}
    for J in Js:
        P = parabolic(d, J)
        ys = box_elements(d, J, bound)
        count = 0
        for x in xs:
            px = pij(x, J)
            for y in ys:
                if not si_leq(px, y, J):
                    continue
                m = min_lift(x, y, J)
                lifts = [z for z in brute_lifts(y, P.members, bound) if si_leq(x, z, ())]
                ok = pij(m, J) == y and si_leq(x, m, ()) and all(si_leq(m, z, ()) for z in lifts)
                count += 1
                if not ok:
                    return Report("lift-minimality", False, details,
                                  {"J": list(J), "x": repr(x), "y": repr(y), "lift": repr(m)})
        details[f"J={list(J)}"] = count
    return Report("lift-minimality", True, details)


# -- 3. crystal axioms ----------------------------------------------------------------------------

def crystal_axioms(cases, q_min: int = -2, xi_bound: int = 2) -> Report:
    details = {}
    for s, n, lam in cases:
        d = build_cartan(s, n)
        paths = enumerate_sils(d, lam, identity(d), q_min)
        shifts = list(product(range(-xi_bound, xi_bound + 1), repeat=n))

        def fail(what, p, i, extra=None):
            w = {"type": f"{s}{n}", "lambda": list(lam), "path": repr(p), "i": i, "axiom": what}
            w.update(extra or {})
            return Report("crystal-axioms", False, details, w)

        for p in paths:
            if not validate(p):
                return fail("valid", p, None)
            w = wt(p)
            for i in range(n + 1):
                a = simple_affine_root_weight(d, i)
                f, e = f_op(i, p), e_op(i, p)
                if f is not None and not (validate(f) and e_op(i, f) == p and wt(f) == w - a):
                    return fail("f", p, i)
                if e is not None and not (validate(e) and f_op(i, e) == p and wt(e) == w + a):
                    return fail("e", p, i)
                if phi(i, p) - eps(i, p) != pair_simple_coroot(d, w.finite, i):
                    return fail("phi-eps", p, i)
                k, q = 0, p
                while (q := e_op(i, q)) is not None:
                    k += 1
                if k != eps(i, p):
                    return fail("eps-count", p, i)
                for xi in shifts:
                    T = t_shift(xi, p)
                    if f_op(i, T) != (t_shift(xi, f) if f is not None else None) \
                            or e_op(i, T) != (t_shift(xi, e) if e is not None else None) \
                            or eps(i, T) != eps(i, p) or phi(i, T) != phi(i, p) \
                            or wt(T) != AffineWeight(w.finite, w.delta - sum(l * c for l, c in zip(lam, xi))):
                        return fail("translation", p, i, {"xi": list(xi)})
        details[f"{s}{n} {list(lam)}"] = len(paths)
    return Report("crystal-axioms", True, details)


# -- 4. enumeration completeness -----------------------------------------------------------------

def enumeration_completeness(cases, q_min: int = -2) -> Report:
    details = {}
    for s, n, lam in cases:
        d = build_cartan(s, n)
        fast = {(p.directions, p.breaks) for p in enumerate_sils(d, lam, identity(d), q_min)}
        slow = brute_sils(d, lam, q_min)
        details[f"{s}{n} {list(lam)}"] = len(fast)
        if fast != slow:
            extra = sorted(fast - slow, key=repr)[:1]
            missing = sorted(slow - fast, key=repr)[:1]
            return Report("enumeration", False, details,
                          {"type": f"{s}{n}", "lambda": list(lam), "extra": repr(extra), "missing": repr(missing)})
    return Report("enumeration", True, details)


# -- 5. translation identity ------------------------------------------------------------------------

def gch_translation_cases(series: str, rank: int, count: int = 20, seed: int = 0, max_coord: int = 2,
                          xi_range=(-1, 2)):
    d = build_cartan(series, rank)
    rng = random.Random(seed)
    lams = [lam for lam in dominant_weights(d, max_coord) if any(lam)]
    xs = [x for x in box_elements(d, (), 1)]
    xis = list(product(range(xi_range[0], xi_range[1] + 1), repeat=rank))
    cases = set()
    while len(cases) < count:
        cases.add((rng.choice(lams), rng.choice(xs), rng.choice(xis)))
    return sorted(cases, key=lambda c: (tuple(c[0]), c[1].sort_key(), c[2]))


def gch_translation(types, count: int = 20, q_min: int = -2, **case_options) -> Report:
    reports = []
    for s, n in types:
        d = build_cartan(s, n)
        for lam, x, xi in gch_translation_cases(s, n, count, **case_options):
            r = verify_gch_translation(d, lam, x, xi, q_min)
            r.details.update({"type": f"{s}{n}", "lambda": list(lam), "x": repr(x), "xi": list(xi)})
            reports.append(r)
    return _merge("gch-translation", reports)


# -- 6. tensor products ----------------------------------------------------------------------------

def smt_iso(cases, q_min: int = -1, xi_bound: int = 3) -> Report:
    reports = []
    for s, n, lam, mu in cases:
        d = build_cartan(s, n)
        reports.append(verify_smt_iso(d, lam, mu, q_min, xi_bound=xi_bound))
        neg = verify_smt_iso(d, lam, mu, q_min, rule="reversed", xi_bound=xi_bound)
        reports.append(Report("smt-negative-control", not neg.ok,
                              {"type": f"{s}{n}", "stage": neg.details.get("stage")},
                              None if not neg.ok else {"reason": "reversed tensor rule was not detected"}))
    return _merge("smt-iso", reports)


# -- 7. Demazure decomposition and Pieri-Chevalley ------------------------------------------------

def dem_pieri(types, q_min: int = -2, max_coord: int = 2, max_sell: int = 3, fundamental_only: bool = False) -> Report:
    details = {}
    for s, n in types:
        d = build_cartan(s, n)
        xs = [x for x in box_elements(d, (), max(1, max_sell // 2))
              if is_w_af_ge0(x) and 0 <= sell(x) <= max_sell]
        ws = _fundamentals(n) if fundamental_only else dominant_weights(d, max_coord)
        count = 0
        for x in xs:
            for lam in ws:
                for mu in ws:
                    for r in (verify_dem_decomposition(d, lam, mu, x, q_min), verify_pieri(d, lam, x, mu, q_min)):
                        count += 1
                        if not r.ok:
                            return Report("dem-pieri", False, details, dict(r.details, witness=r.witness))
        # dropping a nonempty bucket must break the identity
        x = identity(d)
        lam = _fundamentals(n)[0]
        neg = verify_pieri(d, lam, x, lam, q_min, drop=x)
        if neg.ok:
            return Report("dem-pieri", False, details, {"reason": "dropped bucket was not detected"})
        details[f"{s}{n}"] = {"elements": len(xs), "checks": count}
    return Report("dem-pieri", True, details)


# -- 8. classical degeneration ------------------------------------------------------------------

def classical_pieri(series: str = "A", rank: int = 2, lams=None) -> Report:
    d = build_cartan(series, rank)
    if lams is None:
        lams = [_fundamentals(rank)[0], (1,) * rank]
    details = {}
    for lam in lams:
        for w in d.enumerate_weyl_group():
            x = AffineWeylElement(w, (0,) * rank)
            got = {}
            for y, g in pieri_coeffs(d, lam, x, 0).layer(0).items():
                got[y.fin] = {tuple(nu): c for nu, c in g.terms.items()}
                if any(y.trans):
                    got = None
                    break
            want = finite_pieri_data(d, lam, w)
            if got != want:
                return Report("classical-pieri", False, details,
                              {"lambda": list(lam), "x": repr(x), "affine": repr(got), "finite": repr(want)})
        details[str(list(lam))] = d.enumerate_weyl_group().__len__()
    return Report("classical-pieri", True, details)


# -- 9. nil-DAHA ------------------------------------------------------------------------------------

def nildaha_relations(types, samples: int = 200, seed: int = 0) -> Report:
    reports = []
    for s, n in types:
        d = build_cartan(s, n)
        reports.append(verify_nildaha(d, samples, seed))
        neg = verify_nildaha(d, samples, seed, corrupt=True)
        caught = not neg.ok and "cross[0]" in neg.details["failed"]
        reports.append(Report("nildaha-negative-control", caught,
                              {"type": f"{s}{n}", "failed": neg.details["failed"]},
                              None if caught else {"reason": "corrupted convention passed the cross relation at 0"}))
    return _merge("nildaha", reports)


# -- 10. Demazure operators -----------------------------------------------------------------------

def reduced_words(w):
    d = w.datum
    if w.length == 0:
        return [()]
    out = []
    for i in range(d.rank):
        if w.is_descent(i):
            out.extend(word + (i + 1,) for word in reduced_words(w * d.simple[i]))
    return sorted(set(out))


def demazure_facts(types, dims: int = 10) -> Report:
    details = {}
    for s, n in types:
        d = build_cartan(s, n)
        box = list(product(range(-2, 3), repeat=n))
        for nu in box:
            f = GroupAlgebraElement.monomial(nu)
            for i in range(1, n + 1):
                once = demazure_op(d, i, f)
                if demazure_op(d, i, once) != once:
                    return Report("demazure-facts", False, details, {"type": f"{s}{n}", "i": i, "nu": list(nu)})
        words = 0
        if n == 2:
            for w in d.enumerate_weyl_group():
                rws = reduced_words(w)
                words += len(rws)
                for lam in dominant_weights(d, 2):
                    f = GroupAlgebraElement.monomial(lam)
                    vals = {demazure_word(d, rw, f) for rw in rws}
                    if len(vals) != 1:
                        return Report("demazure-facts", False, details,
                                      {"type": f"{s}{n}", "w": list(w.word), "lambda": list(lam)})
        lams = sorted(dominant_weights(d, dims), key=lambda v: (sum(v), tuple(v)))[:dims]
        for lam in lams:
            ch = demazure_word(d, [i + 1 for i in d.w0.word], GroupAlgebraElement.monomial(lam))
            if ch.dimension() != d.weyl_dimension(lam):
                return Report("demazure-facts", False, details,
                              {"type": f"{s}{n}", "lambda": list(lam), "dimension": ch.dimension()})
        details[f"{s}{n}"] = {"monomials": len(box), "reduced_words": words, "dimensions": len(lams)}
    return Report("demazure-facts", True, details)


# -- suites -------------------------------------------------------------------------------------------

def full_suite():
    """The fixed acceptance criteria 1-10 as ``(number, thunk)`` pairs."""
    return [
        (1, lambda: order_oracle([("A", 1), ("A", 2), ("C", 2)])),
        (2, lambda: lift_minimality("A", 2)),
        (3, lambda: crystal_axioms([("A", 1, (1,)), ("A", 1, (2,)), ("A", 2, (1, 0)), ("A", 2, (1, 1))])),
        (4, lambda: enumeration_completeness([("A", 1, (1,)), ("A", 1, (2,)), ("A", 2, (1, 0)), ("A", 2, (1, 1))])),
        (5, lambda: gch_translation([("A", 1), ("A", 2)])),
        (6, lambda: smt_iso([("A", 1, (1,), (1,)), ("A", 1, (1,), (2,)), ("A", 2, (1, 0), (0, 1))])),
        (7, lambda: dem_pieri([("A", 1), ("A", 2)])),
        (8, lambda: classical_pieri("A", 2)),
        (9, lambda: nildaha_relations([("A", 1), ("A", 2), ("C", 2)])),
        (10, lambda: demazure_facts([("A", 1), ("A", 2), ("C", 2), ("G", 2), ("B", 3)])),
    ]


def type_suite(series: str, rank: int, q_min: int = -1):
    """The same checks restricted to one root system and a small window."""
    t = [(series, rank)]
    fund = _fundamentals(rank)
    shapes = [(series, rank, lam) for lam in fund]
    pairs = [(series, rank, fund[i], fund[j]) for i in range(rank) for j in range(i, rank)]
    if rank <= 2:
        order = {"bound": 2}
        lift = {"sell_range": (-2, 2), "bound": 2}
        cases = {}
        dem = {"max_coord": 1, "max_sell": 2}
    else:
        order = {"bound": 1, "Js": [(), (1,), tuple(range(1, rank + 1))], "max_gap": 2, "sample": 40}
        lift = {"Js": [(), (1,)], "sell_range": (-1, 1), "bound": 1, "sample": 12}
        cases = {"max_coord": 1, "xi_range": (0, 1)}
        dem = {"fundamental_only": True, "max_sell": 1}
    return [
        (1, lambda: order_oracle(t, **order)),
        (2, lambda: lift_minimality(series, rank, **lift)),
        (3, lambda: crystal_axioms(shapes, q_min, xi_bound=1)),
        (4, lambda: enumeration_completeness(shapes, q_min)),
        (5, lambda: gch_translation(t, count=10, q_min=q_min, **cases)),
        (6, lambda: smt_iso(pairs, q_min, xi_bound=2)),
        (7, lambda: dem_pieri(t, q_min, **dem)),
        (8, lambda: classical_pieri(series, rank)),
        (9, lambda: nildaha_relations(t, samples=50)),
        (10, lambda: demazure_facts(t, dims=5)),
    ]


def run_suite(suite, only=None) -> list[tuple[int, Report]]:
    out = []
    for number, thunk in suite:
        if only is not None and number not in only:
            continue
        out.append((number, thunk()))
    return out
