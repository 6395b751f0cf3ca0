"""Command-line interface: ``silc <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import acceptance, silspath
from .afweyl import (
    AffineWeylElement, box_elements, from_word, min_lift, pij, sell, si_covers, si_leq,
    si_leq_translation,
)
from .errors import InputError, ResourceError, SilcError
from .gchar import gch_demazure, verify_gch_translation
from .nildaha import verify_nildaha
from .pieri import pieri_coeffs, verify_pieri
from .report import Report
from .rootdata import build_cartan
from .silspath import SiLSPath, enumerate_sils, validate, wt
from .smt import verify_dem_decomposition, verify_smt_iso

SCHEMA = "silc/1"

COMMANDS = (
    "order", "pij", "min-lift", "enumerate", "gch", "gch-shift", "smt-check", "dem-check",
    "pieri", "pieri-check", "nildaha-check", "graph", "path-check", "selftest",
)

# job-file keys and their argparse destinations
JOB_KEYS = {
    "series": "type", "type": "type", "rank": "rank", "cmd": "command", "lambda": "lam",
    "mu": "mu", "x": "x", "y": "y", "xi": "xi", "qmin": "qmin", "q_min": "qmin", "J": "J",
    "format": "format", "budget": "budget", "seed": "seed", "samples": "samples",
    "bound": "bound", "rule": "rule", "path": "path", "criteria": "criteria",
}

DEFAULTS = {"format": "json", "qmin": None, "budget": silspath.DEFAULT_BUDGET, "seed": 0,
            "samples": 100, "bound": 1, "rule": "kashiwara"}


# -- parsing -----------------------------------------------------------------------------

def parse_vector(text, what: str) -> tuple[int, ...]:
    if isinstance(text, (list, tuple)):
        vals = text
    else:
        parts = str(text).replace(",", " ").split()
        try:
            vals = [int(p) for p in parts]
        except ValueError:
            raise InputError(f"{what}: expected integers, got {text!r}") from None
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in vals):
        raise InputError(f"{what}: expected integers, got {text!r}")
    return tuple(vals)


def parse_element(datum, text, what: str = "element") -> AffineWeylElement:
    """``"word ; translation"`` with affine simple indices in the word."""
    if isinstance(text, dict):
        word, trans = text.get("word", []), text.get("trans")
    else:
        if ";" not in str(text):
            raise InputError(f"{what}: expected 'word ; translation', got {text!r}")
        word, trans = str(text).split(";", 1)
    word = parse_vector(word, what + " word")
    trans = parse_vector(trans, what + " translation")
    if len(trans) == 1 and trans[0] == 0 and datum.rank > 1:
        trans = (0,) * datum.rank
    if len(trans) != datum.rank:
        raise InputError(f"{what}: translation needs {datum.rank} entries")
    for a in word:
        if not 0 <= a <= datum.rank:
            raise InputError(f"{what}: simple index {a} out of range 0..{datum.rank}")
    return from_word(datum, word, trans)


def parse_fraction(text, where: str) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"malformed rational {text!r} at {where}") from None


def load_path(datum, data) -> SiLSPath:
    """A path from its JSON form; positions in error messages are JSON pointers."""
    if not isinstance(data, dict):
        raise InputError("path: expected an object")
    try:
        shape = parse_vector(data["shape"], "path shape")
        dirs = [parse_element(datum, d, f"/directions/{k}") for k, d in enumerate(data["directions"])]
        breaks = [parse_fraction(b, f"/breaks/{k}") for k, b in enumerate(data["breaks"])]
    except KeyError as exc:
        raise InputError(f"path: missing field {exc.args[0]!r}") from None
    if len(breaks) != len(dirs) + 1:
        raise InputError("path: need one more break than directions")
    return SiLSPath(shape, dirs, breaks)


def load_job(path: str) -> dict:
    """Read a JSON job file into argparse destinations."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read job file: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"job file is not valid JSON (line {exc.lineno}, column {exc.colno})") from None
    if not isinstance(data, dict):
        raise InputError("job file must contain a JSON object")
    out = {}
    for k, v in data.items():
        if k not in JOB_KEYS:
            raise InputError(f"unknown job key {k!r}")
        out[JOB_KEYS[k]] = v
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="silc", description="Semi-infinite flag combinatorics in exact arithmetic.")
    p.add_argument("command", nargs="?", choices=COMMANDS)
    p.add_argument("--type", help="root system series, e.g. A")
    p.add_argument("--rank", type=int)
    p.add_argument("--lambda", dest="lam", help="dominant weight, comma separated")
    p.add_argument("--mu", help="second dominant weight")
    p.add_argument("--x", help="affine element 'word ; translation'")
    p.add_argument("--y", help="affine element 'word ; translation'")
    p.add_argument("--xi", help="coroot vector for translations")
    p.add_argument("--qmin", type=int, help="lowest q-degree kept")
    p.add_argument("--J", help="parabolic indices (1-based), comma separated")
    p.add_argument("--format", choices=("json", "text", "dot"))
    p.add_argument("--budget", type=int, help="cap on enumerated nodes and paths")
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int, help="random samples for nildaha-check")
    p.add_argument("--bound", type=int, help="translation box for graph")
    p.add_argument("--rule", choices=("kashiwara", "reversed"), help="tensor rule for smt-check")
    p.add_argument("--corrupt", action="store_true", default=None, help="use the corrupted convention")
    p.add_argument("--path", help="JSON file holding a path (path-check)")
    p.add_argument("--criteria", help="selftest: comma separated criterion numbers")
    p.add_argument("--job", help="JSON job file; flags override its values")
    return p


def resolve(argv) -> argparse.Namespace:
    ns = build_parser().parse_args(argv)
    merged = dict(DEFAULTS)
    if ns.job:
        merged.update(load_job(ns.job))
    for k, v in vars(ns).items():
        if v is not None or k not in merged:
            merged[k] = v
    if not merged.get("command"):
        raise InputError("no command given")
    if merged["command"] not in COMMANDS:
        raise InputError(f"unknown command {merged['command']!r}")
    return argparse.Namespace(**merged)


# -- serialization ---------------------------------------------------------------------

def element_json(x: AffineWeylElement) -> dict:
    return {"word": [i + 1 for i in x.fin.word], "trans": list(x.trans)}


def character_json(terms: dict) -> list:
    """``{(weight, q): coeff}`` as sorted records."""
    return [{"weight": list(nu), "q": k, "coeff": c} for (nu, k), c in sorted(terms.items()) if c]


def path_json(pi: SiLSPath) -> dict:
    return {"shape": list(pi.shape), "directions": [element_json(x) for x in pi.directions],
            "breaks": [f"{b.numerator}/{b.denominator}" for b in pi.breaks]}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=_fallback)


def _fallback(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, AffineWeylElement):
        return element_json(v)
    if isinstance(v, (set, frozenset)):
        return sorted(v, key=repr)
    raise TypeError(f"cannot serialize {type(v).__name__}")


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {dumps(v)}")
        return lines
    if isinstance(obj, list):
        return [f"{pad}- {dumps(v)}" for v in obj]
    return [pad + dumps(obj)]


def emit(obj: dict, fmt: str, out) -> None:
    if fmt == "text":
        out.write("\n".join(_text(obj)) + "\n")
    else:
        out.write(dumps(dict(obj, schema=SCHEMA)) + "\n")


# -- commands ---------------------------------------------------------------------------

def _datum(a):
    if a.type is None or a.rank is None:
        raise InputError("--type and --rank are required")
    return build_cartan(a.type, int(a.rank))


def _weight(a, d, key, name):
    v = getattr(a, key, None)
    if v is None:
        raise InputError(f"--{name} is required")
    v = parse_vector(v, name)
    if len(v) != d.rank:
        raise InputError(f"{name}: expected {d.rank} entries")
    return v


def _elem(a, d, key, default_identity=False):
    v = getattr(a, key, None)
    if v is None:
        if default_identity:
            return AffineWeylElement(d.identity, (0,) * d.rank)
        raise InputError(f"--{key} is required")
    return parse_element(d, v, key)


def _q(a) -> int:
    return 0 if a.qmin is None else int(a.qmin)


def _J(a):
    v = getattr(a, "J", None)
    return () if v is None else parse_vector(v, "J")


def cmd_order(a):
    d = _datum(a)
    x, y, J = _elem(a, d, "x"), _elem(a, d, "y"), _J(a)
    r = si_leq(x, y, J)
    cross = si_leq_translation(x, y)
    rep = Report("order", r == cross, {"result": r, "translation_test": cross})
    return rep, {"result": r, "oracle": cross, "x": element_json(x), "y": element_json(y), "J": list(J)}


def cmd_pij(a):
    d = _datum(a)
    x, J = _elem(a, d, "x"), _J(a)
    return None, {"result": element_json(pij(x, J)), "J": list(J)}


def cmd_min_lift(a):
    d = _datum(a)
    x, y, J = _elem(a, d, "x"), _elem(a, d, "y"), _J(a)
    m = min_lift(x, y, J)
    return None, {"result": element_json(m), "sell": sell(m), "J": list(J)}


def cmd_enumerate(a):
    d = _datum(a)
    lam, x = _weight(a, d, "lam", "lambda"), _elem(a, d, "x", True)
    paths = enumerate_sils(d, lam, x, _q(a))
    return None, {"count": len(paths), "paths": [dict(path_json(p), wt={"weight": list(wt(p).finite),
                                                                        "q": wt(p).delta}) for p in paths]}


def cmd_gch(a):
    d = _datum(a)
    lam, x = _weight(a, d, "lam", "lambda"), _elem(a, d, "x", True)
    g = gch_demazure(d, lam, x, _q(a))
    return None, {"q_min": g.q_min, "character": character_json(g.terms)}


def cmd_gch_shift(a):
    d = _datum(a)
    lam, x = _weight(a, d, "lam", "lambda"), _elem(a, d, "x", True)
    return verify_gch_translation(d, lam, x, _weight(a, d, "xi", "xi"), _q(a)), None


def cmd_smt_check(a):
    d = _datum(a)
    return verify_smt_iso(d, _weight(a, d, "lam", "lambda"), _weight(a, d, "mu", "mu"),
                          _q(a), rule=a.rule), None


def cmd_dem_check(a):
    d = _datum(a)
    return verify_dem_decomposition(d, _weight(a, d, "lam", "lambda"), _weight(a, d, "mu", "mu"),
                                    _elem(a, d, "x", True), _q(a)), None


def cmd_pieri(a):
    d = _datum(a)
    combo = pieri_coeffs(d, _weight(a, d, "lam", "lambda"), _elem(a, d, "x", True), _q(a))
    return None, {"q_min": combo.q_min,
                  "terms": [{"y": element_json(y), "coeff": character_json(c.terms)} for y, c in combo.items()]}


def cmd_pieri_check(a):
    d = _datum(a)
    return verify_pieri(d, _weight(a, d, "lam", "lambda"), _elem(a, d, "x", True),
                        _weight(a, d, "mu", "mu"), _q(a)), None


def cmd_nildaha_check(a):
    d = _datum(a)
    return verify_nildaha(d, int(a.samples), int(a.seed), corrupt=bool(getattr(a, "corrupt", False))), None


def cmd_path_check(a):
    d = _datum(a)
    if a.path is None:
        raise InputError("--path is required")
    data = a.path
    if isinstance(data, str):
        try:
            with open(data, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read path file: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"path file is not valid JSON (line {exc.lineno}, column {exc.colno})") from None
    pi = load_path(d, data)
    ok = validate(pi)
    out = {"path": path_json(pi), "valid": ok}
    if ok:
        w = wt(pi)
        out["wt"] = {"weight": list(w.finite), "q": w.delta}
    return Report("path-check", ok, out, None if ok else {"reason": "not a semi-infinite LS path"}), None


def graph_dot(d, J, bound: int) -> str:
    nodes = box_elements(d, J, bound)
    names = {x: f"n{k}" for k, x in enumerate(nodes)}
    lines = ["digraph si_bruhat {", "  rankdir=BT;"]
    for x in nodes:
        lines.append(f'  {names[x]} [label="{x!r}"];')
    for x in nodes:
        for beta, y in si_covers(x, J):
            if y in names:
                root = ",".join(str(c) for c in beta.finite_part)
                lines.append(f'  {names[x]} -> {names[y]} [label="({root})+{beta.delta_coeff}d"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_graph(a):
    d = _datum(a)
    J, bound = _J(a), int(a.bound)
    if a.format == "dot":
        return None, graph_dot(d, J, bound)
    nodes = box_elements(d, J, bound)
    names = set(nodes)
    edges = [{"from": element_json(x), "to": element_json(y), "root": list(b.finite_part), "n": b.delta_coeff}
             for x in nodes for b, y in si_covers(x, J) if y in names]
    return None, {"nodes": [element_json(x) for x in nodes], "edges": edges}


def cmd_selftest(a):
    if a.type is not None or a.rank is not None:
        d = _datum(a)
        suite = acceptance.type_suite(d.series, d.rank, -1 if a.qmin is None else int(a.qmin))
    else:
        suite = acceptance.full_suite()
    only = None if a.criteria is None else set(parse_vector(a.criteria, "criteria"))
    results = acceptance.run_suite(suite, only)
    ok = all(r.ok for _, r in results)
    body = {"criteria": [dict(r.to_json(), criterion=n) for n, r in results]}
    return Report("selftest", ok, body), None


HANDLERS = {
    "order": cmd_order, "pij": cmd_pij, "min-lift": cmd_min_lift, "enumerate": cmd_enumerate,
    "gch": cmd_gch, "gch-shift": cmd_gch_shift, "smt-check": cmd_smt_check,
    "dem-check": cmd_dem_check, "pieri": cmd_pieri, "pieri-check": cmd_pieri_check,
    "nildaha-check": cmd_nildaha_check, "graph": cmd_graph, "path-check": cmd_path_check,
    "selftest": cmd_selftest,
}


def _selftest_text(rep: Report) -> str:
    lines = []
    for c in rep.details["criteria"]:
        status = "PASS" if c["ok"] else "FAIL"
        lines.append(f"criterion {c['criterion']}: {status} {c['check']}")
        if not c["ok"]:
            lines.append(f"  witness: {dumps(c.get('witness'))}")
    return "\n".join(lines) + "\n"


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    fmt = "json"
    try:
        a = resolve(sys.argv[1:] if argv is None else argv)
        fmt = a.format
        silspath.DEFAULT_BUDGET = int(a.budget)
        rep, payload = HANDLERS[a.command](a)
        if isinstance(payload, str):
            out.write(payload)
            return 0
        if rep is not None:
            if a.command == "selftest" and fmt == "text":
                out.write(_selftest_text(rep))
            else:
                emit(dict(rep.to_json(), **(payload or {})), fmt, out)
            return 0 if rep.ok else 1
        emit(dict(payload, check=a.command, ok=True), fmt, out)
        return 0
    except SilcError as exc:
        code = exc.exit_code
        kind = {2: "input", 3: "resource"}.get(code, "verification")
        _error(out, fmt, kind, str(exc))
        return code
    except RecursionError:
        _error(out, fmt, "resource", "recursion limit reached")
        return 3
    except MemoryError:
        _error(out, fmt, "resource", "out of memory")
        return 3
    except SystemExit as exc:
        # argparse reports usage errors this way
        return 2 if exc.code not in (0, None) else 0


def _error(out, fmt, kind, message):
    if fmt == "json":
        out.write(dumps({"schema": SCHEMA, "ok": False, "error": {"kind": kind, "message": message}}) + "\n")
    else:
        out.write(f"error ({kind}): {message}\n")


__all__ = ["character_json", "element_json", "graph_dot", "load_job", "load_path", "main",
           "parse_element", "parse_vector", "path_json"]
