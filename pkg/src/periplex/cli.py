"""Command-line front end: ``periplex <verb> ...``.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import characters as ch
from . import oracle, periplectic as pp, piclass
from .partitions import Bipartition, SignForm, classify_bipartition, enumerate_brp, from_sign_form, to_sign_form
from .weights import ParityWeight, Root, Weight

__all__ = ["run", "main", "parse_rationals"]


class InputError(ValueError):
    pass


def parse_rationals(text: str, what: str = "weight") -> list[Fraction]:
    """Comma-separated rationals such as ``"1,-3/2,0"``; empty string gives []."""
    if not text.strip():
        return []
    out = []
    for i, raw in enumerate(text.split(","), start=1):
        tok = raw.strip()
        try:
            if not tok or any(c in tok for c in ".eE") or tok.count("/") > 1:
                raise ValueError
            out.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"{what}: entry {i} ({raw!r}) is not a rational p/q") from None
    return out


def _blocks(text: str, what: str = "weight") -> tuple[list[Fraction], list[Fraction]]:
    """``"l1,l2;m1,m2"`` → (δ-block, ε-block); without ';' everything is ε-block."""
    if ";" in text:
        a, b = text.split(";", 1)
        return parse_rationals(a, what + " (lambda block)"), parse_rationals(b, what + " (mu block)")
    return [], parse_rationals(text, what)


def _json_arg(text: str, what: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{what}: invalid JSON ({e.msg} at column {e.colno})") from None
    if not isinstance(obj, dict):
        raise InputError(f"{what}: expected a JSON object")
    return obj


def _bipartition(text: str, n: int, kind: str = "BRP") -> Bipartition:
    obj = _json_arg(text, "bipartition")
    try:
        x = from_sign_form(SignForm.from_json(obj)) if "kappa" in obj else Bipartition.from_json(obj)
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(f"bipartition: {e}") from None
    pp._require(x, n, kind)
    return x


def _weight(text: str, n: int) -> Weight:
    vals = parse_rationals(text)
    if len(vals) != n:
        raise InputError(f"weight: expected {n} entries, got {len(vals)}")
    return Weight(tuple(vals))


def _w(w: Weight) -> list[str]:
    return [str(c) for c in w.eps]


def _root(r: Root) -> dict:
    return {"weight": _w(r.weight), "parity": r.parity}


def _emit(out: TextIO, obj) -> None:
    out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def cmd_classify(a, out: TextIO) -> int:
    delta = _weight(a.delta, a.n)
    x = pp.canonicalize(delta, a.n)
    cls = classify_bipartition(x, a.n)
    res = {
        "bipartition": x.to_json(),
        "classes": {"BRP": cls.brp, "BRP0": cls.brp0, "BRP00": cls.brp00},
        "levi": str(pp.levi_type(x, a.n)),
        "decomposition": pp.decompose(pp.zeta(x, a.n), a.n).to_json(),
    }
    if cls.brp0:
        res["sign_form"] = to_sign_form(x).to_json()
    _emit(out, res)
    return 0


def cmd_borels(a, out: TextIO) -> int:
    xs = enumerate_brp(a.n, "BRP00")
    edges = pp.hasse_edges(xs, pp.borel_included)
    if a.dot:
        out.write(pp.to_dot([str(x) for x in xs], edges, "borels"))
        return 0
    _emit(out, {
        "n": a.n,
        "borels": [
            {
                "bipartition": x.to_json(),
                "sign_form": to_sign_form(x).to_json(),
                "odd_roots": [_root(r) for r in pp.borel_odd_roots(x, a.n)],
                "dim": pp.borel_odd_dim(x, a.n),
            }
            for x in xs
        ],
        "edges": [list(e) for e in edges],
    })
    return 0


def cmd_parabolics(a, out: TextIO) -> int:
    xs = enumerate_brp(a.n, "BRP0")
    forms = [to_sign_form(x) for x in xs]
    edges = pp.hasse_edges(forms, lambda s, t: s != t and pp.parabolic_included(s, t))
    if a.dot:
        out.write(pp.to_dot([str(x) for x in xs], edges, "parabolics"))
        return 0
    res = {
        "n": a.n,
        "parabolics": [
            {"bipartition": x.to_json(), "sign_form": s.to_json(), "levi": str(pp.levi_type(x, a.n))}
            for x, s in zip(xs, forms)
        ],
    }
    if a.order:
        res["covers"] = [list(e) for e in edges]
    _emit(out, res)
    return 0


def cmd_dual(a, out: TextIO) -> int:
    x = _bipartition(a.bipartition, a.n, "BRP0")
    _emit(out, {"bipartition": x.to_json(), "dual": pp.hat_dual(x).to_json()})
    return 0


def cmd_weightmap(a, out: TextIO) -> int:
    n = a.n
    lam = _weight(a.weight, n)
    need = {"ringel": "parabolic", "inj-label": "borel", "tilt-label": "borel", "socle": "borel",
            "tilting-reflection": "root"}
    flag = need.get(a.map)
    if flag and getattr(a, flag) is None:
        raise InputError(f"--map {a.map} needs --{flag}")
    res: dict = {"map": a.map, "weight": _w(lam)}
    if a.map == "ringel":
        s = to_sign_form(_bipartition(a.parabolic, n, "BRP0"))
        res["parabolic"] = s.to_json()
        res["image"] = _w(pp.ringel_weight_map(s, lam))
    elif a.map == "duality":
        res["image"] = _w(pp.duality_weight_map(lam, n))
        if a.borel is not None:
            res["dual_borel"] = pp.hat_dual(_bipartition(a.borel, n, "BRP0")).to_json()
    elif a.map == "tilting-reflection":
        root = Root(_weight(a.root, n), 1)
        res["root"] = _root(root)
        res["image"] = _w(pp.tilting_odd_reflection(lam, root))
    else:
        x = _bipartition(a.borel, n, "BRP00")
        res["borel"] = x.to_json()
        if a.map == "socle":
            res["image"] = _w(pp.verma_socle_label(x, lam, n))
        else:
            p = pp.pi_predicates(x, lam, n)
            if a.map == "inj-label":
                res.update(injective=p.injective, image=_w(p.injective_label))
                if p.selfdual is not None:
                    res["selfdual"] = p.selfdual
            else:
                res.update(tilting_borel=p.tilting_label[0].to_json(), image=_w(p.tilting_label[1]))
    _emit(out, res)
    return 0


def cmd_piclass(a, out: TextIO) -> int:
    lam, mu = _blocks(a.weight)
    params = [int(p) for p in a.params.split(",")] if a.params else []
    zeta = parse_rationals(a.zeta, "zeta")[0] if a.zeta else None
    _emit(out, piclass.verdict(a.family, params, lam, mu, zeta))
    return 0


def cmd_char(a, out: TextIO) -> int:
    x = _bipartition(a.borel, a.n, "BRP00")
    lam = ParityWeight(_weight(a.weight, a.n), a.parity)
    _emit(out, ch.verma_character(x, lam, a.depth, a.n).to_json())
    return 0


def cmd_verify(a, out: TextIO) -> int:
    report = oracle.run_suite(a.n, a.suite, a.bound)
    out.write((report.dumps() if a.format == "json" else report.table()) + "\n")
    return 0 if report.ok else 1


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="periplex", description="Parabolic subalgebras and category O for pe(n), exactly.")
    sub = p.add_subparsers(dest="verb", required=True)

    def rank(sp):
        sp.add_argument("--n", type=int, required=True, help="rank of pe(n)")

    sp = sub.add_parser("classify", help="canonical bipartition and decomposition of a weight δ")
    rank(sp)
    sp.add_argument("--delta", required=True, help='weakly decreasing rationals, e.g. "5,-5"')
    sp.set_defaults(fn=cmd_classify)

    sp = sub.add_parser("borels", help="all Borel subalgebras with odd roots and inclusions")
    rank(sp)
    sp.add_argument("--dot", action="store_true", help="emit the inclusion Hasse diagram as DOT")
    sp.set_defaults(fn=cmd_borels)

    sp = sub.add_parser("parabolics", help="reduced parabolic subalgebras")
    rank(sp)
    sp.add_argument("--order", action="store_true", help="include inclusion covers")
    sp.add_argument("--dot", action="store_true", help="emit the inclusion Hasse diagram as DOT")
    sp.set_defaults(fn=cmd_parabolics)

    sp = sub.add_parser("dual", help="hat-dual label")
    rank(sp)
    sp.add_argument("--bipartition", required=True, help='JSON, e.g. \'{"mu":[2],"nu":[1]}\'')
    sp.set_defaults(fn=cmd_dual)

    sp = sub.add_parser("weightmap", help="label maps between categories O")
    rank(sp)
    sp.add_argument("--map", required=True,
                    choices=["ringel", "duality", "tilting-reflection", "inj-label", "tilt-label", "socle"])
    sp.add_argument("--weight", required=True)
    sp.add_argument("--borel", help="bipartition or sign-form JSON")
    sp.add_argument("--parabolic", help="bipartition or sign-form JSON")
    sp.add_argument("--root", help="odd root coordinates, e.g. 1,1,0")
    sp.set_defaults(fn=cmd_weightmap)

    sp = sub.add_parser("piclass", help="is the projective cover injective?")
    sp.add_argument("--family", required=True, choices=["pe", "gl", "q", "spo-even", "spo-odd", "d21", "g3", "f31"])
    sp.add_argument("--params", default="", help="ranks, e.g. 2 for pe(2) or 2,1 for spo(4|2)")
    sp.add_argument("--zeta", help="d21 parameter")
    sp.add_argument("--weight", required=True, help='"mu..." or "lambda...;mu..."')
    sp.set_defaults(fn=cmd_piclass)

    sp = sub.add_parser("char", help="truncated Verma character")
    rank(sp)
    sp.add_argument("--borel", required=True)
    sp.add_argument("--weight", required=True)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--parity", type=int, choices=[0, 1], default=0)
    sp.set_defaults(fn=cmd_char)

    sp = sub.add_parser("verify", help="run the brute-force verification suite")
    rank(sp)
    sp.add_argument("--bound", type=int)
    sp.add_argument("--suite", default="all", choices=["all", "classification", "orders", "levi", "ringel", "flag"])
    sp.add_argument("--format", default="table", choices=["table", "json"])
    sp.set_defaults(fn=cmd_verify)
    return p


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    try:
        a = parser.parse_args(list(argv))
    except SystemExit as e:
        return int(e.code or 0)
    if getattr(a, "n", 1) is not None and getattr(a, "n", 1) < 1:
        err.write("periplex: --n must be at least 1\n")
        return 2
    if getattr(a, "depth", 0) < 0:
        err.write("periplex: --depth must be nonnegative\n")
        return 2
    try:
        return a.fn(a, out)
    except (InputError, ValueError, TypeError) as e:
        err.write(f"periplex {a.verb}: {e}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
