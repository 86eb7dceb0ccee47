"""Command-line front end.

Partitions are written as comma-separated integers (``5,4,2,1``); an empty
partition is written ``-`` or ``""``.  ``--json`` prints canonical JSON.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import abacus_quotient as aq
from . import llt_q, ribbon_tableaux as rt, symfunc as sf
from .shapes import as_partition, as_strict
from .words_stats import format_word


class UsageError(Exception):
    pass


def parse_partition(text: str, strict: bool = False) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "-", "()", "[]"):
        return ()
    try:
        parts = [int(x) for x in text.strip("()[]").split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}: expected comma-separated integers")
    try:
        return as_strict(parts) if strict else as_partition(parts)
    except ValueError as e:
        raise UsageError(str(e))


def _k(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise UsageError(f"k must be an integer, got {text!r}")
    if k < 1:
        raise UsageError(f"k must be at least 1, got {k}")
    return k


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _fmt(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


# ---------------------------------------------------------------- subcommands


def cmd_core(a) -> tuple[object, str]:
    lam = parse_partition(a.shape, strict=True)
    k = _k(a.k)
    core = aq.k_core(lam, k)
    data = {"shape": list(lam), "k": k, "core": list(core), "k_length": aq.k_length(lam, k)}
    return data, f"{k}-core of {_fmt(lam)}: {_fmt(core)}  (k-length {data['k_length']})"


def cmd_quotient(a):
    lam = parse_partition(a.shape, strict=True)
    k = _k(a.k)
    q = aq.k_quotient(lam, k)
    lines = [f"runner shapes: {', '.join(_fmt(r) for r in q.runner_shapes)}"]
    for i, f in enumerate(q.folded, 1):
        lines.append(f"folded {i}: shape {_fmt(f.shape)}, diagonal col-row={f.diag_offset}")
    lines.append(f"shifted: {_fmt(q.shifted)}")
    lines.append(f"core: {_fmt(q.core)}")
    return q.to_json(), "\n".join(lines)


def cmd_tableaux(a):
    lam = parse_partition(a.shape, strict=True)
    k = _k(a.k)
    if a.semistandard:
        if a.max_entry is None:
            raise UsageError("--semistandard needs --max-entry")
        ts = rt.enumerate_semistandard(lam, k, a.max_entry)
    else:
        ts = rt.enumerate_standard(lam, k)
    if a.count:
        return {"count": len(ts)}, str(len(ts))
    data = [t.to_json() for t in ts]
    text = "\n\n".join(f"#{i} word {format_word(t.reading_word())}\n{t.pretty()}" for i, t in enumerate(ts, 1))
    return data, text or "(no tableaux)"


def _poly_output(f: sf.QSym, basis: str, num_vars: int | None):
    n = num_vars if num_vars is not None else max(f.degree(), 1)
    if basis == "Q":
        e = sf.expand_in_Q(f)
        return e.to_json(), str(e)
    if basis == "s":
        e = sf.expand_in_schur(f)
        return e.to_json(), str(e)
    if basis == "G":
        g = sf.expand_in_G(f)
        items = sorted(g.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
        data = {"basis": "G", "coefficients": {",".join(map(str, sorted(P))): int(c) for P, c in items}}
        text = " + ".join(f"{c}*G{{{','.join(map(str, sorted(P)))}}}" for P, c in items) or "0"
        return data, text
    p = f.to_sympoly(n)
    return p.to_json(), str(p)


def cmd_rq(a):
    lam = parse_partition(a.shape, strict=True)
    k = _k(a.k)
    f = sf.RP(lam, k) if a.p else sf.RQ(lam, k, a.route)
    return _poly_output(f, a.basis, a.vars)


def cmd_foldedq(a):
    gamma = parse_partition(a.shape)
    try:
        offset = int(a.offset)
    except ValueError:
        raise UsageError(f"offset must be an integer, got {a.offset!r}")
    fd = aq.FoldedDiagram(gamma, offset)
    if not aq.is_folded_diagram(fd):
        raise UsageError(f"{_fmt(gamma)} with diagonal offset {offset} is not a folded diagram")
    f = sf.foldedP(fd) if a.p else sf.foldedQ(fd)
    return _poly_output(f, a.basis, a.vars)


def cmd_llt(a):
    mu = parse_partition(a.shape)
    k = _k(a.k)
    return _poly_output(llt_q.LLT(mu, k), a.basis, a.vars)


def cmd_qr(a):
    lam = parse_partition(a.shape, strict=True)
    k = _k(a.k)
    return _poly_output(llt_q.QR(lam, k), a.basis, a.vars)


def cmd_report(a):
    lam = parse_partition(a.shape, strict=True)
    k = _k(a.k)
    rows = llt_q.counterexample_report(lam, k)
    text = "\n".join(f"{r['word']:<20} Peak {{{','.join(map(str, r['peak']))}}}  coefficient {r['coefficient']}" for r in rows)
    return rows, text or "(no tableaux)"


def cmd_verify(a):
    from . import verify

    checks = verify.example_checks() if a.suite == "paper" else verify.exhaustive_checks(a.max_size)
    results = []
    for name, fn in checks:
        try:
            ok, detail = fn()
        except Exception as e:  # report, never hide
            ok, detail = False, f"{type(e).__name__}: {e}"
        status = "ERRATUM" if ok == "erratum" else ("PASS" if ok is True else "FAIL")
        results.append({"name": name, "status": status, "detail": detail})
    text = "\n".join(f"{r['status']} {r['name']}: {r['detail']}" for r in results)
    return results, text


COMMANDS: dict[str, Callable] = {
    "core": cmd_core,
    "quotient": cmd_quotient,
    "tableaux": cmd_tableaux,
    "rq": cmd_rq,
    "foldedq": cmd_foldedq,
    "llt": cmd_llt,
    "qr": cmd_qr,
    "report": cmd_report,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ribbonq", description="Shifted ribbon tableaux and ribbon Schur Q-functions")
    p.add_argument("--json", action="store_true", help="print canonical JSON")
    sub = p.add_subparsers(dest="command", required=True)

    def shape_k(name, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("shape")
        s.add_argument("k")
        s.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return s

    def basis_opts(s, default):
        s.add_argument("--basis", choices=["Q", "s", "G", "monomial"], default=default)
        s.add_argument("--vars", type=int, default=None, help="number of variables (default: degree)")

    shape_k("core", "k-core and k-length")
    shape_k("quotient", "shifted k-quotient")
    s = shape_k("tableaux", "enumerate shifted k-ribbon tableaux")
    s.add_argument("--semistandard", action="store_true")
    s.add_argument("--max-entry", type=int, default=None)
    s.add_argument("--count", action="store_true")
    s = shape_k("rq", "ribbon Schur Q-function")
    basis_opts(s, "Q")
    s.add_argument("--route", choices=list(sf.ROUTES), default="semistandard")
    s.add_argument("-P", dest="p", action="store_true", help="ribbon P-function instead of Q")
    s = sub.add_parser("foldedq", help="Q-function of a folded diagram")
    s.add_argument("shape")
    s.add_argument("offset", help="diagonal offset c (cells with col - row = c)")
    s.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    s.add_argument("-P", dest="p", action="store_true")
    basis_opts(s, "s")
    s = shape_k("llt", "LLT polynomial of an unshifted shape")
    basis_opts(s, "s")
    s = shape_k("qr", "q-analogue of the ribbon Q-function")
    basis_opts(s, "Q")
    shape_k("report", "reading words and peak sets of standard tableaux")
    s = sub.add_parser("verify", help="replay the checked identities")
    s.add_argument("--suite", choices=["paper", "exhaustive"], default="paper")
    s.add_argument("--max-size", type=int, default=10)
    s.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    return p


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        data, text = COMMANDS[a.command](a)
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(_dump(data) if a.json else text, file=out)
    if a.command == "verify" and any(r["status"] == "FAIL" for r in data):
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
