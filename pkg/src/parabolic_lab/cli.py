"""Command-line front end: ``parabolic-lab <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import cochains, kostant, normal_form, quadric, realform
from .lie_core import Kind

SCHEMA_VERSION = 1
PRECISION_ENV = "PARABOLIC_LAB_PRECISION"


class InputError(ValueError):
    pass


class Disagreement(RuntimeError):
    pass


def _emit(obj, out):
    obj = dict(obj)
    obj["schema_version"] = SCHEMA_VERSION
    out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _kind(name, allowed=None) -> Kind:
    try:
        k = Kind.parse(name)
    except ValueError as e:
        raise InputError(str(e)) from None
    if allowed and k not in allowed:
        raise InputError(f"kind {name!r} not supported here (use one of {', '.join(a.value for a in allowed)})")
    return k


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not an exact rational: {text!r}") from None


# --- subcommands ---------------------------------------------------------------


def cmd_cohomology(args, out):
    kind = _kind(args.kind)
    if not 0 <= args.degree <= 3:
        raise InputError("degree must be in 0..3")
    cx = cochains.cochain_complex(kind)
    ells = [args.homogeneity] if args.homogeneity is not None else list(cx.homogeneities(args.degree))
    rows = []
    diffs = []
    for ell in ells:
        row = {"homogeneity": ell}
        if args.method in ("direct", "both"):
            row["direct"] = cochains.cohomology_dim(args.degree, ell, kind)
        if args.method in ("kostant", "both"):
            row["kostant"] = kostant.predicted_dim(kind, args.degree, ell)
        if args.method == "both" and row["direct"] != row["kostant"]:
            diffs.append(row)
        row["dim"] = row.get("direct", row.get("kostant"))
        if args.verbose and args.method != "kostant":
            row["basis"] = [h.to_json() for h in cochains.harmonic_basis(args.degree, ell, kind)]
        rows.append(row)
    if args.homogeneity is None:
        rows = [r for r in rows if r["dim"] or r.get("direct") != r.get("kostant")]
    if args.json:
        _emit(
            {"command": "cohomology", "kind": kind.value, "degree": args.degree, "method": args.method,
             "dimensions": "real", "rows": rows, "agree": not diffs},
            out,
        )
    else:
        out.write(f"H^{args.degree}(g_-, g) for {kind.value} (real dimensions, method {args.method})\n")
        for r in rows:
            vals = "  ".join(f"{m}={r[m]}" for m in ("direct", "kostant") if m in r)
            out.write(f"  l={r['homogeneity']:>3}: {vals}\n")
            for b in r.get("basis", []):
                out.write(f"      {b}\n")
        if args.method == "both" and not diffs:
            out.write("methods agree\n")
    if diffs:
        msg = "\n".join(f"l={d['homogeneity']}: direct={d['direct']} kostant={d['kostant']}" for d in diffs)
        raise Disagreement(f"methods disagree:\n{msg}")


def _table_rows(kind):
    return [r.to_json() for r in realform.component_table(kind)]


def _print_component_rows(rows, out, extra=False):
    for r in rows:
        sig = f"{r['domain'][0]} x {r['domain'][1]} -> {r['target']}"
        line = f"  {r['homogeneity']:>2}  {sig:<24} {r['comment']}"
        if r["anti_slot"] is not None:
            line += f" (antilinear in slot {r['anti_slot'] + 1})"
        if extra:
            line += f"  [{r['torsion_label']}]" + ("  embedded-vanishing" if r["embedded_vanishing"] else "")
        out.write(line + "\n")


def cmd_tables(args, out):
    w = args.which
    if w in (1, 2):
        kind = Kind.HYPERBOLIC if w == 1 else Kind.ELLIPTIC
        rows = _table_rows(kind)
        if args.json:
            _emit({"command": "tables", "which": w, "kind": kind.value, "rows": rows}, out)
        else:
            out.write(f"Table {w}: real H^2(g_-, g), {kind.value}\n")
            _print_component_rows(rows, out)
    elif w == 3:
        rows = kostant.table3()
        if args.json:
            _emit({"command": "tables", "which": 3, "rows": rows}, out)
        else:
            out.write("Table 3: H^p(p_+, V) highest weights\n")
            for r in rows:
                ws = ", ".join(f"({a},{b})" for a, b in r["weights"])
                out.write(f"  H^{r['degree']}(p_+, {r['module']}): {ws}\n")
    else:
        rows = kostant.table4()
        mirrored = kostant.table4(mirrored=True)
        if args.json:
            _emit({"command": "tables", "which": 4, "rows": rows, "mirrored": mirrored}, out)
        else:
            out.write("Table 4: H^2(p_+^L + p_+^R, g^L x C)  (eigenvalues E_L,E_R,F_L,F_R)\n")
            for r in rows:
                ev = ",".join(r["eigenvalues"])
                ws = " x ".join(f"({a},{b})" for a, b in r["weights"])
                out.write(f"  {r['homogeneity']:>3}  {ev:<14} {ws:<16} {r['cochain']}\n")
            out.write("  (the other half follows by exchanging L and R)\n")


def cmd_classify(args, out):
    kind = _kind(args.kind, (Kind.HYPERBOLIC, Kind.ELLIPTIC))
    rows = _table_rows(kind)
    rep = realform.check_embedded_vanishing(kind)
    if args.json:
        _emit(
            {"command": "classify", "kind": kind.value, "rows": rows,
             "embedded_vanishing_count": len(rep.flagged), "total": rep.total},
            out,
        )
    else:
        out.write(f"harmonic 2-cochain components, {kind.value}\n")
        _print_component_rows(rows, out, extra=True)
        out.write(f"{len(rep.flagged)} of {rep.total} components vanish for embedded structures\n")


def _parse_weight(text):
    try:
        a, b = (int(x) for x in text.replace("(", "").replace(")", "").split(","))
    except ValueError:
        raise InputError(f"weight must look like 'a,b', got {text!r}") from None
    return kostant.Weight(a, b)


def cmd_kostant(args, out):
    lam = _parse_weight(args.weight)
    degrees = [args.degree] if args.degree is not None else list(range(4))
    try:
        res = {p: kostant.kostant_cohomology(lam, p) for p in degrees}
    except ValueError as e:
        raise InputError(str(e)) from None
    if args.json:
        _emit(
            {"command": "kostant", "weight": list(lam),
             "rows": [{"degree": p, "weights": [list(w) for w in ws], "homogeneities": [w.E for w in ws]}
                      for p, ws in res.items()]},
            out,
        )
    else:
        for p, ws in res.items():
            out.write(f"H^{p}(p_+, V{lam}): " + ", ".join(str(w) for w in ws) + "\n")


def _load_json_arg(text):
    if text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(str(e)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e}") from None


def cmd_quadric(args, out):
    kind = _kind(args.kind, (Kind.HYPERBOLIC, Kind.ELLIPTIC)).value
    data = _load_json_arg(args.check)
    try:
        pt = quadric.QuadricPoint.from_json(data, kind)
    except (ValueError, TypeError, KeyError) as e:
        raise InputError(f"bad point: {e}") from None
    ok = quadric.on_quadric(pt)
    mu0 = quadric.in_standard_chain(pt)
    if args.json:
        _emit({"command": "quadric", "point": pt.to_json(), "on_quadric": ok, "in_standard_chain": mu0}, out)
    else:
        out.write(f"on {kind} quadric: {'yes' if ok else 'no'}\n")
        out.write(f"in standard 2-chain: {'yes' if mu0 else 'no'}\n")


def _precision() -> int:
    raw = os.environ.get(PRECISION_ENV, "12")
    try:
        p = int(raw)
    except ValueError:
        raise InputError(f"{PRECISION_ENV} must be an integer, got {raw!r}") from None
    if not 1 <= p <= 50:
        raise InputError(f"{PRECISION_ENV} must be between 1 and 50")
    return p


def cmd_chain(args, out):
    kind = _kind(args.kind, (Kind.HYPERBOLIC, Kind.ELLIPTIC)).value
    beta = _rational(args.beta)
    if kind == "hyperbolic":
        alpha = _rational(args.alpha)
        alpha_json = str(alpha)
    else:
        parts = args.alpha.split(",")
        if len(parts) != 2:
            raise InputError("elliptic --alpha is an exact unit vector 's,c' (sin, cos)")
        alpha = tuple(_rational(p) for p in parts)
        alpha_json = [str(a) for a in alpha]
    if args.samples < 0:
        raise InputError("--samples must be non-negative")
    try:
        pts = quadric.one_chain(kind, alpha, beta, args.samples)
    except ValueError as e:
        raise InputError(str(e)) from None
    us = [quadric.u_coordinates(p) for p in pts]
    if args.csv:
        prec = _precision()
        out.write("u1,u2\n")
        for u1, u2 in us:
            out.write(f"{float(u1):.{prec}g},{float(u2):.{prec}g}\n")
    elif args.json:
        _emit(
            {"command": "chain", "kind": kind, "alpha": alpha_json, "beta": str(beta),
             "points": [p.to_json() for p in pts], "u": [[str(a), str(b)] for a, b in us]},
            out,
        )
    else:
        for u1, u2 in us:
            out.write(f"u1={u1}  u2={u2}\n")


def cmd_normalform(args, out):
    kind = _kind(args.kind, (Kind.HYPERBOLIC, Kind.ELLIPTIC)).value
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(str(e)) from None
    try:
        s = normal_form.parse_series(text, kind=kind, order=args.order, strict=not args.lenient)
    except normal_form.NormalFormInputError as e:
        raise InputError(str(e)) from None
    if args.json:
        rep = normal_form.report(s)
        rep["command"] = "normalform"
        _emit(rep, out)
    else:
        out.write(normal_form.report_text(s) + "\n")


# --- parser --------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="parabolic-lab", description="Exact cohomology, quadric and normal-form computations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    c = sub.add_parser("cohomology", help="dimensions of H^p_l(g_-, g)")
    c.add_argument("--kind", required=True)
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--homogeneity", type=int)
    c.add_argument("--method", choices=("direct", "kostant", "both"), default="direct")
    c.add_argument("--verbose", action="store_true", help="also print harmonic bases")
    common(c)
    c.set_defaults(func=cmd_cohomology)

    t = sub.add_parser("tables", help="reproduce one of the four tables")
    t.add_argument("--which", type=int, choices=(1, 2, 3, 4), required=True)
    common(t)
    t.set_defaults(func=cmd_tables)

    k = sub.add_parser("classify", help="components with torsion labels")
    k.add_argument("--kind", required=True)
    common(k)
    k.set_defaults(func=cmd_classify)

    w = sub.add_parser("kostant", help="Kostant cohomology of one A2 weight")
    w.add_argument("--weight", required=True, help="dominant weight 'a,b'")
    w.add_argument("--degree", type=int)
    common(w)
    w.set_defaults(func=cmd_kostant)

    q = sub.add_parser("quadric", help="test a point against the quadric")
    q.add_argument("--kind", required=True)
    q.add_argument("--check", required=True, help="point JSON, or @file")
    common(q)
    q.set_defaults(func=cmd_quadric)

    ch = sub.add_parser("chain", help="sample a 1-chain in the standard 2-chain")
    ch.add_argument("--kind", required=True)
    ch.add_argument("--alpha", required=True)
    ch.add_argument("--beta", required=True)
    ch.add_argument("--samples", type=int, default=10)
    ch.add_argument("--csv", action="store_true", help=f"float CSV of (u1, u2); digits from ${PRECISION_ENV}")
    common(ch)
    ch.set_defaults(func=cmd_chain)

    n = sub.add_parser("normalform", help="check a truncated normal-form series")
    n.add_argument("--kind", required=True)
    n.add_argument("--file", required=True)
    n.add_argument("--order", type=int, help="truncation order (default: highest degree present)")
    n.add_argument("--lenient", action="store_true", help="report reality/support problems instead of rejecting")
    common(n)
    n.set_defaults(func=cmd_normalform)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except InputError as e:
        err.write(f"error: {e}\n")
        return 2
    except Disagreement as e:
        err.write(f"{e}\n")
        return 1
    return 0


def main(argv=None) -> int:
    try:
        return run(argv)
    except SystemExit as e:  # --help
        return e.code if isinstance(e.code, int) else 0


if __name__ == "__main__":
    sys.exit(main())
