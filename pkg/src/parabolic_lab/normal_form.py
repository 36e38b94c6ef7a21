"""Truncated normal-form series: parsing, derivative conditions, torsion-freeness.

Grammar (whitespace is ignored)::

    series    := component+
    component := header poly
    header    := 'N1:' | 'N2:'            (hyperbolic)
               | 'N:'                     (elliptic)
    poly      := ['+'|'-'] term (('+'|'-') term)*
    term      := [coef ['*']] monomial | coef
    coef      := '(' gaussian ')' | rational ['i'] | 'i'
    monomial  := factor (['*'] factor)*
    factor    := var ['^' integer]
    var       := z1 | z2 | zb1 | zb2 | u1 | u2     (hyperbolic)
               | z1 | z2 | zb1 | zb2 | U | Ub      (elliptic)

``zb`` is the conjugate variable; ``U`` is 𝒰 and ``Ub`` its conjugate.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .scalars import GaussianRational

__all__ = [
    "NFSeries",
    "NFViolation",
    "NormalFormInputError",
    "parse_series",
    "check_normal_form",
    "is_torsion_free",
    "report",
    "report_text",
    "report_json",
    "ETA_BAR_VARIABLE",
    "HYPERBOLIC_VARS",
    "ELLIPTIC_VARS",
]

HYPERBOLIC_VARS = ("z1", "z2", "zb1", "zb2", "u1", "u2")
ELLIPTIC_VARS = ("z1", "z2", "zb1", "zb2", "U", "Ub")
VARS = {"hyperbolic": HYPERBOLIC_VARS, "elliptic": ELLIPTIC_VARS}
COMPONENTS = {"hyperbolic": ("N1", "N2"), "elliptic": ("N",)}

# The elliptic restrictions are written with an undefined η̄.  We read them as
# evaluation at conj(𝒰) = 0; change this name to test another reading.
ETA_BAR_VARIABLE = "Ub"

ZERO = GaussianRational(0)


class NormalFormInputError(ValueError):
    def __init__(self, message, position=None):
        self.position = position
        super().__init__(message if position is None else f"{message} at position {position}")


# --- polynomials --------------------------------------------------------------

Poly = dict  # exponent tuple -> GaussianRational


def _add_term(p: Poly, exp, c):
    s = p.get(exp, ZERO) + c
    if s:
        p[exp] = s
    else:
        p.pop(exp, None)


def diff(p: Poly, var: int, order: int = 1) -> Poly:
    out = {}
    for exp, c in p.items():
        e = exp[var]
        if e < order:
            continue
        f = math.perm(e, order)
        new = exp[:var] + (e - order,) + exp[var + 1 :]
        _add_term(out, new, c * f)
    return out


def restrict_zero(p: Poly, var: int) -> Poly:
    """Evaluate at ``var = 0``: drop every term with a positive power of it."""
    return {exp: c for exp, c in p.items() if exp[var] == 0}


def format_term(kind, exp, c) -> str:
    names = VARS[kind]
    mono = " ".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e)
    coef = str(c) if c.im == 0 else f"({c})"
    if mono and c == 1:
        return mono
    if mono and c == -1:
        return f"-{mono}"
    return f"{coef}*{mono}" if mono else coef


def format_poly(kind, p: Poly) -> str:
    if not p:
        return "0"
    return " + ".join(format_term(kind, e, c) for e, c in sorted(p.items()))


# --- series -------------------------------------------------------------------


@dataclass(frozen=True)
class NFSeries:
    kind: str
    components: dict  # name -> Poly
    order: int
    issues: tuple = ()  # reality/support problems found by a lenient parse

    def bidegree(self, exp) -> tuple:
        return (exp[0] + exp[1], exp[2] + exp[3])

    def part(self, name: str, k: int, l: int) -> Poly:
        return {e: c for e, c in self.components[name].items() if self.bidegree(e) == (k, l)}


@dataclass(frozen=True)
class NFViolation:
    condition: str
    description: str
    component: str
    terms: tuple  # offending input terms as text
    residual: str = ""

    def to_json(self):
        return {
            "condition": self.condition,
            "description": self.description,
            "component": self.component,
            "terms": list(self.terms),
            "residual": self.residual,
        }


class _Scanner:
    def __init__(self, text: str):
        self.chars = []
        self.pos = []
        for i, ch in enumerate(text):
            if not ch.isspace():
                self.chars.append(ch)
                self.pos.append(i)
        self.s = "".join(self.chars)
        self.i = 0
        self.end = len(text)

    def where(self):
        return self.pos[self.i] if self.i < len(self.pos) else self.end

    def peek(self, n=1):
        return self.s[self.i : self.i + n]

    def eat(self, lit):
        if self.s.startswith(lit, self.i):
            self.i += len(lit)
            return True
        return False

    def expect(self, lit):
        if not self.eat(lit):
            raise NormalFormInputError(f"expected {lit!r}", self.where())

    def match(self, pattern):
        m = re.compile(pattern).match(self.s, self.i)
        if m:
            self.i = m.end()
            return m.group(0)
        return None

    def done(self):
        return self.i >= len(self.s)


_RATIONAL = r"\d+(/\d+)?"


def _parse_gaussian(sc: _Scanner) -> GaussianRational:
    """Inside parentheses: ``a``, ``bi``, ``a+bi``, ``a-bi``, ``i``."""
    start = sc.where()
    total = ZERO
    first = True
    while True:
        sign = 1
        if sc.eat("-"):
            sign = -1
        elif sc.eat("+"):
            pass
        elif not first:
            break
        num = sc.match(_RATIONAL)
        imag = sc.eat("i")
        if num is None and not imag:
            raise NormalFormInputError("malformed Gaussian rational", sc.where())
        val = Fraction(num) if num is not None else Fraction(1)
        total = total + (GaussianRational(0, sign * val) if imag else GaussianRational(sign * val))
        first = False
        if sc.peek() not in ("+", "-"):
            break
    if first:
        raise NormalFormInputError("empty coefficient", start)
    return total


def _parse_coef(sc: _Scanner):
    if sc.eat("("):
        c = _parse_gaussian(sc)
        sc.expect(")")
        return c
    num = sc.match(_RATIONAL)
    if num is not None:
        val = Fraction(num)
        if sc.eat("i"):
            return GaussianRational(0, val)
        return GaussianRational(val)
    if sc.peek() == "i":
        sc.i += 1
        return GaussianRational(0, 1)
    return None


def _parse_monomial(sc: _Scanner, kind: str):
    names = VARS[kind]
    # longest names first so that zb1 is not read as z + b1, Ub not as U + b
    ordered = sorted(names, key=len, reverse=True)
    exp = [0] * len(names)
    seen = False
    while True:
        mark = sc.i
        if seen and sc.eat("*") and not any(sc.s.startswith(n, sc.i) for n in ordered):
            sc.i = mark
        for n in ordered:
            if sc.s.startswith(n, sc.i):
                sc.i += len(n)
                e = 1
                if sc.eat("^"):
                    digits = sc.match(r"\d+")
                    if digits is None:
                        raise NormalFormInputError("expected exponent", sc.where())
                    e = int(digits)
                exp[names.index(n)] += e
                seen = True
                break
        else:
            return tuple(exp), seen


def _parse_poly(sc: _Scanner, kind: str, headers) -> Poly:
    poly = {}
    first = True
    while not sc.done() and not any(sc.s.startswith(h, sc.i) for h in headers):
        start = sc.where()
        sign = 1
        if sc.eat("-"):
            sign = -1
        elif sc.eat("+"):
            pass
        elif not first:
            raise NormalFormInputError("expected '+' or '-'", start)
        first = False
        coef = _parse_coef(sc)
        if coef is not None:
            sc.eat("*")
        exp, has_mono = _parse_monomial(sc, kind)
        if coef is None and not has_mono:
            raise NormalFormInputError("expected a term", sc.where())
        if coef is None:
            coef = GaussianRational(1)
        _add_term(poly, exp, coef * sign)
    if first:
        raise NormalFormInputError("empty component", sc.where())
    return poly


def _infer_kind(text: str) -> str:
    if re.search(r"N\s*[12]\s*:", text):
        return "hyperbolic"
    if re.search(r"N\s*:", text):
        return "elliptic"
    raise NormalFormInputError("no component header (N1:/N2: or N:) found", 0)


def series_issues(kind: str, components: dict) -> list:
    """Reality and support problems, as violations."""
    out = []
    for name, poly in components.items():
        for exp, c in sorted(poly.items()):
            k, l = exp[0] + exp[1], exp[2] + exp[3]
            if not (min(k, l) > 0 and max(k, l) > 1):
                out.append(
                    NFViolation("support", f"bidegree ({k},{l}) is not allowed", name, (format_term(kind, exp, c),))
                )
        if kind == "hyperbolic":
            for exp, c in sorted(poly.items()):
                partner = (exp[2], exp[3], exp[0], exp[1]) + exp[4:]
                if poly.get(partner, ZERO) != c.conjugate():
                    out.append(
                        NFViolation(
                            "reality",
                            f"coefficient of {format_term(kind, partner, GaussianRational(1))} must be {c.conjugate()}",
                            name,
                            (format_term(kind, exp, c),),
                        )
                    )
    return out


def parse_series(text: str, kind: str | None = None, order: int | None = None, strict: bool = True) -> NFSeries:
    """Parse a series.  With ``strict`` reality/support problems raise; otherwise they are recorded."""
    kind = kind or _infer_kind(text)
    kind = str(getattr(kind, "value", kind)).lower()
    if kind not in VARS:
        raise NormalFormInputError(f"unknown kind {kind!r}")
    names = COMPONENTS[kind]
    headers = tuple(f"{n}:" for n in names)
    sc = _Scanner(text)
    comps = {}
    while not sc.done():
        start = sc.where()
        for h in sorted(headers, key=len, reverse=True):
            if sc.eat(h):
                name = h[:-1]
                break
        else:
            raise NormalFormInputError(f"expected one of {', '.join(headers)}", start)
        if name in comps:
            raise NormalFormInputError(f"component {name} given twice", start)
        comps[name] = _parse_poly(sc, kind, headers)
    for n in names:
        comps.setdefault(n, {})
    degree = max((sum(e) for p in comps.values() for e in p), default=0)
    if order is None:
        order = degree
    elif degree > order:
        raise NormalFormInputError(f"term of degree {degree} exceeds truncation order {order}")
    issues = series_issues(kind, comps)
    if strict and issues:
        raise NormalFormInputError("; ".join(f"{v.condition}: {v.description} [{v.terms[0]}]" for v in issues))
    return NFSeries(kind, comps, order, tuple(issues))


# --- conditions ------------------------------------------------------------------


@dataclass(frozen=True)
class Condition:
    id: str
    component: str
    k: object  # int, or "k>=2" for the families
    l: object
    derivatives: tuple  # variable names, with repetition
    restrict: str | None = None
    text: str = ""


def _hyperbolic_conditions():
    c = []
    c.append(Condition("H1", "N1", "k>=2", 1, ("zb1",), text="d/dzb1 N1_k1 = 0, k >= 2"))
    c.append(Condition("H2", "N2", "k>=2", 1, ("zb2",), text="d/dzb2 N2_k1 = 0, k >= 2"))
    c.append(Condition("H3", "N1", 2, 1, ("z1", "z2"), text="d2/dz1dz2 N1_21 = 0"))
    c.append(Condition("H4", "N2", 2, 1, ("z1", "z2"), text="d2/dz1dz2 N2_21 = 0"))
    four = ("z1", "z2", "zb1", "zb2")
    c.append(Condition("H5", "N1", 2, 2, four, text="d4/dz1dz2dzb1dzb2 N1_22 = 0"))
    c.append(Condition("H6", "N2", 2, 2, four, text="d4/dz1dz2dzb1dzb2 N2_22 = 0"))
    for j, (a, b) in enumerate((((2, 2), 2), ((3, 2), 3), ((3, 3), 3))):
        (k, l), _ = a, b
        for comp, z, zb, u in (("N1", "z1", "zb1", "u2"), ("N2", "z2", "zb2", "u1")):
            ident = f"H{7 + 2 * j + (comp == 'N2')}"
            ders = (z,) * k + (zb,) * l
            c.append(
                Condition(ident, comp, k, l, ders, u, text=f"d{k + l}/d{z}^{k}d{zb}^{l} {comp}_{k}{l} |{u}=0 = 0")
            )
    return tuple(c)


def _elliptic_conditions():
    eb = ETA_BAR_VARIABLE
    return (
        Condition("E1", "N", "k>=2", 1, ("zb2",), text="d/dzb2 N_k1 = 0, k >= 2"),
        Condition("E2", "N", 1, "k>=2", ("z1",), text="d/dz1 N_1k = 0, k >= 2"),
        Condition("E3", "N", 2, 1, ("z1", "zb1", "z2"), text="d3/dz1dzb1dz2 N_21 = 0"),
        Condition("E4", "N", 1, 2, ("zb2", "zb1", "z2"), text="d3/dzb2dzb1dz2 N_12 = 0"),
        Condition("E5", "N", 2, 2, ("z1", "z2", "zb1", "zb2"), text="d4/dz1dz2dzb1dzb2 N_22 = 0"),
        Condition("E6", "N", 2, 2, ("z1", "z1", "zb2", "zb2"), eb, text=f"d4/dz1^2dzb2^2 N_22 |{eb}=0 = 0"),
        Condition("E7", "N", 3, 2, ("z1",) * 3 + ("zb2",) * 2, eb, text=f"d5/dz1^3dzb2^2 N_32 |{eb}=0 = 0"),
        Condition(
            "E8", "N", 2, 3, ("z1", "z1", "zb1", "zb2", "zb2"), eb, text=f"d5/dz1^2dzb1dzb2^2 N_23 |{eb}=0 = 0"
        ),
        Condition("E9", "N", 3, 3, ("z1",) * 3 + ("zb2",) * 3, eb, text=f"d6/dz1^3dzb2^3 N_33 |{eb}=0 = 0"),
    )


def conditions(kind: str) -> tuple:
    return _hyperbolic_conditions() if kind == "hyperbolic" else _elliptic_conditions()


def _bidegrees(s: NFSeries, cond: Condition):
    present = {s.bidegree(e) for e in s.components[cond.component]}
    if cond.k == "k>=2":
        return sorted((k, l) for k, l in present if k >= 2 and l == cond.l)
    if cond.l == "k>=2":
        return sorted((k, l) for k, l in present if l >= 2 and k == cond.k)
    return [(cond.k, cond.l)]


def residual(s: NFSeries, cond: Condition, k: int, l: int) -> Poly:
    names = VARS[s.kind]
    p = s.part(cond.component, k, l)
    for v in cond.derivatives:
        p = diff(p, names.index(v))
    if cond.restrict:
        p = restrict_zero(p, names.index(cond.restrict))
    return p


def check_normal_form(s: NFSeries) -> list:
    """All violations: recorded reality/support issues plus failed derivative conditions."""
    out = list(s.issues)
    names = VARS[s.kind]
    for cond in conditions(s.kind):
        for k, l in _bidegrees(s, cond):
            res = residual(s, cond, k, l)
            if not res:
                continue
            part = s.part(cond.component, k, l)
            # terms that survive differentiation (and restriction) are the offenders
            offenders = []
            for exp, c in sorted(part.items()):
                q = {exp: c}
                for v in cond.derivatives:
                    q = diff(q, names.index(v))
                if cond.restrict:
                    q = restrict_zero(q, names.index(cond.restrict))
                if q:
                    offenders.append(format_term(s.kind, exp, c))
            out.append(
                NFViolation(
                    cond.id, cond.text + ("" if (k, l) == (cond.k, cond.l) else f" [(k,l)=({k},{l})]"),
                    cond.component, tuple(offenders), format_poly(s.kind, res),
                )
            )
    return out


_ALLOWED = {
    ("hyperbolic", "N1"): {"z1", "zb1", "u1"},
    ("hyperbolic", "N2"): {"z2", "zb2", "u2"},
    ("elliptic", "N"): {"z1", "zb2", "U"},
}


def is_torsion_free(s: NFSeries) -> dict:
    names = VARS[s.kind]
    out = {}
    for comp, poly in s.components.items():
        allowed = _ALLOWED[(s.kind, comp)]
        out[comp] = all(all(e == 0 or names[i] in allowed for i, e in enumerate(exp)) for exp in poly)
    return out


# --- reports -----------------------------------------------------------------------


def report(s: NFSeries) -> dict:
    viols = check_normal_form(s)
    out = {
        "schema_version": 1,
        "kind": s.kind,
        "truncation_order": s.order,
        "normal_form": not viols,
        "violations": [v.to_json() for v in viols],
        "torsion_free": is_torsion_free(s),
    }
    if s.kind == "elliptic":
        out["eta_bar_interpretation"] = f"restriction |eta_bar=0 evaluated as {ETA_BAR_VARIABLE}=0"
    return out


def report_json(s: NFSeries) -> str:
    return json.dumps(report(s), indent=2, sort_keys=True)


def report_text(s: NFSeries) -> str:
    r = report(s)
    lines = [f"kind: {r['kind']}", f"conditions tested up to total degree {r['truncation_order']}"]
    if "eta_bar_interpretation" in r:
        lines.append(f"note: {r['eta_bar_interpretation']}")
    if r["normal_form"]:
        lines.append("normal form: yes")
    else:
        lines.append(f"normal form: no ({len(r['violations'])} violation(s))")
        for v in r["violations"]:
            lines.append(f"  {v['condition']} [{v['component']}] {v['description']}")
            for t in v["terms"]:
                lines.append(f"      term: {t}")
            if v["residual"]:
                lines.append(f"      residual: {v['residual']}")
    tf = ", ".join(f"{k}: {'yes' if v else 'no'}" for k, v in r["torsion_free"].items())
    lines.append(f"torsion-free: {tf}")
    return "\n".join(lines)
