"""Linearity classification of harmonic 2-cochains for the real kinds.

Harmonic 2-cochains are split by *signature* (the spaces of the two
arguments and of the value) and then by complex (anti)linearity in each
argument.  The spaces are

* hyperbolic: ``gL-2, gL-1, gL0, gL1, gL2`` and the same with ``R``;
* elliptic:   ``g-2``, ``gL-1 = g_{-1,0}``, ``gR-1 = g_{0,-1}``, ``g0``,
  ``gL1 = g_{1,0}``, ``gR1 = g_{0,1}``, ``g2``.

``J`` is the complex structure carried by the algebra: all of g for the
elliptic kind, ``g_{±1}`` for the hyperbolic one.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg
from .cochains import Cochain, cochain_complex, codifferential, differential, harmonic_basis
from .lie_core import Kind, build_algebra

__all__ = [
    "Signature",
    "Bilinear",
    "LinearityType",
    "ComponentRow",
    "space_of",
    "restrict",
    "linearity_type",
    "component_table",
    "torsion_classify",
    "check_embedded_vanishing",
    "TORSION_LABELS",
    "embedded_vanishing",
]

LINEAR = "complex-linear"
ANTILINEAR = "antilinear"
INCOMPATIBLE = "not-complex-compatible"
REAL = "real"  # slot or target without a complex structure

COMMENTS = {
    "linear": "complex linear in both arguments",
    "antilinear-both": "antilinear in both arguments",
    "sesquilinear": "sesquilinear",
    "real-bilinear": "real linear in both arguments",
    "real-and-complex-linear": "real and complex linear",
    "real-and-antilinear": "real and antilinear",
    "not-complex-compatible": "not complex compatible",
}

TORSION_LABELS = (
    "product-obstruction-L",
    "product-obstruction-R",
    "nijenhuis-J",
    "S_L",
    "S_R",
    "elliptic-J-obstruction-1",
    "elliptic-J-obstruction-2",
    "elliptic-product-L",
    "elliptic-product-R",
    "elliptic-mixed-1",
    "elliptic-mixed-2",
    "curvature-homog-4",
)

_REAL_KINDS = (Kind.HYPERBOLIC, Kind.ELLIPTIC)


def _real_kind(kind) -> Kind:
    kind = Kind.parse(kind)
    if kind not in _REAL_KINDS:
        raise ValueError("the classifier works on the real kinds only")
    return kind


def space_of(alg, k: int) -> str:
    lab = alg.labels[k]
    if alg.kind is Kind.HYPERBOLIC:
        return f"g{lab.factor}{lab.grade}"
    if abs(lab.grade) == 1:
        side = "L" if lab.fine_root in ("-1,0", "1,0") else "R"
        return f"g{side}{lab.grade}"
    return f"g{lab.grade}"


def _space_key(name: str):
    # order by grade, then factor: g-2 < gL-2 < gR-2 < gL-1 < ...
    side = name[1] if name[1] in "LR" else ""
    grade = int(name[2:] if side else name[1:])
    return (grade, side)


@dataclass(frozen=True, order=True)
class Signature:
    domain: tuple  # two space names, sorted
    target: str

    @classmethod
    def make(cls, a: str, b: str, target: str) -> Signature:
        return cls(tuple(sorted((a, b), key=_space_key)), target)

    def __str__(self):
        return f"{self.domain[0]} x {self.domain[1]} -> {self.target}"

    @property
    def spaces(self):
        return set(self.domain) | {self.target}


def signature_of(alg, I, k) -> Signature:
    return Signature.make(space_of(alg, I[0]), space_of(alg, I[1]), space_of(alg, k))


def restrict(c: Cochain, sig: Signature) -> Cochain:
    alg = build_algebra(c.complex.kind)
    return Cochain(c.complex, c.degree, {(I, k): v for (I, k), v in c.coeffs.items() if signature_of(alg, I, k) == sig})


def signatures_of(c: Cochain) -> set:
    alg = build_algebra(c.complex.kind)
    return {signature_of(alg, I, k) for (I, k) in c.coeffs}


# --- bilinear maps on a signature -------------------------------------------


@dataclass(frozen=True)
class Bilinear:
    """A real bilinear map ``X x Y -> T`` on basis indices (not necessarily alternating)."""

    kind: Kind
    sig: Signature
    values: dict  # (x, y) -> {k: coef}

    @classmethod
    def from_cochain(cls, c: Cochain, sig: Signature) -> Bilinear:
        alg = build_algebra(c.complex.kind)
        X = alg_space(alg, sig.domain[0])
        Y = alg_space(alg, sig.domain[1])
        T = set(alg_space(alg, sig.target))
        vals = {}
        for x, y in product(X, Y):
            v = {k: a for k, a in c.value((x, y)).items() if k in T}
            if v:
                vals[(x, y)] = v
        return cls(alg.kind, sig, vals)

    def to_cochain(self) -> Cochain:
        cx = cochain_complex(self.kind)
        out = {}
        same = self.sig.domain[0] == self.sig.domain[1]
        for (x, y), v in self.values.items():
            if same and x > y:
                continue
            I, s = ((x, y), 1) if x < y else ((y, x), -1)
            for k, a in v.items():
                out[(I, k)] = s * a
        c = Cochain(cx, 2, out)
        if same and Bilinear.from_cochain(c, self.sig) != self:
            raise ValueError("bilinear map on a single space is not alternating")
        return c

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def _combine(self, other, s):
        out = {key: dict(v) for key, v in self.values.items()}
        for key, v in other.values.items():
            d = out.setdefault(key, {})
            for k, a in v.items():
                t = d.get(k, 0) + s * a
                if t:
                    d[k] = t
                else:
                    d.pop(k, None)
            if not d:
                out.pop(key)
        return Bilinear(self.kind, self.sig, out)

    def scale(self, c) -> Bilinear:
        c = Fraction(c)
        if not c:
            return Bilinear(self.kind, self.sig, {})
        return Bilinear(self.kind, self.sig, {key: {k: c * a for k, a in v.items()} for key, v in self.values.items()})

    def is_zero(self) -> bool:
        return not self.values

    def twist(self, slot: int) -> Bilinear:
        """``(x, y) -> B(Jx, y)`` (slot 0) or ``B(x, Jy)`` (slot 1)."""
        J = build_algebra(self.kind).J
        out = {}
        for (x, y), v in self.values.items():
            src = y if slot else x
            # B(J e_a, .) = Σ J[a][n] B(e_n, .): the term B(e_src) feeds every a with J[a][src] != 0
            for a, row in J.items():
                f = row.get(src)
                if not f:
                    continue
                key = (x, a) if slot else (a, y)
                d = out.setdefault(key, {})
                for k, t in v.items():
                    d[k] = d.get(k, 0) + f * t
        return Bilinear(self.kind, self.sig, _clean(out))

    def post_J(self) -> Bilinear:
        J = build_algebra(self.kind).J
        out = {}
        for key, v in self.values.items():
            d = {}
            for k, t in v.items():
                for n, f in J[k].items():
                    d[n] = d.get(n, 0) + f * t
            out[key] = d
        return Bilinear(self.kind, self.sig, _clean(out))


def _clean(out):
    res = {}
    for key, d in out.items():
        d = {k: v for k, v in d.items() if v}
        if d:
            res[key] = d
    return res


def alg_space(alg, name: str) -> list:
    return [k for k in range(alg.dim) if space_of(alg, k) == name]


def _designated(alg, name: str) -> bool:
    return all(k in alg.J for k in alg_space(alg, name))


# --- linearity --------------------------------------------------------------


@dataclass(frozen=True)
class LinearityType:
    slots: tuple  # verdict per argument slot
    aggregate: str
    anti_slot: int | None = None  # for sesquilinear maps with distinct argument spaces

    @property
    def comment(self) -> str:
        return COMMENTS[self.aggregate]


def _slot_verdict(B: Bilinear, slot: int) -> str:
    tw = B.twist(slot)
    jb = B.post_J()
    if (tw - jb).is_zero():
        return LINEAR
    if (tw + jb).is_zero():
        return ANTILINEAR
    return INCOMPATIBLE


def _mixed_verdict(B: Bilinear):
    """Same-space maps: test the two-slot identities which respect alternation."""
    both = B.twist(0).twist(1)
    if (both + B).is_zero():
        # B(Jx, Jy) = -B(x, y): linear-linear or anti-anti
        if (B.twist(0) - B.post_J()).is_zero():
            return (LINEAR, LINEAR)
        if (B.twist(0) + B.post_J()).is_zero():
            return (ANTILINEAR, ANTILINEAR)
        return (INCOMPATIBLE, INCOMPATIBLE)
    if (both - B).is_zero():
        # B(Jx, Jy) = B(x, y): a sum of linear-anti and anti-linear parts
        return (LINEAR, ANTILINEAR)
    return (INCOMPATIBLE, INCOMPATIBLE)


def linearity_type(c: Cochain, sig: Signature) -> LinearityType:
    """Exact per-slot (anti)linearity of ``c`` restricted to ``sig``."""
    kind = _real_kind(c.complex.kind)
    alg = build_algebra(kind)
    B = Bilinear.from_cochain(c, sig)
    if B.is_zero():
        raise ValueError(f"cochain vanishes on {sig}")
    if not _designated(alg, sig.target):
        return LinearityType((REAL, REAL), "real-bilinear")
    real_slots = [not _designated(alg, s) for s in sig.domain]
    same = sig.domain[0] == sig.domain[1]
    if same and not real_slots[0]:
        slots = _mixed_verdict(B)
        if slots == (LINEAR, ANTILINEAR):
            return LinearityType(slots, "sesquilinear", None)
    else:
        slots = tuple(REAL if r else _slot_verdict(B, s) for s, r in enumerate(real_slots))
    return LinearityType(slots, _aggregate(slots), _anti_slot(slots))


def _aggregate(slots) -> str:
    s = set(slots)
    if INCOMPATIBLE in s:
        return "not-complex-compatible"
    if REAL in s:
        other = [v for v in slots if v != REAL]
        if not other:
            return "real-bilinear"
        return "real-and-complex-linear" if other[0] == LINEAR else "real-and-antilinear"
    if s == {LINEAR}:
        return "linear"
    if s == {ANTILINEAR}:
        return "antilinear-both"
    return "sesquilinear"


def _anti_slot(slots):
    if set(slots) == {LINEAR, ANTILINEAR}:
        return slots.index(ANTILINEAR)
    return None


def linearity_parts(B: Bilinear) -> dict:
    """Split ``B`` into its linear/antilinear parts per designated slot."""
    alg = build_algebra(B.kind)
    sig = B.sig
    if not _designated(alg, sig.target):
        return {"real": B}
    real_slots = [not _designated(alg, s) for s in sig.domain]
    jb = lambda m: m.post_J()

    def lin(m, slot):  # ½(m - J m(J.)) keeps the slot-linear part
        return (m - jb(m.twist(slot))).scale(Fraction(1, 2))

    def anti(m, slot):
        return (m + jb(m.twist(slot))).scale(Fraction(1, 2))

    active = [s for s in (0, 1) if not real_slots[s]]
    if not active:
        return {"real": B}
    if len(active) == 1:
        s = active[0]
        return {"l": lin(B, s), "a": anti(B, s)}
    parts = {
        "ll": lin(lin(B, 0), 1),
        "la": anti(lin(B, 0), 1),
        "al": lin(anti(B, 0), 1),
        "aa": anti(anti(B, 0), 1),
    }
    if sig.domain[0] == sig.domain[1]:
        parts = {"ll": parts["ll"], "mixed": parts["la"] + parts["al"], "aa": parts["aa"]}
    return parts


# --- the component table -----------------------------------------------------


@dataclass(frozen=True)
class ComponentRow:
    kind: Kind
    homogeneity: int
    signature: Signature
    linearity: LinearityType
    real_dim: int
    basis: tuple  # harmonic cochains spanning this component

    @property
    def domain(self):
        return self.signature.domain

    @property
    def target(self):
        return self.signature.target

    def to_json(self):
        return {
            "kind": self.kind.value,
            "homogeneity": self.homogeneity,
            "domain": list(self.domain),
            "target": self.target,
            "linearity": self.linearity.aggregate,
            "slots": list(self.linearity.slots),
            "anti_slot": self.linearity.anti_slot,
            "comment": self.linearity.comment,
            "real_dim": self.real_dim,
            "torsion_label": torsion_classify(self.kind, self),
            "embedded_vanishing": embedded_vanishing(self),
        }


def _span(vectors, dim):
    return linalg.column_space([list(v) for v in vectors], dim)


def _vec(cx, c: Cochain, ell: int):
    return cx.cochain_to_vector(c, ell)


@functools.lru_cache(maxsize=None)
def component_table(kind, homogeneities=(1, 4)) -> tuple:
    """Rows of harmonic 2-cochain components, one per (signature, linearity part)."""
    kind = _real_kind(kind)
    cx = cochain_complex(kind)
    alg = build_algebra(kind)
    rows = []
    for ell in homogeneities:
        harm = harmonic_basis(2, ell, kind)
        if not harm:
            continue
        n = cx.slice(2, ell).dim
        H = _span([_vec(cx, h, ell) for h in harm], n)
        sigs = sorted(set().union(*(signatures_of(h) for h in harm)))
        total = 0
        for sig in sigs:
            restricted = [restrict(h, sig) for h in harm]
            Bs = [Bilinear.from_cochain(r, sig) for r in restricted if not r.is_zero()]
            parts_by_name = {}
            for B in Bs:
                for name, part in linearity_parts(B).items():
                    if not part.is_zero():
                        parts_by_name.setdefault(name, []).append(part.to_cochain())
            for name, cochains in sorted(parts_by_name.items()):
                span = _span([_vec(cx, c, ell) for c in cochains], n)
                if linalg.rank(H + span, n) != len(H):
                    raise AssertionError(f"{sig} part {name} leaves the harmonic space")
                basis = tuple(cx.vector_to_cochain(2, ell, v) for v in span)
                types = {linearity_type(b, sig) for b in basis}
                if len(types) != 1:
                    raise AssertionError(f"mixed linearity inside {sig} part {name}")
                rows.append(ComponentRow(kind, ell, sig, types.pop(), len(span), basis))
                total += len(span)
        if total != len(H):
            raise AssertionError(f"signature parts do not exhaust harmonic space at ell={ell}")
    rows.sort(
        key=lambda r: (
            r.homogeneity,
            [_space_key(d) for d in r.domain],
            _space_key(r.target),
            r.linearity.aggregate,
        )
    )
    return tuple(rows)


def torsion_classify(kind, row: ComponentRow) -> str:
    kind = _real_kind(kind)
    sig = row.signature
    lin = row.linearity.aggregate
    if row.homogeneity == 4:
        return "curvature-homog-4"
    if row.homogeneity != 1:
        raise ValueError(f"no torsion label for homogeneity {row.homogeneity}")
    dom = set(sig.domain)
    if kind is Kind.HYPERBOLIC:
        if sig.target in ("gL-2", "gR-2"):
            if dom == {"gL-2", "gL-1"} and sig.target == "gR-2":
                return "product-obstruction-L"
            if dom == {"gR-2", "gR-1"} and sig.target == "gL-2":
                return "product-obstruction-R"
        elif dom == {"gL-1", "gR-1"}:
            if lin == "antilinear-both":
                return "nijenhuis-J"
            if lin == "sesquilinear":
                return "S_L" if sig.target == "gL-1" else "S_R"
    else:
        if sig.target == "g-2" and lin == "antilinear-both":
            if dom == {"g-2", "gL-1"}:
                return "elliptic-J-obstruction-1"
            if dom == {"g-2", "gR-1"}:
                return "elliptic-J-obstruction-2"
        if lin == "sesquilinear":
            if sig.domain == ("gL-1", "gL-1") and sig.target == "gR-1":
                return "elliptic-product-L"
            if sig.domain == ("gR-1", "gR-1") and sig.target == "gL-1":
                return "elliptic-product-R"
            if dom == {"gL-1", "gR-1"}:
                return "elliptic-mixed-1" if sig.target == "gL-1" else "elliptic-mixed-2"
    raise ValueError(f"unknown row shape {sig} ({lin})")


def embedded_vanishing(row: ComponentRow) -> bool:
    """True when arguments and value all lie in g₋₁."""
    return all(s.endswith("-1") for s in row.signature.spaces)


@dataclass(frozen=True)
class EmbeddedReport:
    kind: Kind
    flagged: tuple
    total: int


def check_embedded_vanishing(kind) -> EmbeddedReport:
    rows = component_table(kind)
    flagged = tuple(r for r in rows if embedded_vanishing(r))
    return EmbeddedReport(Kind.parse(kind), flagged, len(rows))


def harmonic_checks(row: ComponentRow) -> bool:
    """Every basis cochain of the row is ∂- and ∂*-closed."""
    return all(differential(b).is_zero() and codifferential(b).is_zero() for b in row.basis)
