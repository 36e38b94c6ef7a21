"""Weight combinatorics for A2 and A2 x A2: Weyl group, Kostant, Künneth.

Weights are written by their coefficients ``(a, b)`` over the fundamental
weights.  All cohomology here is ``H^p(p₊, V)`` for the Borel subalgebra, so
homogeneities are the negatives of those of ``H^p(g₋, g)``.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

__all__ = [
    "Weight",
    "WeylElement",
    "RHO",
    "weyl_group",
    "affine_action",
    "kostant_cohomology",
    "CohomologyComponent",
    "kunneth",
    "kunneth_h2",
    "identify_cochain_shape",
    "ShapeError",
    "predicted_dim",
    "table3",
    "table4",
]


class Weight(NamedTuple):
    a: int
    b: int

    def __add__(self, other):
        return Weight(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return Weight(self.a - other.a, self.b - other.b)

    def is_dominant(self) -> bool:
        return self.a >= 0 and self.b >= 0

    @property
    def E(self) -> int:
        return self.a + self.b

    @property
    def F(self) -> Fraction:
        return Fraction(self.a - self.b, 3)

    def __str__(self):
        return f"({self.a},{self.b})"


RHO = Weight(1, 1)
TRIVIAL = Weight(0, 0)
ADJOINT = Weight(1, 1)


def _s1(w: Weight) -> Weight:
    return Weight(-w.a, w.a + w.b)


def _s2(w: Weight) -> Weight:
    return Weight(w.a + w.b, -w.b)


_REFLECTIONS = {1: _s1, 2: _s2}


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as a reduced word; ``(1, 2)`` means s₁s₂ (s₂ acts first)."""

    word: tuple

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, w: Weight) -> Weight:
        for g in reversed(self.word):
            w = _REFLECTIONS[g](w)
        return w

    def __mul__(self, other: WeylElement) -> WeylElement:
        return _reduce(self.word + other.word)

    def __str__(self):
        return "e" if not self.word else "".join(f"s{g}" for g in self.word)


def _reduce(word) -> WeylElement:
    """Reduced representative of a word, identified through its action on a regular weight."""
    probe = Weight(1, 2)  # regular: trivial stabilizer
    img = WeylElement(tuple(word)).act(probe)
    for el in weyl_group():
        if el.act(probe) == img:
            return el
    raise AssertionError("word did not reduce")


@functools.lru_cache(maxsize=None)
def weyl_group() -> tuple:
    """All six elements, found by breadth-first search on the orbit of ρ."""
    seen = {RHO: WeylElement(())}
    queue = deque([RHO])
    while queue:
        w = queue.popleft()
        word = seen[w].word
        for g in (1, 2):
            v = _REFLECTIONS[g](w)
            if v not in seen:
                seen[v] = WeylElement((g,) + word)
                queue.append(v)
    return tuple(sorted(seen.values(), key=lambda e: (e.length, e.word)))


def affine_action(w: WeylElement, lam: Weight) -> Weight:
    """``w.λ = w(λ + ρ) − ρ``."""
    return w.act(Weight(*lam) + RHO) - RHO


def _p_dominant(mu: Weight, uncrossed=()) -> bool:
    # the Borel crosses every node, so there is nothing to test
    return all(mu[i] >= 0 for i in uncrossed)


def kostant_cohomology(lam, p: int) -> list:
    """Highest weights of ``H^p(p₊, V_λ)``, each with multiplicity one."""
    lam = Weight(*lam)
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    if p < 0:
        raise ValueError("negative degree")
    out = [affine_action(w, lam) for w in weyl_group() if w.length == p]
    return sorted(mu for mu in out if _p_dominant(mu))


# --- products ---------------------------------------------------------------


@dataclass(frozen=True)
class CohomologyComponent:
    degree: int
    weights: tuple  # (Weight_L, Weight_R)
    coefficients: str  # factor carrying sl(3,C): "L" or "R"

    @property
    def homogeneity(self) -> int:
        """Total homogeneity on the p₊ side, ``E_L + E_R``."""
        return self.weights[0].E + self.weights[1].E

    @property
    def eigenvalues(self) -> tuple:
        """``(E_L, E_R, F_L, F_R)``."""
        wl, wr = self.weights
        return (Fraction(wl.E), Fraction(wr.E), wl.F, wr.F)

    def mirrored(self) -> CohomologyComponent:
        return CohomologyComponent(
            self.degree, (self.weights[1], self.weights[0]), "R" if self.coefficients == "L" else "L"
        )

    def to_json(self):
        return {
            "degree": self.degree,
            "weights": [list(w) for w in self.weights],
            "coefficients": self.coefficients,
            "homogeneity": self.homogeneity,
            "eigenvalues": [str(x) for x in self.eigenvalues],
        }


def kunneth(p: int, coefficients: str = "L") -> list:
    """Components of ``H^p(p₊ᴸ ⊕ p₊ᴿ, V)`` for ``V = gᴸ ⊠ ℂ`` or ``ℂ ⊠ gᴿ``."""
    out = []
    for i in range(p + 1):
        j = p - i
        for wl in kostant_cohomology(ADJOINT, i):
            for wr in kostant_cohomology(TRIVIAL, j):
                out.append(CohomologyComponent(p, (wl, wr), "L"))
    if coefficients == "R":
        out = [c.mirrored() for c in out]
    elif coefficients != "L":
        raise ValueError("coefficients must be 'L' or 'R'")
    return out


def kunneth_h2(H_L=None, H_R=None) -> list:
    """The eight components of ``H²`` with coefficients in ``gᴸ ⊠ ℂ``.

    ``H_L`` and ``H_R`` may be given as ``{degree: [weights]}`` for the
    ``gᴸ`` and ``ℂ`` factors; they default to the Kostant results.
    """
    if H_L is None:
        H_L = {i: kostant_cohomology(ADJOINT, i) for i in range(3)}
    if H_R is None:
        H_R = {j: kostant_cohomology(TRIVIAL, j) for j in range(3)}
    return [
        CohomologyComponent(2, (Weight(*wl), Weight(*wr)), "L")
        for i in range(3)
        for wl in H_L.get(i, [])
        for wr in H_R.get(2 - i, [])
    ]


# --- cochain shapes ---------------------------------------------------------

# (E, F) eigenvalues of the one-dimensional root spaces of sl(3,C)
ROOT_EIGENVALUES = {
    "-2": (-2, Fraction(0)),
    "-1,0": (-1, Fraction(1)),
    "0,-1": (-1, Fraction(-1)),
    "1,0": (1, Fraction(-1)),
    "0,1": (1, Fraction(1)),
    "2": (2, Fraction(0)),
}
P_PLUS_ROOTS = ("1,0", "0,1", "2")


class ShapeError(RuntimeError):
    """No or several cochain shapes fit a component: a convention bug."""


@dataclass(frozen=True)
class Shape:
    """A bilinear signature ``args -> target`` between (factor, fine-root) spaces."""

    args: tuple  # two (factor, fine_root) pairs, sorted
    target: tuple

    def dual(self) -> Shape:
        """The matching signature on the g₋ side: every root is negated."""
        return Shape(tuple(sorted((f, _negate(r)) for f, r in self.args)), (self.target[0], _negate(self.target[1])))

    def mirrored(self) -> Shape:
        sw = {"L": "R", "R": "L"}
        return Shape(tuple(sorted((sw[f], r) for f, r in self.args)), (sw[self.target[0]], self.target[1]))

    def __str__(self):
        a = " x ".join(f"g^{f}_{{{r}}}" for f, r in self.args)
        return f"{a} -> g^{self.target[0]}_{{{self.target[1]}}}"

    def to_json(self):
        return {"args": [list(a) for a in self.args], "target": list(self.target)}


def _negate(root: str) -> str:
    return ",".join(str(-int(x)) for x in root.split(","))


def shape_eigenvalues(shape: Shape) -> tuple:
    """``(E_L, E_R, F_L, F_R)`` of a cochain p₊ x p₊ -> g of this shape: target minus arguments."""
    ev = {"L": [0, Fraction(0)], "R": [0, Fraction(0)]}
    f, r = shape.target
    e, fv = ROOT_EIGENVALUES[r]
    ev[f][0] += e
    ev[f][1] += fv
    for f, r in shape.args:
        e, fv = ROOT_EIGENVALUES[r]
        ev[f][0] -= e
        ev[f][1] -= fv
    return (Fraction(ev["L"][0]), Fraction(ev["R"][0]), ev["L"][1], ev["R"][1])


def _all_shapes(target_factors):
    spaces = [(f, r) for f in ("L", "R") for r in P_PLUS_ROOTS]
    for a, b in combinations(spaces, 2):
        for f in target_factors:
            for r in ROOT_EIGENVALUES:
                yield Shape((a, b), (f, r))


def identify_cochain_shape(comp: CohomologyComponent, target_factors=None) -> Shape:
    """The unique shape whose eigenvalues match the component.

    Targets range over the root spaces of the coefficient factor by default;
    pass ``target_factors=("L", "R")`` to search both.
    """
    if comp.degree != 2:
        raise ValueError("shapes are identified for degree 2 only")
    if target_factors is None:
        target_factors = (comp.coefficients,)
    hits = [s for s in _all_shapes(target_factors) if shape_eigenvalues(s) == comp.eigenvalues]
    if len(hits) != 1:
        raise ShapeError(f"{len(hits)} shapes match {comp.weights}: {[str(h) for h in hits]}")
    return hits[0]


# --- predictions for the direct computation ----------------------------------


def predicted_dim(kind, p: int, ell: int) -> int:
    """Real dimension of ``H^p_ℓ(g₋, g)`` predicted by the weight route.

    ``ell`` is the homogeneity on the g₋ side; each complex component counts
    as real dimension 2 for the complex kinds.  A real form has real
    dimension equal to the complex dimension of its complexification.
    """
    from .lie_core import Kind

    kind = Kind.parse(kind)
    if kind is Kind.SL3:
        n = sum(1 for mu in kostant_cohomology(ADJOINT, p) if mu.E == -ell)
        return 2 * n
    n = sum(1 for side in ("L", "R") for c in kunneth(p, side) if c.homogeneity == -ell)
    return 2 * n if kind is Kind.SL3SL3 else n


# --- tables -----------------------------------------------------------------


def table3() -> list:
    rows = []
    for p in range(3):
        rows.append({"degree": p, "module": "C", "weights": [list(w) for w in kostant_cohomology(TRIVIAL, p)]})
        rows.append({"degree": p, "module": "sl3", "weights": [list(w) for w in kostant_cohomology(ADJOINT, p)]})
    return rows


def table4(mirrored: bool = False) -> list:
    rows = []
    for comp in kunneth_h2():
        if mirrored:
            comp = comp.mirrored()
        shape = identify_cochain_shape(comp)
        row = comp.to_json()
        row["cochain_shape"] = shape.to_json()
        row["cochain"] = str(shape)
        rows.append(row)
    rows.sort(key=lambda r: (r["homogeneity"], r["weights"]))
    return rows
