"""The complex Λ^p g₋* ⊗ g with ∂, its adjoint ∂*, and harmonic spaces.

A p-cochain is stored sparsely as ``{(I, k): coefficient}`` where ``I`` is
a strictly increasing tuple of indices of g₋ basis vectors and ``k`` a basis
index of g; the value on ``(e_{I_1}, ..., e_{I_p})`` is ``Σ_k c[(I,k)] e_k``.

For the complex kinds the underlying basis is the complex one, so cochains
are complex multilinear and dimensions are complex; :func:`cohomology_dim`
reports real dimensions (twice the complex count) unless ``field="native"``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .lie_core import Kind, LieData, build_algebra

__all__ = [
    "Cochain",
    "CochainComplex",
    "HomogeneitySlice",
    "cochain_complex",
    "differential",
    "codifferential",
    "cohomology_dim",
    "harmonic_basis",
    "hodge_decomposition",
    "is_normal",
    "is_regular",
    "cohomology_table_json",
]

MAX_DEGREE = 4


@dataclass(frozen=True)
class HomogeneitySlice:
    degree: int
    homogeneity: int
    indices: tuple  # positions in the degree-p cochain basis
    dim: int


def _conj(x):
    return x.conjugate()


class CochainComplex:
    """All cochain spaces of one algebra kind, with cached slice matrices."""

    def __init__(self, data: LieData):
        self.data = data
        self.kind = data.kind
        self.neg = tuple(i for i, g in enumerate(data.grades) if g < 0)
        self._bases = {}
        self._index = {}
        for p in range(MAX_DEGREE + 1):
            basis = [(I, k) for I in combinations(self.neg, p) for k in range(data.dim)]
            self._bases[p] = tuple(basis)
            self._index[p] = {b: n for n, b in enumerate(basis)}

    @property
    def field(self) -> str:
        return self.data.field

    def basis(self, p: int) -> tuple:
        self._check_degree(p)
        return self._bases[p]

    def index(self, p: int) -> dict:
        self._check_degree(p)
        return self._index[p]

    def _check_degree(self, p):
        if not 0 <= p <= MAX_DEGREE:
            raise ValueError(f"degree {p} outside 0..{MAX_DEGREE}")

    def homogeneity_of(self, I, k) -> int:
        g = self.data.grades
        return g[k] - sum(g[i] for i in I)

    @functools.lru_cache(maxsize=None)
    def slice(self, p: int, ell: int) -> HomogeneitySlice:
        idx = tuple(n for n, (I, k) in enumerate(self.basis(p)) if self.homogeneity_of(I, k) == ell)
        return HomogeneitySlice(p, ell, idx, len(idx))

    @functools.lru_cache(maxsize=None)
    def homogeneities(self, p: int) -> tuple:
        return tuple(sorted({self.homogeneity_of(I, k) for I, k in self.basis(p)}))

    def weight(self, I, k) -> Fraction:
        """Squared norm of the basis cochain ``e^I ⊗ e_k``."""
        w = self.data.norms[k]
        for i in I:
            w = w / self.data.norms[i]
        return w

    # --- the differential on basis cochains ---------------------------------

    @functools.lru_cache(maxsize=None)
    def d_basis(self, I: tuple, k: int) -> dict:
        """∂ of the basis cochain ``e^I ⊗ e_k`` as ``{(J, m): coef}``."""
        data = self.data
        out = {}

        def add(key, v):
            s = out.get(key, 0) + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)

        Iset = set(I)
        # Σ_i (-1)^i X_i . c(..., X̂_i, ...)
        for m in self.neg:
            if m in Iset:
                continue
            J = tuple(sorted(I + (m,)))
            sign = -1 if J.index(m) % 2 else 1
            for n, v in data.bracket_basis(m, k).items():
                add((J, n), sign * v)
        # Σ_{i<j} (-1)^{i+j} c([X_i, X_j], ...)
        for pos_q, q in enumerate(I):
            rest = I[:pos_q] + I[pos_q + 1 :]
            sigma = -1 if pos_q % 2 else 1
            free = [x for x in self.neg if x not in rest]
            for a, b in combinations(free, 2):
                v = data.bracket_basis(a, b).get(q)
                if not v:
                    continue
                J = tuple(sorted(rest + (a, b)))
                i, j = J.index(a), J.index(b)
                sign = sigma * (-1 if (i + j) % 2 else 1)
                add((J, k), sign * v)
        return out

    @functools.lru_cache(maxsize=None)
    def d_matrix(self, p: int, ell: int):
        """Dense matrix of ∂: C^p_ℓ → C^{p+1}_ℓ (rows = target slice)."""
        src = self.slice(p, ell)
        tgt = self.slice(p + 1, ell)
        pos = {n: r for r, n in enumerate(tgt.indices)}
        idx = self.index(p + 1)
        m = [[Fraction(0)] * src.dim for _ in range(tgt.dim)]
        basis = self.basis(p)
        for col, n in enumerate(src.indices):
            I, k = basis[n]
            for key, v in self.d_basis(I, k).items():
                m[pos[idx[key]]][col] = v
        return m

    @functools.lru_cache(maxsize=None)
    def dstar_matrix(self, p: int, ell: int):
        """Dense matrix of ∂*: C^p_ℓ → C^{p-1}_ℓ, the adjoint of ∂_{p-1}."""
        d = self.d_matrix(p - 1, ell)  # rows: C^p_ℓ, cols: C^{p-1}_ℓ
        src = self.slice(p, ell)
        tgt = self.slice(p - 1, ell)
        bs, bt = self.basis(p), self.basis(p - 1)
        ws = [self.weight(*bs[n]) for n in src.indices]
        wt = [self.weight(*bt[n]) for n in tgt.indices]
        return [
            [_conj(d[c][r]) * ws[c] / wt[r] if d[c][r] else Fraction(0) for c in range(src.dim)]
            for r in range(tgt.dim)
        ]

    # --- cohomology -----------------------------------------------------------

    @functools.lru_cache(maxsize=None)
    def rank_d(self, p: int, ell: int) -> int:
        if p < 0:
            return 0
        sl, tl = self.slice(p, ell), self.slice(p + 1, ell)
        if sl.dim == 0 or tl.dim == 0:
            return 0
        return linalg.rank(self.d_matrix(p, ell), sl.dim)

    @functools.lru_cache(maxsize=None)
    def cohomology_dim(self, p: int, ell: int) -> int:
        """dim ker ∂_p − dim im ∂_{p−1} on the slice (native field)."""
        n = self.slice(p, ell).dim
        return n - self.rank_d(p, ell) - self.rank_d(p - 1, ell)

    @functools.lru_cache(maxsize=None)
    def harmonic_vectors(self, p: int, ell: int) -> tuple:
        """Basis of ker ∂ ∩ ker ∂* on the slice, as coordinate vectors."""
        sl = self.slice(p, ell)
        if sl.dim == 0:
            return ()
        rows = []
        if self.slice(p + 1, ell).dim:
            rows.extend(self.d_matrix(p, ell))
        if p >= 1 and self.slice(p - 1, ell).dim:
            rows.extend(self.dstar_matrix(p, ell))
        return tuple(tuple(v) for v in linalg.nullspace(rows, sl.dim))

    def vector_to_cochain(self, p: int, ell: int, vec) -> Cochain:
        basis = self.basis(p)
        sl = self.slice(p, ell)
        return Cochain(self, p, {basis[n]: v for n, v in zip(sl.indices, vec) if v})

    def cochain_to_vector(self, c: Cochain, ell: int) -> list:
        idx = self.index(c.degree)
        sl = self.slice(c.degree, ell)
        pos = {n: r for r, n in enumerate(sl.indices)}
        vec = [Fraction(0)] * sl.dim
        for key, v in c.coeffs.items():
            n = idx[key]
            if n not in pos:
                raise ValueError("cochain has components outside the requested slice")
            vec[pos[n]] = v
        return vec

    # --- g0 and J actions ---------------------------------------------------

    def g0_action(self, a: int, c: Cochain) -> Cochain:
        """``(a.c)(X_1..X_p) = [a, c(X..)] - Σ_i c(.., [a, X_i], ..)`` for a basis index ``a``."""
        if self.data.grades[a] != 0:
            raise ValueError("action is defined for g0 basis elements")
        out = {}

        def add(key, v):
            s = out.get(key, 0) + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)

        # ad_a restricted to g₋: column j holds [a, e_j]
        ad = {j: self.data.bracket_basis(a, j) for j in self.neg}
        for (I, k), coef in c.coeffs.items():
            for n, v in self.data.bracket_basis(a, k).items():
                add((I, n), coef * v)
            for pos, i in enumerate(I):
                for j in self.neg:
                    v = ad[j].get(i)
                    if not v:
                        continue
                    args = I[:pos] + (j,) + I[pos + 1 :]
                    if len(set(args)) < len(args):
                        continue
                    order = sorted(range(len(args)), key=lambda t: args[t])
                    J = tuple(args[t] for t in order)
                    add((J, k), -_perm_sign(order) * v * coef)
        return Cochain(self, c.degree, out)

    def post_compose(self, c: Cochain, op) -> Cochain:
        """Apply the linear map ``op`` (dict ``k -> {n: coef}``) to the values of ``c``."""
        out = {}
        for (I, k), coef in c.coeffs.items():
            for n, v in op.get(k, {}).items():
                s = out.get((I, n), 0) + coef * v
                if s:
                    out[(I, n)] = s
                else:
                    out.pop((I, n), None)
        return Cochain(self, c.degree, out)


def _perm_sign(order) -> int:
    order = list(order)
    sign = 1
    for i in range(len(order)):
        while order[i] != i:
            j = order[i]
            order[i], order[j] = order[j], order[i]
            sign = -sign
    return sign


@functools.lru_cache(maxsize=None)
def cochain_complex(kind) -> CochainComplex:
    return CochainComplex(build_algebra(Kind.parse(kind)).linear_data)


@dataclass(frozen=True, eq=False)
class Cochain:
    complex: CochainComplex
    degree: int
    coeffs: dict

    @classmethod
    def zero(cls, kind, degree: int) -> Cochain:
        return cls(cochain_complex(kind), degree, {})

    @classmethod
    def from_dict(cls, kind, degree: int, coeffs: dict) -> Cochain:
        cx = cochain_complex(kind)
        idx = cx.index(degree)
        clean = {}
        for (I, k), v in coeffs.items():
            I = tuple(I)
            order = sorted(range(len(I)), key=lambda t: I[t])
            key = (tuple(I[t] for t in order), k)
            if key not in idx:
                raise ValueError(f"{key} is not a degree-{degree} basis cochain")
            s = clean.get(key, 0) + _perm_sign(order) * v
            if s:
                clean[key] = s
            else:
                clean.pop(key, None)
        return cls(cx, degree, clean)

    def __add__(self, other: Cochain) -> Cochain:
        self._compatible(other)
        out = dict(self.coeffs)
        for key, v in other.coeffs.items():
            s = out.get(key, 0) + v
            if s:
                out[key] = s
            else:
                out.pop(key)
        return Cochain(self.complex, self.degree, out)

    def __sub__(self, other: Cochain) -> Cochain:
        return self + (-1) * other

    def __rmul__(self, c) -> Cochain:
        if not c:
            return Cochain(self.complex, self.degree, {})
        return Cochain(self.complex, self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.complex is other.complex and self.degree == other.degree and self.coeffs == other.coeffs

    __hash__ = None

    def _compatible(self, other):
        if self.complex is not other.complex or self.degree != other.degree:
            raise ValueError("cochains of different algebras or degrees")

    def is_zero(self) -> bool:
        return not self.coeffs

    def homogeneity_parts(self) -> dict:
        parts = {}
        for (I, k), v in self.coeffs.items():
            parts.setdefault(self.complex.homogeneity_of(I, k), {})[(I, k)] = v
        return {ell: Cochain(self.complex, self.degree, d) for ell, d in sorted(parts.items())}

    def value(self, args) -> dict:
        """Value on basis arguments (any order, repeats allowed) as ``{k: coef}``."""
        args = tuple(args)
        if len(args) != self.degree:
            raise ValueError("wrong number of arguments")
        if len(set(args)) < len(args):
            return {}
        order = sorted(range(len(args)), key=lambda t: args[t])
        sign = _perm_sign(order)
        I = tuple(args[t] for t in order)
        return {k: sign * v for (J, k), v in self.coeffs.items() if J == I}

    def inner(self, other: Cochain):
        """Induced inner product (hermitian for complex kinds)."""
        self._compatible(other)
        cx = self.complex
        return sum(
            (v * _conj(other.coeffs[key]) * cx.weight(*key) for key, v in self.coeffs.items() if key in other.coeffs),
            Fraction(0),
        )

    def to_json(self):
        out = {}
        for (I, k), v in sorted(self.coeffs.items()):
            out[f"{','.join(map(str, I))}->{k}"] = _scalar_json(v)
        return out


def _scalar_json(v):
    if isinstance(v, Fraction) or isinstance(v, int):
        return str(Fraction(v))
    if v.im == 0:
        return str(v.re)
    return v.to_pair()


def differential(c: Cochain) -> Cochain:
    cx = c.complex
    if c.degree >= MAX_DEGREE:
        raise ValueError(f"differential is available up to degree {MAX_DEGREE - 1}")
    out = {}
    for (I, k), coef in c.coeffs.items():
        for key, v in cx.d_basis(I, k).items():
            s = out.get(key, 0) + coef * v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return Cochain(cx, c.degree + 1, out)


def codifferential(c: Cochain) -> Cochain:
    """Adjoint of ∂ for the inner product induced by the compact form."""
    if c.degree < 1:
        raise ValueError("codifferential needs degree >= 1")
    cx = c.complex
    p = c.degree
    # <∂a, c> = <a, ∂*c>: coefficient of basis a in ∂*c is Σ conj(∂a)_key c_key w_key / w_a
    out = {}
    targets = {}
    for I, k in cx.basis(p - 1):
        for key, v in cx.d_basis(I, k).items():
            if key in c.coeffs:
                targets.setdefault((I, k), []).append((key, v))
    for a, terms in targets.items():
        s = sum((c.coeffs[key] * _conj(v) * cx.weight(*key) for key, v in terms), Fraction(0))
        if s:
            out[a] = s / cx.weight(*a)
    return Cochain(cx, p - 1, out)


def cohomology_dim(p: int, ell: int, kind, field: str = "real") -> int:
    """dim H^p_ℓ(g₋, g).  ``field="real"`` doubles complex-kind counts."""
    cx = cochain_complex(kind)
    d = cx.cohomology_dim(p, ell)
    if field == "real" and cx.field == "C":
        return 2 * d
    return d


def harmonic_basis(p: int, ell: int, kind) -> list:
    cx = cochain_complex(kind)
    return [cx.vector_to_cochain(p, ell, v) for v in cx.harmonic_vectors(p, ell)]


@dataclass(frozen=True)
class HodgeParts:
    exact: Cochain
    coexact: Cochain
    harmonic: Cochain


def hodge_decomposition(c: Cochain) -> HodgeParts:
    """Split a single-slice cochain as exact + coexact + harmonic."""
    cx = c.complex
    parts = c.homogeneity_parts()
    if len(parts) > 1:
        raise ValueError("decompose one homogeneity slice at a time")
    p = c.degree
    if not parts:
        z = Cochain(cx, p, {})
        return HodgeParts(z, z, z)
    (ell,) = parts
    n = cx.slice(p, ell).dim
    groups = []
    if p >= 1 and cx.slice(p - 1, ell).dim:
        groups.append(linalg.column_space(linalg.transpose(cx.d_matrix(p - 1, ell)), n))
    else:
        groups.append([])
    if cx.slice(p + 1, ell).dim and p + 1 <= MAX_DEGREE:
        groups.append(linalg.column_space(linalg.transpose(cx.dstar_matrix(p + 1, ell)), n))
    else:
        groups.append([])
    groups.append([list(v) for v in cx.harmonic_vectors(p, ell)])
    cols = [v for g in groups for v in g]
    if len(cols) != n:
        raise AssertionError("Hodge pieces do not span the slice")
    x = linalg.solve(linalg.transpose(cols), cx.cochain_to_vector(c, ell), len(cols))
    pieces = []
    start = 0
    for g in groups:
        vec = [Fraction(0)] * n
        for coef, v in zip(x[start : start + len(g)], g):
            if coef:
                for i, t in enumerate(v):
                    if t:
                        vec[i] += coef * t
        pieces.append(cx.vector_to_cochain(p, ell, vec))
        start += len(g)
    return HodgeParts(*pieces)


def is_normal(c: Cochain) -> bool:
    if c.degree != 2:
        raise ValueError("normality is a degree-2 notion")
    return codifferential(c).is_zero()


def is_regular(c: Cochain) -> bool:
    if c.degree != 2:
        raise ValueError("regularity is a degree-2 notion")
    return all(ell > 0 for ell in c.homogeneity_parts())


def cohomology_table_json(kind, p: int, with_basis: bool = True) -> list:
    cx = cochain_complex(kind)
    rows = []
    for ell in cx.homogeneities(p):
        d = cohomology_dim(p, ell, kind)
        if not d:
            continue
        row = {"kind": cx.kind.value, "p": p, "homogeneity": ell, "dim": d}
        if with_basis:
            row["basis"] = [h.to_json() for h in harmonic_basis(p, ell, kind)]
        rows.append(row)
    return rows
