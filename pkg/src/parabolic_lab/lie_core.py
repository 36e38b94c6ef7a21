"""Graded real and complex Lie algebras of the hyperbolic/elliptic models.

Every algebra is realized as the real span of explicit 3x3 (or block
diagonal 6x6) matrices with Gaussian-rational entries:

* ``HYPERBOLIC``  su(2,1) + su(2,1), real dim 16
* ``ELLIPTIC``    sl(3,C) viewed as a real algebra, real dim 16
* ``SL3``         sl(3,C) as a complex algebra (stored with 16 real basis vectors)
* ``SL3SL3``      sl(3,C) + sl(3,C) complex (32 real basis vectors)

su(2,1) is ``{X : X^H H + H X = 0, tr X = 0}`` with ``H`` the 3x3
anti-diagonal identity, so ``ad diag(1,0,-1)`` puts the grade ``e_i - e_j``
on the matrix entry ``(i, j)``.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linalg
from .scalars import GaussianRational, I

__all__ = [
    "Kind",
    "BasisLabel",
    "GradedAlgebra",
    "Element",
    "LieData",
    "DistinguishedElement",
    "build_algebra",
    "bracket",
    "compact_inner_product",
    "complex_structure_J",
    "grading_element",
    "complexification",
    "AlgebraMismatch",
    "NotInDesignatedSubspace",
]

ZERO = GaussianRational(0)
ONE = GaussianRational(1)


class Kind(str, enum.Enum):
    HYPERBOLIC = "hyperbolic"
    ELLIPTIC = "elliptic"
    SL3 = "sl3"
    SL3SL3 = "sl3xsl3"

    @classmethod
    def parse(cls, name) -> Kind:
        if isinstance(name, Kind):
            return name
        aliases = {
            "hyperbolic": cls.HYPERBOLIC,
            "hyperbolicreal": cls.HYPERBOLIC,
            "su21xsu21": cls.HYPERBOLIC,
            "elliptic": cls.ELLIPTIC,
            "ellipticreal": cls.ELLIPTIC,
            "sl3": cls.SL3,
            "sl3complex": cls.SL3,
            "sl3xsl3": cls.SL3SL3,
            "sl3sl3": cls.SL3SL3,
            "sl3sl3complex": cls.SL3SL3,
        }
        key = str(name).lower().replace("-", "").replace("_", "")
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown algebra kind {name!r}") from None

    @property
    def is_complex(self) -> bool:
        return self in (Kind.SL3, Kind.SL3SL3)

    @property
    def factors(self) -> tuple[str, ...]:
        return ("L", "R") if self in (Kind.HYPERBOLIC, Kind.SL3SL3) else ("single",)


class AlgebraMismatch(ValueError):
    pass


class NotInDesignatedSubspace(ValueError):
    pass


# --- 3x3 / 6x6 matrix helpers ----------------------------------------------

Matrix = tuple  # tuple of row tuples of GaussianRational


def _mat(n, entries) -> Matrix:
    rows = [[ZERO] * n for _ in range(n)]
    for (i, j), v in entries.items():
        rows[i][j] = GaussianRational.coerce(v)
    return tuple(tuple(r) for r in rows)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n) if a[i][k] and b[k][j]), ZERO) for j in range(n))
        for i in range(n)
    )


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    c = GaussianRational.coerce(c)
    return tuple(tuple(c * x for x in row) for row in a)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    ab = mat_mul(a, b)
    ba = mat_mul(b, a)
    return tuple(tuple(x - y for x, y in zip(r1, r2)) for r1, r2 in zip(ab, ba))


def conj_transpose(a: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(a[j][i].conjugate() for j in range(n)) for i in range(n))


def conj(a: Matrix) -> Matrix:
    return tuple(tuple(x.conjugate() for x in row) for row in a)


def trace(a: Matrix) -> GaussianRational:
    return sum((a[i][i] for i in range(len(a))), ZERO)


def zero_matrix(n: int) -> Matrix:
    return tuple(tuple(ZERO for _ in range(n)) for _ in range(n))


def embed(block: Matrix, offset: int, n: int) -> Matrix:
    rows = [[ZERO] * n for _ in range(n)]
    for i, row in enumerate(block):
        for j, x in enumerate(row):
            rows[offset + i][offset + j] = x
    return tuple(tuple(r) for r in rows)


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    n = len(a) + len(b)
    return mat_add(embed(a, 0, n), embed(b, len(a), n))


# entry position -> fine root label; grade is e_i - e_j with e = (1, 0, -1)
_FINE_ROOT = {
    (2, 0): "-2",
    (1, 0): "-1,0",
    (2, 1): "0,-1",
    (0, 1): "1,0",
    (1, 2): "0,1",
    (0, 2): "2",
}
_E_DIAG = (1, 0, -1)
# holomorphic fine roots carry J = +i, the conjugate ones J = -i
_J_SIGN = {(1, 0): 1, (0, 1): 1, (2, 1): -1, (1, 2): -1}

E_MATRIX = _mat(3, {(0, 0): 1, (2, 2): -1})
F_MATRIX = _mat(3, {(0, 0): Fraction(-1, 3), (1, 1): Fraction(2, 3), (2, 2): Fraction(-1, 3)})


@dataclass(frozen=True)
class BasisLabel:
    name: str
    factor: str  # "L", "R" or "single"
    grade: int
    fine_root: str | None  # "-2", "-1,0", ..., "h:E", "h:F"; None where not a root space
    imaginary: bool = False  # second member of a (b, i*b) pair in a complex algebra

    def to_json(self):
        return {
            "label": self.name,
            "factor": self.factor,
            "grade": self.grade,
            "fine_root": self.fine_root,
        }


def _su21_basis():
    """(name, grade, fine_root, matrix) for the real basis of su(2,1)."""
    return [
        ("Y-2", -2, "-2", _mat(3, {(2, 0): I})),
        ("A-1", -1, None, _mat(3, {(1, 0): 1, (2, 1): -1})),
        ("B-1", -1, None, _mat(3, {(1, 0): I, (2, 1): I})),
        ("E", 0, "h:E", E_MATRIX),
        ("iF", 0, "h:iF", mat_scale(I, F_MATRIX)),
        ("A+1", 1, None, _mat(3, {(0, 1): 1, (1, 2): -1})),
        ("B+1", 1, None, _mat(3, {(0, 1): I, (1, 2): I})),
        ("Y+2", 2, "2", _mat(3, {(0, 2): I})),
    ]


def _sl3_complex_basis():
    """(name, grade, fine_root, matrix) for a complex basis of sl(3,C), ordered by grade."""
    return [
        ("e-2", -2, "-2", _mat(3, {(2, 0): 1})),
        ("e-1,0", -1, "-1,0", _mat(3, {(1, 0): 1})),
        ("e0,-1", -1, "0,-1", _mat(3, {(2, 1): 1})),
        ("E", 0, "h:E", E_MATRIX),
        ("F3", 0, "h:F", _mat(3, {(0, 0): -1, (1, 1): 2, (2, 2): -1})),
        ("e1,0", 1, "1,0", _mat(3, {(0, 1): 1})),
        ("e0,1", 1, "0,1", _mat(3, {(1, 2): 1})),
        ("e2", 2, "2", _mat(3, {(0, 2): 1})),
    ]


@dataclass(frozen=True)
class LieData:
    """The data a cochain complex needs: an orthogonal basis over its field.

    ``brackets[(a, b)]`` (``a < b``) is a dict ``k -> coefficient`` of
    ``[e_a, e_b]``.  ``norms[k]`` is ``<e_k, e_k>``.  ``field`` is ``"R"``
    or ``"C"``; for ``"C"`` the basis is the complex basis of a complex
    algebra and all cochains are complex multilinear.
    """

    kind: Kind
    field: str
    labels: tuple
    brackets: dict
    norms: tuple
    real_index: tuple  # position of each basis vector in the real basis

    @property
    def dim(self) -> int:
        return len(self.labels)

    @functools.cached_property
    def grades(self) -> tuple:
        return tuple(lab.grade for lab in self.labels)

    def bracket_basis(self, a: int, b: int) -> dict:
        if a == b:
            return {}
        if a < b:
            return self.brackets.get((a, b), {})
        return {k: -v for k, v in self.brackets.get((b, a), {}).items()}


@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    kind: Kind
    labels: tuple
    matrices: tuple
    structure: dict  # (a, b), a < b -> {k: Fraction}; real structure constants
    J: dict  # designated index -> {k: Fraction}
    gram: tuple  # diagonal of the compact inner product
    _coord: tuple = field(repr=False)  # (selected (i, j, part) rows, inverse matrix)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def is_complex(self) -> bool:
        return self.kind.is_complex

    @property
    def size(self) -> int:
        return len(self.matrices[0])

    def indices(self, *, grade=None, factor=None, fine_root=None) -> list[int]:
        out = []
        for i, lab in enumerate(self.labels):
            if grade is not None and lab.grade != grade:
                continue
            if factor is not None and lab.factor != factor:
                continue
            if fine_root is not None and lab.fine_root != fine_root:
                continue
            out.append(i)
        return out

    def element(self, coeffs) -> Element:
        if isinstance(coeffs, dict):
            v = [Fraction(0)] * self.dim
            for k, c in coeffs.items():
                v[k] = Fraction(c)
            coeffs = v
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients, got {len(coeffs)}")
        return Element(self, coeffs)

    def basis_element(self, k: int) -> Element:
        return self.element({k: 1})

    def to_matrix(self, coeffs) -> Matrix:
        n = self.size
        acc = [[ZERO] * n for _ in range(n)]
        for c, m in zip(coeffs, self.matrices):
            if c:
                for i in range(n):
                    for j in range(n):
                        if m[i][j]:
                            acc[i][j] += c * m[i][j]
        return tuple(tuple(r) for r in acc)

    def coordinates(self, m: Matrix) -> tuple:
        """Real coordinates of a matrix in this algebra; raises if it is outside."""
        rows, inv = self._coord
        vec = [(m[i][j].re if part == 0 else m[i][j].im) for (i, j, part) in rows]
        coeffs = tuple(sum((a * b for a, b in zip(row, vec) if a and b), Fraction(0)) for row in inv)
        if self.to_matrix(coeffs) != m:
            raise ValueError("matrix does not lie in the algebra")
        return coeffs

    def bracket_coeffs(self, x, y) -> tuple:
        out = [Fraction(0)] * self.dim
        nx = [(i, c) for i, c in enumerate(x) if c]
        ny = [(j, c) for j, c in enumerate(y) if c]
        for i, a in nx:
            for j, b in ny:
                if i == j:
                    continue
                if i < j:
                    sc, s = self.structure.get((i, j)), 1
                else:
                    sc, s = self.structure.get((j, i)), -1
                if not sc:
                    continue
                ab = a * b * s
                for k, v in sc.items():
                    out[k] += ab * v
        return tuple(out)

    def apply_J(self, coeffs) -> tuple:
        out = [Fraction(0)] * self.dim
        for i, c in enumerate(coeffs):
            if not c:
                continue
            if i not in self.J:
                raise NotInDesignatedSubspace(
                    f"basis vector {self.labels[i].name} is outside the J-designated subspace"
                )
            for k, v in self.J[i].items():
                out[k] += c * v
        return tuple(out)

    def to_json(self):
        triples = []
        for (a, b), sc in sorted(self.structure.items()):
            for k, v in sorted(sc.items()):
                triples.append([a, b, k, str(v)])
        return {
            "kind": self.kind.value,
            "dim": self.dim,
            "basis": [lab.to_json() for lab in self.labels],
            "structure_constants": triples,
        }

    @functools.cached_property
    def linear_data(self) -> LieData:
        """Basis data for the cochain complex.

        Real kinds use the real basis.  Complex kinds use the complex basis
        ``b_0, b_2, ...`` (``b_{2k+1} = i b_{2k}``); the bracket is first
        checked to be complex bilinear.
        """
        if not self.is_complex:
            return LieData(
                kind=self.kind,
                field="R",
                labels=self.labels,
                brackets=dict(self.structure),
                norms=self.gram,
                real_index=tuple(range(self.dim)),
            )
        _check_complex_bilinear(self)
        cidx = list(range(0, self.dim, 2))
        pos = {r: c for c, r in enumerate(cidx)}
        brackets = {}
        for a, b in combinations(range(len(cidx)), 2):
            v = self.bracket_coeffs(self.basis_element(cidx[a]).coeffs, self.basis_element(cidx[b]).coeffs)
            out = {}
            for r in cidx:
                z = GaussianRational(v[r], v[r + 1])
                if z:
                    out[pos[r]] = z.re if z.im == 0 else z
            if out:
                brackets[(a, b)] = out
        return LieData(
            kind=self.kind,
            field="C",
            labels=tuple(self.labels[r] for r in cidx),
            brackets=brackets,
            norms=tuple(self.gram[r] for r in cidx),
            real_index=tuple(cidx),
        )


@dataclass(frozen=True, eq=False)
class Element:
    algebra: GradedAlgebra
    coeffs: tuple

    def __add__(self, other: Element) -> Element:
        _same(self, other)
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Element) -> Element:
        _same(self, other)
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Element:
        return Element(self.algebra, tuple(-a for a in self.coeffs))

    def __rmul__(self, c) -> Element:
        c = Fraction(c)
        return Element(self.algebra, tuple(c * a for a in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.algebra), self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def matrix(self) -> Matrix:
        return self.algebra.to_matrix(self.coeffs)


def _same(x: Element, y: Element):
    if x.algebra is not y.algebra:
        if x.algebra.kind != y.algebra.kind:
            raise AlgebraMismatch(f"elements of {x.algebra.kind.value} and {y.algebra.kind.value}")
        raise AlgebraMismatch("elements belong to different algebra instances")


def bracket(x: Element, y: Element) -> Element:
    _same(x, y)
    return Element(x.algebra, x.algebra.bracket_coeffs(x.coeffs, y.coeffs))


def compact_inner_product(x: Element, y: Element) -> Fraction:
    """``Re tr(X Y^H)`` in the matrix realization."""
    _same(x, y)
    return trace(mat_mul(x.matrix(), conj_transpose(y.matrix()))).re


def complex_structure_J(x: Element) -> Element:
    return Element(x.algebra, x.algebra.apply_J(x.coeffs))


@dataclass(frozen=True)
class DistinguishedElement:
    which: str  # "E" or "F"
    factor: str
    matrix: Matrix
    element: Element | None  # None when the matrix is not in the real algebra (F in su(2,1))


def grading_element(alg: GradedAlgebra, which: str = "E", factor: str | None = None) -> DistinguishedElement:
    """``E = diag(1,0,-1)`` or ``F = diag(-1/3, 2/3, -1/3)`` in one factor (or summed)."""
    base = {"E": E_MATRIX, "F": F_MATRIX}[which]
    n = alg.size
    if factor is None or factor == "total":
        m = zero_matrix(n)
        for off in range(0, n, 3):
            m = mat_add(m, embed(base, off, n))
        fac = "total"
    else:
        if factor not in alg.kind.factors:
            raise ValueError(f"{alg.kind.value} has no factor {factor!r}")
        off = 0 if factor in ("L", "single") else 3
        m = embed(base, off, n)
        fac = factor
    try:
        el = alg.element(alg.coordinates(m))
    except ValueError:
        el = None
    return DistinguishedElement(which, fac, m, el)


# --- construction -----------------------------------------------------------


def _coordinate_system(matrices):
    """Pick independent real coordinates (entry, re/im) and invert them."""
    n = len(matrices[0])
    cols = []
    positions = [(i, j, part) for i in range(n) for j in range(n) for part in (0, 1)]
    for m in matrices:
        cols.append([(m[i][j].re if part == 0 else m[i][j].im) for (i, j, part) in positions])
    # rows of the transpose are positions; choose pivots of cols^T^T
    _, pivots = linalg.rref(cols, len(positions))
    if len(pivots) != len(matrices):
        raise ValueError("basis matrices are linearly dependent")
    sel = [positions[p] for p in pivots]
    square = [[col[p] for col in cols] for p in pivots]
    inv = linalg.inverse(square)
    return tuple(sel), tuple(tuple(r) for r in inv)


def _assemble(kind: Kind, entries, j_of_matrix) -> GradedAlgebra:
    labels = tuple(e[0] for e in entries)
    matrices = tuple(e[1] for e in entries)
    coord = _coordinate_system(matrices)
    proto = GradedAlgebra(kind, labels, matrices, {}, {}, (), coord)
    structure = {}
    for a, b in combinations(range(len(matrices)), 2):
        c = proto.coordinates(commutator(matrices[a], matrices[b]))
        sc = {k: v for k, v in enumerate(c) if v}
        if sc:
            structure[(a, b)] = sc
    J = {}
    for k, m in enumerate(matrices):
        jm = j_of_matrix(labels[k], m)
        if jm is not None:
            J[k] = {i: v for i, v in enumerate(proto.coordinates(jm)) if v}
    gram = []
    for a, ma in enumerate(matrices):
        for b in range(a + 1, len(matrices)):
            if trace(mat_mul(ma, conj_transpose(matrices[b]))).re != 0:
                raise AssertionError("basis is not orthogonal for the compact inner product")
        gram.append(trace(mat_mul(ma, conj_transpose(ma))).re)
    return GradedAlgebra(kind, labels, matrices, structure, J, tuple(gram), coord)


def _hyperbolic_J(label: BasisLabel, m: Matrix):
    if abs(label.grade) != 1:
        return None
    n = len(m)
    rows = [list(r) for r in m]
    for off in range(0, n, 3):
        for (i, j), s in _J_SIGN.items():
            rows[off + i][off + j] = rows[off + i][off + j] * (I if s > 0 else -I)
    return tuple(tuple(r) for r in rows)


def _times_i(label, m):
    return mat_scale(I, m)


@functools.lru_cache(maxsize=None)
def build_algebra(kind) -> GradedAlgebra:
    kind = Kind.parse(kind)
    entries = []
    if kind is Kind.HYPERBOLIC:
        for off, fac in ((0, "L"), (3, "R")):
            for name, grade, fr, m in _su21_basis():
                entries.append((BasisLabel(f"{fac}:{name}", fac, grade, fr), embed(m, off, 6)))
        return _assemble(kind, entries, _hyperbolic_J)
    if kind in (Kind.ELLIPTIC, Kind.SL3):
        for name, grade, fr, m in _sl3_complex_basis():
            entries.append((BasisLabel(name, "single", grade, fr), m))
            entries.append((BasisLabel(f"i*{name}", "single", grade, fr, True), mat_scale(I, m)))
        return _assemble(kind, entries, _times_i)
    # SL3SL3
    for off, fac in ((0, "L"), (3, "R")):
        for name, grade, fr, m in _sl3_complex_basis():
            big = embed(m, off, 6)
            entries.append((BasisLabel(f"{fac}:{name}", fac, grade, fr), big))
            entries.append((BasisLabel(f"{fac}:i*{name}", fac, grade, fr, True), mat_scale(I, big)))
    return _assemble(kind, entries, _times_i)


def _check_complex_bilinear(alg: GradedAlgebra):
    """Verify J is defined everywhere and ``[Jx, y] = J[x, y]`` on the basis."""
    if set(alg.J) != set(range(alg.dim)):
        raise ValueError("complex structure is not defined on the whole algebra")
    for a in range(alg.dim):
        ja = alg.apply_J(alg.basis_element(a).coeffs)
        for b in range(alg.dim):
            eb = alg.basis_element(b).coeffs
            if alg.bracket_coeffs(ja, eb) != alg.apply_J(alg.bracket_coeffs(alg.basis_element(a).coeffs, eb)):
                raise ValueError("bracket is not complex bilinear")
    for pair_start in range(0, alg.dim, 2):
        expect = {pair_start + 1: Fraction(1)}
        if alg.J[pair_start] != expect:
            raise ValueError("real basis is not organized in (b, i*b) pairs")


def complexification(alg: GradedAlgebra):
    """Explicit map of a real form into its complexification.

    Returns ``(target, images)`` where ``target`` is the SL3SL3 algebra and
    ``images[k]`` lists the complex coordinates (over ``target.linear_data``)
    of the image of real basis vector ``k``.  HYPERBOLIC embeds as the
    inclusion su(2,1) + su(2,1) in sl(3,C) + sl(3,C); ELLIPTIC as
    ``X -> (X, conj X)``.
    """
    if alg.kind is Kind.HYPERBOLIC:
        image = lambda m: m
    elif alg.kind is Kind.ELLIPTIC:
        image = lambda m: block_diag(m, conj(m))
    else:
        raise ValueError("only real kinds have a complexification map")
    target = build_algebra(Kind.SL3SL3)
    data = target.linear_data
    images = []
    for m in alg.matrices:
        real = target.coordinates(image(m))
        images.append(tuple(GaussianRational(real[r], real[r + 1]) for r in data.real_index))
    return target, images
