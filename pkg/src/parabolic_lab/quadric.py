"""Hyperbolic and elliptic quadrics in C⁴, their automorphisms and chains.

Coordinates are pairs ``Z = (z1, z2)``, ``W = (w1, w2)`` treated as elements
of the algebra C x C with a kind-specific conjugation:

* hyperbolic: ``(x1, x2)^- = (conj x1, conj x2)``
* elliptic (sharp coordinates): ``(x1, x2)^- = (conj x2, conj x1)``

In both cases the quadric is ``(W - W̄)/(2i) = Z Z̄`` and the hermitian form
is ``<z, p> = Z P̄``.  Elliptic sharp coordinates relate to the usual ones by
``w1♯ = w1 + i w2``, ``w2♯ = w1 - i w2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import GaussianRational, I

__all__ = [
    "HYPERBOLIC",
    "ELLIPTIC",
    "QuadricPoint",
    "IsotropicAutomorphism",
    "ChartError",
    "on_quadric",
    "heisenberg_translate",
    "heisenberg_product",
    "translation_to",
    "apply_automorphism",
    "compose",
    "one_chain",
    "two_chain_membership",
    "in_standard_chain",
    "fit_two_chain",
    "pythagorean_unit",
    "hyperbolic_chain_conic",
    "elliptic_chain_conic",
    "conic_is_degenerate",
    "to_sharp",
    "from_sharp",
]

HYPERBOLIC = "hyperbolic"
ELLIPTIC = "elliptic"
KINDS = (HYPERBOLIC, ELLIPTIC)
ZERO = GaussianRational(0)
ONE = GaussianRational(1)


class ChartError(ArithmeticError):
    """The point escapes the affine chart (a denominator vanishes)."""


def _kind(kind) -> str:
    k = str(getattr(kind, "value", kind)).lower()
    if k not in KINDS:
        raise ValueError(f"quadric kind must be one of {KINDS}, got {kind!r}")
    return k


def _pair(x) -> tuple:
    a, b = x
    return (GaussianRational.coerce(a), GaussianRational.coerce(b))


def bar(kind: str, x: tuple) -> tuple:
    if kind == HYPERBOLIC:
        return (x[0].conjugate(), x[1].conjugate())
    return (x[1].conjugate(), x[0].conjugate())


def _mul(x, y):
    return (x[0] * y[0], x[1] * y[1])


def _add(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _sub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _scale(c, x):
    return (c * x[0], c * x[1])


def _div(x, y):
    if not y[0] or not y[1]:
        raise ChartError("point escapes chart")
    return (x[0] / y[0], x[1] / y[1])


def _swap(x):
    return (x[1], x[0])


@dataclass(frozen=True)
class QuadricPoint:
    kind: str
    z1: GaussianRational
    z2: GaussianRational
    w1: GaussianRational
    w2: GaussianRational

    @classmethod
    def make(cls, kind, z1=0, z2=0, w1=0, w2=0) -> QuadricPoint:
        c = GaussianRational.coerce
        return cls(_kind(kind), c(z1), c(z2), c(w1), c(w2))

    @classmethod
    def from_pairs(cls, kind, Z, W) -> QuadricPoint:
        Z, W = _pair(Z), _pair(W)
        return cls(_kind(kind), Z[0], Z[1], W[0], W[1])

    @property
    def Z(self):
        return (self.z1, self.z2)

    @property
    def W(self):
        return (self.w1, self.w2)

    def to_json(self):
        return {
            "kind": self.kind,
            "z1": self.z1.to_pair(),
            "z2": self.z2.to_pair(),
            "w1": self.w1.to_pair(),
            "w2": self.w2.to_pair(),
        }

    @classmethod
    def from_json(cls, data, kind=None) -> QuadricPoint:
        kind = kind or data.get("kind")
        if kind is None:
            raise ValueError("point JSON needs a kind")
        vals = {}
        for key in ("z1", "z2", "w1", "w2"):
            v = data.get(key, ["0", "0"])
            if isinstance(v, (list, tuple)):
                vals[key] = GaussianRational.from_pair(v)
            else:
                vals[key] = GaussianRational(Fraction(str(v)))
        return cls(_kind(kind), **vals)


def _defect(kind, Z, W):
    """``(W - W̄)/(2i) - Z Z̄`` componentwise."""
    lhs = _scale(GaussianRational(0, Fraction(-1, 2)), _sub(W, bar(kind, W)))
    return _sub(lhs, _mul(Z, bar(kind, Z)))


def on_quadric(x: QuadricPoint) -> bool:
    d = _defect(x.kind, x.Z, x.W)
    return not d[0] and not d[1]


def hermitian(kind, z, p) -> tuple:
    return _mul(_pair(z), bar(kind, _pair(p)))


def _params_on_quadric(kind, p, q) -> bool:
    d = _defect(kind, p, q)
    return not d[0] and not d[1]


def heisenberg_translate(t, x: QuadricPoint) -> QuadricPoint:
    """``z* = z + p``, ``w* = w + q + 2i<z, p>`` for ``t = (p, q)``."""
    p, q = _pair(t[0]), _pair(t[1])
    if not _params_on_quadric(x.kind, p, q):
        raise ValueError("translation parameters are not on the quadric")
    Z = _add(x.Z, p)
    W = _add(_add(x.W, q), _scale(2 * I, hermitian(x.kind, x.Z, p)))
    return QuadricPoint.from_pairs(x.kind, Z, W)


def heisenberg_product(kind, t1, t2) -> tuple:
    """Parameters of "translate by t1, then by t2"."""
    kind = _kind(kind)
    p, q = _pair(t1[0]), _pair(t1[1])
    p2, q2 = _pair(t2[0]), _pair(t2[1])
    return (_add(p, p2), _add(_add(q, q2), _scale(2 * I, hermitian(kind, p, p2))))


def translation_to(x: QuadricPoint) -> tuple:
    """The Heisenberg translation taking the origin to ``x``."""
    if not on_quadric(x):
        raise ValueError("point is not on the quadric")
    return (x.Z, x.W)


@dataclass(frozen=True)
class IsotropicAutomorphism:
    """Poincaré map with diagonal parameters ``C, A, R``, optionally followed by the factor swap."""

    kind: str
    C: tuple
    A: tuple
    R: tuple
    swap: bool = False

    def __post_init__(self):
        object.__setattr__(self, "kind", _kind(self.kind))
        object.__setattr__(self, "C", _pair(self.C))
        object.__setattr__(self, "A", _pair(self.A))
        object.__setattr__(self, "R", _pair(self.R))
        if not self.C[0] or not self.C[1]:
            raise ValueError("C must be invertible")
        if bar(self.kind, self.R) != self.R:
            raise ValueError(
                "R must be real" if self.kind == HYPERBOLIC else "R entries must be mutually conjugate"
            )

    @classmethod
    def identity(cls, kind) -> IsotropicAutomorphism:
        return cls(kind, (1, 1), (0, 0), (0, 0))

    def matrices(self):
        """Per-component 3x3 matrices acting on ``(Z, W, 1)``."""
        k = self.kind
        Ab = bar(k, self.A)
        CC = _mul(self.C, bar(k, self.C))
        out = []
        for j in (0, 1):
            C, A, R = self.C[j], self.A[j], self.R[j]
            out.append(
                (
                    (C, C * A, ZERO),
                    (ZERO, CC[j], ZERO),
                    (-2 * I * Ab[j], -(R + I * A * Ab[j]), ONE),
                )
            )
        return out

    def to_json(self):
        return {
            "kind": self.kind,
            "C": [c.to_pair() for c in self.C],
            "A": [a.to_pair() for a in self.A],
            "R": [r.to_pair() for r in self.R],
            "swap": self.swap,
        }


def _poincare(a: IsotropicAutomorphism, Z, W):
    k = a.kind
    D = _sub(_sub((ONE, ONE), _scale(2 * I, _mul(bar(k, a.A), Z))), _mul(_add(a.R, _scale(I, _mul(a.A, bar(k, a.A)))), W))
    Zs = _div(_mul(a.C, _add(Z, _mul(a.A, W))), D)
    Ws = _div(_mul(_mul(a.C, bar(k, a.C)), W), D)
    return Zs, Ws


def apply_automorphism(a: IsotropicAutomorphism, x: QuadricPoint) -> QuadricPoint:
    if a.kind != x.kind:
        raise ValueError("automorphism and point are of different kinds")
    Z, W = _poincare(a, x.Z, x.W)
    if a.swap:
        Z, W = _swap(Z), _swap(W)
    return QuadricPoint.from_pairs(x.kind, Z, W)


def _matmul3(m, n):
    return tuple(tuple(sum((m[i][k] * n[k][j] for k in range(3)), ZERO) for j in range(3)) for i in range(3))


def compose(a: IsotropicAutomorphism, b: IsotropicAutomorphism) -> IsotropicAutomorphism:
    """The automorphism ``a ∘ b`` (``b`` acts first)."""
    if a.kind != b.kind:
        raise ValueError("kinds differ")
    if b.swap:
        # P_a ∘ σ = σ ∘ P_{σ a}
        a = IsotropicAutomorphism(a.kind, _swap(a.C), _swap(a.A), _swap(a.R), a.swap)
    ms = [_matmul3(ma, mb) for ma, mb in zip(a.matrices(), b.matrices())]
    C = tuple(m[0][0] for m in ms)
    A = tuple(m[0][1] / m[0][0] for m in ms)
    R = tuple(-m[2][1] - I * A[j] * bar(a.kind, A)[j] for j, m in enumerate(ms))
    out = IsotropicAutomorphism(a.kind, C, A, R, a.swap != b.swap)
    if out.matrices() != ms:
        raise AssertionError("composite is not of Poincaré form")
    return out


# --- chains -----------------------------------------------------------------


def pythagorean_unit(m: int, n: int) -> tuple:
    """Exact rational point ``(s, c)`` on the unit circle from integers ``m, n``."""
    d = m * m + n * n
    if d == 0:
        raise ValueError("m and n cannot both vanish")
    return (Fraction(m * m - n * n, d), Fraction(2 * m * n, d))


def _sample_rationals():
    yield Fraction(0)
    den = 1
    while True:
        for num in range(1, 2 * den + 1):
            f = Fraction(num, den)
            if f.denominator == den:
                yield f
                yield -f
        den += 1


def _directions():
    yield (1, 0)
    yield (0, 1)
    for f in _sample_rationals():
        if f:
            yield (1, f)


def _mu0_point(kind, u1, u2) -> QuadricPoint:
    if kind == HYPERBOLIC:
        return QuadricPoint.make(kind, 0, 0, u1, u2)
    w = GaussianRational(u1, u2)
    return QuadricPoint.make(kind, 0, 0, w, w.conjugate())


def u_coordinates(x: QuadricPoint) -> tuple:
    """Real coordinates ``(u1, u2)`` of a point (``𝒰 = u1 + i u2`` for the elliptic kind)."""
    if x.kind == HYPERBOLIC:
        return (x.w1.re, x.w2.re)
    return (x.w1.re, x.w1.im)


def one_chain(kind, alpha, beta, n: int) -> list:
    """``n`` exact points of a 1-chain through the origin in the standard 2-chain.

    Hyperbolic: ``u1 = alpha u2 / (1 - beta u2)`` sampled at rational ``u2``.
    Elliptic: ``beta (u1² + u2²) + s u1 - c u2 = 0`` with ``alpha = (s, c)``
    an exact unit vector, sampled along rational directions through 0.
    """
    kind = _kind(kind)
    beta = Fraction(beta)
    if n < 0:
        raise ValueError("sample count must be non-negative")
    pts = []
    if kind == HYPERBOLIC:
        alpha = Fraction(alpha)
        for u2 in _sample_rationals():
            if len(pts) == n:
                break
            den = 1 - beta * u2
            if den == 0:
                continue
            pts.append(_mu0_point(kind, alpha * u2 / den, u2))
        return pts
    s, c = (Fraction(v) for v in alpha)
    if s * s + c * c != 1:
        raise ValueError("elliptic direction must be an exact unit vector (s, c)")
    if beta == 0:
        for t in _sample_rationals():
            if len(pts) == n:
                break
            pts.append(_mu0_point(kind, t * c, t * s))
        return pts
    pts.append(_mu0_point(kind, 0, 0))
    seen = {(Fraction(0), Fraction(0))}
    for d1, d2 in _directions():
        if len(pts) >= n:
            break
        d1, d2 = Fraction(d1), Fraction(d2)
        t = (c * d2 - s * d1) / (beta * (d1 * d1 + d2 * d2))
        u = (t * d1, t * d2)
        if u not in seen:
            seen.add(u)
            pts.append(_mu0_point(kind, *u))
    return pts[:n]


def chain_equation(kind, alpha, beta, u1, u2) -> Fraction:
    """Residual of the 1-chain equation at ``(u1, u2)``."""
    kind = _kind(kind)
    beta = Fraction(beta)
    if kind == HYPERBOLIC:
        return u1 * (1 - beta * u2) - Fraction(alpha) * u2
    s, c = alpha
    return beta * (u1 * u1 + u2 * u2) + s * u1 - c * u2


def in_standard_chain(x: QuadricPoint) -> bool:
    """Membership in μ₀ = {z = 0, v = 0}."""
    return two_chain_membership(x.kind, (0, 0), x)


def two_chain_membership(kind, A, x: QuadricPoint) -> bool:
    """``x`` lies on the quadric and on the matrix line ``Z = A W``."""
    if _kind(kind) != x.kind:
        raise ValueError("kind mismatch")
    A = _pair(A)
    return on_quadric(x) and _mul(A, x.W) == x.Z


def fit_two_chain(points) -> tuple:
    """Diagonal ``A`` with ``Z = A W`` on all points; raises if none exists."""
    pts = list(points)
    if not pts:
        raise ValueError("no points")
    A = [None, None]
    for x in pts:
        for j in (0, 1):
            if A[j] is None and x.W[j]:
                A[j] = x.Z[j] / x.W[j]
    A = tuple(ZERO if a is None else a for a in A)
    for x in pts:
        if not two_chain_membership(x.kind, A, x):
            raise ValueError("points do not lie on a common 2-chain")
    return A


def hyperbolic_chain_conic(a0, a1, beta):
    """Symmetric matrix of ``a0 u1 - a1 u2 - beta u1 u2 = 0`` (tangent direction ``(a1, a0)``)."""
    h = Fraction(1, 2)
    a0, a1, beta = Fraction(a0), Fraction(a1), Fraction(beta)
    return ((Fraction(0), -beta * h, a0 * h), (-beta * h, Fraction(0), -a1 * h), (a0 * h, -a1 * h, Fraction(0)))


def elliptic_chain_conic(s, c, beta):
    h = Fraction(1, 2)
    s, c, beta = Fraction(s), Fraction(c), Fraction(beta)
    return ((beta, Fraction(0), s * h), (Fraction(0), beta, -c * h), (s * h, -c * h, Fraction(0)))


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def conic_is_degenerate(m) -> bool:
    return _det3(m) == 0


# --- elliptic coordinate change ---------------------------------------------


def to_sharp(w1, w2) -> tuple:
    w1, w2 = GaussianRational.coerce(w1), GaussianRational.coerce(w2)
    return (w1 + I * w2, w1 - I * w2)


def from_sharp(ws1, ws2) -> tuple:
    ws1, ws2 = GaussianRational.coerce(ws1), GaussianRational.coerce(ws2)
    half = Fraction(1, 2)
    return ((ws1 + ws2) * half, (ws1 - ws2) * GaussianRational(0, -half))
