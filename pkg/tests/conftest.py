from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from parabolic_lab.quadric import HYPERBOLIC, IsotropicAutomorphism, QuadricPoint, bar, from_sharp
from parabolic_lab.scalars import GaussianRational, I

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

small_rationals = st.builds(
    Fraction, st.integers(min_value=-12, max_value=12), st.integers(min_value=1, max_value=7)
)
nonzero_rationals = small_rationals.filter(bool)
gaussians = st.builds(GaussianRational, small_rationals, small_rationals)
nonzero_gaussians = gaussians.filter(bool)


def random_rational(rng, span=9, den=6):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_gaussian(rng):
    return GaussianRational(random_rational(rng), random_rational(rng))


def random_nonzero_gaussian(rng):
    while True:
        g = random_gaussian(rng)
        if g:
            return g


def random_point(kind, rng):
    Z = (random_gaussian(rng), random_gaussian(rng))
    if kind == HYPERBOLIC:
        U = (GaussianRational(random_rational(rng)), GaussianRational(random_rational(rng)))
    else:
        u = random_gaussian(rng)
        U = (u, u.conjugate())
    ZZ = (Z[0] * bar(kind, Z)[0], Z[1] * bar(kind, Z)[1])
    return QuadricPoint.from_pairs(kind, Z, (U[0] + I * ZZ[0], U[1] + I * ZZ[1]))


def random_automorphism(kind, rng):
    C = (random_nonzero_gaussian(rng), random_nonzero_gaussian(rng))
    A = (random_gaussian(rng), random_gaussian(rng))
    if kind == HYPERBOLIC:
        R = (random_rational(rng), random_rational(rng))
    else:
        r = random_gaussian(rng)
        R = (r, r.conjugate())
    return IsotropicAutomorphism(kind, C, A, R, rng.random() < 0.5)


def defining_equation(x):
    """Oracle in the usual coordinates."""
    if x.kind == HYPERBOLIC:
        return x.w1.im == x.z1.abs2() and x.w2.im == x.z2.abs2()
    w1, w2 = from_sharp(x.w1, x.w2)
    h = x.z1 * x.z2.conjugate()
    return w1.im == h.re and w2.im == h.im
