import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parabolic_lab.quadric import (
    ELLIPTIC,
    HYPERBOLIC,
    KINDS,
    ChartError,
    IsotropicAutomorphism,
    QuadricPoint,
    apply_automorphism,
    bar,
    chain_equation,
    compose,
    conic_is_degenerate,
    elliptic_chain_conic,
    fit_two_chain,
    from_sharp,
    heisenberg_product,
    heisenberg_translate,
    hyperbolic_chain_conic,
    in_standard_chain,
    on_quadric,
    one_chain,
    pythagorean_unit,
    to_sharp,
    translation_to,
    two_chain_membership,
    u_coordinates,
)
from parabolic_lab.scalars import GaussianRational, I

from conftest import defining_equation, gaussians, random_automorphism, random_point, small_rationals


@pytest.mark.parametrize("kind", KINDS)
def test_random_points_on_quadric(kind):
    rng = random.Random(1)
    for _ in range(50):
        x = random_point(kind, rng)
        assert on_quadric(x) and defining_equation(x)
        y = QuadricPoint.from_pairs(kind, x.Z, (x.w1 + 1, x.w2))
        assert not (kind == HYPERBOLIC and on_quadric(QuadricPoint.from_pairs(kind, x.Z, (x.w1 + I, x.w2))))
        assert on_quadric(y) == (kind == HYPERBOLIC)


@pytest.mark.parametrize("kind", KINDS)
def test_automorphisms_preserve_quadric(kind):
    rng = random.Random(2)
    pts = [random_point(kind, rng) for _ in range(30)]
    for _ in range(30):
        a = random_automorphism(kind, rng)
        for x in pts:
            try:
                y = apply_automorphism(a, x)
            except ChartError:
                continue
            assert on_quadric(y) and defining_equation(y)


@pytest.mark.parametrize("kind", KINDS)
def test_automorphisms_fix_origin(kind):
    rng = random.Random(3)
    origin = QuadricPoint.make(kind)
    for _ in range(10):
        assert apply_automorphism(random_automorphism(kind, rng), origin) == origin


@pytest.mark.parametrize("kind", KINDS)
def test_compose_matches_sequential_application(kind):
    rng = random.Random(4)
    for _ in range(25):
        a, b = random_automorphism(kind, rng), random_automorphism(kind, rng)
        ab = compose(a, b)
        x = random_point(kind, rng)
        try:
            want = apply_automorphism(a, apply_automorphism(b, x))
        except ChartError:
            continue
        assert apply_automorphism(ab, x) == want


def test_identity_and_validation():
    for kind in KINDS:
        x = random_point(kind, random.Random(9))
        assert apply_automorphism(IsotropicAutomorphism.identity(kind), x) == x
    with pytest.raises(ValueError):
        IsotropicAutomorphism(HYPERBOLIC, (0, 1), (0, 0), (0, 0))
    with pytest.raises(ValueError):
        IsotropicAutomorphism(HYPERBOLIC, (1, 1), (0, 0), (I, 0))
    with pytest.raises(ValueError):
        IsotropicAutomorphism(ELLIPTIC, (1, 1), (0, 0), (1, 2))
    with pytest.raises(ValueError):
        QuadricPoint.make("parabolic")


def test_chart_error():
    # the denominator 1 - R w vanishes at w = 1/R
    a = IsotropicAutomorphism(HYPERBOLIC, (1, 1), (0, 0), (1, 1))
    with pytest.raises(ChartError):
        apply_automorphism(a, QuadricPoint.make(HYPERBOLIC, 0, 0, 1, 1))


@pytest.mark.parametrize("kind", KINDS)
def test_heisenberg_law(kind):
    rng = random.Random(5)
    for _ in range(40):
        t1 = translation_to(random_point(kind, rng))
        t2 = translation_to(random_point(kind, rng))
        x = random_point(kind, rng)
        lhs = heisenberg_translate(t2, heisenberg_translate(t1, x))
        assert lhs == heisenberg_translate(heisenberg_product(kind, t1, t2), x)
        assert on_quadric(lhs)


@pytest.mark.parametrize("kind", KINDS)
def test_translations_are_transitive(kind):
    rng = random.Random(6)
    origin = QuadricPoint.make(kind)
    for _ in range(10):
        x = random_point(kind, rng)
        assert heisenberg_translate(translation_to(x), origin) == x


def test_translation_parameters_checked():
    with pytest.raises(ValueError):
        heisenberg_translate(((1, 0), (0, 0)), QuadricPoint.make(HYPERBOLIC))
    with pytest.raises(ValueError):
        translation_to(QuadricPoint.make(HYPERBOLIC, 1, 0, 0, 0))


@given(small_rationals, small_rationals)
def test_hyperbolic_one_chains(alpha, beta):
    pts = one_chain(HYPERBOLIC, alpha, beta, 12)
    assert len(pts) == 12
    for x in pts:
        assert in_standard_chain(x)
        assert chain_equation(HYPERBOLIC, alpha, beta, *u_coordinates(x)) == 0
    assert fit_two_chain(pts) == (0, 0)


@given(st.integers(-6, 6), st.integers(-6, 6), small_rationals)
def test_elliptic_one_chains(m, n, beta):
    if m == 0 and n == 0:
        m = 1
    s, c = pythagorean_unit(m, n)
    pts = one_chain(ELLIPTIC, (s, c), beta, 10)
    assert len(pts) == 10
    assert len(set(pts)) == 10
    for x in pts:
        assert in_standard_chain(x)
        assert chain_equation(ELLIPTIC, (s, c), beta, *u_coordinates(x)) == 0


def _collinear_with_origin(pts):
    us = [u_coordinates(x) for x in pts]
    ref = next(u for u in us if u != (0, 0))
    return all(u[0] * ref[1] - u[1] * ref[0] == 0 for u in us)


def test_beta_zero_chains_are_lines():
    assert _collinear_with_origin(one_chain(HYPERBOLIC, Fraction(2, 3), 0, 15))
    assert _collinear_with_origin(one_chain(ELLIPTIC, pythagorean_unit(2, 1), 0, 15))
    assert not _collinear_with_origin(one_chain(HYPERBOLIC, 1, 1, 15))
    assert not _collinear_with_origin(one_chain(ELLIPTIC, pythagorean_unit(2, 1), 1, 15))


def test_distinct_elliptic_chains_share_at_most_one_other_point():
    a = one_chain(ELLIPTIC, pythagorean_unit(2, 1), 1, 40)
    d2 = pythagorean_unit(3, 1)
    shared = [u_coordinates(x) for x in a if chain_equation(ELLIPTIC, d2, 1, *u_coordinates(x)) == 0]
    assert shared[0] == (0, 0)
    assert len(shared) <= 2


def test_elliptic_direction_must_be_unit():
    with pytest.raises(ValueError):
        one_chain(ELLIPTIC, (1, 1), 1, 3)


def _conic_value(m, u):
    v = (u[0], u[1], Fraction(1))
    return sum(v[i] * m[i][j] * v[j] for i in range(3) for j in range(3))


def test_conics():
    for alpha, beta in [(Fraction(1, 2), 2), (3, -1)]:
        m = hyperbolic_chain_conic(1, alpha, beta)
        for x in one_chain(HYPERBOLIC, alpha, beta, 8):
            assert _conic_value(m, u_coordinates(x)) == 0
        assert not conic_is_degenerate(m)
    assert conic_is_degenerate(hyperbolic_chain_conic(1, 2, 0))
    assert conic_is_degenerate(hyperbolic_chain_conic(0, 2, 5))
    s, c = pythagorean_unit(1, 2)
    m = elliptic_chain_conic(s, c, 3)
    for x in one_chain(ELLIPTIC, (s, c), 3, 8):
        assert _conic_value(m, u_coordinates(x)) == 0
    assert not conic_is_degenerate(m)
    assert conic_is_degenerate(elliptic_chain_conic(s, c, 0))


@pytest.mark.parametrize("kind", KINDS)
def test_images_of_standard_chain_are_two_chains(kind):
    rng = random.Random(8)
    for _ in range(10):
        a = random_automorphism(kind, rng)
        a = IsotropicAutomorphism(kind, a.C, a.A, a.R)
        pts = []
        for x in (one_chain(kind, 1, 1, 6) if kind == HYPERBOLIC else one_chain(kind, (1, 0), 1, 6)):
            try:
                pts.append(apply_automorphism(a, x))
            except ChartError:
                pass
        A = fit_two_chain(pts)
        Cb = bar(kind, a.C)
        assert A == (a.A[0] / Cb[0], a.A[1] / Cb[1])
        assert all(two_chain_membership(kind, A, y) for y in pts)


def test_fit_rejects_scattered_points():
    rng = random.Random(10)
    pts = [random_point(HYPERBOLIC, rng) for _ in range(4)]
    with pytest.raises(ValueError):
        fit_two_chain(pts)


@given(gaussians, gaussians)
def test_sharp_roundtrip(w1, w2):
    assert from_sharp(*to_sharp(w1, w2)) == (w1, w2)


def test_json_roundtrip():
    rng = random.Random(12)
    for kind in KINDS:
        x = random_point(kind, rng)
        assert QuadricPoint.from_json(x.to_json()) == x
        assert random_automorphism(kind, rng).to_json()["kind"] == kind
