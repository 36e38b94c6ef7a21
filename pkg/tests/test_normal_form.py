import json
import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from parabolic_lab.normal_form import (
    ELLIPTIC_VARS,
    ETA_BAR_VARIABLE,
    HYPERBOLIC_VARS,
    NormalFormInputError,
    check_normal_form,
    conditions,
    diff,
    format_poly,
    is_torsion_free,
    parse_series,
    report,
    report_json,
    report_text,
    residual,
    restrict_zero,
)
from parabolic_lab.scalars import GaussianRational

SYMS = sympy.symbols(HYPERBOLIC_VARS)


def to_sympy(p):
    return sum(
        (sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator))
        * sympy.Mul(*(s**e for s, e in zip(SYMS, exp)))
        for exp, c in p.items()
    ) + sympy.Integer(0)


polys = st.dictionaries(
    st.tuples(*[st.integers(0, 3)] * 6),
    st.builds(GaussianRational, st.integers(-5, 5), st.integers(-5, 5)).filter(bool),
    max_size=6,
)


@given(polys, st.integers(0, 5), st.integers(1, 3))
def test_diff_matches_sympy(p, var, order):
    assert sympy.expand(to_sympy(diff(p, var, order)) - sympy.diff(to_sympy(p), SYMS[var], order)) == 0


@given(polys, st.integers(0, 5))
def test_restriction_is_evaluation_at_zero(p, var):
    assert sympy.expand(to_sympy(restrict_zero(p, var)) - to_sympy(p).subs(SYMS[var], 0)) == 0


@given(polys, st.integers(0, 5), st.integers(0, 5))
def test_derivatives_commute(p, a, b):
    assert diff(diff(p, a), b) == diff(diff(p, b), a)


def test_zero_series_passes():
    for text in ("N1: 0 N2: 0", "N: 0"):
        s = parse_series(text)
        assert check_normal_form(s) == []
        assert all(is_torsion_free(s).values())


def test_crafted_violation_flags_exactly_one_condition():
    s = parse_series("N1: z1 z2 zb2 + z2 zb1 zb2")
    v = check_normal_form(s)
    assert [x.condition for x in v] == ["H3"]
    assert v[0].component == "N1"
    assert v[0].terms == ("z1 z2 zb2",)
    assert "d2/dz1dz2" in v[0].description


def test_crafted_torsion_free_series():
    s = parse_series("N1: z1^4 zb1^2 + z1^2 zb1^4")
    assert check_normal_form(s) == []
    assert is_torsion_free(s) == {"N1": True, "N2": True}


def test_reality_enforced():
    with pytest.raises(NormalFormInputError, match="reality"):
        parse_series("N1: z1 z2 zb2")
    s = parse_series("N1: z1 z2 zb2", strict=False)
    assert [v.condition for v in check_normal_form(s)] == ["reality", "H3"]
    with pytest.raises(NormalFormInputError):
        parse_series("N1: i z1^2 zb1 + i z1 zb1^2")
    parse_series("N1: i z1^2 zb1 - i z1 zb1^2")


def test_support_enforced():
    with pytest.raises(NormalFormInputError, match="support"):
        parse_series("N1: z1 zb1")
    with pytest.raises(NormalFormInputError, match="support"):
        parse_series("N: z1^3")
    s = parse_series("N: z1 zb2", strict=False)
    assert [v.condition for v in s.issues] == ["support"]


@pytest.mark.parametrize(
    "text,pos",
    [("N1: z1 ^ x", 9), ("N3: z1", 0), ("N1: z1^2 zb1 + z1 zb1^2 N1: 0", 24), ("N1: z1^2 zq1", None)],
)
def test_grammar_errors(text, pos):
    with pytest.raises(NormalFormInputError) as err:
        parse_series(text)
    if pos is not None:
        assert err.value.position == pos


def test_grammar_forms():
    a = parse_series("N1: (1/2+3i) z1^2 zb1 + (1/2-3i)*z1 zb1^2 N2: 2 z2^2 zb2 + 2 z2 zb2^2")
    b = parse_series("N2: 2*z2^2*zb2+2*z2*zb2^2\nN1: (1/2-3i) z1 zb1^2 + (1/2+3i) z1^2 zb1")
    assert a == b
    c = parse_series("N1: z1^2 zb1 + z1 zb1^2 - z1 zb1^2", strict=False)
    assert format_poly("hyperbolic", c.components["N1"]) == "z1^2 zb1"


def test_truncation_order():
    s = parse_series("N1: z1^2 zb1 + z1 zb1^2", order=5)
    assert s.order == 5
    with pytest.raises(NormalFormInputError, match="truncation"):
        parse_series("N1: z1^4 zb1^2 + z1^2 zb1^4", order=5)


def _random_torsion_free(rng):
    terms = []
    for _ in range(3):
        k, l = rng.randint(1, 4), rng.randint(1, 4)
        if max(k, l) < 2:
            k = 2
        u = rng.randint(0, 2)
        c = rng.randint(1, 5)
        terms.append(f"{c} z1^{k} zb1^{l} u1^{u} + {c} z1^{l} zb1^{k} u1^{u}")
    return parse_series("N1: " + " + ".join(terms))


def test_torsion_free_series_pass_mixed_conditions():
    rng = random.Random(4)
    mixed = {"H3", "H4", "H5", "H6"}
    for _ in range(30):
        s = _random_torsion_free(rng)
        assert is_torsion_free(s)["N1"]
        assert not mixed & {v.condition for v in check_normal_form(s)}


def test_condition_lists():
    assert [c.id for c in conditions("hyperbolic")] == [f"H{i}" for i in range(1, 13)]
    assert [c.id for c in conditions("elliptic")] == [f"E{i}" for i in range(1, 10)]
    assert {c.restrict for c in conditions("elliptic") if c.restrict} == {ETA_BAR_VARIABLE}
    assert ETA_BAR_VARIABLE in ELLIPTIC_VARS


def test_restricted_conditions():
    # u2 enters H7 only through the restriction u2 = 0
    ok = parse_series("N1: z1^2 zb1^2 u2")
    assert "H7" not in {v.condition for v in check_normal_form(ok)}
    bad = parse_series("N1: z1^2 zb1^2 u1")
    assert "H7" in {v.condition for v in check_normal_form(bad)}
    cond = next(c for c in conditions("hyperbolic") if c.id == "H7")
    assert residual(bad, cond, 2, 2)


def test_elliptic_conditions():
    s = parse_series("N: z1^2 zb1^2 Ub")
    assert "E6" not in {v.condition for v in check_normal_form(s)}
    s = parse_series("N: z1^2 zb2^2 U")
    assert "E6" in {v.condition for v in check_normal_form(s)}
    s = parse_series("N: z1^4 zb2^3 U")
    assert check_normal_form(s) == [] and is_torsion_free(s) == {"N": True}


def test_reports():
    s = parse_series("N1: z1 z2 zb2 + z2 zb1 zb2")
    r = report(s)
    assert r["schema_version"] == 1 and r["normal_form"] is False
    assert json.loads(report_json(s)) == r
    assert "H3" in report_text(s)
    e = report(parse_series("N: 0"))
    assert "eta_bar_interpretation" in e
