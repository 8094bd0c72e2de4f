"""Exclusion inequalities, checked by exact arithmetic and independent expansions."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fanolink.catalog import builtin_catalog
from fanolink.exclusion import (
    ExclusionCase,
    Interval,
    ParamQuadratic,
    Poly,
    QuadraticForm,
    QuadraticSurd,
    SurfaceCurveCase,
    TwoCurveGerm,
    Verdict,
    build_L2_expression,
    component_bound,
    component_bound_uniform,
    curve_degree_bound,
    discriminant_infeasibility,
    fixed_curve_point_exclusion,
    max_fixed_multiplicity,
    mobile_point_exclusion,
    node_multiplicity_bound,
    poly_from_json,
    poly_to_json,
    quotient_center_rule,
    quotient_terminal_threshold,
    replay_case,
    self_intersection_adjunction,
    two_dim_threshold,
)

F = Fraction
small = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@pytest.mark.parametrize("pa, ks, expected", [(0, 3, -5), (0, 2, -4), (1, 0, 0)])
def test_adjunction(pa, ks, expected):
    assert self_intersection_adjunction(pa, ks) == expected


@pytest.mark.parametrize("case, gamma, kind", [
    ((8, 3, -5), F(4, 5), "strict"),
    ((12, 3, -6), F(1), "boundary"),
    ((12, 2, -8), F(1), "boundary"),
    ((8, 2, -4), F(1), "boundary"),
    ((4, 1, -2), F(1), "boundary"),
])
def test_max_fixed_multiplicity_examples(case, gamma, kind):
    b = max_fixed_multiplicity(SurfaceCurveCase(*case))
    assert b.gamma_max.exact == gamma
    assert b.kind == kind
    assert b.verdict is Verdict.EXCLUDED


def test_max_fixed_multiplicity_irrational_root_is_exact():
    b = max_fixed_multiplicity(SurfaceCurveCase(8, 3, F(-13, 3)))
    assert b.gamma_max.exact is None
    assert b.kind == "strict"
    root = max(sympy.solve(sympy.Rational(-13, 3) * sympy.Symbol("g") ** 2 - 6 * sympy.Symbol("g") + 8))
    assert abs(float(b.gamma_max) - float(root)) < 1e-12
    assert b.gamma_max.compare(1) == -1
    assert b.gamma_max.compare(F(4, 5)) == 1


def test_exceeding_root_is_not_excluded():
    b = max_fixed_multiplicity(SurfaceCurveCase(20, 1, -1))
    assert b.kind == "exceeds"
    assert b.verdict is Verdict.NOT_EXCLUDED


@pytest.mark.parametrize("case", [(8, 3, 0), (8, 3, 1), (-1, 1, -1)])
def test_max_fixed_multiplicity_domain(case):
    with pytest.raises(ValueError):
        max_fixed_multiplicity(SurfaceCurveCase(*case))


@settings(max_examples=200, deadline=None)
@given(
    st.fractions(min_value=0, max_value=20, max_denominator=8),
    st.fractions(min_value=0, max_value=10, max_denominator=8),
    st.fractions(min_value=-10, max_value=F(-1, 8), max_denominator=8),
    st.fractions(min_value=0, max_value=5, max_denominator=8),
)
def test_gamma_max_monotone_in_Asq(Asq, AdotC, Csq, extra):
    lo = max_fixed_multiplicity(SurfaceCurveCase(Asq, AdotC, Csq)).gamma_max
    hi = max_fixed_multiplicity(SurfaceCurveCase(Asq + extra, AdotC, Csq)).gamma_max
    assert float(hi) >= float(lo) - 1e-12
    # and |Csq| shrinking raises the bound
    nearer = max_fixed_multiplicity(SurfaceCurveCase(Asq, AdotC, Csq / 2)).gamma_max
    assert float(nearer) >= float(lo) - 1e-12


@settings(max_examples=150, deadline=None)
@given(small, small.filter(lambda c: c != 0), st.fractions(min_value=0, max_value=50, max_denominator=9), small)
def test_surd_compare_matches_sympy(r, c, rad, x):
    s = QuadraticSurd(r, c, rad)
    exact = sympy.Rational(r.numerator, r.denominator) + sympy.Rational(c.numerator, c.denominator) * sympy.sqrt(
        sympy.Rational(rad.numerator, rad.denominator))
    assert s.compare(x) == int(sympy.sign(exact - sympy.Rational(x.numerator, x.denominator)))


@pytest.mark.parametrize("A, step, expected", [(4, 1, 3), (3, F(1, 2), F(5, 2)), (3, 1, 2), (1, 1, 0)])
def test_curve_degree_bound(A, step, expected):
    assert curve_degree_bound(A, step) == expected


@pytest.mark.parametrize("gamma1", [F(0), F(1, 3), F(1, 2), F(1)])
def test_component_bound_examples(gamma1):
    assert component_bound(1, gamma1, 1) == 1
    assert component_bound(2, gamma1, 2) == 1
    assert component_bound(F(1, 2), 0, F(1, 2)) == 1


def test_component_bound_formula_and_domain():
    assert component_bound(3, F(1, 2), 2) == F(1, 2) + F(1, 2) * F(3, 2)
    assert component_bound_uniform(1, 2) == 1
    with pytest.raises(ValueError):
        component_bound(1, 0, 0)


@pytest.mark.parametrize("germ, expected", [
    ((1, 1, 1), 4),
    ((1, 1, 3), 36),
    ((F(1, 2), 1, 1), 2),
    ((2, 2, 1), 12),
])
def test_two_dim_threshold(germ, expected):
    assert two_dim_threshold(TwoCurveGerm(*germ)) == expected


@settings(max_examples=200, deadline=None)
@given(st.fractions(min_value=0, max_value=5, max_denominator=10), st.integers(1, 4))
def test_threshold_continuous_across_case_boundary(a1, m):
    at_boundary = two_dim_threshold(TwoCurveGerm(a1, 1, m))
    assert at_boundary == 4 * a1 * m * m
    # approaching a2 -> 1 from above agrees with the case-1 value
    if a1 > 1:
        eps = F(1, 10**6)
        above = two_dim_threshold(TwoCurveGerm(a1, 1 + eps, m))
        assert abs(above - at_boundary) <= 4 * eps * m * m


@pytest.mark.parametrize("value, expected", [(3, True), (4, True), (5, False)])
def test_mobile_point(value, expected):
    # excluded iff H^2.S/n^2 <= threshold, the post-condition; at 4 the forced
    # strict L^2 > 4 contradicts L^2 <= 4
    assert mobile_point_exclusion(value, TwoCurveGerm(1, 1, 1)) is expected


def test_mobile_point_requires_m_one():
    with pytest.raises(ValueError):
        mobile_point_exclusion(3, TwoCurveGerm(1, 1, 2))


def test_fixed_curve_point_square_certificate():
    res = fixed_curve_point_exclusion(3, 1, -1)
    assert res.excluded
    assert res.equality_locus == (F(1),)
    assert res.certificate.coefficients == (1, -2, 1)
    assert res.square_form() == (1, 1)
    c = sympy.Symbol("c")
    assert sympy.expand(4 * (1 - c) - (3 - 2 * c - c**2) - (1 - c) ** 2) == 0


def test_fixed_curve_point_other_examples():
    assert not fixed_curve_point_exclusion(4, 1, -1).excluded
    res = fixed_curve_point_exclusion(0, 0, -1)
    assert res.excluded and res.equality_locus == ()


@pytest.mark.parametrize("r, n, delta, expected", [(2, 3, 1, True), (2, 2, 1, False), (3, 3, 1, False)])
def test_quotient_terminal_threshold(r, n, delta, expected):
    assert quotient_terminal_threshold(r, n, delta) is expected


@pytest.mark.parametrize("n, d, expected", [(1, 2, True), (2, 2, False), (3, F(7, 2), True)])
def test_node_multiplicity(n, d, expected):
    assert node_multiplicity_bound(n, d) is expected


@pytest.mark.parametrize("kind, through, verdict", [
    ("curve", True, Verdict.EXCLUDED),
    ("curve", False, Verdict.NO_VERDICT),
    ("point", True, Verdict.NO_VERDICT),
])
def test_quotient_center_rule(kind, through, verdict):
    assert quotient_center_rule(kind, through) is verdict


def test_quotient_center_rule_domain():
    with pytest.raises(ValueError):
        quotient_center_rule("surface", True)


def const(c):
    return QuadraticForm.constant(c)


def test_discriminant_trivial_examples():
    r = discriminant_infeasibility(ParamQuadratic(const(2), const(0), const(2)))
    assert r.as_tuple() == (None, -16, True)
    r = discriminant_infeasibility(ParamQuadratic(const(1), const(-2), const(1)))
    assert r.as_tuple() == (None, 0, False)


def test_discriminant_needs_positive_constant_lead():
    with pytest.raises(ValueError):
        discriminant_infeasibility(ParamQuadratic(QuadraticForm(0, 1, 1), const(0), const(1)))
    with pytest.raises(ValueError):
        discriminant_infeasibility(ParamQuadratic(const(-1), const(0), const(1)))


def half_curve_quadratic():
    # 2 beta^2 - 2 beta (4 - alpha) - 7 alpha + 7/4 alpha^2 + 10
    return ParamQuadratic(const(2), QuadraticForm(0, 2, -8), QuadraticForm(F(7, 4), -7, 10))


def test_discriminant_on_half_curve_quadratic():
    r = discriminant_infeasibility(half_curve_quadratic(), Interval.parse("[0,inf)"))
    assert r.alpha_star == F(6, 5)
    assert r.infeasible
    assert r.disc == QuadraticForm(-10, 24, -16)
    assert r.max_disc == F(-8, 5)
    assert r.reduced.vertex_form() == (F(-5, 2), F(6, 5), F(-2, 5))
    # independent: sympy discriminant and maximum
    a, b = sympy.symbols("a b")
    q = 2 * b**2 - 2 * b * (4 - a) - 7 * a + sympy.Rational(7, 4) * a**2 + 10
    d = sympy.discriminant(q, b)
    crit = sympy.solve(sympy.diff(d, a), a)
    assert crit == [sympy.Rational(6, 5)]
    assert d.subs(a, crit[0]) == sympy.Rational(-8, 5)


@pytest.mark.parametrize("rng, star, value, infeasible", [
    ("[2,3]", F(2), F(-8), True),
    ("(-inf,0]", F(0), F(-16), True),
    ("[0,inf)", F(6, 5), F(-8, 5), True),
])
def test_discriminant_interval_endpoints(rng, star, value, infeasible):
    r = discriminant_infeasibility(half_curve_quadratic(), Interval.parse(rng))
    assert r.as_tuple() == (star, value, infeasible)


def test_discriminant_open_zero_supremum_is_infeasible():
    # disc = -(alpha)^2 on (0, 1]: sup 0 is approached, never attained
    pq = ParamQuadratic(const(1), QuadraticForm(0, 0, 0), QuadraticForm(F(1, 4), 0, 0))
    r = discriminant_infeasibility(pq, Interval.parse("(0,1]"))
    assert r.max_disc == 0 and not r.attained and r.infeasible
    r = discriminant_infeasibility(pq, Interval.parse("[0,1]"))
    assert r.max_disc == 0 and r.attained and not r.infeasible


def test_discriminant_beyond_quadratic_is_rejected():
    pq = ParamQuadratic(const(1), QuadraticForm(1, 0, 0), const(0))  # disc = alpha^4
    with pytest.raises(ValueError, match="degree"):
        discriminant_infeasibility(pq)


def test_discriminant_unbounded_above():
    pq = ParamQuadratic(const(1), QuadraticForm(0, 1, 0), const(0))  # disc = alpha^2
    r = discriminant_infeasibility(pq)
    assert r.max_disc is None and not r.infeasible


@settings(max_examples=200, deadline=None)
@given(st.tuples(small, small), st.fractions(min_value=F(1, 4), max_value=5, max_denominator=4),
       st.tuples(small, small, small), small, small)
def test_infeasible_certificate_is_sound(c1, lead, c0, alpha, beta):
    pq = ParamQuadratic(const(lead), QuadraticForm(0, *c1), QuadraticForm(*c0))
    r = discriminant_infeasibility(pq, Interval(-20, 20))
    if r.infeasible:
        assert pq(beta, alpha) > 0


def test_build_L2_expression():
    fixed = [
        ("beta", {"A": 0, "beta": -2, "alpha": 1}),
        ("alpha", {"A": F(1, 2), "beta": 1, "alpha": F(-7, 4)}),
    ]
    got = build_L2_expression(6, fixed)
    al, be = Poly.var("alpha"), Poly.var("beta")
    want = 6 - 2 * be * be - F(7, 4) * al * al - al + 2 * al * be
    assert got == want
    assert build_L2_expression(5) == Poly.const(5)
    one = build_L2_expression(7, [("g", {"A": 2, "g": -3})])
    assert one.as_quadratic("g") == QuadraticForm(-3, -4, 7)


def test_build_L2_expression_errors():
    with pytest.raises(ValueError):
        build_L2_expression(6, [("x", {"x": -1})])
    with pytest.raises(ValueError):
        build_L2_expression(6, [("x", {"A": 1, "x": -1, "y": 1}), ("y", {"A": 0, "y": -1})])
    with pytest.raises(ValueError):
        build_L2_expression(6, [("x", {"A": 1, "x": -1, "y": 1}), ("y", {"A": 0, "x": 2, "y": -1})])


def test_poly_json_round_trip():
    p = build_L2_expression(6, [("beta", {"A": 0, "beta": -2})])
    assert poly_from_json(poly_to_json(p)) == p


def test_interval_parse_and_contains():
    i = Interval.parse("(1/2, 3]")
    assert not i.contains(F(1, 2)) and i.contains(3) and i.contains(1)
    assert str(Interval.parse("[0,inf)")) == "[0,inf)"
    with pytest.raises(ValueError):
        Interval.parse("0,1")
    with pytest.raises(ValueError):
        Interval(2, 1)


def test_every_catalog_case_replays():
    for entry in builtin_catalog().of_kind("exclusion_case"):
        report = replay_case(entry.payload)
        assert report.reproduced, (entry.id, report.mismatches)
        assert report.verdict is Verdict.EXCLUDED, entry.id


def test_replay_reports_mismatch():
    case = ExclusionCase("fixed_curve", {"Asq": "8", "AdotC": "3", "Csq": "-5"}, {"gamma_max": "1"})
    report = replay_case(case)
    assert not report.reproduced
    assert "gamma_max" in report.mismatches[0]


def test_unknown_case_test():
    with pytest.raises(ValueError):
        ExclusionCase("nonsense", {})


@settings(max_examples=100, deadline=None)
@given(small, small, small, small)
def test_quadratic_form_vertex(c2, c1, c0, x):
    assume(c2 != 0)
    q = QuadraticForm(c2, c1, c0)
    k, h, v = q.vertex_form()
    assert k * (x - h) ** 2 + v == q(x)
