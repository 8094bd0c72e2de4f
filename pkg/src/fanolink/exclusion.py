"""Inequality engine for excluding maximal centers.

The test-surface method restricts a mobile system H in |-nK| to a surface S
through the center and writes A = (1/n) H|_S = L + (fixed part), with L nef.
A curve center is excluded once every fixed coefficient is shown to be <= 1;
a point center is excluded once L^2 is shown not to exceed the local
intersection bound forced by non log canonicity:

    L^2 > 4 a1 a2 m^2            if a1 <= 1 or a2 <= 1
    L^2 > 4 (a1 + a2 - 1) m^2    if a1, a2 > 1

All verdicts are exact.  Irrational roots are never approximated; they are
located by evaluating signs of rational polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Mapping, Sequence

from fanolink.rational import as_fraction, fmt, rational_sqrt


class Verdict(str, Enum):
    EXCLUDED = "excluded"
    NOT_EXCLUDED = "not excluded"
    NO_VERDICT = "no verdict"


# -- polynomials -------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticForm:
    """c2 x^2 + c1 x + c0 with rational coefficients."""

    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self):
        for name in ("c2", "c1", "c0"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @classmethod
    def constant(cls, c) -> QuadraticForm:
        return cls(0, 0, c)

    def __call__(self, x) -> Fraction:
        x = as_fraction(x)
        return (self.c2 * x + self.c1) * x + self.c0

    def __add__(self, other):
        return QuadraticForm(self.c2 + other.c2, self.c1 + other.c1, self.c0 + other.c0)

    def __sub__(self, other):
        return QuadraticForm(self.c2 - other.c2, self.c1 - other.c1, self.c0 - other.c0)

    def __neg__(self):
        return QuadraticForm(-self.c2, -self.c1, -self.c0)

    def scale(self, t) -> QuadraticForm:
        t = as_fraction(t)
        return QuadraticForm(t * self.c2, t * self.c1, t * self.c0)

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        """(c0, c1, c2), constant term first."""
        return (self.c0, self.c1, self.c2)

    @property
    def is_constant(self) -> bool:
        return self.c2 == 0 and self.c1 == 0

    def discriminant(self) -> Fraction:
        return self.c1 * self.c1 - 4 * self.c2 * self.c0

    def vertex_form(self) -> tuple[Fraction, Fraction, Fraction]:
        """(k, h, v) with q(x) = k (x - h)^2 + v; needs c2 != 0."""
        if self.c2 == 0:
            raise ValueError("vertex form needs a nonzero leading coefficient")
        h = -self.c1 / (2 * self.c2)
        return (self.c2, h, self(h))

    def __str__(self):
        return _poly_str([(self.c2, "x^2"), (self.c1, "x"), (self.c0, "")])


def _poly_str(terms) -> str:
    out = []
    for c, mono in terms:
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = fmt(mag) if (mono == "" or mag != 1) else ""
        if body and mono:
            body += "*"
        out.append(f"{sign} {body}{mono}")
    if not out:
        return "0"
    text = " ".join(out)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


Monomial = tuple[str, ...]


@dataclass(frozen=True)
class Poly:
    """Sparse polynomial over Q; monomials are sorted tuples of variable names."""

    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mono, c in dict(self.terms).items():
            c = as_fraction(c)
            if c != 0:
                key = tuple(sorted(mono))
                clean[key] = clean.get(key, Fraction(0)) + c
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v != 0})

    @classmethod
    def const(cls, c) -> Poly:
        return cls({(): c})

    @classmethod
    def var(cls, name: str) -> Poly:
        return cls({(name,): 1})

    @staticmethod
    def _lift(other) -> Poly:
        return other if isinstance(other, Poly) else Poly.const(other)

    def __add__(self, other):
        other = self._lift(other)
        merged = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return Poly(merged)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out: dict[Monomial, Fraction] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                key = tuple(sorted(k1 + k2))
                out[key] = out.get(key, Fraction(0)) + v1 * v2
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coeff(self, *variables: str) -> Fraction:
        return self.terms.get(tuple(sorted(variables)), Fraction(0))

    def degree_in(self, name: str) -> int:
        return max((m.count(name) for m in self.terms), default=0)

    @property
    def variables(self) -> set[str]:
        return {v for m in self.terms for v in m}

    def subs(self, **values) -> Poly:
        out = Poly()
        for mono, c in self.terms.items():
            piece = Poly.const(c)
            for v in mono:
                piece = piece * (as_fraction(values[v]) if v in values else Poly.var(v))
            out = out + piece
        return out

    def as_quadratic(self, name: str) -> QuadraticForm:
        """View a univariate polynomial of degree <= 2 as a QuadraticForm."""
        if self.variables - {name} or self.degree_in(name) > 2:
            raise ValueError(f"{self} is not a quadratic in {name} alone")
        return QuadraticForm(self.coeff(name, name), self.coeff(name), self.coeff())

    def as_param_quadratic(self, var: str, param: str) -> ParamQuadratic:
        """Collect as c2(param) var^2 + c1(param) var + c0(param)."""
        if self.variables - {var, param}:
            raise ValueError(f"unexpected variables in {self}")
        parts = {0: {}, 1: {}, 2: {}}
        for mono, c in self.terms.items():
            k = mono.count(var)
            if k > 2:
                raise ValueError(f"degree {k} in {var}")
            rest = tuple(v for v in mono if v != var)
            parts[k][rest] = c
        return ParamQuadratic(
            Poly(parts[2]).as_quadratic(param),
            Poly(parts[1]).as_quadratic(param),
            Poly(parts[0]).as_quadratic(param),
        )

    def __str__(self):
        def mono_str(m):
            if not m:
                return ""
            seen = []
            for v in sorted(set(m)):
                k = m.count(v)
                seen.append(v if k == 1 else f"{v}^{k}")
            return "*".join(seen)

        ordered = sorted(self.terms.items(), key=lambda kv: (-len(kv[0]), kv[0]))
        return _poly_str([(c, mono_str(m)) for m, c in ordered])


# -- exact quadratic irrationals ---------------------------------------------


@dataclass(frozen=True)
class QuadraticSurd:
    """rational + coeff * sqrt(radicand), radicand >= 0."""

    rational: Fraction
    coeff: Fraction = Fraction(0)
    radicand: Fraction = Fraction(0)

    @property
    def exact(self) -> Fraction | None:
        """The value as a Fraction when it is rational, else None."""
        if self.coeff == 0:
            return self.rational
        root = rational_sqrt(self.radicand)
        return None if root is None else self.rational + self.coeff * root

    def compare(self, x) -> int:
        """Sign of (self - x), computed without floating point."""
        x = as_fraction(x)
        exact = self.exact
        if exact is not None:
            return (exact > x) - (exact < x)
        # self - x = u + coeff*sqrt(radicand); compare u with -coeff*sqrt(radicand)
        u = self.rational - x
        s = self.coeff
        if u >= 0 and s >= 0:
            return 1
        if u <= 0 and s <= 0:
            return -1
        lhs, rhs = u * u, s * s * self.radicand  # |u| vs |s| sqrt(radicand)
        if u > 0:
            return (lhs > rhs) - (lhs < rhs)
        return (rhs > lhs) - (rhs < lhs)

    def __float__(self):
        return float(self.rational) + float(self.coeff) * math.sqrt(self.radicand)

    def __str__(self):
        exact = self.exact
        if exact is not None:
            return fmt(exact)
        sign = "+" if self.coeff > 0 else "-"
        return f"{fmt(self.rational)} {sign} {fmt(abs(self.coeff))}*sqrt({fmt(self.radicand)})"


# -- curve centers -----------------------------------------------------------


def self_intersection_adjunction(pa: int, KS_dot_C) -> Fraction:
    """C^2 = 2 p_a - 2 - K_S.C on a nonsingular surface."""
    return 2 * pa - 2 - as_fraction(KS_dot_C)


@dataclass(frozen=True)
class SurfaceCurveCase:
    """A = L + gamma*C on a test surface, with the numbers needed for L^2."""

    Asq: Fraction
    AdotC: Fraction
    Csq: Fraction
    label: str = ""

    def __post_init__(self):
        for name in ("Asq", "AdotC", "Csq"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    def l2_form(self) -> QuadraticForm:
        """L^2 = (A - gamma C)^2 as a quadratic in gamma."""
        return QuadraticForm(self.Csq, -2 * self.AdotC, self.Asq)


@dataclass(frozen=True)
class MultiplicityBound:
    gamma_max: QuadraticSurd
    form: QuadraticForm
    # sign of gamma_max - 1: -1 strict, 0 boundary, 1 exceeds
    against_one: int

    @property
    def verdict(self) -> Verdict:
        return Verdict.EXCLUDED if self.against_one <= 0 else Verdict.NOT_EXCLUDED

    @property
    def kind(self) -> str:
        return {-1: "strict", 0: "boundary", 1: "exceeds"}[self.against_one]


def max_fixed_multiplicity(case: SurfaceCurveCase) -> MultiplicityBound:
    """Largest gamma >= 0 with (A - gamma C)^2 >= 0, and its position relative to 1.

    Needs C^2 < 0 and A^2 >= 0.  The comparison with 1 is the sign of L^2 at
    gamma = 1, which is exact even when the root is irrational.
    """
    if case.Csq >= 0:
        raise ValueError(f"{case.label or 'case'}: C^2 = {fmt(case.Csq)} >= 0 gives no bound")
    if case.Asq < 0:
        raise ValueError(f"{case.label or 'case'}: A^2 < 0, no nef L exists")
    form = case.l2_form()
    # Csq g^2 - 2 AdotC g + Asq = 0; the larger root is (AdotC - sqrt(D)) / Csq
    disc = case.AdotC ** 2 - case.Asq * case.Csq
    root = QuadraticSurd(case.AdotC / case.Csq, -1 / case.Csq, disc)
    at_one = form(1)
    # form(0) = Asq >= 0 and the form is concave, so gamma_max <= 1 iff form(1) <= 0
    against_one = 1 if at_one > 0 else (0 if at_one == 0 else -1)
    return MultiplicityBound(root, form, against_one)


def curve_degree_bound(A_cube, step) -> Fraction:
    """Largest multiple of ``step`` strictly below A^3.

    From n^2 A^3 = H1.H2.S >= m^2 deg C with m > n.
    """
    A_cube, step = as_fraction(A_cube), as_fraction(step)
    if A_cube <= 0 or step <= 0:
        raise ValueError("A^3 and step must be positive")
    k = math.ceil(A_cube / step) - 1
    return max(k, 0) * step


def component_bound(degO, gamma1, pairing_lower) -> Fraction:
    """gamma bound from (1 - g1) deg O(1)|_C1 >= (g - g1) C.C1 >= (g - g1) * pairing_lower."""
    degO, gamma1, pairing_lower = map(as_fraction, (degO, gamma1, pairing_lower))
    if pairing_lower <= 0:
        raise ValueError("no intersection certificate: pairing lower bound must be positive")
    if not 0 <= gamma1 <= 1:
        raise ValueError(f"gamma1 = {fmt(gamma1)} outside [0, 1]")
    return gamma1 + (1 - gamma1) * degO / pairing_lower


def component_bound_uniform(degO, pairing_lower) -> Fraction:
    """max over gamma1 in [0, 1] of component_bound; it is affine in gamma1."""
    return max(component_bound(degO, 0, pairing_lower), component_bound(degO, 1, pairing_lower))


# -- point centers -----------------------------------------------------------


@dataclass(frozen=True)
class TwoCurveGerm:
    """K_S + (1-a1) D1 + (1-a2) D2 + (1/m) L near a normal crossing point."""

    a1: Fraction
    a2: Fraction
    m: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("a1", "a2", "m"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.a1 < 0 or self.a2 < 0 or self.m <= 0:
            raise ValueError("need a1, a2 >= 0 and m > 0")


def two_dim_threshold(g: TwoCurveGerm) -> Fraction:
    """The value that L^2 must strictly exceed when the pair is not log canonical."""
    if g.a1 <= 1 or g.a2 <= 1:
        return 4 * g.a1 * g.a2 * g.m ** 2
    return 4 * (g.a1 + g.a2 - 1) * g.m ** 2


def mobile_point_exclusion(H2S_over_n2, g: TwoCurveGerm) -> bool:
    """True when L^2 <= H^2.S/n^2 cannot exceed the threshold, so the point is excluded."""
    if g.m != 1:
        raise ValueError("mobile point test is normalised to m = 1")
    return as_fraction(H2S_over_n2) <= two_dim_threshold(g)


@dataclass(frozen=True)
class PointExclusion:
    excluded: bool
    equality_locus: tuple[Fraction, ...]
    # 4(1 - c) - L^2(c), nonnegative on [0, 1] when excluded
    certificate: QuadraticForm

    def square_form(self) -> tuple[Fraction, Fraction] | None:
        """(k, c0) with certificate = k (c - c0)^2 when it is a perfect square."""
        q = self.certificate
        if q.c2 > 0 and q.discriminant() == 0:
            return (q.c2, -q.c1 / (2 * q.c2))
        return None


def _min_on_unit_interval(q: QuadraticForm) -> tuple[Fraction, list[Fraction]]:
    points = [Fraction(0), Fraction(1)]
    if q.c2 > 0:
        h = -q.c1 / (2 * q.c2)
        if 0 < h < 1:
            points.append(h)
    values = {p: q(p) for p in points}
    low = min(values.values())
    return low, sorted(p for p, v in values.items() if v == low)


def fixed_curve_point_exclusion(Asq, AdotB, Bsq) -> PointExclusion:
    """A = L + cB with B through the point: excluded iff L^2 <= 4(1-c) for all c in [0,1].

    The right side is the threshold with a1 = 1 - c (the coefficient of B) and
    a2 = 1.  Checked as nonnegativity of a quadratic on [0, 1]; the returned
    locus is where the inequality is an equality.
    """
    Asq, AdotB, Bsq = map(as_fraction, (Asq, AdotB, Bsq))
    l2 = QuadraticForm(Bsq, -2 * AdotB, Asq)
    bound = QuadraticForm(0, -4, 4)
    diff = bound - l2
    if diff == QuadraticForm(0, 0, 0):
        return PointExclusion(True, (Fraction(0), Fraction(1)), diff)
    low, where = _min_on_unit_interval(diff)
    if low < 0:
        return PointExclusion(False, (), diff)
    locus = tuple(where) if low == 0 else ()
    return PointExclusion(True, locus, diff)


def quotient_terminal_threshold(r: int, n, delta) -> bool:
    """K + (1/n)H is terminal at a 1/r point iff mult_E H < n/r for the Kawamata blowup."""
    if r < 2:
        raise ValueError("r must be >= 2")
    return as_fraction(delta) < as_fraction(n) / r


def node_multiplicity_bound(n, d) -> bool:
    """At an ordinary node a maximal singularity forces mult_E H = d > n."""
    return as_fraction(d) > as_fraction(n)


def quotient_center_rule(center_kind: str, through_quotient_point: bool) -> Verdict:
    """A curve through a terminal quotient point is never a center of an extraction."""
    if center_kind not in ("point", "curve"):
        raise ValueError(f"center kind must be 'point' or 'curve', got {center_kind!r}")
    if center_kind == "curve" and through_quotient_point:
        return Verdict.EXCLUDED
    return Verdict.NO_VERDICT


# -- the discriminant certificate --------------------------------------------


@dataclass(frozen=True)
class ParamQuadratic:
    """c2(alpha) beta^2 + c1(alpha) beta + c0(alpha)."""

    c2: QuadraticForm
    c1: QuadraticForm
    c0: QuadraticForm

    def discriminant(self) -> Poly:
        """c1^2 - 4 c2 c0 as a polynomial in alpha (may be quartic in general)."""
        a = Poly.var("alpha")

        def lift(q):
            return q.c2 * a * a + q.c1 * a + q.c0

        c2, c1, c0 = lift(self.c2), lift(self.c1), lift(self.c0)
        return c1 * c1 - 4 * c2 * c0

    def __call__(self, beta, alpha) -> Fraction:
        beta = as_fraction(beta)
        return self.c2(alpha) * beta * beta + self.c1(alpha) * beta + self.c0(alpha)


@dataclass(frozen=True)
class Interval:
    lo: Fraction | None = None
    hi: Fraction | None = None
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        if self.lo is not None:
            object.__setattr__(self, "lo", as_fraction(self.lo))
        if self.hi is not None:
            object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError("empty interval")

    @classmethod
    def parse(cls, text: str) -> Interval:
        """``"[0,inf)"``, ``"(1/2, 3]"``, ``"(-inf,inf)"``"""
        text = text.strip()
        if len(text) < 3 or text[0] not in "[(" or text[-1] not in "])":
            raise ValueError(f"bad interval {text!r}")
        lo_s, hi_s = (p.strip() for p in text[1:-1].split(","))
        lo = None if lo_s in ("-inf", "-oo") else lo_s
        hi = None if hi_s in ("inf", "+inf", "oo") else hi_s
        return cls(lo, hi, text[0] == "[" and lo is not None, text[-1] == "]" and hi is not None)

    def contains(self, x) -> bool:
        x = as_fraction(x)
        if self.lo is not None and (x < self.lo or (x == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (x > self.hi or (x == self.hi and not self.hi_closed)):
            return False
        return True

    def __str__(self):
        lo = "-inf" if self.lo is None else fmt(self.lo)
        hi = "inf" if self.hi is None else fmt(self.hi)
        return f"{'[' if self.lo_closed else '('}{lo},{hi}{']' if self.hi_closed else ')'}"


@dataclass(frozen=True)
class DiscriminantResult:
    alpha_star: Fraction | None
    max_disc: Fraction | None  # None: unbounded above on the range
    infeasible: bool
    disc: QuadraticForm
    attained: bool = True

    def as_tuple(self):
        return (self.alpha_star, self.max_disc, self.infeasible)

    @property
    def reduced(self) -> QuadraticForm:
        """The discriminant divided by 4, the form (c1/2)^2 - c2 c0."""
        return self.disc.scale(Fraction(1, 4))


def discriminant_infeasibility(pq: ParamQuadratic, alpha_range: Interval | None = None) -> DiscriminantResult:
    """Certify that 0 > q(beta, alpha) has no solution with alpha in range.

    With a positive constant leading coefficient in beta, q takes negative
    values iff its beta-discriminant is positive.  The discriminant is a
    quadratic in alpha, maximised exactly over the range.  ``infeasible`` is
    reported only for a strictly negative supremum, or a supremum of zero
    that is not attained.
    """
    if alpha_range is None:
        alpha_range = Interval()
    lead = pq.c2
    if not lead.is_constant or lead.c0 <= 0:
        raise ValueError("leading beta coefficient must be a positive constant")
    disc_poly = pq.discriminant()
    if disc_poly.degree_in("alpha") > 2:
        raise ValueError(f"discriminant {disc_poly} has degree > 2 in alpha")
    disc = disc_poly.as_quadratic("alpha")

    if disc.is_constant:
        value = disc.c0
        return DiscriminantResult(None, value, value < 0, disc)

    lo, hi = alpha_range.lo, alpha_range.hi
    # unbounded above?
    if disc.c2 > 0 and (lo is None or hi is None):
        return DiscriminantResult(None, None, False, disc, attained=False)
    if disc.c2 == 0:
        if (disc.c1 > 0 and hi is None) or (disc.c1 < 0 and lo is None):
            return DiscriminantResult(None, None, False, disc, attained=False)

    candidates = []  # (value, alpha, attained)
    if lo is not None:
        candidates.append((disc(lo), lo, alpha_range.lo_closed))
    if hi is not None:
        candidates.append((disc(hi), hi, alpha_range.hi_closed))
    if disc.c2 < 0:
        h = -disc.c1 / (2 * disc.c2)
        if alpha_range.contains(h):
            candidates.append((disc(h), h, True))
    best = max(v for v, _, _ in candidates)
    # prefer an attained maximiser when several share the value
    tied = [c for c in candidates if c[0] == best]
    value, alpha_star, attained = max(tied, key=lambda c: c[2])
    infeasible = value < 0 or (value == 0 and not attained)
    return DiscriminantResult(alpha_star, value, infeasible, disc, attained)


# -- mobile part expansion -----------------------------------------------------


def build_L2_expression(Asq, fixed: Sequence[tuple[str, Mapping]] = ()) -> Poly:
    """(A - sum x_i C_i)^2 expanded in the fixed-part coefficients x_i.

    ``fixed`` lists (symbol, pairings) where pairings maps ``"A"`` to A.C_i and
    each symbol (including the entry's own) to C_i.C_j.  Every pair must be
    present and symmetric.
    """
    symbols = [s for s, _ in fixed]
    if len(set(symbols)) != len(symbols):
        raise ValueError("duplicate fixed-part symbol")
    table = {s: dict(p) for s, p in fixed}
    for s in symbols:
        if "A" not in table[s]:
            raise ValueError(f"missing pairing A.{s}")
    for s, t in combinations_with_replacement(symbols, 2):
        if t not in table[s] or s not in table[t]:
            raise ValueError(f"missing pairing {s}.{t}")
        if as_fraction(table[s][t]) != as_fraction(table[t][s]):
            raise ValueError(f"asymmetric pairing {s}.{t}")

    total = Poly.const(Asq)
    for s in symbols:
        total = total - 2 * as_fraction(table[s]["A"]) * Poly.var(s)
    for s in symbols:
        for t in symbols:
            total = total + as_fraction(table[s][t]) * Poly.var(s) * Poly.var(t)
    return total


# -- replayable cases ------------------------------------------------------------

CASE_TESTS = (
    "fixed_curve",
    "degree_bound",
    "component",
    "mobile_point",
    "fixed_curve_point",
    "discriminant",
    "quotient_center",
)


@dataclass(frozen=True, eq=True)
class ExclusionCase:
    """One exclusion step as data: a test name, its inputs and the expected outputs.

    ``params`` and ``expected`` hold JSON values; rationals may be ``"p/q"``
    strings.  See ``replay_case`` for the keys each test reads.
    """

    test: str
    params: Mapping
    expected: Mapping = field(default_factory=dict)
    label: str = ""

    def __post_init__(self):
        if self.test not in CASE_TESTS:
            raise ValueError(f"unknown exclusion test {self.test!r}")

    __hash__ = None


@dataclass
class CaseReport:
    label: str
    test: str
    verdict: Verdict
    computed: dict
    mismatches: list[str] = field(default_factory=list)

    @property
    def reproduced(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "test": self.test,
            "verdict": self.verdict.value,
            "reproduced": self.reproduced,
            "computed": self.computed,
            "mismatches": list(self.mismatches),
        }


def poly_to_json(p: Poly) -> list:
    ordered = sorted(p.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return [[list(m), fmt(c)] for m, c in ordered]


def poly_from_json(data) -> Poly:
    return Poly({tuple(m): as_fraction(c) for m, c in data})


def _q(params, key):
    try:
        return as_fraction(params[key])
    except KeyError:
        raise ValueError(f"missing parameter {key!r}") from None


def _fixed_curve_csq(params) -> Fraction:
    if "Csq" in params:
        return _q(params, "Csq")
    csq = self_intersection_adjunction(int(params["pa"]), _q(params, "KS_dot_C"))
    if "pullback" in params:
        # projection formula: C.C = C'.C' + coefficient of the one exceptional curve C' meets
        table = [as_fraction(x) for x in params["pullback"]]
        csq += table[int(params["meets"])]
    return csq


def _replay_fixed_curve(p):
    case = SurfaceCurveCase(_q(p, "Asq"), _q(p, "AdotC"), _fixed_curve_csq(p))
    bound = max_fixed_multiplicity(case)
    computed = {
        "Csq": fmt(case.Csq),
        "l2": [fmt(c) for c in bound.form.coefficients],
        "gamma_max": str(bound.gamma_max),
        "gamma_vs_1": bound.kind,
    }
    return bound.verdict, computed


def _replay_degree_bound(p):
    bound = curve_degree_bound(_q(p, "A_cube"), _q(p, "step"))
    return Verdict.EXCLUDED, {"max_degree": fmt(bound)}


def _replay_component(p):
    degO, pairing = _q(p, "degO"), _q(p, "pairing_lower")
    if "gamma1" in p:
        bound = component_bound(degO, _q(p, "gamma1"), pairing)
    else:
        bound = component_bound_uniform(degO, pairing)
    verdict = Verdict.EXCLUDED if bound <= 1 else Verdict.NOT_EXCLUDED
    return verdict, {"gamma_max": fmt(bound)}


def _replay_mobile_point(p):
    germ = TwoCurveGerm(_q(p, "a1"), _q(p, "a2"), 1)
    threshold = two_dim_threshold(germ)
    excluded = mobile_point_exclusion(_q(p, "H2S_over_n2"), germ)
    verdict = Verdict.EXCLUDED if excluded else Verdict.NOT_EXCLUDED
    return verdict, {"threshold": fmt(threshold)}


def _replay_fixed_curve_point(p):
    res = fixed_curve_point_exclusion(_q(p, "Asq"), _q(p, "AdotB"), _q(p, "Bsq"))
    computed = {
        "certificate": [fmt(c) for c in res.certificate.coefficients],
        "equality_locus": [fmt(c) for c in res.equality_locus],
    }
    square = res.square_form()
    if square is not None:
        computed["square"] = [fmt(square[0]), fmt(square[1])]
    return (Verdict.EXCLUDED if res.excluded else Verdict.NOT_EXCLUDED), computed


def _replay_discriminant(p):
    fixed = [(s, pairings) for s, pairings in p["fixed"]]
    l2 = build_L2_expression(_q(p, "Asq"), fixed)
    threshold = poly_from_json(p["threshold"])
    # non log canonicity forces L^2 > threshold, i.e. 0 > threshold - L^2
    q = threshold - l2
    pq = q.as_param_quadratic(p.get("var", "beta"), p.get("param", "alpha"))
    rng = Interval.parse(p.get("alpha_range", "(-inf,inf)"))
    res = discriminant_infeasibility(pq, rng)
    computed = {
        "l2": poly_to_json(l2),
        "quadratic": poly_to_json(q),
        "disc": [fmt(c) for c in res.disc.coefficients],
        "disc_over_4": [fmt(c) for c in res.reduced.coefficients],
        "alpha_star": None if res.alpha_star is None else fmt(res.alpha_star),
        "max_disc": None if res.max_disc is None else fmt(res.max_disc),
        "infeasible": res.infeasible,
    }
    return (Verdict.EXCLUDED if res.infeasible else Verdict.NOT_EXCLUDED), computed


def _replay_quotient_center(p):
    verdict = quotient_center_rule(p["center_kind"], bool(p["through_quotient_point"]))
    return verdict, {}


_REPLAY = {
    "fixed_curve": _replay_fixed_curve,
    "degree_bound": _replay_degree_bound,
    "component": _replay_component,
    "mobile_point": _replay_mobile_point,
    "fixed_curve_point": _replay_fixed_curve_point,
    "discriminant": _replay_discriminant,
    "quotient_center": _replay_quotient_center,
}


def _normalise(value):
    if isinstance(value, list):
        return [_normalise(v) for v in value]
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return fmt(value)
    if isinstance(value, str):
        try:
            return fmt(as_fraction(value))
        except (ValueError, ZeroDivisionError):
            return value
    return value


def replay_case(case: ExclusionCase) -> CaseReport:
    """Run one case and compare against its expected values.

    Keys read from ``params`` per test:

    - fixed_curve: Asq, AdotC and either Csq or (pa, KS_dot_C[, pullback, meets])
    - degree_bound: A_cube, step
    - component: degO, pairing_lower[, gamma1]; without gamma1 all of [0, 1]
    - mobile_point: H2S_over_n2, a1, a2
    - fixed_curve_point: Asq, AdotB, Bsq
    - discriminant: Asq, fixed, threshold[, var, param, alpha_range]
    - quotient_center: center_kind, through_quotient_point

    ``expected`` may hold any key of the computed dict plus ``verdict``.
    """
    verdict, computed = _REPLAY[case.test](case.params)
    report = CaseReport(case.label, case.test, verdict, computed)
    for key, want in case.expected.items():
        if key == "verdict":
            got = verdict.value
        elif key in computed:
            got = computed[key]
        else:
            report.mismatches.append(f"{key}: not computed by test {case.test}")
            continue
        if _normalise(got) != _normalise(want):
            report.mismatches.append(f"{key}: computed {got}, expected {want}")
    return report
