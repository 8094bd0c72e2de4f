"""Degree bookkeeping for Type II links X <- V -> Z <- V' -> Y.

Each end extracts a divisor E with discrepancy a_E; with -K_X pulled back,
-K_V = A - a_E E and the anticanonical cube drops by a_E^3 E^3.  Both ends of
a link must land on the same midpoint Z, the anticanonical model of V and V'.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from fanolink.families import Family, family_anticanonical_cube, family_hilbert_series
from fanolink.rational import as_fraction, fmt
from fanolink.rr import FanoNumerics, QuotientSingularity, anticanonical_cube, rr_hilbert_sequence

CA2_WEIGHTS = ((2, 1, 1, 1), (1, 2, 1, 1))

LINK_SERIES_DEPTH = 30


@dataclass(frozen=True)
class ExtractionData:
    """A divisorial extraction, reduced to what the degree ledger needs.

    Either ``discrepancy`` and ``exc_cube`` are known, or only the total drop
    a_E^3 E^3 is, solved from the ledger of a known link; the latter is
    tagged ``inferred``.
    """

    label: str
    discrepancy: Fraction | None = None
    exc_cube: Fraction | None = None
    weights: tuple[int, ...] | None = None
    inferred_drop: Fraction | None = None

    def __post_init__(self):
        for name in ("discrepancy", "exc_cube", "inferred_drop"):
            value = getattr(self, name)
            if value is not None:
                value = as_fraction(value)
                if value <= 0:
                    raise ValueError(f"{self.label}: {name} must be positive, got {fmt(value)}")
                object.__setattr__(self, name, value)
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        geometric = self.discrepancy is not None and self.exc_cube is not None
        if geometric == (self.inferred_drop is not None):
            raise ValueError(
                f"{self.label}: give either discrepancy and exc_cube, or an inferred drop"
            )

    @property
    def inferred(self) -> bool:
        return self.inferred_drop is not None

    @property
    def drop(self) -> Fraction:
        """a_E^3 * E^3, the loss of anticanonical degree."""
        if self.inferred_drop is not None:
            return self.inferred_drop
        return self.discrepancy ** 3 * self.exc_cube


def anticanonical_after_extraction(A_cube, e: ExtractionData) -> Fraction:
    """B^3 = A^3 - a_E^3 E^3; a nonpositive result means the game stops."""
    return as_fraction(A_cube) - e.drop


def kawamata_blowup(q: QuotientSingularity) -> ExtractionData:
    """The unique extraction from 1/r(1, a, r-a): weights (1, a, r-a)/r."""
    r, a = q.r, q.a
    return ExtractionData(
        label=f"Kawamata blowup of {q}",
        discrepancy=Fraction(1, r),
        exc_cube=Fraction(r * r, a * (r - a)),
        weights=(1, a, r - a),
    )


def cA2_blowup(variant: Sequence[int]) -> ExtractionData:
    """Weighted blowup of xy + z^3 + t^3 = 0; only (2,1,1,1) and (1,2,1,1) exist."""
    variant = tuple(int(w) for w in variant)
    if variant not in CA2_WEIGHTS:
        raise ValueError(
            f"no divisorial extraction of xy+z^3+t^3 with weights {variant}; "
            f"only {CA2_WEIGHTS[0]} and {CA2_WEIGHTS[1]}"
        )
    return ExtractionData(
        label="cA2 blowup " + ",".join(map(str, variant)),
        discrepancy=Fraction(1),
        exc_cube=Fraction(3, 2),
        weights=variant,
    )


@dataclass(frozen=True)
class LinkEnd:
    numerics: FanoNumerics
    extraction: ExtractionData
    family: Family | None = None


@dataclass(frozen=True)
class LinkRecord:
    left: LinkEnd
    right: LinkEnd
    midpoint: FanoNumerics
    midpoint_family: Family | None = None
    label: str = ""


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass
class LinkReport:
    label: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name, passed, detail):
        self.checks.append(Check(name, bool(passed), detail))

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }


def _check_family(report, name, family, numerics, depth):
    try:
        cube = family_anticanonical_cube(family)
    except ValueError as exc:
        report.add(f"{name} family cube", False, str(exc))
        return
    report.add(
        f"{name} family cube",
        cube == numerics.kcube,
        f"prod d/prod w of {family} = {fmt(cube)}, numerics give {fmt(numerics.kcube)}",
    )
    try:
        series = family_hilbert_series(family, depth)
    except ValueError as exc:
        report.add(f"{name} family series", False, str(exc))
        return
    rr = rr_hilbert_sequence(numerics, depth)
    mismatch = next((n for n in range(depth + 1) if series[n] != rr[n]), None)
    report.add(
        f"{name} family series",
        mismatch is None,
        f"agree to degree {depth}"
        if mismatch is None
        else f"degree {mismatch}: series {series[mismatch]} vs RR {fmt(rr[mismatch])}",
    )


def verify_link(rec: LinkRecord, depth: int = LINK_SERIES_DEPTH) -> LinkReport:
    """Check every ledger identity of a link; failures are report lines, never raised."""
    report = LinkReport(rec.label)
    mid = rec.midpoint
    reached = {}
    for side, end in (("left", rec.left), ("right", rec.right)):
        b_cube = anticanonical_after_extraction(end.numerics.kcube, end.extraction)
        reached[side] = b_cube
        tag = " (inferred drop)" if end.extraction.inferred else ""
        report.add(
            f"{side} drop",
            b_cube == mid.kcube,
            f"{fmt(end.numerics.kcube)} - {fmt(end.extraction.drop)}{tag} = {fmt(b_cube)}, "
            f"midpoint {fmt(mid.kcube)}",
        )
    expected = anticanonical_cube(mid.genus, mid.basket)
    report.add(
        "midpoint RR",
        mid.kcube == expected,
        f"2g-2+sum a(r-a)/r = {fmt(expected)}, midpoint {fmt(mid.kcube)}",
    )
    for side, end in (("left", rec.left), ("right", rec.right)):
        if not end.numerics.is_consistent:
            report.add(
                f"{side} RR",
                False,
                f"{end.numerics} violates 2g-2+sum a(r-a)/r "
                f"= {fmt(anticanonical_cube(end.numerics.genus, end.numerics.basket))}",
            )
    if rec.midpoint_family is not None:
        _check_family(report, "midpoint", rec.midpoint_family, mid, depth)
    for side, end in (("left", rec.left), ("right", rec.right)):
        if end.family is not None:
            _check_family(report, side, end.family, end.numerics, depth)
    report.add(
        "flop neutrality",
        reached["left"] == reached["right"],
        f"left reaches {fmt(reached['left'])}, right reaches {fmt(reached['right'])}",
    )
    return report


@dataclass(frozen=True)
class MobileSystemData:
    """H in |-nK| with (discrepancy, multiplicity) pairs over exceptional divisors."""

    n: int
    pairs: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        pairs = tuple((as_fraction(a), as_fraction(m)) for a, m in self.pairs)
        for a, m in pairs:
            if a <= 0 or m < 0:
                raise ValueError(f"bad pair a={fmt(a)}, m={fmt(m)}")
        object.__setattr__(self, "pairs", pairs)


def canonical_threshold(data: MobileSystemData) -> Fraction:
    """min a_i/m_i over divisors actually in the base locus."""
    ratios = [a / m for a, m in data.pairs if m > 0]
    if not ratios:
        raise ValueError("threshold undefined: every multiplicity is zero")
    return min(ratios)


def is_weak_maximal(data: MobileSystemData, pair_index: int) -> bool:
    a, m = data.pairs[pair_index]
    return m >= data.n * a
