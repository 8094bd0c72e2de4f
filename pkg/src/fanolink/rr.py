"""Orbifold Riemann-Roch for Fano 3-folds with a basket of quotient points.

A Fano 3-fold Z is described numerically by its genus g (h^0(-K) = g + 2)
and a basket of virtual singularities 1/r(a, r-a, 1).  From these,

    (-K)^3      = 2g - 2 + sum a(r-a)/r
    h^0(-nK)    = n(n+1)(2n+1)/12 * (-K)^3 + (2n+1) - sum l_Q(n+1)
    l_Q(n)      = sum_{k=1}^{n-1} (ka mod r)(r - (ka mod r)) / (2r)

Everything is exact: ``Fraction`` in, ``Fraction`` out.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple

from fanolink.rational import as_fraction, fmt


@dataclass(frozen=True, order=True)
class QuotientSingularity:
    """The terminal quotient point 1/r(a, r-a, 1)."""

    r: int
    a: int

    def __post_init__(self):
        if not isinstance(self.r, int) or not isinstance(self.a, int):
            raise TypeError("r and a must be integers")
        if self.r < 2:
            raise ValueError(f"index r must be >= 2, got {self.r}")
        if not 1 <= self.a <= self.r - 1:
            raise ValueError(f"need 1 <= a <= r-1, got a={self.a}, r={self.r}")
        if gcd(self.a, self.r) != 1:
            raise ValueError(f"a={self.a} is not coprime to r={self.r}")

    def normalized(self) -> QuotientSingularity:
        """Representative with a <= r/2; (r, a) and (r, r-a) are the same point."""
        if 2 * self.a > self.r:
            return QuotientSingularity(self.r, self.r - self.a)
        return self

    @property
    def cube_term(self) -> Fraction:
        return Fraction(self.a * (self.r - self.a), self.r)

    def __str__(self):
        return f"1/{self.r}({self.a},{self.r - self.a},1)"


def _as_point(item) -> QuotientSingularity:
    if isinstance(item, QuotientSingularity):
        return item
    r, a = item
    return QuotientSingularity(int(r), int(a))


@dataclass(frozen=True)
class Basket:
    """Multiset of quotient points, compared up to order and a <-> r-a."""

    entries: tuple[QuotientSingularity, ...] = ()

    def __post_init__(self):
        points = sorted(_as_point(p).normalized() for p in self.entries)
        object.__setattr__(self, "entries", tuple(points))

    @classmethod
    def of(cls, *points) -> Basket:
        """``Basket.of((2, 1), (3, 1))``"""
        return cls(tuple(points))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def counts(self) -> Counter:
        return Counter(self.entries)

    def cube_sum(self) -> Fraction:
        return sum((p.cube_term for p in self.entries), Fraction(0))

    def as_pairs(self) -> list[list[int]]:
        return [[p.r, p.a] for p in self.entries]

    def __str__(self):
        if not self.entries:
            return "{}"
        parts = []
        for point, k in sorted(self.counts().items()):
            parts.append(f"{k} x {point}" if k > 1 else str(point))
        return "{" + ", ".join(parts) + "}"


def local_contribution(q: QuotientSingularity, n: int, *, fold: bool = True) -> Fraction:
    """Local Riemann-Roch correction l_Q(n) of the point q.

    With ``fold`` the sum is reduced modulo the period r using
    l_Q(s + t*r) = l_Q(s) + t * l_Q(r + 1); otherwise it is summed term by term.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    r, a = q.r, q.a

    def direct(m):
        total = 0
        for k in range(1, m):
            kb = k * a % r
            total += kb * (r - kb)
        return Fraction(total, 2 * r)

    if not fold or n <= r + 1:
        return direct(n)
    t, s = divmod(n, r)
    return direct(s) + t * direct(r + 1)


def anticanonical_cube(genus: int, basket: Basket | Iterable = ()) -> Fraction:
    """(-K)^3 = 2g - 2 + sum a(r-a)/r.

    A nonpositive value is returned as is; see ``FanoNumerics.is_fano_candidate``.
    """
    if not isinstance(basket, Basket):
        basket = Basket(tuple(basket))
    return 2 * genus - 2 + basket.cube_sum()


@dataclass(frozen=True)
class FanoNumerics:
    """Genus, anticanonical cube and basket: the full input of the RR formula.

    Construction does not reject a kcube that disagrees with the genus and
    basket, because link verification needs to report such records rather
    than fail on them. Use ``is_consistent`` or build with ``from_genus``.
    """

    genus: int
    kcube: Fraction
    basket: Basket = field(default_factory=Basket)

    def __post_init__(self):
        object.__setattr__(self, "kcube", as_fraction(self.kcube))
        if not isinstance(self.basket, Basket):
            object.__setattr__(self, "basket", Basket(tuple(self.basket)))

    @classmethod
    def from_genus(cls, genus: int, basket: Basket | Iterable = ()) -> FanoNumerics:
        if not isinstance(basket, Basket):
            basket = Basket(tuple(basket))
        return cls(genus, anticanonical_cube(genus, basket), basket)

    @property
    def is_consistent(self) -> bool:
        return self.kcube == anticanonical_cube(self.genus, self.basket)

    @property
    def is_fano_candidate(self) -> bool:
        return self.kcube > 0

    def __str__(self):
        return f"g={self.genus}, (-K)^3={fmt(self.kcube)}, basket={self.basket}"


class H0(NamedTuple):
    value: Fraction
    integral: bool


def h0_anticanonical(numerics: FanoNumerics, n: int) -> H0:
    """h^0(-nK) by orbifold Riemann-Roch, flagged if not a nonnegative integer."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    value = (
        Fraction(n * (n + 1) * (2 * n + 1), 12) * numerics.kcube
        + (2 * n + 1)
        - sum((local_contribution(q, n + 1) for q in numerics.basket), Fraction(0))
    )
    return H0(value, value.denominator == 1 and value >= 0)


class RRSequence(list):
    """h^0(-nK) for n = 0..N, with the indices that fail integrality or sign."""

    def __init__(self, values, non_integral=(), negative=()):
        super().__init__(values)
        self.non_integral = list(non_integral)
        self.negative = list(negative)

    @property
    def ok(self) -> bool:
        return not self.non_integral and not self.negative


def rr_hilbert_sequence(numerics: FanoNumerics, N: int) -> RRSequence:
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    values, non_integral, negative = [], [], []
    for n in range(N + 1):
        value, _ = h0_anticanonical(numerics, n)
        if value.denominator != 1:
            non_integral.append(n)
        if value < 0:
            negative.append(n)
        values.append(value)
    return RRSequence(values, non_integral, negative)


def genus_from_h0(h0_of_minusK: int) -> int:
    if h0_of_minusK < 2:
        raise ValueError(
            f"h^0(-K) = {h0_of_minusK} < 2: not a Fano anticanonical space"
        )
    return h0_of_minusK - 2
