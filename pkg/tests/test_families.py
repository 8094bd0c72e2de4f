"""Hilbert series of weighted complete intersections and the numerical search."""

import itertools
from fractions import Fraction
from functools import reduce
from math import gcd, prod

import pytest
from sympy import QQ
from sympy.polys.ring_series import rs_mul, rs_series_inversion
from sympy.polys.rings import ring
from hypothesis import given, settings
from hypothesis import strategies as st

from fanolink.catalog import builtin_catalog
from fanolink.families import (
    Family,
    default_match_depth,
    family_anticanonical_cube,
    family_hilbert_series,
    fano_index,
    is_well_formed,
    search_candidates,
)
from fanolink.rr import Basket, FanoNumerics, rr_hilbert_sequence

R, t = ring("t", QQ)


def sympy_series(weights, degrees, N):
    num, den = R(1), R(1)
    for d in degrees:
        num *= 1 - t**d
    for w in weights:
        den *= 1 - t**w
    s = rs_mul(num, rs_series_inversion(den, t, N + 1), t, N + 1)
    return [int(s.coeff(t**n)) if n else int(s.coeff(1)) for n in range(N + 1)]


def naive_series(weights, degrees, N):
    # truncated polynomial products, a second independent expansion
    coeffs = [1] + [0] * N
    for w in weights:
        geo = [1 if i % w == 0 else 0 for i in range(N + 1)]
        coeffs = [sum(coeffs[j] * geo[i - j] for j in range(i + 1)) for i in range(N + 1)]
    for d in degrees:
        coeffs = [coeffs[i] - (coeffs[i - d] if i >= d else 0) for i in range(N + 1)]
    return coeffs


@pytest.mark.parametrize("weights, ok", [
    ((1, 1, 1, 1, 2), True),
    ((1, 1, 1, 1, 2, 2), True),
    ((2, 2, 2, 2, 4), False),
    ((1, 2, 2, 2, 2), False),
    ((1, 2, 2, 2, 3), True),
    ((1, 2, 5, 6, 7), True),
])
def test_well_formed(weights, ok):
    assert is_well_formed(weights) is ok


@pytest.mark.parametrize("weights, degrees, N, expected", [
    ((1, 1, 1, 1, 2), (5,), 2, [1, 4, 11]),
    ((1, 1, 1, 1, 1), (4,), 1, [1, 5]),
    ((1, 1, 1, 1, 2, 2), (3, 4), 1, [1, 4]),
])
def test_series_examples(weights, degrees, N, expected):
    assert family_hilbert_series(Family.of(weights, *degrees), N) == expected


def test_catalog_families_match_sympy_expansion():
    for entry, _ in builtin_catalog().family_pairs():
        f = entry.payload
        assert family_hilbert_series(f, 30) == sympy_series(f.weights, f.degrees, 30), entry.id


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(1, 7), min_size=3, max_size=6),
    st.lists(st.integers(1, 12), min_size=1, max_size=2),
)
def test_expansion_matches_naive_product(weights, degrees):
    N = 25
    f = Family.of(weights, *degrees)
    oracle = naive_series(f.weights, f.degrees, N)
    if min(oracle) < 0:
        with pytest.raises(ValueError):
            family_hilbert_series(f, N)
    else:
        assert family_hilbert_series(f, N) == oracle


def test_negative_coefficient_is_an_error():
    with pytest.raises(ValueError):
        family_hilbert_series(Family.of((2, 3), 1), 4)


@pytest.mark.parametrize("weights, degrees, index", [
    ((1, 1, 1, 1, 2), (5,), 1),
    ((1, 1, 1, 1, 2, 2), (3, 4), 1),
    ((1, 1, 1, 1, 1), (5,), 0),
])
def test_fano_index(weights, degrees, index):
    assert fano_index(Family.of(weights, *degrees)) == index


@pytest.mark.parametrize("weights, degrees, cube", [
    ((1, 1, 1, 1, 2), (5,), Fraction(5, 2)),
    ((1, 1, 1, 1, 2, 2), (3, 4), Fraction(3)),
    ((1, 1, 1, 1, 1), (4,), Fraction(4)),
])
def test_family_cube(weights, degrees, cube):
    assert family_anticanonical_cube(Family.of(weights, *degrees)) == cube


def test_family_cube_needs_index_one():
    with pytest.raises(ValueError):
        family_anticanonical_cube(Family.of((1, 1, 1, 1, 1), 5))


def test_default_match_depth():
    assert default_match_depth(Family.of((1, 1, 1, 1, 2), 5)) == 12
    assert default_match_depth(Family.of((1, 1, 1, 1, 1), 4)) == 10


def test_weight_one_sanity_bound():
    for entry, _ in builtin_catalog().family_pairs():
        f = entry.payload
        ones = sum(1 for w in f.weights if w == 1) - sum(1 for d in f.degrees if d == 1)
        assert family_hilbert_series(f, 1)[1] >= ones


def brute_force(target, codim, max_weight, depth=None):
    # every sorted weight tuple, every degree tuple of the right total, no pruning shortcuts
    rr = None
    found = set()
    for ws in itertools.product(range(1, max_weight + 1), repeat=4 + codim):
        ws = tuple(sorted(ws))
        if any(reduce(gcd, ws[:i] + ws[i + 1:]) != 1 for i in range(len(ws))):
            continue
        total = sum(ws) - 1
        for ds in itertools.product(range(1, total + 1), repeat=codim):
            ds = tuple(sorted(ds))
            if sum(ds) != total or any(d in ws for d in ds):
                continue
            if Fraction(prod(ds), prod(ws)) != target.kcube:
                continue
            n = depth or max(10, 2 * sum(ws))
            series = naive_series(ws, ds, n)
            if min(series) < 0:
                continue
            rr = rr_hilbert_sequence(target, n)
            if series == list(rr):
                found.add((ws, ds))
    return sorted(found)


@pytest.mark.parametrize("genus, basket, codim, max_weight", [
    (2, ((2, 1),), 1, 4),
    (3, (), 1, 4),
    (2, ((2, 1), (2, 1)), 2, 3),
    (1, ((2, 1), (3, 1)), 1, 4),
])
def test_search_matches_brute_force(genus, basket, codim, max_weight):
    target = FanoNumerics.from_genus(genus, Basket.of(*basket))
    got = [(f.weights, f.degrees) for f in search_candidates(target, codim, max_weight)]
    assert got == brute_force(target, codim, max_weight)


@pytest.mark.parametrize("genus, basket, codim, expected", [
    (2, ((2, 1),), 1, ((1, 1, 1, 1, 2), (5,))),
    (2, ((2, 1), (2, 1)), 2, ((1, 1, 1, 1, 2, 2), (3, 4))),
    (3, (), 1, ((1, 1, 1, 1, 1), (4,))),
])
def test_search_examples(genus, basket, codim, expected):
    target = FanoNumerics.from_genus(genus, Basket.of(*basket))
    found = search_candidates(target, codim, 6, 10)
    assert expected in [(f.weights, f.degrees) for f in found]


def test_search_results_reproduce_target():
    target = FanoNumerics.from_genus(2, Basket.of((2, 1), (2, 1)))
    found = search_candidates(target, 2, 6)
    assert found
    for f in found:
        depth = default_match_depth(f)
        assert family_anticanonical_cube(f) == target.kcube
        assert family_hilbert_series(f, depth) == list(rr_hilbert_sequence(target, depth))


def test_search_is_independent_of_jobs():
    target = FanoNumerics.from_genus(2, Basket.of((2, 1)))
    assert search_candidates(target, 1, 6, jobs=1) == search_candidates(target, 1, 6, jobs=3)


def test_search_higher_index():
    # the quadric in P^4 has -K = O(3): h0(-K) = 30 so g = 28 and (-K)^3 = 54
    quadric = FanoNumerics.from_genus(28, Basket(()))
    assert quadric.kcube == 54
    found = search_candidates(quadric, 1, 2, index=3)
    assert [(f.weights, f.degrees) for f in found] == [((1, 1, 1, 1, 1), (2,))]


@pytest.mark.parametrize("kwargs", [
    dict(codim=3, max_weight=4),
    dict(codim=1, max_weight=0),
    dict(codim=1, max_weight=4, N_match=1),
])
def test_search_rejects_bad_arguments(kwargs):
    with pytest.raises(ValueError):
        search_candidates(FanoNumerics.from_genus(2, Basket.of((2, 1))), **kwargs)


@pytest.mark.parametrize("degrees", [(), (0,), (2, 3, 4)])
def test_family_degree_shape(degrees):
    with pytest.raises(ValueError):
        Family.of((1, 1, 1, 1, 2), *degrees)
