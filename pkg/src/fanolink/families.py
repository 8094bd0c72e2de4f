"""Weighted hypersurfaces and codimension 2 complete intersections.

A family is an ambient P(w_0, ..., w_k) and one or two equation degrees.  Its
Hilbert series is

    prod_j (1 - t^{d_j}) / prod_i (1 - t^{w_i})

and for Fano index 1 (sum w - sum d = 1) the anticanonical cube is
prod d / prod w.  ``search_candidates`` inverts this: given FanoNumerics it
lists every small family whose numerics agree.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement
from math import gcd, prod
from typing import Iterable, Sequence

from fanolink.rr import FanoNumerics, rr_hilbert_sequence

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class WeightSystem:
    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(sorted(int(w) for w in self.weights))
        if not ws or ws[0] < 1:
            raise ValueError(f"weights must be positive integers, got {self.weights}")
        object.__setattr__(self, "weights", ws)

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)

    def __str__(self):
        return "P(" + ",".join(map(str, self.weights)) + ")"


@dataclass(frozen=True, order=True)
class Family:
    ambient: WeightSystem
    degrees: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.ambient, WeightSystem):
            object.__setattr__(self, "ambient", WeightSystem(tuple(self.ambient)))
        ds = tuple(sorted(int(d) for d in self.degrees))
        if len(ds) not in (1, 2) or ds[0] < 1:
            raise ValueError(f"need one or two positive degrees, got {self.degrees}")
        object.__setattr__(self, "degrees", ds)

    @classmethod
    def of(cls, weights: Iterable[int], *degrees: int) -> Family:
        """``Family.of((1, 1, 1, 1, 2), 5)``"""
        return cls(WeightSystem(tuple(weights)), degrees)

    @property
    def weights(self) -> tuple[int, ...]:
        return self.ambient.weights

    @property
    def codim(self) -> int:
        return len(self.degrees)

    def key(self) -> tuple:
        return (self.weights, self.degrees)

    def __str__(self):
        name = "X_" + ",".join(map(str, self.degrees))
        return f"{name} in {self.ambient}"


def is_well_formed(w: WeightSystem | Sequence[int]) -> bool:
    """True iff any all-but-one of the weights are coprime."""
    ws = list(w)
    return all(reduce(gcd, ws[:i] + ws[i + 1:], 0) == 1 for i in range(len(ws)))


def _expand(weights: Sequence[int], degrees: Sequence[int], N: int) -> list[int]:
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    for w in weights:  # times 1/(1 - t^w)
        for i in range(w, N + 1):
            coeffs[i] += coeffs[i - w]
    for d in degrees:  # times (1 - t^d)
        for i in range(N, d - 1, -1):
            coeffs[i] -= coeffs[i - d]
    return coeffs


def family_hilbert_series(f: Family, N: int) -> list[int]:
    """Coefficients of t^0..t^N of the family's Hilbert series.

    Raises ValueError on a negative coefficient, which no graded ring has.
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    coeffs = _expand(f.weights, f.degrees, N)
    bad = [i for i, c in enumerate(coeffs) if c < 0]
    if bad:
        raise ValueError(f"{f}: negative Hilbert coefficient in degree {bad[0]}")
    return coeffs


def fano_index(f: Family) -> int:
    return sum(f.weights) - sum(f.degrees)


def family_anticanonical_cube(f: Family) -> Fraction:
    index = fano_index(f)
    if index != 1:
        raise ValueError(f"{f} has Fano index {index}; (-K)^3 = prod d / prod w needs index 1")
    return Fraction(prod(f.degrees), prod(f.weights))


def default_match_depth(f: Family) -> int:
    return max(10, 2 * sum(f.weights))


def _degree_splits(total: int, codim: int):
    if codim == 1:
        if total >= 1:
            yield (total,)
        return
    for d1 in range(1, total // 2 + 1):
        yield (d1, total - d1)


def _candidates_for(weights, codim, index, target_cube, target_seq, N_match):
    found = []
    for degrees in _degree_splits(sum(weights) - index, codim):
        if any(d in weights for d in degrees):
            continue  # linear cone over a smaller family
        cube = Fraction(prod(degrees), prod(weights)) * Fraction(index) ** 3
        if cube != target_cube:
            continue
        depth = N_match if N_match is not None else max(10, 2 * sum(weights))
        series = _expand(weights, degrees, depth * index)
        if any(c < 0 for c in series):
            continue
        # h^0(-nK) = h^0(O(n * index))
        if series[::index] == target_seq[: depth + 1]:
            found.append((weights, degrees))
    return found


def _search_chunk(args):
    chunk, codim, index, target_cube, target_seq, N_match = args
    out = []
    for weights in chunk:
        out.extend(_candidates_for(weights, codim, index, target_cube, target_seq, N_match))
    return out


def search_candidates(
    target: FanoNumerics,
    codim: int,
    max_weight: int,
    N_match: int | None = None,
    *,
    index: int = 1,
    jobs: int = 1,
) -> list[Family]:
    """All well-formed families matching ``target`` numerically.

    A candidate must have (-K)^3 equal to ``target.kcube`` and a Hilbert
    series agreeing with the Riemann-Roch sequence of ``target`` up to degree
    ``N_match`` (default: max(10, 2 * sum of weights), per candidate).  The
    result is sorted by (weights, degrees) and does not depend on ``jobs``.

    For index i != 1 the cube compared is i^3 * prod d / prod w, the cube of
    -K = O(i).
    """
    if codim not in (1, 2):
        raise ValueError(f"codim must be 1 or 2, got {codim}")
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    if N_match is not None and N_match < 2:
        raise ValueError("N_match must be >= 2")
    if index < 1:
        raise ValueError("index must be positive")

    n_weights = 4 + codim
    depth_cap = N_match if N_match is not None else max(10, 2 * n_weights * max_weight)
    target_seq = list(rr_hilbert_sequence(target, depth_cap))

    ambients = [
        ws
        for ws in combinations_with_replacement(range(1, max_weight + 1), n_weights)
        if is_well_formed(ws)
    ]
    log.debug("searching %d ambients (codim %d, max weight %d)", len(ambients), codim, max_weight)

    if jobs <= 1:
        hits = _search_chunk((ambients, codim, index, target.kcube, target_seq, N_match))
    else:
        chunks = [ambients[i::jobs] for i in range(jobs)]
        args = [(c, codim, index, target.kcube, target_seq, N_match) for c in chunks]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = [h for part in pool.map(_search_chunk, args) for h in part]

    unique = sorted(set(hits))
    return [Family(WeightSystem(w), d) for w, d in unique]
