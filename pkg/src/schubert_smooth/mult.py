"""
Weight multiplicities of irreducible highest-weight representations.

The main engine is Freudenthal's recursion in integer-only form. A
Kostant-formula brute force (Weyl group sum of partition-function values)
serves as an independent oracle on small inputs.

>>> from schubert_smooth.rootsys import build, Weight
>>> weight_multiplicity(build("A", 2), Weight((1, 1)), Weight((0, 0)))
2
>>> dim_irrep(build("G", 2), Weight((1, 0)))
7
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Iterator, Sequence

from .rootsys import (
    RootSystem, RootSystemError, Weight, build, iter_dominant_below,
)

__all__ = [
    "MultiplicityTable", "multiplicity_table", "iter_multiplicities",
    "weight_multiplicity", "weight_multiplicity_bruteforce", "dim_irrep",
    "is_wmf", "HoweRow", "howe_types", "howe_grid", "howe_table",
    "BruteForceBoundError",
]

DEFAULT_BRUTE_HEIGHT = 12


class BruteForceBoundError(ValueError):
    """Input too large for the brute-force oracle's height bound."""


@dataclass(frozen=True)
class MultiplicityTable:
    """Multiplicities of all dominant weights of V_mu, highest first."""
    root_system: RootSystem
    mu: Weight
    entries: tuple[tuple[Weight, int], ...]

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.entries)

    def __getitem__(self, lam: Weight) -> int:
        return self.as_dict().get(lam, 0)

    def dimension(self) -> int:
        """Sum of multiplicity times orbit size over dominant weights."""
        rs = self.root_system
        return sum(m * rs.orbit_size(lam) for lam, m in self.entries)


def _check_dominant(rs: RootSystem, w: Weight) -> None:
    rs._check(w)
    if not w.is_dominant():
        raise RootSystemError(f"{w} is not dominant")


def iter_multiplicities(rs: RootSystem, mu: Weight) -> Iterator[tuple[Weight, int]]:
    """Yield ``(lam, d_mu(lam))`` for dominant ``lam <= mu`` by increasing depth.

    Freudenthal, with both sides multiplied out to integers::

        m(lam) * (mu - lam, mu + lam + 2 rho)
            = 2 * sum_{alpha > 0} sum_{k >= 1} (lam + k alpha, alpha) m(lam + k alpha)

    Weights above ``lam`` always have smaller depth, so they are known when
    ``lam`` is reached and callers may stop early.
    """
    _check_dominant(rs, mu)
    n = rs.rank
    d = rs.symmetrizer
    pos = [(rs.root_to_weight(r).coords, r, rs.root_inner(r, r)) for r in rs.positive_roots]
    known: dict[tuple[int, ...], int] = {}
    mu_c = mu.coords
    for lam, depth in iter_dominant_below(rs, mu):
        lc = lam.coords
        if lc == mu_c:
            known[lc] = 1
            yield lam, 1
            continue
        lhs = sum(depth[j] * d[j] * (mu_c[j] + lc[j] + 2) for j in range(n))
        total = 0
        for rw, r, rr in pos:
            base = sum(r[j] * d[j] * lc[j] for j in range(n))
            cur = list(lc)
            k = 0
            while True:
                k += 1
                for j in range(n):
                    cur[j] += rw[j]
                m = known.get(rs.dominant_conjugate(Weight(cur)).coords, 0)
                if m == 0:
                    break
                total += (base + k * rr) * m
        q, rem = divmod(2 * total, lhs)
        assert rem == 0 and q > 0, "Freudenthal recursion produced a non-integer"
        known[lc] = q
        yield lam, q


@lru_cache(maxsize=4096)
def multiplicity_table(rs: RootSystem, mu: Weight) -> MultiplicityTable:
    return MultiplicityTable(rs, mu, tuple(iter_multiplicities(rs, mu)))


def weight_multiplicity(rs: RootSystem, mu: Weight, lam: Weight) -> int:
    """d_mu(lam); zero when lam is not a weight of V_mu."""
    _check_dominant(rs, mu)
    rs._check(lam)
    dom = rs.dominant_conjugate(lam)
    return multiplicity_table(rs, mu).as_dict().get(dom, 0)


def is_wmf(rs: RootSystem, mu: Weight) -> bool:
    """True iff every weight space of V_mu is one-dimensional."""
    _check_dominant(rs, mu)
    return all(m == 1 for _, m in iter_multiplicities(rs, mu))


def dim_irrep(rs: RootSystem, mu: Weight) -> int:
    """Weyl dimension formula, all in integers."""
    _check_dominant(rs, mu)
    n = rs.rank
    d = rs.symmetrizer
    num = prod(sum(r[j] * d[j] * (mu.coords[j] + 1) for j in range(n)) for r in rs.positive_roots)
    den = prod(sum(r[j] * d[j] for j in range(n)) for r in rs.positive_roots)
    q, rem = divmod(num, den)
    assert rem == 0
    return q


# ---------------------------------------------------------------------------
# Kostant oracle
# ---------------------------------------------------------------------------

def _signed_orbit(rs: RootSystem, start: Weight) -> list[tuple[Weight, int]]:
    """Orbit of a regular dominant weight with the sign (-1)^length of each element."""
    seen = {start: 0}
    layer = [start]
    length = 0
    while layer:
        length += 1
        nxt = []
        for x in layer:
            for i in range(rs.rank):
                y = rs.reflect_weight(i, x)
                if y not in seen:
                    seen[y] = length
                    nxt.append(y)
        layer = nxt
    return [(w, -1 if l % 2 else 1) for w, l in seen.items()]


def _partition_counter(roots: tuple[tuple[int, ...], ...]):
    @lru_cache(maxsize=None)
    def count(target: tuple[int, ...], k: int) -> int:
        if not any(target):
            return 1
        if k == len(roots):
            return 0
        total = count(target, k + 1)
        r = roots[k]
        nxt = tuple(t - c for t, c in zip(target, r))
        if min(nxt) >= 0:
            total += count(nxt, k)
        return total
    return count


@lru_cache(maxsize=None)
def _kostant_data(rs: RootSystem):
    return _partition_counter(rs.positive_roots)


def weight_multiplicity_bruteforce(rs: RootSystem, mu: Weight, lam: Weight,
                                   max_height: int = DEFAULT_BRUTE_HEIGHT) -> int:
    """d_mu(lam) by Kostant's formula ``sum_w sign(w) P(w(mu+rho) - (lam+rho))``."""
    _check_dominant(rs, mu)
    rs._check(lam)
    lam = rs.dominant_conjugate(lam)
    diff = rs.weight_to_root_coords(mu - lam)
    if any(c.denominator != 1 for c in diff) or any(c < 0 for c in diff):
        return 0
    if sum(diff) > max_height:
        raise BruteForceBoundError(f"height of mu - lam is {sum(diff)} > {max_height}")
    count = _kostant_data(rs)
    rho = Weight((1,) * rs.rank)
    target = lam + rho
    total = 0
    for w, sign in _signed_orbit(rs, mu + rho):
        c = rs.weight_to_root_coords(w - target)
        if all(x.denominator == 1 and x >= 0 for x in c):
            total += sign * count(tuple(int(x) for x in c), 0)
    return total


# ---------------------------------------------------------------------------
# Classification scan
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HoweRow:
    type_label: str
    rank: int
    weight: Weight
    wmf: bool

    @property
    def type_name(self) -> str:
        return f"{self.type_label}{self.rank}"


def howe_types(max_rank: int) -> list[tuple[str, int]]:
    """Irreducible types up to rank, skipping the coincidences C2 = B2 and D3 = A3."""
    out = []
    for t, lo in (("A", 1), ("B", 2), ("C", 3), ("D", 4)):
        out.extend((t, n) for n in range(lo, max_rank + 1))
    for t, n in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
        if n <= max_rank:
            out.append((t, n))
    return out


def howe_grid(type_label: str, rank: int, coord_bound: int, a_family_bound: int = 6) -> list[Weight]:
    """Nonzero dominant weights with coordinates <= coord_bound.

    Type A also gets the multiples ``l * omega_1`` and ``l * omega_n`` for
    ``l <= a_family_bound``.
    """
    pts = {Weight(c) for c in itertools.product(range(coord_bound + 1), repeat=rank) if any(c)}
    if type_label == "A":
        for l in range(1, a_family_bound + 1):
            for i in {1, rank}:
                pts.add(l * Weight.fundamental(rank, i))
    return sorted(pts)


def howe_table(max_rank: int, coord_bound: int, a_family_bound: int = 6,
               prune: bool = True, types: Sequence[tuple[str, int]] | None = None) -> list[HoweRow]:
    """Decide weight-multiplicity-freeness on a grid of weights.

    With ``prune`` the scan uses monotonicity: ``d_mu(lam) <= d_{mu+nu}(lam+nu)``
    for dominant ``nu``, so any weight above a non-free weight is non-free.
    Only weights all of whose immediate predecessors ``mu - omega_i`` are free
    get the full Freudenthal check.
    """
    if max_rank < 1 or coord_bound < 0:
        raise ValueError("bounds must be positive")
    rows: list[HoweRow] = []
    for t, n in (types if types is not None else howe_types(max_rank)):
        rs = build(t, n)
        grid = howe_grid(t, n, coord_bound, a_family_bound)
        verdict: dict[Weight, bool] = {}
        for mu in sorted(grid, key=lambda w: (sum(w.coords), w.coords)):
            if prune:
                below = [mu - Weight.fundamental(n, i + 1) for i in range(n) if mu.coords[i] > 0]
                if any(not _cached_wmf(rs, b, verdict) for b in below if not b.is_zero()):
                    verdict[mu] = False
                    continue
            verdict[mu] = is_wmf(rs, mu)
        rows.extend(HoweRow(t, n, mu, verdict[mu]) for mu in grid)
    return rows


def _cached_wmf(rs: RootSystem, mu: Weight, cache: dict[Weight, bool]) -> bool:
    if mu not in cache:
        cache[mu] = is_wmf(rs, mu)
    return cache[mu]
