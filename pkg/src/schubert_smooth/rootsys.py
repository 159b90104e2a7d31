"""
Finite irreducible root systems, weights and basic Weyl combinatorics.

Conventions (Bourbaki numbering throughout, nodes 0-indexed in code):

* ``cartan[i][j] = <alpha_i^vee, alpha_j>``, so column ``j`` of the Cartan
  matrix is the simple root ``alpha_j`` written in fundamental weights.
* Roots are integer vectors in simple-root coordinates.
* Weights are integer vectors in fundamental-weight coordinates, so the
  pairing with the simple coroot ``alpha_i^vee`` is just ``coords[i]``.
* ``symmetrizer[i] = (alpha_i, alpha_i) / 2`` with short roots normalised
  to squared length 2.

>>> rs = build("D", 4)
>>> len(rs.positive_roots), rs.highest_root
(12, (1, 2, 1, 1))
>>> rs.two_rho
(6, 10, 6, 6)
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, prod
from typing import Iterable, Sequence

__all__ = [
    "Weight", "RootSystem", "RootSystemError",
    "cartan_matrix", "build", "pairing", "dominant_weights_below",
    "is_minuscule", "is_quasi_minuscule", "quasi_minuscule_weight",
    "minuscule_weights", "positive_roots_of", "weyl_group_order",
]

Vector = tuple[int, ...]


class RootSystemError(ValueError):
    """Invalid root-system data or a weight that does not fit the system."""


@dataclass(frozen=True, order=True)
class Weight:
    """Integral weight in fundamental-weight coordinates."""
    coords: Vector

    def __init__(self, coords: Iterable[int]):
        object.__setattr__(self, "coords", tuple(int(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "Weight":
        """The fundamental weight omega_i (``i`` is 1-based, Bourbaki)."""
        return cls(1 if k == i - 1 else 0 for k in range(rank))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        _check_rank(self.coords, other.coords)
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_rank(self.coords, other.coords)
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __mul__(self, k: int) -> "Weight":
        return Weight(k * c for c in self.coords)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Weight({list(self.coords)})"


def _check_rank(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise RootSystemError(f"dimension mismatch: {len(a)} vs {len(b)}")


# ---------------------------------------------------------------------------
# Cartan matrices
# ---------------------------------------------------------------------------

_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def cartan_matrix(type_label: str, rank: int) -> tuple[Vector, ...]:
    """Cartan matrix ``<alpha_i^vee, alpha_j>`` of an irreducible type."""
    t = type_label.upper()
    if t not in _VALID_RANKS:
        raise RootSystemError(f"unknown Cartan type {type_label!r}")
    if not isinstance(rank, int) or not _VALID_RANKS[t](rank):
        raise RootSystemError(f"invalid rank {rank!r} for type {t}")
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, ij: int = -1, ji: int = -1) -> None:
        # ij = <alpha_i^vee, alpha_j>
        a[i][j], a[j][i] = ij, ji

    if t in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if t == "B":
            link(n - 2, n - 1, -1, -2)   # alpha_n short
        elif t == "C":
            link(n - 2, n - 1, -2, -1)   # alpha_n long
    elif t == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif t == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif t == "F":
        link(0, 1)
        link(1, 2, -1, -2)               # alpha_3, alpha_4 short
        link(2, 3)
    elif t == "G":
        link(0, 1, -3, -1)               # alpha_1 short
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> Vector:
    """Positive integers d_i with d_i * a_ij symmetric, normalised so min = 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0:
                    dj = d[i] * cartan[i][j] / cartan[j][i]
                    if d[j] is None:
                        d[j] = dj
                        stack.append(j)
                    elif d[j] != dj:
                        raise RootSystemError("Cartan matrix is not symmetrizable")
    # normalise each connected component separately is unnecessary for our
    # use: scale globally to coprime positive integers with minimum 1
    den = 1
    for x in d:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in d]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


def _check_cartan(cartan: Sequence[Sequence[int]]) -> None:
    n = len(cartan)
    for i in range(n):
        if len(cartan[i]) != n:
            raise RootSystemError("Cartan matrix must be square")
        if cartan[i][i] != 2:
            raise RootSystemError("Cartan matrix diagonal must be 2")
        for j in range(n):
            if i != j:
                if cartan[i][j] > 0:
                    raise RootSystemError("off-diagonal Cartan entries must be <= 0")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise RootSystemError("Cartan zero pattern must be symmetric")


def positive_roots_of(cartan: Sequence[Sequence[int]], max_height: int = 10_000) -> tuple[Vector, ...]:
    """Positive roots of a finite-type (possibly reducible) Cartan matrix.

    Height-by-height string algorithm: ``beta + alpha_i`` is a root iff the
    alpha_i-string through beta extends upwards, i.e. ``p - <beta, alpha_i^vee> > 0``
    where ``p`` is how far the string extends downwards.
    """
    n = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    height = 1
    while layer:
        if height > max_height:
            raise RootSystemError("root enumeration did not terminate (not of finite type?)")
        nxt = set()
        for beta in layer:
            for i in range(n):
                if beta == simple[i]:
                    continue
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pair = sum(beta[j] * cartan[i][j] for j in range(n))
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        nxt -= roots
        roots |= nxt
        layer = sorted(nxt)
        height += 1
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


def weyl_group_order(cartan: Sequence[Sequence[int]]) -> int:
    """|W| as the product of (exponent + 1); exponents from the height partition."""
    if len(cartan) == 0:
        return 1
    heights: dict[int, int] = {}
    for r in positive_roots_of(cartan):
        h = sum(r)
        heights[h] = heights.get(h, 0) + 1
    # number of exponents >= k equals the number of positive roots of height k
    exps = []
    rank = len(cartan)
    counts = [heights.get(k, 0) for k in range(1, max(heights) + 2)]
    for k, c in enumerate(counts, start=1):
        nxt = counts[k] if k < len(counts) else 0
        exps.extend([k] * (c - nxt))
    assert len(exps) == rank, "height partition inconsistent with rank"
    return prod(e + 1 for e in exps)


# ---------------------------------------------------------------------------
# RootSystem
# ---------------------------------------------------------------------------

class RootSystem:
    """A finite irreducible root system with Cartan data.

    Instances are immutable after construction and are shared through
    :func:`build`; treat all attributes as read-only.
    """

    def __init__(self, type_label: str, rank: int, cartan: Sequence[Sequence[int]] | None = None):
        if cartan is None:
            cartan = cartan_matrix(type_label, rank)
        _check_cartan(cartan)
        self.type_label = type_label.upper()
        self.rank = rank
        self.cartan: tuple[Vector, ...] = tuple(tuple(r) for r in cartan)
        self.symmetrizer: Vector = _symmetrizer(self.cartan)
        self.positive_roots: tuple[Vector, ...] = positive_roots_of(self.cartan)
        self.highest_root: Vector = max(self.positive_roots, key=sum)

    def __repr__(self) -> str:
        return f"RootSystem({self.type_label}{self.rank})"

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    # -- roots ------------------------------------------------------------

    @cached_property
    def roots(self) -> tuple[Vector, ...]:
        return self.positive_roots + tuple(tuple(-c for c in r) for r in self.positive_roots)

    @cached_property
    def two_rho(self) -> Vector:
        """Sum of the positive roots, simple-root coordinates."""
        return tuple(sum(r[i] for r in self.positive_roots) for i in range(self.rank))

    @cached_property
    def rho(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, 2) for c in self.two_rho)

    def root_inner(self, a: Sequence, b: Sequence):
        """Invariant form (a, b) for vectors in simple-root coordinates."""
        n = self.rank
        return sum(a[i] * self.symmetrizer[i] * self.cartan[i][j] * b[j]
                   for i in range(n) if a[i] for j in range(n) if b[j])

    def root_norm(self, root: Sequence[int]) -> int:
        """(root, root) / 2; equals 1 exactly for short roots."""
        return self.root_inner(root, root) // 2

    @cached_property
    def is_simply_laced(self) -> bool:
        return len(set(self.symmetrizer)) == 1

    @cached_property
    def short_simple_nodes(self) -> tuple[int, ...]:
        """0-based indices of short simple roots (all nodes if simply laced)."""
        m = min(self.symmetrizer)
        return tuple(i for i, d in enumerate(self.symmetrizer) if d == m)

    @cached_property
    def highest_short_root(self) -> Vector:
        m = min(self.symmetrizer)
        return max((r for r in self.positive_roots if self.root_norm(r) == m), key=sum)

    def reflect_root(self, i: int, root: Sequence[int]) -> Vector:
        pair = sum(root[j] * self.cartan[i][j] for j in range(self.rank))
        out = list(root)
        out[i] -= pair
        return tuple(out)

    # -- weights ----------------------------------------------------------

    def root_to_weight(self, root: Sequence[int]) -> Weight:
        n = self.rank
        return Weight(sum(self.cartan[i][j] * root[j] for j in range(n)) for i in range(n))

    @cached_property
    def _inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.rank
        m = [[Fraction(self.cartan[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
             for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            pv = m[col][col]
            m[col] = [x / pv for x in m[col]]
            for r in range(n):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return tuple(tuple(row[n:]) for row in m)

    def weight_to_root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        """Express a weight in simple-root coordinates (rational in general)."""
        self._check(w)
        inv = self._inverse_cartan
        n = self.rank
        return tuple(sum(inv[i][j] * w.coords[j] for j in range(n)) for i in range(n))

    @cached_property
    def _scaled_inverse_cartan(self) -> tuple[tuple[int, ...], ...]:
        """``det_cartan * cartan^{-1}``, an integer matrix."""
        d = self.det_cartan
        return tuple(tuple(int(x * d) for x in row) for row in self._inverse_cartan)

    def in_root_lattice(self, w: Weight) -> bool:
        self._check(w)
        d = self.det_cartan
        c = w.coords
        return all(sum(a * b for a, b in zip(row, c)) % d == 0 for row in self._scaled_inverse_cartan)

    @cached_property
    def det_cartan(self) -> int:
        """Index of the root lattice in the weight lattice."""
        n = self.rank
        m = [list(map(Fraction, row)) for row in self.cartan]
        det = Fraction(1)
        for c in range(n):
            piv = next(r for r in range(c, n) if m[r][c] != 0)
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det *= m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return abs(int(det))

    def _check(self, w: Weight) -> None:
        if w.rank != self.rank:
            raise RootSystemError(f"weight of rank {w.rank} used with {self.name}")

    def reflect_weight(self, i: int, w: Weight) -> Weight:
        self._check(w)
        c = w.coords[i]
        if c == 0:
            return w
        return Weight(w.coords[j] - c * self.cartan[j][i] for j in range(self.rank))

    def dominant_conjugate(self, w: Weight) -> Weight:
        """The unique dominant weight in the Weyl orbit of ``w``."""
        coords = list(w.coords)
        n = self.rank
        cart = self.cartan
        while True:
            for i in range(n):
                c = coords[i]
                if c < 0:
                    for j in range(n):
                        coords[j] -= c * cart[j][i]
                    break
            else:
                return Weight(coords)

    def weyl_orbit(self, w: Weight) -> list[Weight]:
        """Orbit of ``w`` under W (breadth first from the dominant conjugate)."""
        start = self.dominant_conjugate(w)
        seen = {start}
        layer = [start]
        while layer:
            nxt = []
            for x in layer:
                for i in range(self.rank):
                    if x.coords[i] > 0:
                        y = self.reflect_weight(i, x)
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
            layer = nxt
        return sorted(seen)

    @cached_property
    def weyl_order(self) -> int:
        return weyl_group_order(self.cartan)

    def orbit_size(self, w: Weight) -> int:
        """|W . w| = |W| / |W_J| with J the simple nodes fixing the dominant conjugate."""
        dom = self.dominant_conjugate(w)
        zero = [i for i in range(self.rank) if dom.coords[i] == 0]
        sub = tuple(tuple(self.cartan[i][j] for j in zero) for i in zero)
        return self.weyl_order // weyl_group_order(sub)

    @cached_property
    def positive_coroots(self) -> tuple[Vector, ...]:
        """Coroots of the positive roots, in simple-coroot coordinates (same order)."""
        out = []
        for r in self.positive_roots:
            k = self.root_norm(r)
            out.append(tuple(r[j] * self.symmetrizer[j] // k for j in range(self.rank)))
        return tuple(out)

    def coroot_pairing(self, w: Weight, root: Sequence[int]) -> int:
        """<w, root^vee> for a root given in simple-root coordinates."""
        self._check(w)
        num = sum(root[j] * self.symmetrizer[j] * w.coords[j] for j in range(self.rank))
        den = self.root_norm(root)
        q, r = divmod(num, den)
        if r:
            raise RootSystemError(f"{root} is not a root of {self.name}")
        return q

    @cached_property
    def two_rho_weight(self) -> Weight:
        return Weight((2,) * self.rank)


@lru_cache(maxsize=None)
def build(type_label: str, rank: int) -> RootSystem:
    """Build (and cache) the irreducible root system of the given type."""
    return RootSystem(type_label.upper(), rank)


# ---------------------------------------------------------------------------
# Pairings, dominance and (quasi-)minuscule weights
# ---------------------------------------------------------------------------

def pairing(rs: RootSystem, w: Weight, coroot: Sequence[int]) -> int:
    """<w, c> for ``c`` given in simple-coroot coordinates."""
    rs._check(w)
    _check_rank(w.coords, coroot)
    return sum(a * b for a, b in zip(w.coords, coroot))


def dominant_weights_below(rs: RootSystem, mu: Weight) -> list[Weight]:
    """All dominant weights ``lam <= mu`` in the dominance order.

    Explores downward from ``mu`` by subtracting positive roots and keeping
    dominant results; the covering relations of the dominance order on
    dominant weights are differences of positive roots, so this reaches
    every dominant ``lam <= mu``.  Sorted by height of ``mu - lam`` (so ``mu``
    comes first), ties broken lexicographically.
    """
    return [lam for lam, _ in iter_dominant_below(rs, mu)]


def iter_dominant_below(rs: RootSystem, mu: Weight):
    """Yield ``(lam, mu - lam in root coords)`` in order of increasing height.

    Lazy: every weight of depth ``h`` is produced before any of depth ``> h``,
    which lets callers stop early.
    """
    rs._check(mu)
    if not mu.is_dominant():
        raise RootSystemError(f"{mu} is not dominant")
    pos = [(r, rs.root_to_weight(r).coords, sum(r)) for r in rs.positive_roots]
    n = rs.rank
    start = (0, mu.coords)
    depth_of = {mu.coords: (0,) * n}
    heap = [start]
    while heap:
        h, coords = heapq.heappop(heap)
        c = depth_of[coords]
        yield Weight(coords), c
        for root, rw, rh in pos:
            nw = tuple(coords[i] - rw[i] for i in range(n))
            if min(nw) < 0 or nw in depth_of:
                continue
            depth_of[nw] = tuple(c[i] + root[i] for i in range(n))
            heapq.heappush(heap, (h + rh, nw))


def is_minuscule(rs: RootSystem, mu: Weight) -> bool:
    """Nonzero dominant with every coroot pairing in {0, +-1}."""
    rs._check(mu)
    if not mu.is_dominant():
        raise RootSystemError(f"{mu} is not dominant")
    if mu.is_zero():
        return False
    c = mu.coords
    return all(sum(a * b for a, b in zip(c, cr)) <= 1 for cr in rs.positive_coroots)


def is_quasi_minuscule(rs: RootSystem, mu: Weight) -> bool:
    """Nonzero dominant, in the root lattice, with coroot pairings in [-2, 2]
    and exactly one positive coroot pairing to 2.

    Without the uniqueness condition ``2 omega_2`` of A3 would qualify.  The
    weight found equals the highest short root; that is checked as a
    consistency assertion.
    """
    rs._check(mu)
    if not mu.is_dominant():
        raise RootSystemError(f"{mu} is not dominant")
    if mu.is_zero() or not rs.in_root_lattice(mu):
        return False
    c = mu.coords
    twos = 0
    for cr in rs.positive_coroots:
        p = sum(a * b for a, b in zip(c, cr))
        if p > 2 or p == 2 and twos:
            return False
        twos += p == 2
    ok = twos == 1
    if ok:
        assert mu == rs.root_to_weight(rs.highest_short_root), "quasi-minuscule weight not unique"
    return ok


def quasi_minuscule_weight(rs: RootSystem) -> Weight:
    """The highest short root, as a weight."""
    return rs.root_to_weight(rs.highest_short_root)


def minuscule_weights(rs: RootSystem) -> list[Weight]:
    """Minuscule weights (all fundamental; found by testing each omega_i)."""
    out = []
    for i in range(1, rs.rank + 1):
        w = Weight.fundamental(rs.rank, i)
        if is_minuscule(rs, w):
            out.append(w)
    return out
