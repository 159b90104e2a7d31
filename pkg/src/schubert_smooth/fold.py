"""
Dynkin diagram automorphisms and the root data they fix.

Folding a simply-laced (or any) root system along a diagram automorphism
``sigma`` of order ``r`` produces two rank-``#orbits`` systems:

* the *fixed* system, whose roots are the non-divisible sigma-averages
  ``(1/r) sum_k sigma^k(alpha)`` of source roots;
* the *echelonnage* system, spanned by the modified norms of the simple
  roots: the sum over a simple-root orbit, doubled when the orbit roots are
  not mutually orthogonal (only the middle pair of an ``A_{2n}`` flip).

Both are identified with a standard Bourbaki-labelled system by matching
Cartan matrices up to node relabelling.

>>> data = fold(make_spec("D", 4, "triality"))
>>> data.fixed_system.name, data.echelonnage_simples
('G2', ((0, 1, 0, 0), (1, 0, 1, 1)))
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .rootsys import RootSystem, build, cartan_matrix

__all__ = [
    "FoldSpec", "FoldedRootData", "FoldError", "GroupCase", "CaseError",
    "make_spec", "flip_permutation", "triality_permutation", "identify_cartan",
    "fold", "simply_connected_check", "coinvariant_index",
    "load_case_data", "case_families", "enumerate_cases", "get_case",
    "dual_fixed_group", "component_group_order", "fixed_weight_lattice_is_root_lattice",
]

SIMPLY_CONNECTED = "simply_connected"
ADJOINT = "adjoint"


class FoldError(ValueError):
    """Permutation is not a diagram automorphism or data is inconsistent."""


class CaseError(KeyError):
    """Unknown group case name."""


# ---------------------------------------------------------------------------
# Specs
# ---------------------------------------------------------------------------

def _perm_order(perm: Sequence[int]) -> int:
    ident = tuple(range(len(perm)))
    cur = tuple(perm)
    k = 1
    while cur != ident:
        cur = tuple(perm[c] for c in cur)
        k += 1
    return k


@dataclass(frozen=True)
class FoldSpec:
    """A diagram automorphism ``i -> node_permutation[i]`` of ``source``."""
    source: RootSystem
    node_permutation: tuple[int, ...]
    order: int

    def __post_init__(self):
        perm = tuple(self.node_permutation)
        object.__setattr__(self, "node_permutation", perm)
        n = self.source.rank
        if sorted(perm) != list(range(n)):
            raise FoldError(f"{perm} is not a permutation of {n} nodes")
        a = self.source.cartan
        for i in range(n):
            for j in range(n):
                if a[perm[i]][perm[j]] != a[i][j]:
                    raise FoldError(f"{perm} does not preserve the Cartan matrix of {self.source.name}")
        if self.order not in (1, 2, 3) or _perm_order(perm) != self.order:
            raise FoldError(f"declared order {self.order} but permutation has order {_perm_order(perm)}")

    def apply_root(self, root: Sequence) -> tuple:
        """Image of a root (simple-root coordinates) under sigma."""
        out = [0] * len(root)
        for i, c in enumerate(root):
            out[self.node_permutation[i]] = c
        return tuple(out)

    @property
    def node_orbits(self) -> tuple[tuple[int, ...], ...]:
        seen, orbits = set(), []
        for i in range(self.source.rank):
            if i in seen:
                continue
            orb = [i]
            j = self.node_permutation[i]
            while j != i:
                orb.append(j)
                j = self.node_permutation[j]
            seen.update(orb)
            orbits.append(tuple(sorted(orb)))
        return tuple(orbits)


def flip_permutation(type_label: str, rank: int) -> tuple[int, ...]:
    """The order-two diagram automorphism of A_n (n >= 2), D_n or E_6."""
    t = type_label.upper()
    if t == "A" and rank >= 2:
        return tuple(rank - 1 - i for i in range(rank))
    if t == "D" and rank >= 3:
        return tuple(range(rank - 2)) + (rank - 1, rank - 2)
    if t == "E" and rank == 6:
        return (5, 1, 4, 3, 2, 0)
    raise FoldError(f"{t}{rank} has no order-two diagram automorphism")


def triality_permutation() -> tuple[int, ...]:
    """sigma_0 on D4: the middle node is fixed and the outer nodes 1 -> 3 -> 4 -> 1."""
    return (2, 1, 3, 0)


def make_spec(type_label: str, rank: int, automorphism: str = "identity") -> FoldSpec:
    rs = build(type_label, rank)
    if automorphism == "identity":
        return FoldSpec(rs, tuple(range(rank)), 1)
    if automorphism == "flip":
        return FoldSpec(rs, flip_permutation(type_label, rank), 2)
    if automorphism == "triality":
        if (rs.type_label, rank) != ("D", 4):
            raise FoldError("triality exists only on D4")
        return FoldSpec(rs, triality_permutation(), 3)
    raise FoldError(f"unknown automorphism {automorphism!r}")


# ---------------------------------------------------------------------------
# Type identification
# ---------------------------------------------------------------------------

def _candidate_types(rank: int) -> list[tuple[str, int]]:
    out = [("A", rank)]
    if rank >= 2:
        out += [("B", rank)]
    if rank >= 3:
        out += [("C", rank)]
    if rank >= 4:
        out += [("D", rank)]
    out += [(t, n) for t, n in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)) if n == rank]
    return out


def identify_cartan(cartan: Sequence[Sequence[int]]) -> tuple[str, int, tuple[int, ...]]:
    """Match a Cartan matrix with a standard irreducible type.

    Returns ``(type, rank, perm)`` where ``perm[i]`` is the row of ``cartan``
    playing the role of Bourbaki node ``i``.  B2 is preferred to C2 and A3 to
    D3 since they coincide.
    """
    n = len(cartan)
    for t, r in _candidate_types(n):
        std = cartan_matrix(t, r)
        perm = _match(std, cartan)
        if perm is not None:
            return t, r, perm
    raise FoldError("Cartan matrix is not of irreducible finite type")


def _match(std, other) -> tuple[int, ...] | None:
    n = len(std)
    perm: list[int] = []
    used = [False] * n

    def extend() -> bool:
        i = len(perm)
        if i == n:
            return True
        for cand in range(n):
            if used[cand] or other[cand][cand] != std[i][i]:
                continue
            if all(other[perm[k]][cand] == std[k][i] and other[cand][perm[k]] == std[i][k] for k in range(i)):
                perm.append(cand)
                used[cand] = True
                if extend():
                    return True
                perm.pop()
                used[cand] = False
        return False

    return tuple(perm) if extend() else None


# ---------------------------------------------------------------------------
# Folding
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FoldedRootData:
    """Fixed and echelonnage root data of a diagram automorphism.

    Vectors are in source simple-root coordinates and listed in the Bourbaki
    order of the identified system.
    """
    spec: FoldSpec
    fixed_system: RootSystem
    fixed_simple_roots: tuple[tuple[Fraction, ...], ...]
    fixed_positive_roots: tuple[tuple[Fraction, ...], ...]
    echelonnage_system: RootSystem
    echelonnage_simples: tuple[tuple[int, ...], ...]
    coinvariant_rank: int
    coroot_index: int
    orbit_of_fixed_node: tuple[tuple[int, ...], ...] = field(default=())


def _average(spec: FoldSpec, root: Sequence[int]) -> tuple[Fraction, ...]:
    total = [Fraction(0)] * len(root)
    cur = tuple(root)
    for _ in range(spec.order):
        for i, c in enumerate(cur):
            total[i] += c
        cur = spec.apply_root(cur)
    return tuple(x / spec.order for x in total)


def _orbit(spec: FoldSpec, root: Sequence[int]) -> list[tuple[int, ...]]:
    orb = [tuple(root)]
    cur = spec.apply_root(root)
    while cur != orb[0]:
        orb.append(cur)
        cur = spec.apply_root(cur)
    return orb


def _is_multiple(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    """True if a = k*b for an integer k > 1."""
    ratio = None
    for x, y in zip(a, b):
        if y == 0:
            if x != 0:
                return False
            continue
        r = x / y
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
    return ratio is not None and ratio.denominator == 1 and ratio > 1


def _cartan_from_vectors(rs: RootSystem, vecs: Sequence[Sequence]) -> tuple[tuple[int, ...], ...]:
    rows = []
    for a in vecs:
        aa = rs.root_inner(a, a)
        row = []
        for b in vecs:
            v = Fraction(2 * rs.root_inner(a, b)) / aa
            if v.denominator != 1:
                raise FoldError("folded vectors do not form a root basis")
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows)


def _modified_norm(spec: FoldSpec, i: int) -> tuple[tuple[int, ...], int]:
    """(N'(alpha_i), doubling factor) with N the sum over the orbit."""
    rs = spec.source
    simple = tuple(1 if k == i else 0 for k in range(rs.rank))
    orb = _orbit(spec, simple)
    norm = tuple(sum(r[k] for r in orb) for k in range(rs.rank))
    orthogonal = all(rs.root_inner(a, b) == 0 for a in orb for b in orb if a != b)
    factor = 1 if orthogonal else 2
    return tuple(factor * c for c in norm), factor


@lru_cache(maxsize=None)
def fold(spec: FoldSpec) -> FoldedRootData:
    rs = spec.source
    orbits = spec.node_orbits
    reps = [o[0] for o in orbits]

    # fixed system from simple-orbit averages
    simples = [_average(spec, tuple(1 if k == i else 0 for k in range(rs.rank))) for i in reps]
    t, r, perm = identify_cartan(_cartan_from_vectors(rs, simples))
    fixed = build(t, r)
    averages = {_average(spec, root) for root in rs.positive_roots}
    nondiv = [a for a in averages if not any(_is_multiple(a, b) for b in averages if b != a)]
    if len(nondiv) != len(fixed.positive_roots):
        raise FoldError("non-divisible averages do not form the expected root system")
    nondiv.sort(key=lambda v: (sum(v), v))

    # echelonnage system from modified norms
    norms = [_modified_norm(spec, i) for i in reps]
    et, er, eperm = identify_cartan(_cartan_from_vectors(rs, [v for v, _ in norms]))
    ech = build(et, er)

    # N'(alpha_i^vee) over N(alpha_i^vee): diagonal in the orbit basis
    index = 1
    for _, f in norms:
        index *= f

    return FoldedRootData(
        spec=spec,
        fixed_system=fixed,
        fixed_simple_roots=tuple(simples[p] for p in perm),
        fixed_positive_roots=tuple(nondiv),
        echelonnage_system=ech,
        echelonnage_simples=tuple(norms[p][0] for p in eperm),
        coinvariant_rank=len(orbits),
        coroot_index=index,
        orbit_of_fixed_node=tuple(orbits[p] for p in perm),
    )


def simply_connected_check(spec: FoldSpec) -> bool:
    """Modified norms of the simple coroots agree with the plain orbit sums."""
    return fold(spec).coroot_index == 1


def coinvariant_index(spec: FoldSpec) -> int:
    """Index of the span of simple-root images in the coinvariants of the weight lattice.

    The coinvariants ``P / (1 - sigma) P`` are free on the orbit classes of
    fundamental weights; ``alpha_j`` maps to the orbit sums of column ``j``
    of the Cartan matrix.  The index is the absolute determinant.
    """
    rs = spec.source
    orbits = spec.node_orbits
    m = [[Fraction(sum(rs.cartan[i][o2[0]] for i in o1)) for o1 in orbits] for o2 in orbits]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return abs(int(det))


# ---------------------------------------------------------------------------
# Static case table
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def load_case_data() -> dict:
    text = resources.files("schubert_smooth").joinpath("data/cases.json").read_text(encoding="utf-8")
    data = json.loads(text)
    if data.get("schema") != "schubert-smooth-cases/1":
        raise CaseError(f"unsupported case table schema {data.get('schema')!r}")
    return data


def case_families() -> list[dict]:
    return list(load_case_data()["families"])


def _lin(ab: Sequence[int], n: int) -> int:
    return ab[0] * n + ab[1]


_TEMPLATE = re.compile(r"\{(\d*)n([+-]\d+)?\}|(?<=_)n\b")


def _render(template: str, n: int) -> str:
    def sub(m: re.Match) -> str:
        if m.group(0) == "n":
            return str(n)
        a = int(m.group(1)) if m.group(1) else 1
        b = int(m.group(2)) if m.group(2) else 0
        return str(a * n + b)
    return _TEMPLATE.sub(sub, template)


@dataclass(frozen=True)
class GroupCase:
    """An adjoint absolutely simple group together with its folding data."""
    tits_name: str
    family: str
    group_name: str
    split: bool
    n: int
    fold_spec: FoldSpec
    vertex_types: tuple[str, ...]
    expected_dual: tuple[str, int, str]
    expected_components: int | None = None
    cross_reference: str | None = None

    @property
    def key(self) -> str:
        return self.tits_name if self.cross_reference is None else f"{self.tits_name}/{self.group_name}"


def _instantiate(fam: dict, n: int) -> GroupCase:
    src = fam["source"]
    spec = make_spec(src["type"], _lin(src["rank"], n), fam["automorphism"])
    dual = fam["dual_fixed"]
    return GroupCase(
        tits_name=_render(fam["tits_name"], n),
        family=fam["tits_name"],
        group_name=_render(fam["group_name"], n),
        split=fam["split"],
        n=n,
        fold_spec=spec,
        vertex_types=tuple(fam["vertex_types"]),
        expected_dual=(dual["type"], _lin(dual["rank"], n), dual["isogeny"]),
        expected_components=fam.get("components"),
        cross_reference=fam.get("cross_reference"),
    )


def enumerate_cases(max_rank: int) -> list[GroupCase]:
    """All case instances whose fixed group has rank ``n <= max_rank``."""
    out = []
    for fam in case_families():
        hi = fam["n_max"] if fam["n_max"] is not None else max_rank
        for n in range(fam["n_min"], min(hi, max_rank) + 1):
            out.append(_instantiate(fam, n))
    return out


def get_case(name: str, max_rank: int = 16) -> GroupCase:
    """Look up a case by Tits name (``C-BC_2``) or group name (``PU_5``)."""
    target = name.replace("{", "").replace("}", "").replace(" ", "")
    matches = []
    for case in enumerate_cases(max_rank):
        names = {case.tits_name, case.group_name.replace("{", "").replace("}", "")}
        if target in names:
            matches.append(case)
    if not matches:
        raise CaseError(f"unknown case {name!r}")
    # the primary row wins over a cross-reference row with the same name
    matches.sort(key=lambda c: c.cross_reference is not None)
    return matches[0]


def dual_fixed_group(case: str | GroupCase) -> tuple[str, int, str]:
    """(type, rank, isogeny) of the fixed-point dual group, computed by folding."""
    c = get_case(case) if isinstance(case, str) else case
    data = fold(c.fold_spec)
    iso = SIMPLY_CONNECTED if data.coroot_index == 1 else ADJOINT
    return data.fixed_system.type_label, data.fixed_system.rank, iso


def component_group_order(case: str | GroupCase) -> int:
    """Number of connected components of the affine Grassmannian."""
    c = get_case(case) if isinstance(case, str) else case
    return coinvariant_index(c.fold_spec)


def fixed_weight_lattice_is_root_lattice(case: GroupCase) -> bool:
    """Adjoint fixed groups only see weights in the root lattice."""
    return dual_fixed_group(case)[2] == ADJOINT

