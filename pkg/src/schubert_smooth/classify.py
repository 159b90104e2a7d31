"""
Classification of rationally smooth and smooth Schubert varieties in twisted
affine Grassmannians, regenerated from the folding data and multiplicities.

A row is a group case, a dominant weight of the fixed-point dual group (in
the Bourbaki labels of its identified type) and, for smoothness, a special
vertex type.  Rational smoothness is weight-multiplicity-freeness; smoothness
holds for minuscule weights and for the exotic odd unitary case.

>>> rows = rationally_smooth_table(max_rank=1, coord_bound=2, a_family_bound=2)
>>> [(r.case.group_name, r.weight.coords, r.rationally_smooth) for r in rows]
[('PGL_2', (1,), True), ('PGL_2', (2,), True), ('PU_3', (2,), True)]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fold import GroupCase, enumerate_cases, fixed_weight_lattice_is_root_lattice, fold
from .kumar import smooth_at, smoothness_ratio
from .affine import C_BC1, case_words
from .mult import howe_grid, howe_table, multiplicity_table
from .rootsys import (
    RootSystem, Weight, build, is_minuscule, is_quasi_minuscule, minuscule_weights, quasi_minuscule_weight,
)

__all__ = [
    "ABSOLUTELY_SPECIAL", "SPECIAL_NOT_ABSOLUTELY_SPECIAL", "EXOTIC_FAMILY",
    "RationalRow", "SmoothRow", "fixed_system", "case_weights", "expected_wmf",
    "rationally_smooth_table", "smooth_table", "table_mismatches",
    "verify_pu3_tower", "verify_triality", "bound_annotation",
]

ABSOLUTELY_SPECIAL = "absolutely_special"
SPECIAL_NOT_ABSOLUTELY_SPECIAL = "special_not_absolutely_special"
EXOTIC_FAMILY = "C-BC_n"


@dataclass(frozen=True)
class RationalRow:
    case: GroupCase
    weight: Weight
    rationally_smooth: bool
    minuscule: bool
    quasi_minuscule: bool


@dataclass(frozen=True)
class SmoothRow:
    case: GroupCase
    weight: Weight
    vertex_type: str
    smooth: bool
    rationally_smooth: bool
    exotic: bool
    conjecture_relevant: bool


def fixed_system(case: GroupCase) -> RootSystem:
    return fold(case.fold_spec).fixed_system


def case_weights(case: GroupCase, coord_bound: int, a_family_bound: int = 6) -> list[Weight]:
    """Grid of nonzero dominant weights, restricted to the root lattice for adjoint fixed groups."""
    rs = fixed_system(case)
    grid = howe_grid(rs.type_label, rs.rank, coord_bound, a_family_bound)
    if fixed_weight_lattice_is_root_lattice(case):
        grid = [w for w in grid if rs.in_root_lattice(w)]
    return grid


@lru_cache(maxsize=None)
def _wmf_verdicts(type_label: str, rank: int, coord_bound: int, a_family_bound: int) -> dict[Weight, bool]:
    rows = howe_table(rank, coord_bound, a_family_bound, types=[(type_label, rank)])
    return {r.weight: r.wmf for r in rows}


def expected_wmf(rs: RootSystem, mu: Weight) -> bool:
    """Closed-form list of weight-multiplicity-free highest weights of a simple type."""
    if is_minuscule(rs, mu):
        return True
    t, n, c = rs.type_label, rs.rank, mu.coords
    if t == "A":
        if n == 1:
            return True
        support = [i for i, x in enumerate(c) if x]
        return len(support) == 1 and support[0] in (0, n - 1)
    if t in ("B", "G"):
        return is_quasi_minuscule(rs, mu)
    if t == "C" and n == 3:
        return c == (0, 0, 1)
    return False


def bound_annotation(coord_bound: int, a_family_bound: int) -> str:
    return (f"verified for fundamental coordinates <= {coord_bound}; "
            f"type A multiples l*omega_1, l*omega_n for l <= {a_family_bound}")


@lru_cache(maxsize=None)
def _special_weights(type_label: str, rank: int) -> tuple[frozenset[Weight], Weight]:
    rs = build(type_label, rank)
    return frozenset(minuscule_weights(rs)), quasi_minuscule_weight(rs)


def rationally_smooth_table(max_rank: int = 6, coord_bound: int = 4,
                            a_family_bound: int = 6) -> list[RationalRow]:
    """One row per (case, weight), ordered by case enumeration then weight."""
    rows = []
    for case in enumerate_cases(max_rank):
        rs = fixed_system(case)
        verdicts = _wmf_verdicts(rs.type_label, rs.rank, coord_bound, a_family_bound)
        minuscule, qm = _special_weights(rs.type_label, rs.rank)
        for w in case_weights(case, coord_bound, a_family_bound):
            rows.append(RationalRow(case, w, verdicts[w], w in minuscule, w == qm))
    return rows


def smooth_table(max_rank: int = 6, coord_bound: int = 4, a_family_bound: int = 6,
                 rational: list[RationalRow] | None = None) -> list[SmoothRow]:
    """Smoothness per vertex type: minuscule, or the exotic quasi-minuscule odd unitary case."""
    if rational is None:
        rational = rationally_smooth_table(max_rank, coord_bound, a_family_bound)
    rows = []
    for r in rational:
        for vt in r.case.vertex_types:
            exotic = r.case.family == EXOTIC_FAMILY and r.quasi_minuscule and vt == SPECIAL_NOT_ABSOLUTELY_SPECIAL
            conj = (not r.case.split) and vt == ABSOLUTELY_SPECIAL and not r.minuscule and r.rationally_smooth
            rows.append(SmoothRow(r.case, r.weight, vt, r.minuscule or exotic,
                                  r.rationally_smooth, exotic, conj))
    return rows


def table_mismatches(rational: list[RationalRow], smooth: list[SmoothRow]) -> list[str]:
    """Disagreements with the closed-form lists and the row-wise consistency rules."""
    out = []
    for r in rational:
        rs = fixed_system(r.case)
        if r.rationally_smooth != expected_wmf(rs, r.weight):
            out.append(f"{r.case.key} {r.weight}: rationally_smooth={r.rationally_smooth}")
    for s in smooth:
        if s.smooth and not s.rationally_smooth:
            out.append(f"{s.case.key} {s.weight} {s.vertex_type}: smooth but not rationally smooth")
        if s.exotic and s.case.family != EXOTIC_FAMILY:
            out.append(f"{s.case.key} {s.weight}: exotic row outside {EXOTIC_FAMILY}")
    by_key: dict[tuple[str, Weight], set[bool]] = {}
    for s in smooth:
        by_key.setdefault((s.case.key, s.weight), set()).add(s.rationally_smooth)
    out.extend(f"{k} {w}: rational smoothness depends on the vertex" for (k, w), v in by_key.items() if len(v) > 1)
    return out


def verify_pu3_tower(l_max: int = 8) -> dict:
    """Kumar's criterion for both vertex cases at ``l = 1..l_max``."""
    report: dict = {"l_max": l_max, "cases": {}}
    ok = True
    for case in ("A", "B"):
        entries = []
        for l in range(1, l_max + 1):
            w, v = case_words(case, l, C_BC1)
            smooth = smooth_at(w, v)
            ratio = smoothness_ratio(w, v)
            want_smooth = case == "B" and l == 1
            want_ratio = Fraction(4 * l if case == "A" else l)
            good = smooth == want_smooth and ratio == want_ratio
            ok &= good
            entries.append({"l": l, "smooth": smooth, "ratio": ratio, "ok": good})
        report["cases"][case] = entries
    report["ok"] = ok
    return report


def verify_triality() -> dict:
    """All exact checks for the ramified triality."""
    from . import triality as tr

    x = tr.Cyclo3(1)
    a = tr.exp_matrix(tr.build_v_max(x))
    factors = tr.v_max_factors(x)
    zinv2 = tr.ZETA.inverse() ** 2
    g2 = build("G", 2)
    qm = quasi_minuscule_weight(g2)
    checks = {
        "dimension_pair": (tr.schubert_dimension_check(), tr.sigma_fixed_dimension()) == (6, 7),
        "smith_valuations": tr.smith_valuations(a).valuations == (-2, -1, -1, 0, 0, 1, 1, 2),
        "mu_tilde_coset": tr.smith_valuations(tr.u_power_diag(tr.mu_tilde())).valuations
        == tr.smith_valuations(a).valuations,
        "sigma_fixed": tr.build_v_max(x).is_sigma_fixed(),
        "orthogonal": a.is_orthogonal(),
        "entry_1_8": a[0, 7] == tr.LaurentPoly.monomial(-zinv2 * x * x, -2),
        "factors_commute": all(f @ g == g @ f for f in factors for g in factors),
        "factors_product": factors[0] @ factors[1] @ factors[2] == a,
        "g2_quasi_minuscule_wmf": all(m == 1 for _, m in multiplicity_table(g2, qm).entries),
        "g2_zero_weight_multiplicity": multiplicity_table(g2, qm)[Weight.zero(2)] == 1,
    }
    tangent = tr.tangent_space_report()
    return {
        "checks": checks,
        "dimension_pair": (tangent["orbit_closure_dim"], tangent["tangent_dim"]),
        "smith_valuations": tr.smith_valuations(a).valuations,
        "tangent": tangent,
        "ok": all(checks.values()),
    }
