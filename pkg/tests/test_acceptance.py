"""Acceptance criteria, one test each.  Every test prints a single PASS/FAIL line."""

import itertools
import time
from fractions import Fraction

from _oracles import golden_tables, positive_rows, wmf_expected
from schubert_smooth import triality as tr
from schubert_smooth.affine import C_BC1, AffineRoot, case_words, null_root
from schubert_smooth.classify import rationally_smooth_table, smooth_table
from schubert_smooth.fold import (
    component_group_order, dual_fixed_group, enumerate_cases, make_spec, simply_connected_check,
)
from schubert_smooth.kumar import e_v_X, e_v_X_raw, grouped_closed_form, smooth_at, smoothness_ratio, telescope_check
from schubert_smooth.mult import dim_irrep, howe_table, multiplicity_table, weight_multiplicity_bruteforce
from schubert_smooth.rootsys import Weight, build


def run_criterion(capsys, label, limit, body):
    start = time.perf_counter()
    error = None
    try:
        body()
    except AssertionError as exc:
        error = exc
    elapsed = time.perf_counter() - start
    if error is None and limit is not None and elapsed >= limit:
        error = AssertionError(f"took {elapsed:.2f} s, limit {limit} s")
    with capsys.disabled():
        status = "PASS" if error is None else f"FAIL ({error})"
        print(f"\n[acceptance] {label}: {status} in {elapsed:.2f} s")
    if error is not None:
        raise error


def test_1_pu3_tower(capsys):
    def body():
        for l in range(1, 9):
            wa, va = case_words("A", l, C_BC1)
            assert smooth_at(wa, va) is False, ("A", l)
            assert smoothness_ratio(wa, va) == 4 * l, ("A", l)
            wb, vb = case_words("B", l, C_BC1)
            assert smooth_at(wb, vb) is (l == 1), ("B", l)
            assert smoothness_ratio(wb, vb) == l, ("B", l)

    run_criterion(capsys, "1 PU_3 tower l=1..8", 10, body)


def test_2_triality(capsys):
    def body():
        for x in (tr.Cyclo3(1), tr.Cyclo3(2, 1), tr.Cyclo3(Fraction(-1, 3), 2)):
            a = tr.exp_matrix(tr.build_v_max(x))
            assert a.is_orthogonal()
            assert a[0, 7] == tr.LaurentPoly.monomial(-(tr.ZETA ** -2) * x * x, -2)
            f = tr.v_max_factors(x)
            assert all(p @ q == q @ p for p in f for q in f)
        a = tr.exp_matrix(tr.build_v_max(1))
        assert tr.smith_valuations(a).valuations == (-2, -1, -1, 0, 0, 1, 1, 2)
        assert tr.sigma_fixed_dimension() == 7
        assert tr.schubert_dimension_check() == 6

    run_criterion(capsys, "2 triality exact checks", 5, body)


def test_3_howe_regeneration(capsys):
    def body():
        rows = howe_table(6, 4, a_family_bound=6)
        assert {f"{r.type_label}{r.rank}" for r in rows} >= {"A6", "B6", "C6", "D6", "E6", "F4", "G2"}
        got = {(r.type_label, r.rank, r.weight.coords) for r in rows if r.wmf}
        want = {(r.type_label, r.rank, r.weight.coords) for r in rows
                if wmf_expected(r.type_label, r.rank, r.weight.coords)}
        assert got == want, sorted(got ^ want)[:10]

    run_criterion(capsys, "3 weight-multiplicity-free scan rank<=6", 120, body)


# fixed type letter, isogeny, component group order of each non-split family
NON_SPLIT = {
    "B-C_n": ("C", "simply_connected", 2),
    "C-BC_n": ("B", "adjoint", 1),
    "C-B_n": ("B", "simply_connected", 2),
    "F_4^I": ("F", "simply_connected", 1),
    "G_2^I": ("G", "simply_connected", 1),
}
COINCIDENT = {"B1": "A1", "C1": "A1", "C2": "B2", "D3": "A3"}


def test_4_dual_group_table(capsys):
    def body():
        seen = set()
        for case in enumerate_cases(8):
            if case.split or case.cross_reference:
                continue
            letter, iso, comps = NON_SPLIT[case.family]
            t, n, got_iso = dual_fixed_group(case)
            want = COINCIDENT.get(f"{letter}{case.n}", f"{letter}{case.n}")
            assert COINCIDENT.get(f"{t}{n}", f"{t}{n}") == want, case.key
            assert got_iso == iso, case.key
            assert component_group_order(case) == comps, case.key
            seen.add(case.family)
        assert seen == set(NON_SPLIT)
        for t, n in [("A", k) for k in range(2, 17)] + [("D", k) for k in range(4, 9)] + [("E", 6)]:
            assert simply_connected_check(make_spec(t, n, "flip")) is not (t == "A" and n % 2 == 0), (t, n)
        assert simply_connected_check(make_spec("D", 4, "triality"))

    run_criterion(capsys, "4 fixed-point dual group table n<=8", None, body)


def test_5_classification_tables(capsys):
    def body():
        rational = rationally_smooth_table(6, 4, 6)
        smooth = smooth_table(6, 4, 6, rational=rational)
        g = golden_tables()
        r, s = positive_rows(rational, smooth)
        assert r == g["rationally_smooth"]
        assert s == g["smooth"]
        assert all(row.rationally_smooth for row in smooth if row.smooth)

    run_criterion(capsys, "5 classification tables vs golden", None, body)


ORACLE_TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("B", 3), ("C", 3), ("G", 2)]


def test_6_oracle_equivalence(capsys):
    def body():
        instances = 0
        for t, n in ORACLE_TYPES:
            rs = build(t, n)
            for c in itertools.product(range(9), repeat=n):
                mu = Weight(c)
                if sum(rs.weight_to_root_coords(mu)) > 8:
                    continue
                table = multiplicity_table(rs, mu)
                assert table.dimension() == dim_irrep(rs, mu), (t, n, c)
                for lam, m in table.entries:
                    assert weight_multiplicity_bruteforce(rs, mu, lam) == m, (t, n, c, lam)
                instances += 1
        assert instances > 50
        d = null_root(C_BC1)
        for k in (1, 2):
            for l in range(1, 11):
                for alpha in (AffineRoot((1, 0)), AffineRoot((0, 1)), AffineRoot((1, 1))):
                    assert telescope_check(k, l, alpha, k * d - alpha), (k, l, alpha)
        for case in "AB":
            for l in range(1, 7):
                w, v = case_words(case, l)
                prefix, summed, closed = grouped_closed_form(case, l)
                assert summed == closed, (case, l)
                raw = e_v_X_raw(w, v)
                assert prefix * summed == raw == e_v_X(w, v), (case, l)

    run_criterion(capsys, "6 oracle equivalence", None, body)
