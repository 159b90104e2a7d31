import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from schubert_smooth.rootsys import build
from schubert_smooth.triality import (
    ZETA, Cyclo3, LaurentMatrix, LaurentPoly, NilpotentVector, TrialityError, build_v_max,
    coset_cocharacter, exp_injectivity_probe, exp_matrix, extreme_sigma_fixed_vectors, J, mu_tilde,
    random_sigma_fixed_vector, root_group, root_vector, schubert_dimension_check, sigma_fixed_dimension,
    smith_valuations, tangent_space_report, u_power_diag, v_max_factors,
)

small = st.fractions(-4, 4, max_denominator=3)
cyclo = st.builds(Cyclo3, small, small)


def test_zeta_is_primitive_cube_root():
    assert ZETA ** 3 == Cyclo3(1)
    assert ZETA != Cyclo3(1)
    assert ZETA * ZETA + ZETA + Cyclo3(1) == Cyclo3()
    assert ZETA.inverse() == ZETA ** 2


@given(cyclo, cyclo, cyclo)
def test_cyclo3_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    if a:
        assert a * a.inverse() == Cyclo3(1)
        assert a.norm() > 0


@given(cyclo)
def test_cyclo3_json_round_trip(a):
    p, q = a.to_json()
    assert Cyclo3(Fraction(p), Fraction(q)) == a


def test_exp_v_max_known_entry():
    m = exp_matrix(build_v_max(1))
    assert m[0, 7] == LaurentPoly.monomial(-ZETA, -2)


def test_smith_valuations_of_exp_v_max():
    m = exp_matrix(build_v_max(1))
    assert smith_valuations(m).valuations == (-2, -1, -1, 0, 0, 1, 1, 2)
    eps = mu_tilde()
    assert eps == (2, 1, 1, 0)
    assert coset_cocharacter(m) == coset_cocharacter(u_power_diag(eps))


def test_smith_of_diagonal_is_sorted_exponents():
    for eps in [(0, 0, 0, 0), (3, 1, 0, 0), (1, 1, 1, 1), (2, 0, 1, 0)]:
        exps = sorted(list(eps) + [-e for e in eps])
        assert smith_valuations(u_power_diag(eps)).valuations == tuple(exps)


integral_roots = st.sampled_from(build("D", 4).roots)


@settings(max_examples=20)
@given(st.lists(st.tuples(integral_roots, st.integers(-2, 2), st.integers(0, 2)), max_size=3),
       st.lists(st.tuples(integral_roots, st.integers(-2, 2), st.integers(0, 2)), max_size=3))
def test_smith_invariant_under_integral_changes(left, right):
    m = exp_matrix(build_v_max(1))
    for r, c, e in left:
        m = root_group(r, LaurentPoly.monomial(c, e)) @ m
    for r, c, e in right:
        m = m @ root_group(r, LaurentPoly.monomial(c, e))
    assert smith_valuations(m).valuations == (-2, -1, -1, 0, 0, 1, 1, 2)


def test_v_max_is_sigma_fixed_orthogonal_and_factorizes():
    v = build_v_max(1)
    assert v.is_sigma_fixed()
    m = exp_matrix(v)
    assert m.is_orthogonal()
    f = v_max_factors(1)
    assert f[0] @ f[1] == f[1] @ f[0] and f[1] @ f[2] == f[2] @ f[1]
    assert f[0] @ f[1] @ f[2] == m


def test_root_vectors_are_in_so8():
    for r in build("D", 4).roots:
        x = root_vector(r)
        assert x.is_lie_algebra_element()
        assert root_group(r, LaurentPoly.monomial(3, -1)).is_orthogonal()


def test_dimensions():
    assert schubert_dimension_check() == 6
    assert sigma_fixed_dimension() == 7
    assert len(extreme_sigma_fixed_vectors()) == 6
    rep = tangent_space_report()
    assert rep["partial"] and rep["extreme_vectors_independent"] and rep["extreme_vectors_nilpotent"]


def test_j_is_antidiagonal():
    j = J(8)
    assert all(j[i, 7 - i] == LaurentPoly.monomial(1) for i in range(8))
    assert j @ j == LaurentMatrix.identity(8)


def test_json_round_trip():
    m = exp_matrix(build_v_max(Cyclo3(Fraction(1, 2), 3)))
    assert LaurentMatrix.loads(m.dumps()) == m
    assert LaurentMatrix.loads(m.dumps()).dumps() == m.dumps()


@pytest.mark.parametrize("seed", range(5))
def test_random_sigma_fixed_vectors(seed):
    rng = random.Random(seed)
    v1, v2 = random_sigma_fixed_vector(rng), random_sigma_fixed_vector(rng)
    assert v1.is_sigma_fixed() and v2.is_sigma_fixed()
    assert exp_matrix(v1).is_orthogonal()
    assert exp_injectivity_probe(v1, v2) == (v1 != v2)
    assert exp_injectivity_probe(v1, v1) is False


def test_errors():
    with pytest.raises(TrialityError):
        NilpotentVector((((1, 0, 0, 5), Cyclo3(1)),))
    with pytest.raises(TrialityError):
        smith_valuations(LaurentMatrix.zero(8))
    h = NilpotentVector((), cartan=(1, 0, 0, 0))
    with pytest.raises(TrialityError):
        exp_matrix(h)
    with pytest.raises(ZeroDivisionError):
        Cyclo3().inverse()
