import itertools

import pytest
from hypothesis import given, strategies as st

from schubert_smooth.affine import (
    C_BC1, GCM, AffineError, AffineRoot, CoxeterWord, act, bruhat_leq, bruhat_leq_subword, case_words,
    elements_up_to_length, null_root, reflect, reflections_with_bound, s_range,
)

A1_AFFINE = GCM(((2, -2), (-2, 2)))
A2_AFFINE = GCM(((2, -1, -1), (-1, 2, -1), (-1, -1, 2)))
GCMS = [C_BC1, A1_AFFINE, A2_AFFINE]


def test_null_roots():
    assert null_root(C_BC1) == AffineRoot((1, 2))
    assert null_root(A1_AFFINE) == AffineRoot((1, 1))
    assert null_root(A2_AFFINE) == AffineRoot((1, 1, 1))
    with pytest.raises(AffineError):
        null_root(GCM(((2, -1), (-1, 2))))


def test_simple_reflections_on_c_bc1():
    a0, a1 = AffineRoot((1, 0)), AffineRoot((0, 1))
    assert reflect(C_BC1, 1, a0) == AffineRoot((1, 4))
    assert reflect(C_BC1, 0, a1) == AffineRoot((1, 1))
    assert reflect(C_BC1, 0, a0) == -a0


def test_elements_up_to_length_rank_two():
    # infinite dihedral group: two elements of each positive length
    els = elements_up_to_length(C_BC1, 6)
    assert len(els) == 1 + 2 * 6
    assert all(w.is_reduced() for w in els)


def test_elements_count_a2_affine():
    # Poincare series of affine A2: (1+q+q^2)(1+q)/(1-q)^2 ... first terms 1,3,6,9,12
    counts = [0] * 5
    for w in elements_up_to_length(A2_AFFINE, 4):
        counts[w.length] += 1
    assert counts == [1, 3, 6, 9, 12]


def test_case_words():
    w, v = case_words("A", 2)
    assert w.letters == (1, 0, 1, 0, 1) and v.letters == (1, 0, 1)
    w, v = case_words("B", 2)
    assert w.letters == (0, 1, 0, 1, 0) and v.letters == (0, 1, 0)
    assert s_range(C_BC1, 0, -1).letters == ()
    with pytest.raises(AffineError):
        case_words("C", 1)
    with pytest.raises(AffineError):
        case_words("A", 0)


def test_reflections_c_bc1_real_roots():
    roots = {r.coeffs for r, _ in reflections_with_bound(C_BC1, 7)}
    assert roots == {(0, 1), (1, 0), (1, 1), (1, 4), (1, 3), (3, 4), (2, 3), (3, 8)}


def test_reflection_words_are_reflections():
    for gcm in GCMS:
        for alpha, word in reflections_with_bound(gcm, 5):
            assert act(word, alpha) == -alpha
            assert word.length % 2 == 1


def test_gcm_validation():
    with pytest.raises(AffineError):
        GCM(((2, 1), (-1, 2)))
    with pytest.raises(AffineError):
        GCM(((2, 0), (-1, 2)))
    with pytest.raises(AffineError):
        CoxeterWord(C_BC1, (2,))


def brute_bruhat(gcm, v, w):
    """Subword property over every reduced expression length filter, by direct enumeration."""
    target = v.matrix
    letters = w.canonical.letters
    for mask in itertools.product((0, 1), repeat=len(letters)):
        sub = CoxeterWord(gcm, tuple(x for x, keep in zip(letters, mask) if keep))
        if sub.matrix == target:
            return True
    return False


@pytest.mark.parametrize("gcm", [C_BC1, A2_AFFINE])
def test_bruhat_matches_subword_enumeration(gcm):
    els = elements_up_to_length(gcm, 4 if gcm is A2_AFFINE else 6)
    for v in els:
        for w in els:
            assert bruhat_leq(v, w) == brute_bruhat(gcm, v, w)
            assert bruhat_leq_subword(v, w) == brute_bruhat(gcm, v, w)


words = st.lists(st.integers(0, 2), max_size=8).map(lambda xs: CoxeterWord(A2_AFFINE, tuple(xs)))


@given(words)
def test_length_parity_and_inverse(w):
    assert w.length % 2 == len(w) % 2
    assert w.inverse().length == w.length
    assert (w * w.inverse()).same_element(CoxeterWord.identity(A2_AFFINE))


@given(words, st.integers(0, 2))
def test_action_preserves_null_root_and_is_linear(w, i):
    d = null_root(A2_AFFINE)
    assert act(w, d) == d
    a = AffineRoot.simple(3, i)
    assert act(w, a + d) == act(w, a) + d


@given(words)
def test_canonical_word_is_reduced_and_equal(w):
    c = w.canonical
    assert c.is_reduced() and c.same_element(w)
    assert bruhat_leq(CoxeterWord.identity(A2_AFFINE), w)
