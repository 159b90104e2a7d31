"""
Kumar's smoothness criterion for Schubert varieties in Kac-Moody flag varieties.

For a reduced word ``w = s_{a_1} ... s_{a_n}`` and ``v <= w``::

    e_v X(w) = sum over subwords (t_1, ..., t_n) with t_1 ... t_n = v
               of prod_i 1 / (t_1 ... t_i)(alpha_{a_i})

where each ``t_i`` is either 1 or ``s_{a_i}``.  The Schubert variety of
``w`` is smooth at ``v`` iff this equals

    (-1)^{l(v)} prod_{alpha > 0, s_alpha v <= w} 1 / alpha.

>>> from schubert_smooth.affine import case_words
>>> w, v = case_words("B", 1)
>>> smooth_at(w, v), smoothness_ratio(w, v)
(True, Fraction(1, 1))
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterator

from .affine import (
    C_BC1, AffineError, AffineRoot, CoxeterWord, GCM, _bruhat, _matmul,
    act, bruhat_leq, null_root, reflections_with_bound, s_range,
)
from .rational import RationalExpr

__all__ = [
    "e_v_X", "e_v_X_raw", "rhs_product", "smooth_at", "smoothness_ratio",
    "telescope_check", "grouped_closed_form", "pair_sum_identity",
    "TermLimitError", "max_terms",
]

DEFAULT_MAX_TERMS = 1 << 26


class TermLimitError(RuntimeError):
    """Subexpression enumeration exceeded the configured cap."""


def max_terms() -> int:
    raw = os.environ.get("SCHUBERT_MAX_TERMS")
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        val = int(raw)
    except ValueError:
        raise ValueError(f"SCHUBERT_MAX_TERMS must be an integer, got {raw!r}") from None
    if val < 1:
        raise ValueError("SCHUBERT_MAX_TERMS must be positive")
    return val


def _check_pair(w: CoxeterWord, v: CoxeterWord) -> GCM:
    if w.gcm != v.gcm:
        raise AffineError("w and v use different GCMs")
    if not w.is_reduced():
        raise AffineError(f"{w} is not a reduced word")
    return w.gcm


def _leaves(w: CoxeterWord, v: CoxeterWord, prune: bool) -> Iterator[list[tuple[int, ...]]]:
    """Yield, for each subword with product v, the list of denominator roots."""
    gcm = w.gcm
    n = gcm.size
    letters = w.letters
    target = v.matrix
    cap = max_terms()
    # suffix elements: product of letters[i:], for the Bruhat feasibility test
    suffix = [gcm.identity] * (len(letters) + 1)
    for i in range(len(letters) - 1, -1, -1):
        suffix[i] = _matmul(gcm.simple_matrices[letters[i]], suffix[i + 1])
    visited = 0

    def rec(i: int, prefix, prefix_inv, roots: list):
        nonlocal visited
        visited += 1
        if visited > cap:
            raise TermLimitError(f"more than {cap} subexpression nodes; raise SCHUBERT_MAX_TERMS")
        if i == len(letters):
            if prefix == target:
                yield list(roots)
            return
        a = letters[i]
        s = gcm.simple_matrices[a]
        for take in (False, True):
            p = _matmul(prefix, s) if take else prefix
            pinv = _matmul(s, prefix_inv) if take else prefix_inv
            if prune and not _bruhat(gcm, _matmul(pinv, target), suffix[i + 1]):
                continue
            col = tuple(p[r][a] for r in range(n))
            assert any(col), "zero root in a denominator"
            roots.append(col)
            yield from rec(i + 1, p, pinv, roots)
            roots.pop()

    yield from rec(0, gcm.identity, gcm.identity, [])


def _sum_leaves(w: CoxeterWord, v: CoxeterWord, prune: bool) -> RationalExpr:
    n = w.gcm.size
    total = RationalExpr.zero(n)
    for roots in _leaves(w, v, prune):
        total = total + RationalExpr.inverse_product(roots, n)
    return total


def e_v_X(w: CoxeterWord, v: CoxeterWord) -> RationalExpr:
    """Subexpression sum with Bruhat-feasibility pruning; zero unless ``v <= w``."""
    _check_pair(w, v)
    if not bruhat_leq(v, w):
        return RationalExpr.zero(w.gcm.size)
    return _sum_leaves(w, v, prune=True)


def e_v_X_raw(w: CoxeterWord, v: CoxeterWord) -> RationalExpr:
    """Same sum over all ``2^n`` subwords with no pruning (reference implementation)."""
    _check_pair(w, v)
    return _sum_leaves(w, v, prune=False)


def rhs_product(w: CoxeterWord, v: CoxeterWord) -> RationalExpr:
    """``(-1)^{l(v)} prod 1/alpha`` over positive real roots with ``s_alpha v <= w``.

    ``s_alpha v <= w`` forces ``l(s_alpha) <= l(v) + l(w)``, which bounds the
    reflections to enumerate.
    """
    gcm = _check_pair(w, v)
    if not bruhat_leq(v, w):
        raise AffineError(f"{v} is not below {w} in Bruhat order")
    roots = []
    for alpha, refl in reflections_with_bound(gcm, v.length + w.length):
        if bruhat_leq(refl * v, w):
            roots.append(alpha.coeffs)
    sign = -1 if v.length % 2 else 1
    return RationalExpr.inverse_product(roots, gcm.size, sign)


def smooth_at(w: CoxeterWord, v: CoxeterWord) -> bool:
    return e_v_X(w, v) == rhs_product(w, v)


def smoothness_ratio(w: CoxeterWord, v: CoxeterWord) -> Fraction | None:
    """The constant ``c`` with ``e_v X(w) = c * rhs``, or None if not constant."""
    return e_v_X(w, v).constant_ratio(rhs_product(w, v))


def telescope_check(n: int, l: int, alpha: AffineRoot, beta: AffineRoot, gcm: GCM = C_BC1) -> bool:
    """``sum_{i<l} 1/((alpha - n i d)(beta + n i d)) == l / (alpha (beta + n (l-1) d))``."""
    d = null_root(gcm)
    if alpha + beta != n * d:
        raise ValueError("alpha + beta must equal n * delta")
    size = gcm.size
    lhs = RationalExpr.zero(size)
    for i in range(l):
        lhs = lhs + RationalExpr.inverse_product([(alpha - (n * i) * d).coeffs, (beta + (n * i) * d).coeffs], size)
    rhs = RationalExpr.inverse_product([alpha.coeffs, (beta + (n * (l - 1)) * d).coeffs], size) * l
    return lhs == rhs


def _simple(i: int) -> AffineRoot:
    return AffineRoot.simple(2, i % 2)


def grouped_closed_form(case: str, l: int, gcm: GCM = C_BC1) -> tuple[RationalExpr, RationalExpr, RationalExpr]:
    """(prefix product, summed factor, telescoped factor) for the two PU_3 cases.

    Case A: prefix ``prod_{i=1}^{2l-1} 1/s_{1,i}(alpha_i)``, factor
    ``A_l = sum_{i=0}^{2l-1} 1/(s_{1,i}(alpha_0) s_{1,i}(alpha_1))`` and its
    telescoped value ``4l / (alpha_0 s_{1,2l-1}(alpha_0))``.
    Case B: prefix ``prod_{i=0}^{2l-2} 1/s_{0,i}(alpha_i)``, factor
    ``B_l = sum_{i=0}^{2l-1} 1/(s_{0,i-1}(alpha_0) s_{0,i-1}(alpha_1))`` and
    ``l / (alpha_1 s_{0,2l-2}(alpha_1))``.  Empty ranges are the identity.
    """
    a0, a1 = _simple(0), _simple(1)
    c = case.upper()
    if c == "A":
        prefix = [act(s_range(gcm, 1, i), _simple(i)).coeffs for i in range(1, 2 * l)]
        terms = [(act(s_range(gcm, 1, i), a0).coeffs, act(s_range(gcm, 1, i), a1).coeffs) for i in range(0, 2 * l)]
        closed = RationalExpr.inverse_product([a0.coeffs, act(s_range(gcm, 1, 2 * l - 1), a0).coeffs], 2) * (4 * l)
    elif c == "B":
        prefix = [act(s_range(gcm, 0, i), _simple(i)).coeffs for i in range(0, 2 * l - 1)]
        terms = [(act(s_range(gcm, 0, i - 1), a0).coeffs, act(s_range(gcm, 0, i - 1), a1).coeffs) for i in range(0, 2 * l)]
        closed = RationalExpr.inverse_product([a1.coeffs, act(s_range(gcm, 0, 2 * l - 2), a1).coeffs], 2) * l
    else:
        raise AffineError(f"unknown case {case!r}")
    summed = RationalExpr.zero(2)
    for t in terms:
        summed = summed + RationalExpr.inverse_product(t, 2)
    return RationalExpr.inverse_product(prefix, 2), summed, closed


def pair_sum_identity(case: str, i: int, gcm: GCM = C_BC1) -> bool:
    """Consecutive-pair identity used to telescope ``A_l`` / ``B_l``."""
    a0, a1 = _simple(0), _simple(1)
    inv = lambda *rs: RationalExpr.inverse_product([r.coeffs for r in rs], 2)  # noqa: E731
    c = case.upper()
    if c == "A":
        x, y = s_range(gcm, 1, 2 * i), s_range(gcm, 1, 2 * i + 1)
        lhs = inv(act(x, a0), act(x, a1)) + inv(act(y, a0), act(y, a1))
        rhs = inv(act(x, a0), act(y, a0)) * 4
    elif c == "B":
        x, y = s_range(gcm, 0, 2 * i - 1), s_range(gcm, 0, 2 * i)
        lhs = inv(act(x, a0), act(x, a1)) + inv(act(y, a0), act(y, a1))
        rhs = inv(act(x, a1), act(y, a1))
    else:
        raise AffineError(f"unknown case {case!r}")
    return lhs == rhs

