"""
Affine root lattices over a generalized Cartan matrix and Coxeter word
arithmetic in the associated Weyl group.

Pairing convention: ``gcm[j][i] = <alpha_j, alpha_i^vee>``, so

    s_i(alpha_j) = alpha_j - gcm[j][i] * alpha_i.

Words act with the rightmost letter first. Group elements are identified
with their integer matrices on simple-root coordinates.

For the rank-two matrix ``C_BC1 = [[2, -4], [-1, 2]]`` the null root is
``delta = alpha_0 + 2 alpha_1``; constant terms of affine roots (the
"+ n" in ``alpha + n``) are multiples of ``delta``.

>>> s1 = CoxeterWord(C_BC1, (1,))
>>> act(s1, AffineRoot((1, 0)))
AffineRoot((1, 4))
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

__all__ = [
    "GCM", "C_BC1", "AffineRoot", "CoxeterWord", "AffineError",
    "reflect", "act", "length", "bruhat_leq", "bruhat_leq_subword",
    "s_range", "case_words", "reflections_with_bound", "null_root",
    "elements_up_to_length",
]

Matrix = tuple[tuple[int, ...], ...]


class AffineError(ValueError):
    """Invalid generalized Cartan matrix, index or word."""


@dataclass(frozen=True)
class GCM:
    """Generalized Cartan matrix with ``entries[j][i] = <alpha_j, alpha_i^vee>``."""
    entries: Matrix

    def __post_init__(self):
        a = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", a)
        n = len(a)
        for i in range(n):
            if len(a[i]) != n:
                raise AffineError("GCM must be square")
            if a[i][i] != 2:
                raise AffineError("GCM diagonal must be 2")
            for j in range(n):
                if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                    raise AffineError("GCM off-diagonal entries must be <= 0 with symmetric zeros")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @cached_property
    def simple_matrices(self) -> tuple[Matrix, ...]:
        n = self.size
        out = []
        for i in range(n):
            # column j is s_i(alpha_j)
            cols = []
            for j in range(n):
                v = [int(k == j) for k in range(n)]
                v[i] -= self.entries[j][i]
                cols.append(v)
            out.append(tuple(tuple(cols[j][r] for j in range(n)) for r in range(n)))
        return tuple(out)

    @cached_property
    def identity(self) -> Matrix:
        n = self.size
        return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


C_BC1 = GCM(((2, -4), (-1, 2)))


@dataclass(frozen=True, order=True)
class AffineRoot:
    """Integer vector in the basis of simple affine roots."""
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    @classmethod
    def simple(cls, n: int, i: int) -> "AffineRoot":
        return cls(int(k == i) for k in range(n))

    def is_positive(self) -> bool:
        return any(self.coeffs) and all(c >= 0 for c in self.coeffs)

    def is_negative(self) -> bool:
        return any(self.coeffs) and all(c <= 0 for c in self.coeffs)

    def __add__(self, other: "AffineRoot") -> "AffineRoot":
        return AffineRoot(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "AffineRoot") -> "AffineRoot":
        return AffineRoot(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(-a for a in self.coeffs)

    def __mul__(self, k: int) -> "AffineRoot":
        return AffineRoot(k * a for a in self.coeffs)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"AffineRoot({self.coeffs})"


def null_root(gcm: GCM) -> AffineRoot:
    """Primitive positive ``delta`` fixed by every simple reflection (affine type)."""
    n = gcm.size
    # delta must satisfy sum_j delta_j gcm[j][i] = 0 for all i
    m = [[Fraction(gcm.entries[j][i]) for j in range(n)] for i in range(n)]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(n):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise AffineError("GCM is not of affine type (null space is not one-dimensional)")
    f = free[0]
    vec = [Fraction(0)] * n
    vec[f] = Fraction(1)
    for r, c in enumerate(pivots):
        vec[c] = -m[r][f]
    den = 1
    for x in vec:
        den = den * x.denominator // _gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    ints = [x // g for x in ints]
    if all(x <= 0 for x in ints):
        ints = [-x for x in ints]
    if not all(x > 0 for x in ints):
        raise AffineError("null vector is not positive")
    return AffineRoot(ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def reflect(gcm: GCM, i: int, beta: AffineRoot) -> AffineRoot:
    """``s_i(beta) = beta - <beta, alpha_i^vee> alpha_i``."""
    if not 0 <= i < gcm.size:
        raise AffineError(f"simple index {i} out of range")
    if len(beta.coeffs) != gcm.size:
        raise AffineError("root dimension does not match the GCM")
    pair = sum(beta.coeffs[j] * gcm.entries[j][i] for j in range(gcm.size))
    out = list(beta.coeffs)
    out[i] -= pair
    return AffineRoot(out)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)) for r in range(n))


def _apply(m: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(m[r][k] * v[k] for k in range(len(v))) for r in range(len(m)))


def _column(m: Matrix, j: int) -> tuple[int, ...]:
    return tuple(row[j] for row in m)


def _is_negative(v: Sequence[int]) -> bool:
    return all(c <= 0 for c in v) and any(v)


@dataclass(frozen=True)
class CoxeterWord:
    """A word in the simple reflections, acting rightmost letter first."""
    gcm: GCM
    letters: tuple[int, ...]
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if not 0 <= x < self.gcm.size:
                raise AffineError(f"letter {x} out of range for a rank-{self.gcm.size} GCM")

    @classmethod
    def identity(cls, gcm: GCM) -> "CoxeterWord":
        return cls(gcm, ())

    @property
    def matrix(self) -> Matrix:
        if "m" not in self._cache:
            m = self.gcm.identity
            for x in self.letters:
                m = _matmul(m, self.gcm.simple_matrices[x])
            self._cache["m"] = m
        return self._cache["m"]

    @property
    def canonical(self) -> "CoxeterWord":
        """Reduced word obtained by repeatedly peeling the smallest right descent."""
        if "c" not in self._cache:
            self._cache["c"] = CoxeterWord(self.gcm, _reduced_letters(self.gcm, self.matrix))
        return self._cache["c"]

    @property
    def length(self) -> int:
        return len(self.canonical.letters)

    def is_reduced(self) -> bool:
        return self.length == len(self.letters)

    def __mul__(self, other: "CoxeterWord") -> "CoxeterWord":
        return CoxeterWord(self.gcm, self.letters + other.letters)

    def inverse(self) -> "CoxeterWord":
        return CoxeterWord(self.gcm, tuple(reversed(self.letters)))

    def same_element(self, other: "CoxeterWord") -> bool:
        return self.matrix == other.matrix

    def __len__(self) -> int:
        return len(self.letters)

    def __repr__(self) -> str:
        return f"CoxeterWord({list(self.letters)})"


@lru_cache(maxsize=65536)
def _reduced_letters(gcm: GCM, m: Matrix) -> tuple[int, ...]:
    out: list[int] = []
    n = gcm.size
    while True:
        for i in range(n):
            if _is_negative(_column(m, i)):
                out.append(i)
                m = _matmul(m, gcm.simple_matrices[i])
                break
        else:
            break
    return tuple(reversed(out))


def act(word: CoxeterWord, beta: AffineRoot) -> AffineRoot:
    """Apply ``word`` to ``beta`` (rightmost letter first)."""
    if len(beta.coeffs) != word.gcm.size:
        raise AffineError("root dimension does not match the GCM")
    return AffineRoot(_apply(word.matrix, beta.coeffs))


def length(word: CoxeterWord) -> int:
    return word.length


def bruhat_leq(v: CoxeterWord, w: CoxeterWord) -> bool:
    """Bruhat order by Deodhar's recursion.

    If ``s`` is a left descent of ``w`` then ``v <= w`` iff
    ``min(v, s v) <= s w``.
    """
    if v.gcm != w.gcm:
        raise AffineError("words over different GCMs")
    return _bruhat(v.gcm, v.matrix, w.matrix)


@lru_cache(maxsize=1 << 18)
def _bruhat(gcm: GCM, v: Matrix, w: Matrix) -> bool:
    if v == w:
        return True
    lw = len(_reduced_letters(gcm, w))
    lv = len(_reduced_letters(gcm, v))
    if lv >= lw:
        return False
    s = _reduced_letters(gcm, w)[0]
    sm = gcm.simple_matrices[s]
    sw = _matmul(sm, w)
    sv = _matmul(sm, v)
    if len(_reduced_letters(gcm, sv)) < lv:
        v = sv
    return _bruhat(gcm, v, sw)


def bruhat_leq_subword(v: CoxeterWord, w: CoxeterWord) -> bool:
    """Brute-force subword property on the canonical word of ``w`` (for testing)."""
    target = v.matrix
    gcm = w.gcm
    reachable = {gcm.identity}
    for x in w.canonical.letters:
        reachable |= {_matmul(m, gcm.simple_matrices[x]) for m in reachable}
    return target in reachable


def s_range(gcm: GCM, i: int, j: int) -> CoxeterWord:
    """``s_{i,j} = s_i s_{i+1} ... s_j`` with ``s_k = s_{k mod 2}``; empty when ``i > j``."""
    if gcm.size != 2:
        raise AffineError("s_{i,j} is defined for rank-two GCMs")
    return CoxeterWord(gcm, tuple(k % 2 for k in range(i, j + 1)))


def case_words(case: str, l: int, gcm: GCM = C_BC1) -> tuple[CoxeterWord, CoxeterWord]:
    """Fixed reduced words ``(w, v)`` of the two PU_3 cases at level ``l``.

    Case A: ``w = s_{1,2l+1}``, ``v = s_{1,2l-1}``.
    Case B: ``w = s_{0,2l}``,   ``v = s_{0,2l-2}``.
    """
    if not isinstance(l, int) or l < 1:
        raise AffineError("l must be a positive integer")
    c = case.upper()
    if c == "A":
        return s_range(gcm, 1, 2 * l + 1), s_range(gcm, 1, 2 * l - 1)
    if c == "B":
        return s_range(gcm, 0, 2 * l), s_range(gcm, 0, 2 * l - 2)
    raise AffineError(f"unknown case {case!r}; expected 'A' or 'B'")


def elements_up_to_length(gcm: GCM, max_len: int) -> list[CoxeterWord]:
    """All group elements of length <= max_len as canonical words, breadth first."""
    seen = {gcm.identity: ()}
    layer = [(gcm.identity, ())]
    for _ in range(max_len):
        nxt = []
        for m, letters in layer:
            for i in range(gcm.size):
                if letters and letters[-1] == i:
                    continue
                m2 = _matmul(m, gcm.simple_matrices[i])
                if m2 not in seen:
                    red = _reduced_letters(gcm, m2)
                    if len(red) == len(letters) + 1:
                        seen[m2] = red
                        nxt.append((m2, letters + (i,)))
        layer = nxt
    return [CoxeterWord(gcm, r) for r in sorted(seen.values(), key=lambda t: (len(t), t))]


def reflections_with_bound(gcm: GCM, L: int) -> list[tuple[AffineRoot, CoxeterWord]]:
    """Positive real roots whose reflection has length <= L, with canonical words.

    Every reflection has a palindromic reduced word ``u s_i u^{-1}``, so it is
    enough to conjugate simple reflections by elements ``u`` of length
    ``<= (L - 1) / 2``.
    """
    if L < 1:
        return []
    found: dict[AffineRoot, CoxeterWord] = {}
    for u in elements_up_to_length(gcm, (L - 1) // 2):
        for i in range(gcm.size):
            beta = act(u, AffineRoot.simple(gcm.size, i))
            if beta.is_negative():
                beta = -beta
            if beta in found:
                continue
            refl = CoxeterWord(gcm, u.letters + (i,) + tuple(reversed(u.letters))).canonical
            if refl.length <= L:
                found[beta] = refl
    return sorted(found.items(), key=lambda kv: (kv[1].length, kv[0].coeffs))
