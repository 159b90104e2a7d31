"""
Exact matrix computations for the quasi-minuscule Schubert variety of the
ramified triality.

Arithmetic is over Laurent polynomials in ``u`` with coefficients in the
cyclotomic field Q(zeta), ``zeta`` a primitive cube root of unity.  The
group is SO_8 for the form ``J = antidiag(1, ..., 1)``; root vectors of D4
use the Chevalley matrices (1-based indices, i < j)::

    E_{e_i - e_j} = e_{ij} - e_{9-j, 9-i}
    E_{e_i + e_j} = e_{i, 9-j} - e_{j, 9-i}
    E_{-gamma}    = transpose(E_gamma)

>>> A = exp_matrix(build_v_max(Cyclo3(1)))
>>> smith_valuations(A).valuations
(-2, -1, -1, 0, 0, 1, 1, 2)
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterable, Mapping, Sequence

from .fold import FoldSpec, make_spec
from .rootsys import build, pairing

__all__ = [
    "Cyclo3", "ZETA", "LaurentPoly", "LaurentMatrix", "NilpotentVector", "SmithResult",
    "TrialityError", "D4_SIMPLE_EPS", "root_to_eps", "root_vector", "build_v_max",
    "V_MAX_ROOTS", "sigma_fixed_dimension", "exp_matrix", "root_group", "smith_valuations",
    "minor_valuations", "coset_cocharacter", "mu_tilde", "u_power_diag",
    "schubert_dimension_check", "exp_injectivity_probe", "random_sigma_fixed_vector",
    "extreme_sigma_fixed_vectors", "tangent_space_report", "J",
]


class TrialityError(ValueError):
    """Invalid input to a triality computation."""


# ---------------------------------------------------------------------------
# Q(zeta_3)
# ---------------------------------------------------------------------------

class Cyclo3:
    """``a + b*zeta`` with ``zeta^2 = -1 - zeta``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(self, o):
        o = _c3(o)
        return Cyclo3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, o):
        o = _c3(o)
        return Cyclo3(self.a - o.a, self.b - o.b)

    def __rsub__(self, o):
        return _c3(o) - self

    def __neg__(self):
        return Cyclo3(-self.a, -self.b)

    def __mul__(self, o):
        o = _c3(o)
        a, b, c, d = self.a, self.b, o.a, o.b
        return Cyclo3(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def conjugate(self) -> "Cyclo3":
        return Cyclo3(self.a - self.b, -self.b)

    def inverse(self) -> "Cyclo3":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        c = self.conjugate()
        return Cyclo3(c.a / n, c.b / n)

    def __truediv__(self, o):
        return self * _c3(o).inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = Cyclo3(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            o = Cyclo3(o)
        if not isinstance(o, Cyclo3):
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Cyclo3({self.a}, {self.b})"

    def to_json(self) -> list[str]:
        return [str(self.a), str(self.b)]


def _c3(x) -> Cyclo3:
    return x if isinstance(x, Cyclo3) else Cyclo3(x)


ZETA = Cyclo3(0, 1)


# ---------------------------------------------------------------------------
# Laurent polynomials and matrices
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Finitely supported ``{exponent of u: Cyclo3}``; zero coefficients are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Cyclo3] | None = None):
        self.terms: dict[int, Cyclo3] = {}
        if terms:
            for e, c in terms.items():
                c = _c3(c)
                if c:
                    self.terms[int(e)] = c

    @classmethod
    def monomial(cls, coeff, exp: int = 0) -> "LaurentPoly":
        return cls({exp: _c3(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def valuation(self) -> int | None:
        return min(self.terms) if self.terms else None

    def coefficient(self, exp: int) -> Cyclo3:
        return self.terms.get(exp, Cyclo3())

    def __add__(self, o: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e, Cyclo3()) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        p = LaurentPoly()
        p.terms = out
        return p

    def __neg__(self) -> "LaurentPoly":
        p = LaurentPoly()
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, o: "LaurentPoly") -> "LaurentPoly":
        return self + (-o)

    def __mul__(self, o) -> "LaurentPoly":
        if not isinstance(o, LaurentPoly):
            o = LaurentPoly.monomial(o)
        out: dict[int, Cyclo3] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = e1 + e2
                v = out.get(e, Cyclo3()) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        p = LaurentPoly()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __eq__(self, o) -> bool:
        return isinstance(o, LaurentPoly) and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c.a}+{c.b}z)u^{e}" for e, c in sorted(self.terms.items()))


ZERO = LaurentPoly()
ONE = LaurentPoly.monomial(1)


@dataclass(frozen=True)
class LaurentMatrix:
    """Square matrix of Laurent polynomials."""
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(x if isinstance(x, LaurentPoly) else LaurentPoly.monomial(x) for x in r)
                     for r in self.entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise TrialityError("LaurentMatrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int = 8) -> "LaurentMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int = 8) -> "LaurentMatrix":
        return cls(tuple(tuple(ZERO for _ in range(n)) for _ in range(n)))

    @classmethod
    def diag(cls, polys: Sequence[LaurentPoly]) -> "LaurentMatrix":
        n = len(polys)
        return cls(tuple(tuple(polys[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_sparse(cls, n: int, items: Mapping[tuple[int, int], LaurentPoly]) -> "LaurentMatrix":
        rows = [[ZERO] * n for _ in range(n)]
        for (i, j), p in items.items():
            rows[i][j] = rows[i][j] + p
        return cls(tuple(tuple(r) for r in rows))

    def __getitem__(self, ij) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, o: "LaurentMatrix") -> "LaurentMatrix":
        return LaurentMatrix(tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, o.entries)))

    def __sub__(self, o: "LaurentMatrix") -> "LaurentMatrix":
        return LaurentMatrix(tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, o.entries)))

    def scale(self, c) -> "LaurentMatrix":
        return LaurentMatrix(tuple(tuple(x * c for x in r) for r in self.entries))

    def __matmul__(self, o: "LaurentMatrix") -> "LaurentMatrix":
        n = self.size
        cols = [[o.entries[k][j] for k in range(n)] for j in range(n)]
        out = []
        for i in range(n):
            row = self.entries[i]
            nz = [(k, row[k]) for k in range(n) if not row[k].is_zero()]
            new_row = []
            for j in range(n):
                acc = ZERO
                col = cols[j]
                for k, a in nz:
                    if not col[k].is_zero():
                        acc = acc + a * col[k]
                new_row.append(acc)
            out.append(tuple(new_row))
        return LaurentMatrix(tuple(out))

    def transpose(self) -> "LaurentMatrix":
        n = self.size
        return LaurentMatrix(tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)))

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.entries for x in r)

    def coefficient_matrix(self, exp: int) -> tuple[tuple[Cyclo3, ...], ...]:
        return tuple(tuple(x.coefficient(exp) for x in r) for r in self.entries)

    def is_orthogonal(self) -> bool:
        """``A J A^t J == id``."""
        j = J(self.size)
        return self @ j @ self.transpose() @ j == LaurentMatrix.identity(self.size)

    def is_lie_algebra_element(self) -> bool:
        """``X^t J + J X == 0``."""
        j = J(self.size)
        return (self.transpose() @ j + j @ self).is_zero()

    # -- JSON: entries[i][j] = [[exp, "p/q", "r/s"], ...] -----------------

    def to_json(self) -> dict:
        return {"size": self.size,
                "entries": [[[[e, str(c.a), str(c.b)] for e, c in sorted(x.terms.items())] for x in r]
                            for r in self.entries]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, data) -> "LaurentMatrix":
        if isinstance(data, dict):
            data = data["entries"]
        try:
            rows = []
            for r in data:
                row = []
                for cell in r:
                    terms: dict[int, Cyclo3] = {}
                    for e, p, q in cell:
                        if not isinstance(e, int):
                            raise TrialityError(f"exponent {e!r} is not an integer")
                        terms[e] = terms.get(e, Cyclo3()) + Cyclo3(Fraction(p), Fraction(q))
                    row.append(LaurentPoly(terms))
                rows.append(tuple(row))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise TrialityError(f"malformed LaurentMatrix JSON: {exc}") from None
        return cls(tuple(rows))

    @classmethod
    def loads(cls, text: str) -> "LaurentMatrix":
        return cls.from_json(json.loads(text))


@lru_cache(maxsize=None)
def J(n: int = 8) -> LaurentMatrix:
    return LaurentMatrix(tuple(tuple(ONE if i + j == n - 1 else ZERO for j in range(n)) for i in range(n)))


# ---------------------------------------------------------------------------
# D4 root data in epsilon coordinates
# ---------------------------------------------------------------------------

D4_SIMPLE_EPS = ((1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1), (0, 0, 1, 1))
V_MAX_ROOTS = ((1, 1, 1, 0), (0, 1, 1, 1), (1, 1, 0, 1))


def _triality_spec() -> FoldSpec:
    return make_spec("D", 4, "triality")


def root_to_eps(root: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(root[k] * D4_SIMPLE_EPS[k][i] for k in range(4)) for i in range(4))


def _root_positions(root: Sequence[int]) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """The two (row, col, sign) entries of the Chevalley matrix, 0-based."""
    eps = root_to_eps(root)
    support = [i for i, c in enumerate(eps) if c]
    if len(support) != 2 or any(abs(eps[i]) != 1 for i in support):
        raise TrialityError(f"{tuple(root)} is not a D4 root")
    i, j = support
    si, sj = eps[i], eps[j]
    if si > 0 and sj < 0:        # e_i - e_j
        pos = ((i, j, 1), (7 - j, 7 - i, -1))
    elif si > 0 and sj > 0:      # e_i + e_j
        pos = ((i, 7 - j, 1), (j, 7 - i, -1))
    elif si < 0 and sj > 0:      # -(e_i - e_j): transpose
        pos = ((j, i, 1), (7 - i, 7 - j, -1))
    else:                        # -(e_i + e_j): transpose
        pos = ((7 - j, i, 1), (7 - i, j, -1))
    return pos


def root_vector(root: Sequence[int], coeff: LaurentPoly | None = None) -> LaurentMatrix:
    """Chevalley matrix of the D4 root (simple-root coordinates), times ``coeff``."""
    c = coeff if coeff is not None else ONE
    items = {}
    for r, col, s in _root_positions(root):
        items[(r, col)] = c * s
    return LaurentMatrix.from_sparse(8, items)


def root_group(root: Sequence[int], coeff: LaurentPoly) -> LaurentMatrix:
    """``U_gamma(c) = exp(c E_gamma)``."""
    return _exp_nilpotent(root_vector(root, coeff))


# ---------------------------------------------------------------------------
# sigma-fixed vectors in u^{-1} h
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NilpotentVector:
    """``sum_gamma x_gamma u^{-1} E_gamma + u^{-1} h`` with ``h`` in simple-coroot coordinates."""
    coeffs: tuple[tuple[tuple[int, ...], Cyclo3], ...]
    cartan: tuple[Cyclo3, ...] = field(default=(Cyclo3(), Cyclo3(), Cyclo3(), Cyclo3()))

    def __post_init__(self):
        roots = set(build("D", 4).roots)
        clean = {}
        for r, c in (self.coeffs.items() if isinstance(self.coeffs, Mapping) else self.coeffs):
            r = tuple(r)
            if r not in roots:
                raise TrialityError(f"{r} is not a D4 root")
            c = _c3(c)
            if c:
                clean[r] = clean.get(r, Cyclo3()) + c
        object.__setattr__(self, "coeffs", tuple(sorted((r, c) for r, c in clean.items() if c)))
        cart = tuple(_c3(c) for c in self.cartan)
        if len(cart) != 4:
            raise TrialityError("cartan part needs four coordinates")
        object.__setattr__(self, "cartan", cart)

    def as_dict(self) -> dict[tuple[int, ...], Cyclo3]:
        return dict(self.coeffs)

    def coefficient(self, root: Sequence[int]) -> Cyclo3:
        return self.as_dict().get(tuple(root), Cyclo3())

    def support(self) -> set[tuple[int, ...]]:
        return {r for r, _ in self.coeffs}

    def is_sigma_fixed(self, spec: FoldSpec | None = None) -> bool:
        """``x_{sigma gamma} = zeta^{-1} x_gamma`` for every root and on the Cartan line."""
        spec = spec or _triality_spec()
        zinv = ZETA.inverse()
        d = self.as_dict()
        for r in build("D", 4).roots:
            if d.get(spec.apply_root(r), Cyclo3()) != zinv * d.get(r, Cyclo3()):
                return False
        for i in range(4):
            if self.cartan[spec.node_permutation[i]] != zinv * self.cartan[i]:
                return False
        return True

    def lie_matrix(self) -> LaurentMatrix:
        """The element of ``u^{-1} so_8``; the Cartan part uses ``alpha_i^vee`` as diagonal matrices."""
        m = LaurentMatrix.zero(8)
        for r, c in self.coeffs:
            m = m + root_vector(r, LaurentPoly.monomial(c, -1))
        if any(self.cartan):
            diag = [Cyclo3()] * 8
            for k, c in enumerate(self.cartan):
                eps = D4_SIMPLE_EPS[k]
                for i in range(4):
                    diag[i] = diag[i] + c * eps[i]
                    diag[7 - i] = diag[7 - i] - c * eps[i]
            m = m + LaurentMatrix.diag([LaurentPoly.monomial(x, -1) for x in diag])
        return m


def build_v_max(x) -> NilpotentVector:
    """``x`` on ``a1+a2+a3``, ``zeta^{-1} x`` on ``a2+a3+a4``, ``zeta^{-2} x`` on ``a1+a2+a4``."""
    x = _c3(x)
    z = ZETA.inverse()
    return NilpotentVector(tuple(zip(V_MAX_ROOTS, (x, z * x, z * z * x))))


def sigma_fixed_dimension(spec: FoldSpec | None = None) -> int:
    """Dimension of the space of ``x`` with ``x_{sigma gamma} = zeta^{-1} x_gamma``.

    Each sigma-orbit (of roots, and of nodes for the Cartan part) of size
    ``k`` contributes one dimension when ``zeta^{-k} = 1``, i.e. ``3 | k``.
    """
    spec = spec or _triality_spec()
    seen: set = set()
    dim = 0
    for r in spec.source.roots:
        if r in seen:
            continue
        orb = [r]
        cur = spec.apply_root(r)
        while cur != r:
            orb.append(cur)
            cur = spec.apply_root(cur)
        seen.update(orb)
        dim += len(orb) % 3 == 0
    dim += sum(len(o) % 3 == 0 for o in spec.node_orbits)
    return dim


def random_sigma_fixed_vector(rng: random.Random, positive_only: bool = True, bound: int = 5) -> NilpotentVector:
    """Random sigma-fixed vector on free root orbits (positive roots keep it nilpotent)."""
    spec = _triality_spec()
    zinv = ZETA.inverse()
    roots = build("D", 4).positive_roots if positive_only else build("D", 4).roots
    coeffs = {}
    seen: set = set()
    for r in roots:
        if r in seen or spec.apply_root(r) == r:
            continue
        x = Cyclo3(rng.randint(-bound, bound), rng.randint(-bound, bound))
        cur, c = r, x
        for _ in range(3):
            seen.add(cur)
            coeffs[cur] = c
            cur, c = spec.apply_root(cur), zinv * c
    return NilpotentVector(tuple(coeffs.items()))


def extreme_sigma_fixed_vectors() -> list[NilpotentVector]:
    """One sigma-fixed vector per free root orbit (the six extreme weight lines)."""
    spec = _triality_spec()
    zinv = ZETA.inverse()
    out = []
    seen: set = set()
    for r in build("D", 4).roots:
        if r in seen or spec.apply_root(r) == r:
            continue
        cur, c, coeffs = r, Cyclo3(1), {}
        for _ in range(3):
            seen.add(cur)
            coeffs[cur] = c
            cur, c = spec.apply_root(cur), zinv * c
        out.append(NilpotentVector(tuple(coeffs.items())))
    return out


# ---------------------------------------------------------------------------
# Exponential
# ---------------------------------------------------------------------------

def _exp_nilpotent(x: LaurentMatrix) -> LaurentMatrix:
    n = x.size
    out = LaurentMatrix.identity(n)
    power = LaurentMatrix.identity(n)
    for k in range(1, n + 1):
        power = power @ x
        if power.is_zero():
            return out
        out = out + power.scale(Fraction(1, factorial(k)))
    raise TrialityError("matrix is not nilpotent; exponential is not a finite sum")


def exp_matrix(v: NilpotentVector) -> LaurentMatrix:
    return _exp_nilpotent(v.lie_matrix())


def v_max_factors(x) -> list[LaurentMatrix]:
    """The three commuting root-group factors of ``exp(v_max)``."""
    return [root_group(r, LaurentPoly.monomial(c, -1)) for r, c in build_v_max(x).coeffs]


__all__.append("v_max_factors")


# ---------------------------------------------------------------------------
# Smith valuations via minors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithResult:
    valuations: tuple[int, ...]

    def __iter__(self):
        return iter(self.valuations)


def minor_valuations(m: LaurentMatrix) -> list[int | None]:
    """``min`` valuation over all ``i x i`` minors, ``i = 1..n`` (None if all vanish).

    Laplace expansion along the first row of each block, memoized on
    ``(row set, column set)``.
    """
    n = m.size
    ent = m.entries
    memo: dict[tuple[int, int], LaurentPoly] = {}

    def det(rows: tuple[int, ...], cols_mask: int) -> LaurentPoly:
        key = (rows, cols_mask)
        if key in memo:
            return memo[key]
        if not rows:
            return ONE
        r0, rest = rows[0], rows[1:]
        acc = ZERO
        sign = 1
        for c in range(n):
            if not cols_mask >> c & 1:
                continue
            a = ent[r0][c]
            if not a.is_zero():
                sub = det(rest, cols_mask & ~(1 << c))
                if not sub.is_zero():
                    term = a * sub
                    acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[key] = acc
        return acc

    out: list[int | None] = []
    for k in range(1, n + 1):
        best = None
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                mask = 0
                for c in cols:
                    mask |= 1 << c
                v = det(rows, mask).valuation
                if v is not None and (best is None or v < best):
                    best = v
        out.append(best)
    return out


def smith_valuations(m: LaurentMatrix) -> SmithResult:
    """Exponents ``a_1 <= ... <= a_n`` of the Smith form over ``k[[u]]``."""
    mins = minor_valuations(m)
    if mins[-1] is None:
        raise TrialityError("matrix is singular")
    vals = []
    prev = 0
    for s in mins:
        vals.append(s - prev)
        prev = s
    assert all(a <= b for a, b in zip(vals, vals[1:])), "invariant factors not increasing"
    return SmithResult(tuple(vals))


def coset_cocharacter(m: LaurentMatrix) -> tuple[int, ...]:
    """Cocharacter of the ``GL_n(k[[u]])`` double coset containing ``m``."""
    return smith_valuations(m).valuations


def mu_tilde() -> tuple[int, ...]:
    """``2(a1^v + a3^v + a4^v) + 3 a2^v`` in epsilon coordinates."""
    return root_to_eps((2, 3, 2, 2))


def u_power_diag(eps: Sequence[int]) -> LaurentMatrix:
    """``u^{eps}`` in the diagonal torus ``diag(a1..a4, a4^-1..a1^-1)``."""
    exps = list(eps) + [-e for e in reversed(eps)]
    return LaurentMatrix.diag([LaurentPoly.monomial(1, e) for e in exps])


def schubert_dimension_check(mu_coroot: Sequence[int] = (2, 1, 0, 0)) -> int:
    """``<2 rho, mu>`` for ``mu`` in D4 simple-coroot coordinates."""
    rs = build("D", 4)
    return pairing(rs, rs.two_rho_weight, tuple(mu_coroot))


def exp_injectivity_probe(v1: NilpotentVector, v2: NilpotentVector) -> bool:
    """True when ``exp(v1)`` and ``exp(v2)`` differ, decided by their ``u^{-1}`` coefficients.

    The ``u^{-1}`` coefficient of ``exp(u^{-1} X)`` is ``X``; the root
    coefficients are read back from it and must match the inputs.
    """
    out = []
    for v in (v1, v2):
        c = exp_matrix(v).coefficient_matrix(-1)
        recovered = {}
        for r in build("D", 4).roots:
            (i, j, s), _ = _root_positions(r)
            x = c[i][j] * s
            if x:
                recovered[r] = x
        if recovered != v.as_dict():
            raise TrialityError("u^{-1} coefficients do not recover the input vector")
        out.append(c)
    return out[0] != out[1]


def tangent_space_report() -> dict:
    """Dimension count for the orbit closure at the origin (partial check).

    The six extreme sigma-fixed vectors span a 6-dimensional space of lines
    lying in the nilpotent cone; the ambient sigma-fixed space has dimension 7.
    Equality of the tangent space with the ambient space needs an
    irreducibility argument that is not checked here.
    """
    vecs = extreme_sigma_fixed_vectors()
    supports = [v.support() for v in vecs]
    disjoint = all(a.isdisjoint(b) for a, b in combinations(supports, 2))
    nilpotent = all(exp_matrix(v).is_orthogonal() for v in vecs)
    return {
        "orbit_closure_dim": schubert_dimension_check(),
        "tangent_dim": sigma_fixed_dimension(),
        "extreme_vectors": len(vecs),
        "extreme_vectors_independent": disjoint,
        "extreme_vectors_nilpotent": nilpotent,
        "partial": True,
    }
