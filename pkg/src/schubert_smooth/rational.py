"""
Exact rational functions whose denominators are products of linear forms.

``RationalExpr`` stores a sparse polynomial numerator with ``Fraction``
coefficients and a multiset of primitive integer linear forms as the
denominator.  Every denominator arising from sums of products of inverse
affine roots has this shape, so the representation is closed under the
operations needed here and equality stays cheap.

>>> a, b = RationalExpr.inverse_of((1, 0)), RationalExpr.inverse_of((0, 1))
>>> a + b == RationalExpr.from_poly(Poly.linear((1, 1))) * a * b
True
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

__all__ = ["Poly", "RationalExpr", "normalize_form"]

Exp = tuple[int, ...]
Form = tuple[int, ...]


class Poly:
    """Sparse multivariate polynomial with rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exp, Fraction] | None = None):
        self.nvars = nvars
        self.terms: dict[Exp, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = Fraction(c)

    @classmethod
    def constant(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> "Poly":
        n = len(coeffs)
        return cls(n, {tuple(int(k == i) for k in range(n)): Fraction(c) for i, c in enumerate(coeffs) if c})

    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self) -> Fraction | None:
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            if not any(e):
                return c
        return None

    def copy(self) -> "Poly":
        p = Poly(self.nvars)
        p.terms = dict(self.terms)
        return p

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _iadd_scaled(self, other: "Poly", k: Fraction) -> None:
        t = self.terms
        for e, c in other.terms.items():
            v = t.get(e, 0) + k * c
            if v:
                t[e] = v
            else:
                t.pop(e, None)

    def __add__(self, other: "Poly") -> "Poly":
        p = self.copy()
        p._iadd_scaled(other, Fraction(1))
        return p

    def __sub__(self, other: "Poly") -> "Poly":
        p = self.copy()
        p._iadd_scaled(other, Fraction(-1))
        return p

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def scale(self, k) -> "Poly":
        k = Fraction(k)
        if not k:
            return Poly(self.nvars)
        return Poly(self.nvars, {e: k * c for e, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict[Exp, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        p = Poly(self.nvars)
        p.terms = out
        return p

    def mul_form(self, form: Form) -> "Poly":
        return self * Poly.linear(form)

    def div_form(self, form: Form) -> "Poly | None":
        """Exact quotient by a linear form, or None if it does not divide."""
        k = next(i for i, c in enumerate(form) if c)
        ck = Fraction(form[k])
        rem = self.copy()
        quot = Poly(self.nvars)
        lin = Poly.linear(form)
        while rem.terms:
            d = max(e[k] for e in rem.terms)
            if d == 0:
                return None
            lead = {e: c for e, c in rem.terms.items() if e[k] == d}
            q_terms = {}
            for e, c in lead.items():
                e2 = list(e)
                e2[k] -= 1
                q_terms[tuple(e2)] = c / ck
            q = Poly(self.nvars, q_terms)
            quot._iadd_scaled(q, Fraction(1))
            rem._iadd_scaled(q * lin, Fraction(-1))
        return quot

    def leading_exponent(self) -> Exp:
        return max(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"a{i}^{p}" if p > 1 else f"a{i}" for i, p in enumerate(e) if p)
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)


def normalize_form(vec: Sequence[int]) -> tuple[Form, int]:
    """Split an integer vector as ``scale * form`` with ``form`` primitive, first nonzero entry positive."""
    vec = tuple(int(x) for x in vec)
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        raise ZeroDivisionError("zero linear form")
    lead = next(x for x in vec if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in vec), g


class RationalExpr:
    """``numerator / prod(denominator forms)`` in reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Counter | None = None, *, reduce: bool = True):
        self.num = num
        self.den: Counter = Counter(den or {})
        if num.is_zero():
            self.den = Counter()
        elif reduce:
            self._reduce()

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "RationalExpr":
        return cls(Poly(nvars))

    @classmethod
    def one(cls, nvars: int) -> "RationalExpr":
        return cls(Poly.constant(nvars, 1))

    @classmethod
    def constant(cls, nvars: int, c) -> "RationalExpr":
        return cls(Poly.constant(nvars, c))

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalExpr":
        return cls(p)

    @classmethod
    def inverse_of(cls, vec: Sequence[int]) -> "RationalExpr":
        """``1 / (sum vec_i a_i)`` for a nonzero integer vector."""
        form, g = normalize_form(vec)
        return cls(Poly.constant(len(vec), Fraction(1, g)), Counter({form: 1}), reduce=False)

    @classmethod
    def inverse_product(cls, vecs: Iterable[Sequence[int]], nvars: int, sign: int = 1) -> "RationalExpr":
        """``sign / prod(vecs)``."""
        den: Counter = Counter()
        scale = Fraction(sign)
        for v in vecs:
            form, g = normalize_form(v)
            den[form] += 1
            scale /= g
        return cls(Poly.constant(nvars, scale), den, reduce=False)

    # -- basics -----------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _reduce(self) -> None:
        for form in list(self.den):
            while self.den[form] > 0:
                q = self.num.div_form(form)
                if q is None:
                    break
                self.num = q
                self.den[form] -= 1
            if self.den[form] == 0:
                del self.den[form]

    def denominator_poly(self) -> Poly:
        p = Poly.constant(self.nvars, 1)
        for form, k in sorted(self.den.items()):
            for _ in range(k):
                p = p.mul_form(form)
        return p

    def _expand_to(self, target: Counter) -> Poly:
        p = self.num
        for form, k in sorted(target.items()):
            for _ in range(k - self.den.get(form, 0)):
                p = p.mul_form(form)
        return p

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "RationalExpr") -> "RationalExpr":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lcm = self.den | other.den
        return RationalExpr(self._expand_to(lcm) + other._expand_to(lcm), lcm)

    def __neg__(self) -> "RationalExpr":
        return RationalExpr(-self.num, self.den, reduce=False)

    def __sub__(self, other: "RationalExpr") -> "RationalExpr":
        return self + (-other)

    def __mul__(self, other) -> "RationalExpr":
        if not isinstance(other, RationalExpr):
            return RationalExpr(self.num.scale(other), self.den, reduce=False)
        if self.is_zero() or other.is_zero():
            return RationalExpr.zero(self.nvars)
        return RationalExpr(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalExpr):
            return NotImplemented
        return self.num * other.denominator_poly() == other.num * self.denominator_poly()

    def __hash__(self):
        raise TypeError("RationalExpr is unhashable")

    def constant_ratio(self, other: "RationalExpr") -> Fraction | None:
        """``c`` with ``self == c * other`` if such a rational constant exists."""
        p = self.num * other.denominator_poly()
        q = other.num * self.denominator_poly()
        if q.is_zero():
            return None
        e = q.leading_exponent()
        c = p.terms.get(e, Fraction(0)) / q.terms[e]
        return c if p == q.scale(c) else None

    def __repr__(self) -> str:
        if not self.den:
            return f"RationalExpr({self.num!r})"
        den = " * ".join(f"({'+'.join(f'{c}*a{i}' for i, c in enumerate(f) if c)})^{k}" for f, k in sorted(self.den.items()))
        return f"RationalExpr(({self.num!r}) / {den})"
