"""Exact sparse polynomials in ``x_1..x_n, y_1..y_n``.

Exponent tuples have length ``2n`` (x-block first, then y-block); with
that layout, lexicographic order with ``x_1 > ... > x_n > y_1 > ... > y_n``
is plain tuple comparison.  Elimination rings put auxiliary variables in
front of the tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


@dataclass(frozen=True)
class CoefficientField:
    """Characteristic 0 (rationals) or a prime ``p``."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or p == 1 or (p > 1 and any(p % d == 0 for d in range(2, int(p**0.5) + 1))):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")

    @property
    def modulus(self) -> int:
        return self.characteristic

    def coerce(self, c) -> int | Fraction:
        p = self.characteristic
        if p:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, p) % p
            return int(c) % p
        return Fraction(c)

    def inv(self, c):
        p = self.characteristic
        if p:
            return pow(c, -1, p)
        return 1 / c

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = CoefficientField(0)
GF2 = CoefficientField(2)
GF3 = CoefficientField(3)


def field(char: int | CoefficientField) -> CoefficientField:
    return char if isinstance(char, CoefficientField) else CoefficientField(char)


Monomial = tuple  # tuple[int, ...]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple([u + v for u, v in zip(a, b)])


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple([u - v for u, v in zip(a, b)])


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple([max(u, v) for u, v in zip(a, b)])


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(u and v for u, v in zip(a, b))


def multidegree(m: Monomial, n: int) -> tuple[int, ...]:
    """Vertex multidegree: ``deg x_i = deg y_i = e_i``."""
    off = len(m) - 2 * n
    return tuple(m[off + k] + m[off + n + k] for k in range(n))


class Polynomial:
    """Immutable polynomial: ``{exponent tuple: nonzero coefficient}``."""

    __slots__ = ("terms", "nvars", "field", "_hash", "_lm")

    def __init__(self, terms: Mapping[Monomial, object], nvars: int, fld: CoefficientField = QQ, _clean: bool = False):
        if _clean:
            self.terms = dict(terms)
        else:
            out = {}
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != nvars:
                    raise ValueError(f"monomial {m} has wrong length for {nvars} variables")
                c = fld.coerce(c)
                if c:
                    out[m] = out.get(m, 0) + c
                    if fld.characteristic:
                        out[m] %= fld.characteristic
                    if not out[m]:
                        del out[m]
            self.terms = out
        self.nvars = nvars
        self.field = fld
        self._hash = None
        self._lm = None

    # construction helpers
    @classmethod
    def zero(cls, nvars: int, fld: CoefficientField = QQ) -> "Polynomial":
        return cls({}, nvars, fld, _clean=True)

    @classmethod
    def monomial(cls, m: Monomial, fld: CoefficientField = QQ, coef=1) -> "Polynomial":
        return cls({tuple(m): coef}, len(m), fld)

    @classmethod
    def variable(cls, index: int, nvars: int, fld: CoefficientField = QQ) -> "Polynomial":
        e = [0] * nvars
        e[index] = 1
        return cls({tuple(e): 1}, nvars, fld, _clean=False)

    # queries
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def leading_monomial(self) -> Monomial:
        if self._lm is None:
            self._lm = max(self.terms)
        return self._lm

    @property
    def leading_coefficient(self):
        return self.terms[self.leading_monomial]

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), reverse=True)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        inv = self.field.inv(self.leading_coefficient)
        p = self.field.characteristic
        if p:
            t = {m: c * inv % p for m, c in self.terms.items()}
        else:
            t = {m: c * inv for m, c in self.terms.items()}
        return Polynomial(t, self.nvars, self.field, _clean=True)

    def is_homogeneous_multigraded(self, n: int) -> bool:
        degs = {multidegree(m, n) for m in self.terms}
        return len(degs) <= 1

    def uses_only(self, positions: Iterable[int]) -> bool:
        allowed = set(positions)
        return all(all(e == 0 or k in allowed for k, e in enumerate(m)) for m in self.terms)

    # arithmetic
    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars or self.field != other.field:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        t = dict(self.terms)
        p = self.field.characteristic
        for m, c in other.terms.items():
            v = t.get(m, 0) + c
            if p:
                v %= p
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Polynomial(t, self.nvars, self.field, _clean=True)

    def __neg__(self) -> "Polynomial":
        p = self.field.characteristic
        t = {m: (-c) % p if p else -c for m, c in self.terms.items()}
        return Polynomial(t, self.nvars, self.field, _clean=True)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = self.field.coerce(other)
            p = self.field.characteristic
            t = {m: (v * c) % p if p else v * c for m, v in self.terms.items()}
            return Polynomial({m: v for m, v in t.items() if v}, self.nvars, self.field, _clean=True)
        self._check(other)
        p = self.field.characteristic
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                v = t.get(m, 0) + c1 * c2
                if p:
                    v %= p
                t[m] = v
        return Polynomial({m: v for m, v in t.items() if v}, self.nvars, self.field, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial.monomial((0,) * self.nvars, self.field)
        for _ in range(k):
            out = out * self
        return out

    def mul_monomial(self, m: Monomial, c=1) -> "Polynomial":
        p = self.field.characteristic
        t = {}
        for k, v in self.terms.items():
            v = v * c
            if p:
                v %= p
            if v:
                t[mono_mul(k, m)] = v
        return Polynomial(t, self.nvars, self.field, _clean=True)

    # ring changes
    def to_field(self, fld: CoefficientField) -> "Polynomial":
        return Polynomial(self.terms, self.nvars, fld)

    def extend(self, k: int) -> "Polynomial":
        """Embed into a ring with ``k`` new variables prepended."""
        pad = (0,) * k
        return Polynomial({pad + m: c for m, c in self.terms.items()}, self.nvars + k, self.field, _clean=True)

    def drop(self, k: int) -> "Polynomial":
        """Inverse of :meth:`extend`; the first ``k`` exponents must be zero."""
        t = {}
        for m, c in self.terms.items():
            if any(m[:k]):
                raise ValueError("polynomial involves eliminated variables")
            t[m[k:]] = c
        return Polynomial(t, self.nvars - k, self.field, _clean=True)

    def permute(self, perm: list[int]) -> "Polynomial":
        """Variable substitution: exponent at position ``k`` moves to ``perm[k]``."""
        t = {}
        for m, c in self.terms.items():
            e = [0] * self.nvars
            for k, v in enumerate(m):
                e[perm[k]] = v
            t[tuple(e)] = c
        return Polynomial(t, self.nvars, self.field, _clean=True)

    # comparisons
    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.field == other.field and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self.field, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from .polyio import format_polynomial

        return f"Polynomial({format_polynomial(self)!r}, {self.field})"

    def __str__(self) -> str:
        from .polyio import format_polynomial

        return format_polynomial(self)


@dataclass(frozen=True)
class TermOrder:
    """Lex order on ``x_{v_1} > ... > x_{v_n} > y_{v_1} > ... > y_{v_n}``.

    ``ranking`` lists vertices from largest to smallest; ``None`` is the
    natural order ``1 > 2 > ... > n`` (in the order, not numerically).
    """

    ranking: tuple[int, ...] | None = None

    def vertex_ranking(self, n: int) -> tuple[int, ...]:
        if self.ranking is None:
            return tuple(range(1, n + 1))
        if sorted(self.ranking) != list(range(1, n + 1)):
            raise ValueError("ranking must be a permutation of 1..n")
        return self.ranking

    def rank(self, n: int) -> dict[int, int]:
        """Vertex -> position (0 is the largest)."""
        return {v: k for k, v in enumerate(self.vertex_ranking(n))}

    def to_standard(self, n: int) -> list[int]:
        """Variable permutation taking this order to the natural lex order."""
        r = self.rank(n)
        return [r[v] for v in range(1, n + 1)] + [n + r[v] for v in range(1, n + 1)]

    def from_standard(self, n: int) -> list[int]:
        fwd = self.to_standard(n)
        inv = [0] * len(fwd)
        for k, v in enumerate(fwd):
            inv[v] = k
        return inv

    @property
    def is_natural(self) -> bool:
        return self.ranking is None or list(self.ranking) == sorted(self.ranking)


LEX = TermOrder()


# -- ring-of-a-graph helpers -----------------------------------------------


def x_index(i: int, n: int) -> int:
    return i - 1


def y_index(i: int, n: int) -> int:
    return n + i - 1


def monomial_from(n: int, xs: Iterable[int] = (), ys: Iterable[int] = ()) -> Monomial:
    e = [0] * (2 * n)
    for i in xs:
        e[i - 1] += 1
    for i in ys:
        e[n + i - 1] += 1
    return tuple(e)


def binomial(n: int, plus: Monomial, minus: Monomial, fld: CoefficientField = QQ) -> Polynomial:
    return Polynomial({plus: 1, minus: -1}, 2 * n, fld)
