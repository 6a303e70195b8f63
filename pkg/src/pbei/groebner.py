"""Buchberger's algorithm and the ideal operations built on it.

Everything here works in pure lex order on exponent tuples.  Non-natural
vertex orders are handled by :class:`IdealHandle`, which permutes
variables before and after the computation.
"""

from __future__ import annotations

import heapq
import threading
from typing import Iterable, Sequence

from . import kernels
from .poly import (
    LEX,
    QQ,
    CoefficientField,
    Monomial,
    Polynomial,
    TermOrder,
    mono_coprime,
    mono_div,
    mono_lcm,
)


def _degree_key(m: Monomial):
    return (sum(m), m)


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial, g.leading_monomial
    lcm = mono_lcm(lf, lg)
    # both inputs are monic
    return f.mul_monomial(mono_div(lcm, lf)) - g.mul_monomial(mono_div(lcm, lg))


def reduce(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Full reduction of ``f`` by a list of monic polynomials."""
    data = [(b.leading_monomial, b.terms) for b in basis]
    rem = kernels.reduce_full(f.terms, data, f.field.modulus)
    return Polynomial(rem, f.nvars, f.field, _clean=True)


def interreduce(polys: Iterable[Polynomial]) -> list[Polynomial]:
    """Reduced Gröbner basis from a Gröbner basis: minimize, tail-reduce, make monic."""
    polys = [p.monic() for p in polys if p]
    polys.sort(key=lambda p: _degree_key(p.leading_monomial))
    minimal: list[Polynomial] = []
    for p in polys:
        lm = p.leading_monomial
        if not any(kernels.monomial_divides(q.leading_monomial, lm) for q in minimal):
            minimal = [q for q in minimal if not kernels.monomial_divides(lm, q.leading_monomial)]
            minimal.append(p)
    out = []
    for k, p in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        lm = p.leading_monomial
        tail = Polynomial({m: c for m, c in p.terms.items() if m != lm}, p.nvars, p.field, _clean=True)
        tail = reduce(tail, others)
        out.append(Polynomial({lm: 1, **tail.terms}, p.nvars, p.field, _clean=True))
    out.sort(key=lambda p: p.leading_monomial, reverse=True)
    return out


def buchberger(generators: Iterable[Polynomial]) -> list[Polynomial]:
    """Reduced lex Gröbner basis of the ideal generated by ``generators``.

    Normal selection strategy (smallest lcm by degree, then lex) with the
    coprime criterion and Buchberger's chain criterion.
    """
    G: list[Polynomial] = []
    lms: list[Monomial] = []
    heap: list = []
    live: set[tuple[int, int]] = set()
    for f in generators:
        if not f:
            continue
        h = reduce(f, G) if G else f
        if h:
            _add(G, lms, heap, live, h.monic())
    while heap:
        _, lcm, i, j = heapq.heappop(heap)
        live.discard((i, j))
        if _chain(lms, live, i, j, lcm):
            continue
        h = reduce(_spoly(G[i], G[j]), G)
        if h:
            _add(G, lms, heap, live, h.monic())
    return interreduce(G)


def _chain(lms, live, i, j, lcm) -> bool:
    divides = kernels.monomial_divides
    for k, lk in enumerate(lms):
        if k == i or k == j or not divides(lk, lcm):
            continue
        if (min(i, k), max(i, k)) not in live and (min(j, k), max(j, k)) not in live:
            return True
    return False


def _add(G, lms, heap, live, h):
    k = len(G)
    lh = h.leading_monomial
    G.append(h)
    lms.append(lh)
    for i, li in enumerate(lms[:k]):
        if mono_coprime(li, lh):
            continue
        lcm = mono_lcm(li, lh)
        heapq.heappush(heap, (sum(lcm), lcm, i, k))
        live.add((i, k))


def is_groebner(basis: Sequence[Polynomial]) -> bool:
    basis = [b.monic() for b in basis if b]
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if reduce(_spoly(basis[a], basis[b]), basis):
                return False
    return True


# -- ideals ----------------------------------------------------------------


class IdealHandle:
    """Generators plus a lazily computed reduced Gröbner basis.

    ``order`` ranks the vertex variables; the basis is cached on first use
    (concurrent first calls compute the same basis, the first store wins).
    """

    def __init__(self, generators: Iterable[Polynomial], nvars: int, fld: CoefficientField = QQ, order: TermOrder = LEX):
        gens = []
        for g in generators:
            if g.nvars != nvars:
                raise ValueError(f"generator has {g.nvars} variables, ring has {nvars}")
            if g.field != fld:
                g = g.to_field(fld)
            gens.append(g)
        self.generators = tuple(gens)
        self.nvars = nvars
        self.field = fld
        self.order = order
        self._basis: tuple[Polynomial, ...] | None = None
        self._lock = threading.Lock()

    @property
    def n(self) -> int:
        return self.nvars // 2

    def _to_std(self) -> list[int] | None:
        if self.order.is_natural:
            return None
        return self.order.to_standard(self.n)

    @property
    def basis(self) -> tuple[Polynomial, ...]:
        if self._basis is None:
            perm = self._to_std()
            gens = self.generators if perm is None else [g.permute(perm) for g in self.generators]
            gb = buchberger(gens)
            if perm is not None:
                back = self.order.from_standard(self.n)
                gb = [g.permute(back) for g in gb]
            with self._lock:
                if self._basis is None:
                    self._basis = tuple(gb)
        return self._basis

    def _compatible(self, other: "IdealHandle"):
        if (self.nvars, self.field, self.order) != (other.nvars, other.field, other.order):
            raise ValueError("ideals live in different rings")

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.nvars != self.nvars:
            raise ValueError("polynomial and ideal live in different rings")
        f = f.to_field(self.field) if f.field != self.field else f
        perm = self._to_std()
        if perm is None:
            return reduce(f, self.basis)
        std_basis = [b.permute(perm) for b in self.basis]
        return reduce(f.permute(perm), std_basis).permute(self.order.from_standard(self.n))

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def contains_ideal(self, other: "IdealHandle") -> bool:
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IdealHandle):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def __add__(self, other: "IdealHandle") -> "IdealHandle":
        self._compatible(other)
        return IdealHandle(self.generators + other.generators, self.nvars, self.field, self.order)

    def with_generators(self, extra: Iterable[Polynomial]) -> "IdealHandle":
        return IdealHandle(list(self.generators) + list(extra), self.nvars, self.field, self.order)

    def to_field(self, fld: CoefficientField) -> "IdealHandle":
        return IdealHandle(self.generators, self.nvars, fld, self.order)

    def __repr__(self) -> str:
        return f"IdealHandle({len(self.generators)} generators, {self.nvars} vars, {self.field})"


def normal_form(f: Polynomial, ideal: IdealHandle) -> Polynomial:
    return ideal.normal_form(f)


def ideal_equal(a: IdealHandle, b: IdealHandle) -> bool:
    a._compatible(b)
    return set(a.basis) == set(b.basis)


def _eliminate(polys: Iterable[Polynomial], k: int) -> list[Polynomial]:
    """Reduced GB of the elimination ideal dropping the first ``k`` variables."""
    gb = buchberger(polys)
    return [g.drop(k) for g in gb if not any(any(m[:k]) for m in g.terms)]


def _aux_var(nvars: int, fld: CoefficientField) -> Polynomial:
    e = [0] * (nvars + 1)
    e[0] = 1
    return Polynomial({tuple(e): 1}, nvars + 1, fld, _clean=True)


def _std_gens(I: IdealHandle) -> list[Polynomial]:
    perm = I._to_std()
    return list(I.generators) if perm is None else [g.permute(perm) for g in I.generators]


def _from_std(I: IdealHandle, polys: list[Polynomial]) -> IdealHandle:
    perm = I._to_std()
    if perm is not None:
        back = I.order.from_standard(I.n)
        polys = [p.permute(back) for p in polys]
    out = IdealHandle(polys, I.nvars, I.field, I.order)
    # an elimination basis is already reduced for the (permuted) lex order
    out._basis = tuple(polys)
    return out


def intersect(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """``I ∩ J`` by eliminating ``t`` from ``t·I + (1 - t)·J``."""
    I._compatible(J)
    t = _aux_var(I.nvars, I.field)
    one = Polynomial.monomial((0,) * (I.nvars + 1), I.field)
    gens = [t * f.extend(1) for f in _std_gens(I)]
    gens += [(one - t) * g.extend(1) for g in _std_gens(J)]
    return _from_std(I, _eliminate(gens, 1))


def intersect_all(ideals: Sequence[IdealHandle]) -> IdealHandle:
    if not ideals:
        raise ValueError("empty intersection")
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def quotient_by(I: IdealHandle, f: Polynomial) -> IdealHandle:
    """Ideal quotient ``I : f`` via ``(I ∩ <f>) / f``."""
    inter = intersect(I, IdealHandle([f], I.nvars, I.field, I.order))
    quots = []
    for g in inter.basis:
        q, r = divide_exact(g, f)
        if r:
            raise ArithmeticError("intersection element not divisible by f")
        quots.append(q)
    return IdealHandle(quots, I.nvars, I.field, I.order)


def divide_exact(g: Polynomial, f: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Multivariate division of ``g`` by a single polynomial ``f`` (natural lex)."""
    fl = f.leading_monomial
    inv = f.field.inv(f.leading_coefficient)
    q: dict = {}
    rem = Polynomial.zero(g.nvars, g.field)
    p = g
    while p:
        lm = p.leading_monomial
        lc = p.terms[lm]
        if kernels.monomial_divides(fl, lm):
            m = mono_div(lm, fl)
            c = lc * inv
            if f.field.characteristic:
                c %= f.field.characteristic
            q[m] = c
            p = p - f.mul_monomial(m, c)
        else:
            lead = Polynomial({lm: lc}, g.nvars, g.field, _clean=True)
            rem = rem + lead
            p = p - lead
    return Polynomial(q, g.nvars, g.field, _clean=True), rem


def colon(I: IdealHandle, m: Monomial) -> IdealHandle:
    return quotient_by(I, Polynomial.monomial(m, I.field))


def saturate(I: IdealHandle, m: Monomial) -> IdealHandle:
    """``I : m^∞`` by adjoining ``u·m - 1`` and eliminating ``u``."""
    perm = I._to_std()
    mpoly = Polynomial.monomial(m, I.field)
    if perm is not None:
        mpoly = mpoly.permute(perm)
    u = _aux_var(I.nvars, I.field)
    one = Polynomial.monomial((0,) * (I.nvars + 1), I.field)
    gens = [f.extend(1) for f in _std_gens(I)] + [u * mpoly.extend(1) - one]
    return _from_std(I, _eliminate(gens, 1))


def saturate_by_colon(I: IdealHandle, m: Monomial, max_steps: int = 64) -> IdealHandle:
    """``I : m^∞`` as the stable value of iterated colons ``I : m``."""
    cur = I
    for _ in range(max_steps):
        nxt = colon(cur, m)
        if ideal_equal(nxt, cur):
            return cur
        cur = nxt
    raise RuntimeError("saturation did not stabilize")
