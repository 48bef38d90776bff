"""Buchberger's algorithm, normal forms, and minimal generating sets.

Everything is specialised to homogeneous inputs under the fixed degrevlex
order.  S-pairs are processed by increasing lcm degree with the product and
chain criteria, which keeps runs deterministic.  Reduced bases are
canonical (monic, tail-reduced, sorted by leading monomial), so two ideals
are equal iff their reduced bases are equal.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .polyring import (
    Polynomial,
    Ring,
    grevlex_key,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

__all__ = [
    "normal_form",
    "s_polynomial",
    "buchberger",
    "minimalize",
    "initial_ideal",
    "MonomialIdeal",
    "GradedIdeal",
]


def _heap_key(mon: tuple) -> tuple:
    # min-heap pops the degrevlex-largest monomial first
    return (-sum(mon), tuple(reversed(mon)))


def normal_form(f: Polynomial, reducers: Sequence[Polynomial]) -> Polynomial:
    """Full remainder of f under division by ``reducers``.

    No term of the result is divisible by any reducer's leading monomial.
    Against a reduced Groebner basis the remainder is zero iff f lies in
    the ideal.
    """
    if f.is_zero() or not reducers:
        return f
    ring = f.ring
    p = ring.modulus
    info = [(g.lm(), ring.field.inv(g.lc()), g.terms) for g in reducers if not g.is_zero()]
    if not info:
        return f

    work = dict(f.terms)
    heap = [_heap_key(m) for m in work]
    heapq.heapify(heap)
    remainder: dict = {}

    while heap:
        key = heapq.heappop(heap)
        mon = tuple(reversed(key[1]))
        c = work.pop(mon, 0)
        if not c:
            continue
        for lm, inv_lc, terms in info:
            if monomial_divides(lm, mon):
                quot = monomial_div(mon, lm)
                factor = c * inv_lc % p
                for m2, c2 in terms.items():
                    if m2 == lm:
                        continue
                    mm = monomial_mul(m2, quot)
                    v = (work.get(mm, 0) - factor * c2) % p
                    if v:
                        work[mm] = v
                        heapq.heappush(heap, _heap_key(mm))
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[mon] = c

    if not remainder:
        return ring.zero()
    return Polynomial._raw(ring, remainder, f.degree)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.lm(), g.lm()
    lcm = monomial_lcm(lf, lg)
    ring = f.ring
    cf = ring.field.inv(f.lc())
    cg = ring.field.inv(g.lc())
    return f.term_mul(monomial_div(lcm, lf), cf) - g.term_mul(monomial_div(lcm, lg), cg)


def _canonical_sort_key(g: Polynomial) -> tuple:
    return (g.degree, grevlex_key(g.lm()), sorted(g.terms.items()))


def _interreduce(basis: list[Polynomial]) -> list[Polynomial]:
    """Turn a Groebner basis into the reduced one: minimal leading
    monomials, monic, tails fully reduced, sorted ascending."""
    basis = [g for g in basis if not g.is_zero()]
    basis.sort(key=lambda g: grevlex_key(g.lm()))
    kept: list[Polynomial] = []
    for g in basis:
        lm = g.lm()
        if any(monomial_divides(h.lm(), lm) for h in kept):
            continue
        kept.append(g)
    reduced = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        reduced.append(normal_form(g, others).monic())
    reduced.sort(key=lambda g: grevlex_key(g.lm()))
    return reduced


def buchberger(gens: Iterable[Polynomial]) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    seed = sorted((g for g in gens if not g.is_zero()), key=_canonical_sort_key)
    basis: list[Polynomial] = []
    for g in seed:
        r = normal_form(g, basis)
        if not r.is_zero():
            basis.append(r.monic())
    if len(basis) <= 1:
        return _interreduce(basis)

    lms = [g.lm() for g in basis]
    pending: set[tuple[int, int]] = set()
    heap: list = []

    def push_pairs(j):
        for i in range(j):
            lcm = monomial_lcm(lms[i], lms[j])
            pending.add((i, j))
            heapq.heappush(heap, (sum(lcm), grevlex_key(lcm), i, j))

    for j in range(len(basis)):
        push_pairs(j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        li, lj = lms[i], lms[j]
        lcm = monomial_lcm(li, lj)
        # product criterion: coprime leading monomials
        if lcm == monomial_mul(li, lj):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if monomial_divides(lms[k], lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        r = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if r.is_zero():
            continue
        basis.append(r.monic())
        lms.append(r.lm())
        push_pairs(len(basis) - 1)

    return _interreduce(basis)


def minimalize(gens: Iterable[Polynomial]) -> tuple[list[Polynomial], list[int]]:
    """A minimal generating subset and its sorted degree multiset.

    Generators are taken in ascending degree; one is dropped iff it already
    lies in the ideal of those accepted before it, which for homogeneous
    inputs yields a minimal system.
    """
    pool = sorted((g for g in gens if not g.is_zero()), key=_canonical_sort_key)
    kept: list[Polynomial] = []
    kept_gb: list[Polynomial] = []
    for g in pool:
        if kept and normal_form(g, kept_gb).is_zero():
            continue
        kept.append(g)
        kept_gb = buchberger(kept)
    return kept, sorted(g.degree for g in kept)


class MonomialIdeal:
    """Antichain of monomials under divisibility: the minimal generators."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring: Ring, monomials: Iterable[tuple]):
        mons = sorted(set(tuple(m) for m in monomials), key=grevlex_key)
        kept: list[tuple] = []
        for m in mons:
            if not any(monomial_divides(k, m) for k in kept):
                kept.append(m)
        self.ring = ring
        self.gens = tuple(kept)

    def contains(self, mon: tuple) -> bool:
        return any(monomial_divides(g, mon) for g in self.gens)

    def is_zero_ideal(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and sum(self.gens[0]) == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.ring == other.ring
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.gens))

    def __repr__(self) -> str:
        names = self.ring.names
        mons = []
        for g in self.gens:
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(g)
                if e
            ]
            mons.append("*".join(factors) if factors else "1")
        return f"MonomialIdeal({', '.join(mons)})"


def initial_ideal(gb: Sequence[Polynomial], ring: Ring) -> MonomialIdeal:
    """Leading monomials of a reduced Groebner basis, as an antichain."""
    return MonomialIdeal(ring, [g.lm() for g in gb if not g.is_zero()])


class GradedIdeal:
    """A graded ideal given by homogeneous generators.

    Immutable after construction.  The reduced Groebner basis, initial
    ideal, minimal generators, Hilbert series, and powers are computed
    lazily and cached on the instance; since all of those are canonical,
    recomputation races would be benign.
    """

    __slots__ = ("ring", "generators", "_gb", "_initial", "_minimal", "_series", "_powers")

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if g.is_zero():
                continue
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = None
        self._initial = None
        self._minimal = None
        self._series = None
        self._powers: dict = {}

    @classmethod
    def zero(cls, ring: Ring) -> "GradedIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: Ring) -> "GradedIdeal":
        return cls(ring, (ring.one(),))

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        # homogeneous generators: the ideal is all of R iff a generator is
        # a nonzero constant
        return any(g.degree == 0 for g in self.generators)

    def groebner_basis(self) -> list[Polynomial]:
        if self._gb is None:
            self._gb = buchberger(self.generators)
        return self._gb

    def initial_ideal(self) -> MonomialIdeal:
        if self._initial is None:
            self._initial = initial_ideal(self.groebner_basis(), self.ring)
        return self._initial

    def minimal_generators(self) -> list[Polynomial]:
        if self._minimal is None:
            self._minimal = minimalize(self.generators)
        return list(self._minimal[0])

    def min_degrees(self) -> tuple[int, ...]:
        """Sorted degree multiset of a minimal generating set."""
        if self._minimal is None:
            self._minimal = minimalize(self.generators)
        return tuple(self._minimal[1])

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self.groebner_basis()).is_zero()

    def __add__(self, other: "GradedIdeal") -> "GradedIdeal":
        if self.ring != other.ring:
            raise ValueError("ideals from different rings")
        return GradedIdeal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "GradedIdeal") -> "GradedIdeal":
        if self.ring != other.ring:
            raise ValueError("ideals from different rings")
        if self.is_unit():
            return other
        if other.is_unit():
            return self
        if self.is_zero_ideal() or other.is_zero_ideal():
            return GradedIdeal.zero(self.ring)
        prods = [f * g for f in self.generators for g in other.generators]
        kept, _ = minimalize(prods)
        return GradedIdeal(self.ring, kept)

    def __pow__(self, k: int) -> "GradedIdeal":
        if k <= 0:
            return GradedIdeal.unit(self.ring)
        if k == 1:
            return self
        cached = self._powers.get(k)
        if cached is None:
            cached = (self ** (k - 1)) * self
            self._powers[k] = cached
        return cached

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedIdeal) or self.ring != other.ring:
            return NotImplemented if not isinstance(other, GradedIdeal) else False
        return self.groebner_basis() == other.groebner_basis()

    def __repr__(self) -> str:
        inner = ", ".join(str(g) for g in self.generators) or "0"
        return f"GradedIdeal({inner})"
