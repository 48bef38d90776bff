"""Exact arithmetic in a standard graded polynomial ring over a prime field.

A ring is K[x_1, ..., x_n] with deg x_i = 1 and K = Z/p for a prime p
(default 32003).  Monomials are plain tuples of exponents.  A polynomial
stores a dict mapping monomial -> coefficient, coefficients normalised to
[1, p).  Every polynomial is homogeneous: all stored terms share one total
degree.  The zero polynomial is the empty dict; its degree is None.

The monomial order is degree reverse lexicographic (degrevlex) and fixed
for the whole package; every comparison goes through ``grevlex_key``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

__all__ = [
    "PrimeField",
    "Ring",
    "Polynomial",
    "ParseError",
    "is_prime",
    "grevlex_key",
    "monomial_mul",
    "monomial_div",
    "monomial_divides",
    "monomial_lcm",
]

DEFAULT_MODULUS = 32003


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The prime field Z/p.  Elements are plain ints in [0, p)."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: int = DEFAULT_MODULUS):
        if not is_prime(modulus):
            raise ValueError(f"modulus {modulus} is not prime")
        self.modulus = modulus

    def inv(self, a: int) -> int:
        a %= self.modulus
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.modulus - 2, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(("PrimeField", self.modulus))

    def __repr__(self) -> str:
        return f"PrimeField({self.modulus})"


# ---------------------------------------------------------------------------
# Monomials: tuples of exponents
# ---------------------------------------------------------------------------

def grevlex_key(m: tuple) -> tuple:
    """Sort key realising degrevlex: key(u) < key(v) iff u < v in the order."""
    return (sum(m), tuple(-e for e in reversed(m)))


def monomial_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([\^\*\+\-]))")


class Ring:
    """The polynomial ring context: a prime field plus named variables."""

    __slots__ = ("field", "names", "_index")

    def __init__(self, names: Iterable[str], modulus: int = DEFAULT_MODULUS):
        names = tuple(names)
        if not names:
            raise ValueError("ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.field = PrimeField(modulus)
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def modulus(self) -> int:
        return self.field.modulus

    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, {}, None)

    def one(self) -> "Polynomial":
        return Polynomial._raw(self, {(0,) * self.nvars: 1}, 0)

    def variable(self, i: int) -> "Polynomial":
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial._raw(self, {tuple(exps): 1}, 1)

    def monomial(self, exps: Iterable[int], coeff: int = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        c = coeff % self.modulus
        if c == 0:
            return self.zero()
        return Polynomial._raw(self, {exps: c}, sum(exps))

    def linear_form(self, coeffs: Iterable[int]) -> "Polynomial":
        """The form sum(c_i * x_i); must come out nonzero."""
        terms = {}
        coeffs = list(coeffs)
        if len(coeffs) != self.nvars:
            raise ValueError("one coefficient per variable expected")
        for i, c in enumerate(coeffs):
            c %= self.modulus
            if c:
                exps = [0] * self.nvars
                exps[i] = 1
                terms[tuple(exps)] = c
        if not terms:
            raise ValueError("zero linear form")
        return Polynomial._raw(self, terms, 1)

    def from_terms(self, mapping: Mapping[tuple, int]) -> "Polynomial":
        """Build a polynomial, dropping zero coefficients and checking
        homogeneity."""
        p = self.modulus
        terms = {}
        for mon, c in mapping.items():
            mon = tuple(mon)
            if len(mon) != self.nvars or any(e < 0 for e in mon):
                raise ValueError(f"bad monomial {mon}")
            c %= p
            if c:
                terms[mon] = c
        if not terms:
            return self.zero()
        degrees = {sum(mon) for mon in terms}
        if len(degrees) != 1:
            raise ValueError(f"inhomogeneous term map, degrees {sorted(degrees)}")
        return Polynomial._raw(self, terms, degrees.pop())

    def monomials_of_degree(self, d: int) -> list:
        """All exponent tuples of total degree d, descending degrevlex."""
        if d < 0:
            return []
        out = []

        def rec(prefix, left, k):
            if k == self.nvars - 1:
                out.append(prefix + (left,))
                return
            for e in range(left, -1, -1):
                rec(prefix + (e,), left - e, k + 1)

        rec((), d, 0)
        out.sort(key=grevlex_key, reverse=True)
        return out

    def parse(self, text: str) -> "Polynomial":
        """Parse ``3*x1^2*x2 + x2^3 - x1^3`` style input.

        Grammar: signed terms joined by + or -, each term a product of
        integer coefficients and variable powers joined by *.  The result
        must be homogeneous.
        """
        tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                if text[pos:].strip():
                    raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}")
                break
            pos = m.end()
            if m.group(1) is not None:
                tokens.append(("int", int(m.group(1))))
            elif m.group(2) is not None:
                tokens.append(("name", m.group(2)))
            else:
                tokens.append(("op", m.group(3)))
        if not tokens:
            raise ParseError("empty expression")

        terms: dict = {}
        p = self.modulus
        i = 0
        n = len(tokens)

        def term_end_error(what):
            raise ParseError(f"malformed expression: expected {what}")

        while i < n:
            sign = 1
            if tokens[i] == ("op", "+"):
                i += 1
            elif tokens[i] == ("op", "-"):
                sign = -1
                i += 1
            if i >= n:
                term_end_error("a term")
            coeff = sign % p
            exps = [0] * self.nvars
            while True:
                kind, val = tokens[i]
                if kind == "int":
                    coeff = coeff * (val % p) % p
                    i += 1
                elif kind == "name":
                    if val not in self._index:
                        raise ParseError(f"unknown variable {val!r}")
                    e = 1
                    i += 1
                    if i < n and tokens[i] == ("op", "^"):
                        i += 1
                        if i >= n or tokens[i][0] != "int":
                            term_end_error("an exponent after '^'")
                        e = tokens[i][1]
                        i += 1
                    exps[self._index[val]] += e
                else:
                    term_end_error("a coefficient or variable")
                if i < n and tokens[i] == ("op", "*"):
                    i += 1
                    if i >= n:
                        term_end_error("a factor after '*'")
                    continue
                break
            mon = tuple(exps)
            if coeff:
                c = (terms.get(mon, 0) + coeff) % p
                if c:
                    terms[mon] = c
                else:
                    terms.pop(mon, None)
            if i < n and tokens[i][0] != "op":
                term_end_error("'+' or '-' between terms")
        if not terms:
            return self.zero()
        degrees = {sum(mon) for mon in terms}
        if len(degrees) != 1:
            raise ParseError(f"inhomogeneous expression, degrees {sorted(degrees)}")
        return Polynomial._raw(self, terms, degrees.pop())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ring)
            and other.field == self.field
            and other.names == self.names
        )

    def __hash__(self) -> int:
        return hash((self.field, self.names))

    def __repr__(self) -> str:
        return f"Ring({list(self.names)!r}, modulus={self.modulus})"


class Polynomial:
    """A homogeneous polynomial: immutable term map over a Ring."""

    __slots__ = ("ring", "terms", "degree")

    def __init__(self, ring: Ring, mapping: Mapping[tuple, int]):
        poly = ring.from_terms(mapping)
        self.ring = ring
        self.terms = poly.terms
        self.degree = poly.degree

    @classmethod
    def _raw(cls, ring, terms, degree):
        # internal fast path: terms already normalised and homogeneous
        self = object.__new__(cls)
        self.ring = ring
        self.terms = terms
        self.degree = degree
        return self

    def is_zero(self) -> bool:
        return not self.terms

    def lm(self) -> tuple:
        """Leading monomial under degrevlex."""
        return max(self.terms, key=grevlex_key)

    def lc(self) -> int:
        return self.terms[self.lm()]

    def monic(self) -> "Polynomial":
        c = self.lc()
        if c == 1:
            return self
        inv = self.ring.field.inv(c)
        p = self.ring.modulus
        return Polynomial._raw(
            self.ring, {m: c * inv % p for m, c in self.terms.items()}, self.degree
        )

    def scaled(self, c: int) -> "Polynomial":
        p = self.ring.modulus
        c %= p
        if c == 0 or self.is_zero():
            return self.ring.zero()
        return Polynomial._raw(
            self.ring, {m: v * c % p for m, v in self.terms.items()}, self.degree
        )

    def term_mul(self, mon: tuple, coeff: int = 1) -> "Polynomial":
        """Multiply by coeff * x^mon."""
        p = self.ring.modulus
        coeff %= p
        if coeff == 0 or self.is_zero():
            return self.ring.zero()
        shift = sum(mon)
        return Polynomial._raw(
            self.ring,
            {monomial_mul(m, mon): v * coeff % p for m, v in self.terms.items()},
            self.degree + shift,
        )

    def _check_ring(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError(
                f"degree mismatch in homogeneous sum: {self.degree} vs {other.degree}"
            )
        p = self.ring.modulus
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = (terms.get(m, 0) + c) % p
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        if not terms:
            return self.ring.zero()
        return Polynomial._raw(self.ring, terms, self.degree)

    def __neg__(self) -> "Polynomial":
        p = self.ring.modulus
        return Polynomial._raw(
            self.ring, {m: p - c for m, c in self.terms.items()}, self.degree
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        if self.is_zero() or other.is_zero():
            return self.ring.zero()
        p = self.ring.modulus
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                v = (terms.get(m, 0) + c1 * c2) % p
                if v:
                    terms[m] = v
                else:
                    terms.pop(m, None)
        if not terms:
            return self.ring.zero()
        return Polynomial._raw(self.ring, terms, self.degree + other.degree)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def sorted_terms(self) -> list:
        """Terms in descending degrevlex order."""
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        names = self.ring.names
        parts = []
        for mon, c in self.sorted_terms():
            factors = []
            if c != 1 or not any(mon):
                factors.append(str(c))
            for i, e in enumerate(mon):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<{self}>"
