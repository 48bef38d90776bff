"""Hilbert series, Krull dimension, and top nonzero degree of graded modules.

A series is an integer-coefficient numerator over (1 - t)^n, where n is the
number of ring variables.  Numerator coefficients are exact Python ints.
The Krull dimension is the pole order at t = 1; a module has finite length
iff the pole order is 0, and then its top nonzero degree (the a-invariant)
is the degree of the cancelled numerator.

Series of quotient rings R/K are computed through the initial ideal of K
and the pivot decomposition of monomial ideals

    HS(R/I) = HS(R/(I + (x_j))) + t * HS(R/(I : x_j)),

with complete intersections of variable powers as the closed-form base
case.  A general module is carried as a subquotient (U + K)/K whose series
is the difference HS(R/K) - HS(R/(U + K)).
"""

from __future__ import annotations

from math import comb

from .groebner import GradedIdeal, MonomialIdeal

__all__ = ["NEG_INF", "HilbertSeries", "hs_monomial", "hs_quotient_ring", "Subquotient"]

NEG_INF = float("-inf")


def _trim(num) -> tuple:
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    return tuple(num)


def _add(a, b) -> tuple:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _sub(a, b) -> tuple:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _shift(a, k: int) -> tuple:
    if not a:
        return ()
    return tuple([0] * k + list(a))


def _mul_one_minus_tk(a, k: int) -> tuple:
    # a(t) * (1 - t^k)
    return _sub(a, _shift(a, k))


def _divide_one_minus_t(a) -> tuple | None:
    """Quotient a(t) / (1 - t), or None when (1 - t) does not divide a."""
    if not a:
        return ()
    if sum(a) != 0:
        return None
    q = []
    acc = 0
    for c in a[:-1]:
        acc += c
        q.append(acc)
    return _trim(q)


class HilbertSeries:
    """numerator / (1 - t)^denominator_exponent, as a power series in t."""

    __slots__ = ("num", "den", "_red")

    def __init__(self, num, den: int):
        if den < 0:
            raise ValueError("denominator exponent must be >= 0")
        self.num = _trim(num)
        self.den = den
        self._red = None

    @property
    def reduced(self) -> tuple[tuple, int]:
        """(numerator, pole order) after cancelling all (1 - t) factors."""
        if self._red is None:
            num, pole = self.num, self.den
            while num and pole > 0:
                q = _divide_one_minus_t(num)
                if q is None:
                    break
                num, pole = q, pole - 1
            self._red = (num, 0 if not num else pole)
        return self._red

    def is_zero(self) -> bool:
        return not self.num

    def hf(self, j: int) -> int:
        """Coefficient of t^j in the power-series expansion."""
        if j < 0:
            return 0
        num, pole = self.reduced
        if pole == 0:
            return num[j] if j < len(num) else 0
        total = 0
        for i, c in enumerate(num):
            if i > j:
                break
            total += c * comb(pole - 1 + j - i, pole - 1)
        return total

    def dimension(self):
        """Pole order at t = 1; None for the zero module (distinct from 0)."""
        if self.is_zero():
            return None
        return self.reduced[1]

    def a_invariant(self):
        """Top degree with nonzero coefficient; only finite at pole order 0."""
        if self.is_zero():
            return NEG_INF
        num, pole = self.reduced
        if pole > 0:
            raise ValueError("infinite a-invariant: series has a pole at t=1")
        return len(num) - 1

    def _check_den(self, other: "HilbertSeries"):
        if self.den != other.den:
            raise ValueError("series over different denominators")

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        self._check_den(other)
        return HilbertSeries(_add(self.num, other.num), self.den)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        self._check_den(other)
        return HilbertSeries(_sub(self.num, other.num), self.den)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HilbertSeries)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"HilbertSeries({list(self.num)}, den={self.den})"


def _pure_power_count(mon: tuple) -> int:
    return sum(1 for e in mon if e)


def _antichain(mons: list[tuple]) -> tuple:
    from .polyring import grevlex_key, monomial_divides

    mons = sorted(set(mons), key=grevlex_key)
    kept: list[tuple] = []
    for m in mons:
        if not any(monomial_divides(k, m) for k in kept):
            kept.append(m)
    return tuple(kept)


def _numerator(gens: tuple, memo: dict) -> tuple:
    """Numerator of HS(R/I) for the monomial ideal with minimal gens ``gens``."""
    cached = memo.get(gens)
    if cached is not None:
        return cached

    if not gens:
        result = (1,)
    elif any(sum(g) == 0 for g in gens):
        result = ()  # unit ideal, zero module
    else:
        mixed = [g for g in gens if _pure_power_count(g) > 1]
        if not mixed:
            # complete intersection of variable powers
            num = (1,)
            for g in gens:
                num = _mul_one_minus_tk(num, sum(g))
            result = num
        else:
            # pivot on a variable occurring in a mixed generator; among
            # those, the one hitting the most generators (progress in both
            # branches needs the pivot inside some non-pure generator)
            nvars = len(gens[0])
            counts = [0] * nvars
            eligible = set()
            for g in gens:
                for v in range(nvars):
                    if g[v]:
                        counts[v] += 1
            for g in mixed:
                for v in range(nvars):
                    if g[v]:
                        eligible.add(v)
            pivot = max(sorted(eligible), key=lambda v: counts[v])
            ev = tuple(1 if v == pivot else 0 for v in range(nvars))
            plus = tuple(sorted([g for g in gens if g[pivot] == 0] + [ev]))
            colon = tuple(
                sorted(
                    _antichain(
                        [
                            tuple(e - 1 if v == pivot and e else e for v, e in enumerate(g))
                            for g in gens
                        ]
                    )
                )
            )
            result = _add(_numerator(plus, memo), _shift(_numerator(colon, memo), 1))

    memo[gens] = result
    return result


def hs_monomial(ideal: MonomialIdeal) -> HilbertSeries:
    """Hilbert series of R/I for a monomial ideal I."""
    gens = tuple(sorted(ideal.gens))
    return HilbertSeries(_numerator(gens, {}), ideal.ring.nvars)


def hs_quotient_ring(ideal: GradedIdeal) -> HilbertSeries:
    """Hilbert series of R/K, through the initial ideal of K.  Cached."""
    if ideal._series is None:
        ideal._series = hs_monomial(ideal.initial_ideal())
    return ideal._series


class Subquotient:
    """The graded module (U + K)/K for ideals U, K of one ring.

    This presentation carries every module in the package: R/K is the case
    U = R, the image of an ideal power is U = I^a, and quotients by linear
    systems arrive by enlarging K.  All numeric invariants are read off the
    series difference HS(R/K) - HS(R/(U + K)).
    """

    __slots__ = ("U", "K", "_sum", "_series")

    def __init__(self, U: GradedIdeal, K: GradedIdeal):
        if U.ring != K.ring:
            raise ValueError("ideals from different rings")
        self.U = U
        self.K = K
        self._sum = None
        self._series = None

    @classmethod
    def cyclic(cls, K: GradedIdeal) -> "Subquotient":
        """The cyclic module R/K."""
        return cls(GradedIdeal.unit(K.ring), K)

    @property
    def ring(self):
        return self.U.ring

    @property
    def sum_ideal(self) -> GradedIdeal:
        if self._sum is None:
            self._sum = self.U + self.K
        return self._sum

    @property
    def series(self) -> HilbertSeries:
        if self._series is None:
            self._series = hs_quotient_ring(self.K) - hs_quotient_ring(self.sum_ideal)
        return self._series

    def hf(self, j: int) -> int:
        return self.series.hf(j)

    def dimension(self):
        return self.series.dimension()

    def a_invariant(self):
        return self.series.a_invariant()

    def is_zero(self) -> bool:
        return self.series.is_zero()

    def __repr__(self) -> str:
        return f"Subquotient(U={self.U!r}, K={self.K!r})"
