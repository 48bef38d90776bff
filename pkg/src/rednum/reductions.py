"""Reduction numbers of graded modules by sampled systems of linear forms.

An ideal J generated by linear forms reduces a module M when (JM)_n = M_n
for all large n, equivalently when M/JM has finite length.  The reduction
number r_J(M) is the top degree where JM and M still differ, i.e. the
a-invariant of M/JM, and r(M) minimises r_J over minimal reductions J.

Over a big prime field a generic system of dim(M) linear forms is a
minimal reduction, so r(M) is estimated as the minimum of r_J over a few
independently seeded generic systems; fewer forms can never reduce and
more are never minimal.  Every draw flows through one deterministic seed
splitter, so each reported value is replayable from its witness seed.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from . import linalg
from .groebner import GradedIdeal
from .hilbert import NEG_INF, Subquotient
from .polyring import Polynomial, Ring

__all__ = [
    "DEFAULT_TRIALS",
    "RESAMPLE_CAP",
    "GenericityError",
    "LinearSystem",
    "ReductionResult",
    "derive_seed",
    "random_linear_system",
    "multipower",
    "quotient_by_linear_system",
    "is_reduction",
    "r_J",
    "reduction_number",
    "r_power",
    "r_quotient",
]

DEFAULT_TRIALS = 5
RESAMPLE_CAP = 20


class GenericityError(RuntimeError):
    """No sampled linear system was a reduction within the resample cap."""


def derive_seed(seed: int, *labels) -> int:
    """Deterministic 63-bit child seed for a labelled subcomputation."""
    msg = ":".join([str(seed), *(str(x) for x in labels)]).encode()
    return int.from_bytes(hashlib.sha256(msg).digest()[:8], "big") >> 1


@dataclass(frozen=True)
class LinearSystem:
    """Independent linear forms drawn from one seed."""

    forms: tuple[Polynomial, ...]
    seed: int

    @property
    def size(self) -> int:
        return len(self.forms)

    def as_ideal(self) -> GradedIdeal:
        ring = self.forms[0].ring if self.forms else None
        if ring is None:
            raise ValueError("empty system has no ring context")
        return GradedIdeal(ring, self.forms)


def random_linear_system(ring: Ring, count: int, seed: int) -> LinearSystem:
    """``count`` linearly independent forms with seeded uniform coefficients."""
    if count > ring.nvars:
        raise ValueError(f"cannot draw {count} independent forms in {ring.nvars} variables")
    if count == 0:
        return LinearSystem((), seed)
    rng = random.Random(seed)
    p = ring.modulus
    for _ in range(1000):
        rows = [[rng.randrange(p) for _ in range(ring.nvars)] for _ in range(count)]
        if any(not any(row) for row in rows):
            continue
        if linalg.rank(linalg.as_matrix(rows, ring.nvars), p) == count:
            return LinearSystem(tuple(ring.linear_form(row) for row in rows), seed)
    raise GenericityError("could not sample an independent linear system")


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of a sampled reduction-number computation.

    value is the minimum r_J over the sampled systems, witness_seed the
    seed of a minimising trial (replay with ``random_linear_system``).
    A zero module is recorded as a sentinel rather than an error so that
    sweep grids stay rectangular.
    """

    value: int | float
    trials: int
    witness_seed: int | None
    dim_module: int | None
    zero_module: bool = False


def multipower(ideals: list[GradedIdeal], exponents, ring: Ring) -> GradedIdeal:
    """The product ideal I_1^{a_1} * ... * I_m^{a_m}.

    Any exponent vector outside N^m yields the unit ideal by convention;
    the empty product is R.
    """
    exponents = tuple(exponents)
    if len(exponents) != len(ideals):
        raise ValueError("one exponent per ideal expected")
    if any(a < 0 for a in exponents):
        return GradedIdeal.unit(ring)
    acc = GradedIdeal.unit(ring)
    for ideal, a in zip(ideals, exponents):
        if a > 0:
            acc = acc * (ideal ** a)
    return acc


def quotient_by_linear_system(m: Subquotient, J: LinearSystem) -> Subquotient:
    """The module M/JM, using J*((U+K)/K) = (J*U + K)/K."""
    if not J.forms:
        return m
    ju = [form * u for form in J.forms for u in m.U.generators]
    quotient = Subquotient(m.U, GradedIdeal(m.ring, m.K.generators + tuple(ju)))
    # U + (JU + K) = U + K, so the subtracted series is the one already
    # cached on m; share it instead of recomputing a Groebner basis.
    quotient._sum = m.sum_ideal
    return quotient


def is_reduction(J: LinearSystem, m: Subquotient) -> bool:
    """True iff M/JM has finite length."""
    if m.is_zero():
        raise ValueError("reduction test on the zero module")
    dim = quotient_by_linear_system(m, J).dimension()
    return dim is None or dim == 0


def r_J(J: LinearSystem, m: Subquotient):
    """max{n : (JM)_n != M_n}, the a-invariant of M/JM.

    Returns -inf when JM = M in every degree; raises when J is not a
    reduction (the a-invariant would be infinite).
    """
    if m.is_zero():
        raise ValueError("reduction number of the zero module")
    series = quotient_by_linear_system(m, J).series
    if series.is_zero():
        return NEG_INF
    if series.dimension() != 0:
        raise ValueError("not a reduction: M/JM has positive dimension")
    return series.a_invariant()


def reduction_number(
    m: Subquotient, trials: int = DEFAULT_TRIALS, seed: int = 0
) -> ReductionResult:
    """Sampled reduction number of a nonzero module.

    Draws ``trials`` systems of dim(M) generic linear forms (resampling any
    that fail the reduction test, up to RESAMPLE_CAP per trial) and returns
    the minimum r_J.  For a zero-dimensional module the empty system is the
    unique minimal reduction and the value is exactly the a-invariant.
    """
    if m.is_zero():
        raise ValueError("reduction number of the zero module")
    size = m.dimension()
    best_value = None
    best_seed = None
    for t in range(max(1, trials)):
        for attempt in range(RESAMPLE_CAP):
            jseed = derive_seed(seed, "trial", t, attempt)
            J = random_linear_system(m.ring, size, jseed)
            series = quotient_by_linear_system(m, J).series
            if series.is_zero() or series.dimension() == 0:
                value = NEG_INF if series.is_zero() else series.a_invariant()
                break
        else:
            raise GenericityError(
                f"genericity failure after {RESAMPLE_CAP} resamples; "
                "increase the field modulus or the trial count"
            )
        if best_value is None or value < best_value:
            best_value = value
            best_seed = jseed
    return ReductionResult(
        value=best_value,
        trials=max(1, trials),
        witness_seed=best_seed,
        dim_module=size,
    )


def _zero_module_result(trials: int) -> ReductionResult:
    return ReductionResult(
        value=NEG_INF,
        trials=max(1, trials),
        witness_seed=None,
        dim_module=None,
        zero_module=True,
    )


def r_power(
    ideals: list[GradedIdeal],
    K: GradedIdeal,
    exponents,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> ReductionResult:
    """Reduction number of I^a * M for M = R/K, i.e. of (I^a + K)/K."""
    ring = K.ring
    m = Subquotient(multipower(ideals, exponents, ring), K)
    if m.is_zero():
        return _zero_module_result(trials)
    return reduction_number(m, trials, seed)


def r_quotient(
    ideals: list[GradedIdeal],
    K: GradedIdeal,
    exponents,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> ReductionResult:
    """Reduction number of M/(I^a M) for M = R/K, i.e. of R/(K + I^a)."""
    ring = K.ring
    m = Subquotient.cyclic(K + multipower(ideals, exponents, ring))
    if m.is_zero():
        return _zero_module_result(trials)
    return reduction_number(m, trials, seed)
