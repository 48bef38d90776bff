"""Lattice sweeps over exponent vectors and exact max-of-linear models.

The families r(I^a M) and r(M/I^a M) are eventually a pointwise maximum of
finitely many affine functions whose per-axis slopes come from the degrees
of the minimal generators of the corresponding ideal (allowing slope 0 in
the quotient family).  This module evaluates the families on a finite grid
1 <= a <= caps, checks the dimension stationarity facts, and searches for
an exact max-of-linear representation:

* every candidate slope vector is enumerated from the finite slope sets;
* a candidate's intercept is the minimum of value(a) - slopes . a over the
  validated region, making its affine piece a lower support touching the
  data on its argmin set;
* the fit is exact iff those argmin sets cover the region, and any covering
  subset reproduces the column with residual 0.

Thresholds shrink the region from the full grid toward the corner; an
under-capped grid yields the explicit "not yet asymptotic" outcome, never a
forced fit.  Fits on a finite grid are necessary evidence only, so the
out-of-sample check re-evaluates the family just past the grid boundary.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Mapping

from .groebner import GradedIdeal
from .hilbert import NEG_INF, HilbertSeries, Subquotient, hs_quotient_ring
from .koszul import regularity
from .reductions import (
    DEFAULT_TRIALS,
    RESAMPLE_CAP,
    GenericityError,
    ReductionResult,
    derive_seed,
    is_reduction,
    multipower,
    r_power,
    r_quotient,
    random_linear_system,
)

__all__ = [
    "CellRecord",
    "SweepMeta",
    "SweepTable",
    "sweep",
    "StationarityReport",
    "check_stationary",
    "LinearPiece",
    "PiecewiseLinearModel",
    "NotYetAsymptotic",
    "slope_sets",
    "fit_max_linear",
    "out_of_sample_check",
    "RhoAxis",
    "RhoReport",
    "rho_report",
    "RecursionReport",
    "recursion_check",
]


class NotYetAsymptotic(Exception):
    """No exact fit on any admissible sub-grid; larger caps may be needed."""


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepMeta:
    p: int
    var_names: tuple[str, ...]
    ideal_names: tuple[str, ...]
    degree_sets: tuple[tuple[int, ...], ...]
    caps: tuple[int, ...]
    trials: int
    seed: int
    with_reg: bool


@dataclass(frozen=True)
class CellRecord:
    a: tuple[int, ...]
    dim_power: int | None
    dim_quotient: int | None
    r_power: ReductionResult
    r_quotient: ReductionResult
    reg_power: tuple | None
    cell_seed: int


@dataclass(frozen=True)
class SweepTable:
    meta: SweepMeta
    cells: dict[tuple[int, ...], CellRecord] = field(repr=False)

    @property
    def grid(self) -> list[tuple[int, ...]]:
        return sorted(self.cells)

    def column(self, name: str) -> dict[tuple[int, ...], int | None]:
        """A grid column; sentinel cells (zero modules) map to None."""
        out: dict[tuple[int, ...], int | None] = {}
        for a, cell in self.cells.items():
            if name in ("dim_power", "dim_quotient"):
                out[a] = getattr(cell, name)
            elif name in ("r_power", "r_quotient"):
                result = getattr(cell, name)
                value = result.value
                out[a] = value if isinstance(value, int) else None
            elif name == "reg_power":
                reg = cell.reg_power
                out[a] = reg[0] if reg is not None and isinstance(reg[0], int) else None
            else:
                raise KeyError(f"unknown column {name!r}")
        return out


def _grid(caps: Iterable[int]) -> list[tuple[int, ...]]:
    caps = tuple(caps)
    if not caps or any(c < 1 for c in caps):
        raise ValueError("caps must be >= 1 componentwise")
    return sorted(product(*(range(1, c + 1) for c in caps)))


def sweep(
    ideals: list[GradedIdeal],
    K: GradedIdeal,
    caps: Iterable[int],
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    with_reg: bool = False,
    ideal_names: Iterable[str] | None = None,
    reg_cap: int | None = None,
) -> SweepTable:
    """Evaluate both reduction-number families (and optionally regularity of
    the power module) on the full grid 1 <= a <= caps.

    Deterministic given the seed: each cell derives its own child seed, so
    any cell can be replayed in isolation.
    """
    ring = K.ring
    caps = tuple(caps)
    if len(caps) != len(ideals):
        raise ValueError("one cap per ideal expected")
    names = tuple(ideal_names) if ideal_names is not None else tuple(
        f"I{i + 1}" for i in range(len(ideals))
    )
    meta = SweepMeta(
        p=ring.modulus,
        var_names=ring.names,
        ideal_names=names,
        degree_sets=tuple(ideal.min_degrees() for ideal in ideals),
        caps=caps,
        trials=trials,
        seed=seed,
        with_reg=with_reg,
    )
    cells: dict[tuple[int, ...], CellRecord] = {}
    for a in _grid(caps):
        cell_seed = derive_seed(seed, "cell", *a)
        power_ideal = multipower(ideals, a, ring)
        power_module = Subquotient(power_ideal, K)
        quotient_module = Subquotient.cyclic(K + power_ideal)
        rp = r_power(ideals, K, a, trials, derive_seed(cell_seed, "power"))
        rq = r_quotient(ideals, K, a, trials, derive_seed(cell_seed, "quotient"))
        reg = None
        if with_reg:
            if power_module.is_zero():
                reg = (NEG_INF, True)
            else:
                cap = reg_cap
                if cap is None:
                    gen_deg = max(
                        [1]
                        + list(power_ideal.min_degrees() if not power_ideal.is_unit() else [])
                        + list(K.min_degrees() if not K.is_zero_ideal() else [])
                    )
                    cap = gen_deg * (ring.nvars + 1)
                reg = regularity(power_module, cap)
        cells[a] = CellRecord(
            a=a,
            dim_power=power_module.dimension(),
            dim_quotient=quotient_module.dimension(),
            r_power=rp,
            r_quotient=rq,
            reg_power=reg,
            cell_seed=cell_seed,
        )
    return SweepTable(meta=meta, cells=cells)


# ---------------------------------------------------------------------------
# Dimension stationarity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StationarityReport:
    dim_power_monotone: bool
    dim_power_top_constant: bool
    dim_quotient_constant: bool
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_stationary(table: SweepTable) -> StationarityReport:
    """Verify that dim of the power module is non-increasing along every axis
    and constant on the top corner block, and that dim of the quotient module
    is constant on the whole grid (which starts at a = 1)."""
    caps = table.meta.caps
    m = len(caps)
    cells = table.cells
    violations: list[str] = []

    def rank_of(d):
        return -1 if d is None else d  # zero module below everything

    monotone = True
    for a, cell in cells.items():
        for i in range(m):
            b = tuple(a[j] + (1 if j == i else 0) for j in range(m))
            if b in cells:
                if rank_of(cells[b].dim_power) > rank_of(cell.dim_power):
                    monotone = False
                    violations.append(
                        f"dim_power increases from {a} ({cell.dim_power}) "
                        f"to {b} ({cells[b].dim_power})"
                    )

    top = [a for a in cells if all(a[i] >= max(1, caps[i] - 1) for i in range(m))]
    top_values = {cells[a].dim_power for a in top}
    top_constant = len(top_values) <= 1
    if not top_constant:
        violations.append(f"dim_power not constant on the top block: {sorted(map(str, top_values))}")

    quot_values = {cell.dim_quotient for cell in cells.values()}
    quot_constant = len(quot_values) <= 1
    if not quot_constant:
        violations.append(f"dim_quotient not constant on a >= 1: {sorted(map(str, quot_values))}")

    return StationarityReport(
        dim_power_monotone=monotone,
        dim_power_top_constant=top_constant,
        dim_quotient_constant=quot_constant,
        violations=tuple(violations),
    )


# ---------------------------------------------------------------------------
# Exact max-of-linear fitting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearPiece:
    slopes: tuple[int, ...]
    intercept: int

    def evaluate(self, a: Iterable[int]) -> int:
        return sum(s * x for s, x in zip(self.slopes, a)) + self.intercept

    @property
    def all_nonzero(self) -> bool:
        return all(s != 0 for s in self.slopes)


@dataclass(frozen=True)
class PiecewiseLinearModel:
    """max of affine pieces, exact on the grid region a >= threshold."""

    pieces: tuple[LinearPiece, ...]
    threshold: tuple[int, ...]
    residual: int = 0

    def evaluate(self, a: Iterable[int]) -> int:
        a = tuple(a)
        return max(piece.evaluate(a) for piece in self.pieces)

    @property
    def has_all_nonzero_piece(self) -> bool:
        return any(piece.all_nonzero for piece in self.pieces)


def slope_sets(
    degree_sets: Iterable[Iterable[int]], include_zero: bool = False
) -> list[tuple[int, ...]]:
    """Per-axis candidate slopes from minimal-generator degree multisets."""
    out = []
    for degrees in degree_sets:
        s = sorted(set(degrees))
        if include_zero:
            s = [0] + s
        out.append(tuple(s))
    return out


def _dot(slopes: tuple[int, ...], a: tuple[int, ...]) -> int:
    return sum(s * x for s, x in zip(slopes, a))


def fit_max_linear(
    column: Mapping[tuple[int, ...], int | None],
    caps: Iterable[int],
    sets: list[tuple[int, ...]],
    require_all_nonzero_piece: bool = False,
) -> PiecewiseLinearModel:
    """Exact max-of-linear fit with slopes restricted to the given sets.

    The threshold is searched from the full grid toward the corner along the
    diagonal, keeping the largest region admitting an exact fit; at least
    two points per axis must remain beyond the threshold.  When
    ``require_all_nonzero_piece`` is set, the returned cover keeps a piece
    with no zero slope (such a piece always exists when the fit is exact,
    since every candidate's support touches the data; whether it genuinely
    dominates for large a is what the out-of-sample check probes).
    """
    caps = tuple(caps)
    m = len(caps)
    if len(sets) != m:
        raise ValueError("one slope set per axis expected")
    max_shrink = min(caps) - 2
    if max_shrink < 0:
        raise NotYetAsymptotic("grid too small: need at least 2 points per axis")

    last_reason = "no exact fit on any sub-grid"
    for k in range(max_shrink + 1):
        threshold = tuple(1 + k for _ in range(m))
        region = sorted(product(*(range(threshold[i], caps[i] + 1) for i in range(m))))
        values = {}
        usable = True
        for a in region:
            v = column.get(a)
            if not isinstance(v, int):
                usable = False
                last_reason = f"sentinel or missing value at {a}"
                break
            values[a] = v
        if not usable:
            continue

        candidates = []
        for lam in sorted(product(*sets)):
            diffs = {a: values[a] - _dot(lam, a) for a in region}
            intercept = min(diffs.values())
            tight = frozenset(a for a, d in diffs.items() if d == intercept)
            candidates.append((lam, intercept, tight))

        region_set = set(region)
        if set().union(*(t for _, _, t in candidates)) != region_set:
            last_reason = "values leave the slope sets' reachable envelope"
            continue

        # greedy cover: all-nonzero slope vectors first, then larger supports
        order = sorted(candidates, key=lambda t: (0 in t[0], -len(t[2]), t[0]))
        chosen: list[tuple] = []
        uncovered = set(region_set)
        for cand in order:
            if uncovered & cand[2]:
                chosen.append(cand)
                uncovered -= cand[2]
            if not uncovered:
                break

        # prune to an irredundant cover, dropping zero-slope pieces first
        for cand in sorted(chosen, key=lambda t: (0 not in t[0], len(t[2]), t[0])):
            rest = [c for c in chosen if c is not cand]
            if not rest:
                continue
            if (
                require_all_nonzero_piece
                and 0 not in cand[0]
                and all(0 in c[0] for c in rest)
            ):
                continue
            if set().union(*(c[2] for c in rest)) == region_set:
                chosen = rest

        pieces = tuple(
            sorted(
                (LinearPiece(lam, intercept) for lam, intercept, _ in chosen),
                key=lambda piece: (piece.slopes, piece.intercept),
            )
        )
        model = PiecewiseLinearModel(pieces=pieces, threshold=threshold, residual=0)
        if require_all_nonzero_piece and not model.has_all_nonzero_piece:
            raise NotYetAsymptotic(
                "exact fit found but no piece has all slopes nonzero; increase caps"
            )
        return model

    raise NotYetAsymptotic(f"not yet asymptotic: {last_reason}; increase caps")


def out_of_sample_check(
    model: PiecewiseLinearModel,
    caps: Iterable[int],
    evaluate: Callable[[tuple[int, ...]], int | None],
    count: int = 10,
    seed: int = 0,
) -> list[tuple[tuple[int, ...], int | None, int]]:
    """Compare the model against freshly computed values just past the grid.

    Candidate points live in threshold <= a <= caps + 1 with at least one
    coordinate beyond its cap.  Returns the list of disagreements.
    """
    caps = tuple(caps)
    m = len(caps)
    pts = [
        a
        for a in product(*(range(model.threshold[i], caps[i] + 2) for i in range(m)))
        if any(a[i] == caps[i] + 1 for i in range(m))
    ]
    pts.sort()
    if len(pts) > count:
        rng = random.Random(derive_seed(seed, "out-of-sample"))
        pts = sorted(rng.sample(pts, count))
    mismatches = []
    for a in pts:
        want = evaluate(a)
        got = model.evaluate(a)
        if want != got:
            mismatches.append((a, want, got))
    return mismatches


# ---------------------------------------------------------------------------
# Per-axis slope extraction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RhoAxis:
    axis: int
    slope: int | None
    stabilized_from: int | None
    allowed: bool | None


@dataclass(frozen=True)
class RhoReport:
    axes: tuple[RhoAxis, ...]

    @property
    def all_stabilized(self) -> bool:
        return all(ax.slope is not None for ax in self.axes)

    @property
    def all_allowed(self) -> bool:
        return all(ax.allowed for ax in self.axes)


def rho_report(
    column: Mapping[tuple[int, ...], int | None],
    caps: Iterable[int],
    allowed_sets: list[Iterable[int]],
) -> RhoReport:
    """Stabilised forward differences per axis, with a membership verdict.

    A slope is reported for an axis only when the differences are constant
    on some region a >= (1+k, ..., 1+k) of the observed grid.
    """
    caps = tuple(caps)
    m = len(caps)
    axes = []
    for i in range(m):
        diffs: dict[tuple[int, ...], int] = {}
        usable = True
        for a in product(*(range(1, c + 1) for c in caps)):
            if a[i] == caps[i]:
                continue
            b = tuple(a[j] + (1 if j == i else 0) for j in range(m))
            va, vb = column.get(a), column.get(b)
            if not isinstance(va, int) or not isinstance(vb, int):
                usable = False
                break
            diffs[a] = vb - va
        slope = None
        start = None
        if usable and diffs:
            for k in range(max(caps)):
                lo = 1 + k
                region = [a for a in diffs if all(x >= lo for x in a)]
                if len(region) < 2:
                    break  # a single difference is trivially constant, not evidence
                vals = {diffs[a] for a in region}
                if len(vals) == 1:
                    slope = vals.pop()
                    start = lo
                    break
        allowed = None if slope is None else slope in set(allowed_sets[i])
        axes.append(RhoAxis(axis=i, slope=slope, stabilized_from=start, allowed=allowed))
    return RhoReport(axes=tuple(axes))


# ---------------------------------------------------------------------------
# Recursion cross-check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RecursionReport:
    checked: int
    mismatches: tuple[tuple, ...]
    violations: tuple[str, ...]
    witness_seed: int | None
    dim_quotient: int | None

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.violations


def recursion_check(
    ideals: list[GradedIdeal],
    K: GradedIdeal,
    caps: Iterable[int],
    seed: int = 0,
) -> RecursionReport:
    """Verify the one-step recursion of the quotient family.

    With one fixed generic system J reducing every M/(I^b)M on the grid,
    write q(b) for the top nonzero degree of R/(K + I^b + J) and u(b, i)
    for the top nonzero degree of the kernel slice whose Hilbert function
    is HF(R/(K + I^b + J)) - HF(R/(K + I^(b - e_i) + J)).  The check is

        q(b) = max(q(b - e_i), u(b, i))

    for every axis i and every b on the grid with b - e_i >= 1.  Mismatches
    indicate a genericity or implementation fault, never a small grid.
    """
    ring = K.ring
    caps = tuple(caps)
    if any(c < 2 for c in caps):
        raise ValueError("recursion check needs caps >= 2")
    grid = _grid(caps)
    m = len(caps)
    violations: list[str] = []

    modules = {}
    for b in grid:
        modules[b] = Subquotient.cyclic(K + multipower(ideals, b, ring))
    base_dim = modules[grid[0]].dimension()
    if base_dim is None:
        return RecursionReport(0, (), ("quotient module is zero at a = 1",), None, None)
    active = []
    for b in grid:
        d = modules[b].dimension()
        if d != base_dim:
            violations.append(f"dim(M/I^{b}M) = {d} differs from {base_dim} at a = 1")
        else:
            active.append(b)

    witness_seed = None
    J = None
    for attempt in range(RESAMPLE_CAP):
        jseed = derive_seed(seed, "recursion", attempt)
        candidate = random_linear_system(ring, base_dim, jseed)
        if all(is_reduction(candidate, modules[b]) for b in active):
            J, witness_seed = candidate, jseed
            break
    if J is None:
        raise GenericityError("no common reduction found within the resample cap")
    j_ideal = GradedIdeal(ring, J.forms)

    series: dict[tuple[int, ...], HilbertSeries] = {}
    for b in active:
        series[b] = hs_quotient_ring(K + multipower(ideals, b, ring) + j_ideal)

    def top_degree(hs: HilbertSeries):
        return NEG_INF if hs.is_zero() else hs.a_invariant()

    checked = 0
    mismatches: list[tuple] = []
    for b in active:
        for i in range(m):
            prev = tuple(b[j] - (1 if j == i else 0) for j in range(m))
            if any(x < 1 for x in prev) or prev not in series:
                continue
            lhs = top_degree(series[b])
            prev_val = top_degree(series[prev])
            kernel_top = top_degree(series[b] - series[prev])
            checked += 1
            if lhs != max(prev_val, kernel_top):
                mismatches.append((b, i, lhs, prev_val, kernel_top))
    return RecursionReport(
        checked=checked,
        mismatches=tuple(mismatches),
        violations=tuple(violations),
        witness_seed=witness_seed,
        dim_quotient=base_dim,
    )
