"""Command-line surface: thin dispatchers plus bit-stable CSV/JSON schemas.

Exit codes: 0 success, 2 "not yet asymptotic" (no exact fit or unstabilised
differences on the observed grid), 3 genericity failure (sampling cap
exhausted), 1 for any other error.

Sweep CSV schema (one ``# key=value`` metadata line block, then the table):

    a1,...,am,dim_power,dim_quotient,r_power,r_quotient[,reg_power],witness_seed,flags

Integers are decimal; ``-inf`` and ``empty`` are the value sentinels, a
``zero-module`` token in the flags column marks which side of the cell
vanished, and ``reg=lower-bound`` marks an uncertified regularity value.
Model JSON schema:

    {"pieces": [{"slopes": [...], "intercept": n}, ...],
     "threshold": [...], "residual": 0, "source_seed": n}

All randomness derives from the recorded seeds, so identical inputs and
flags reproduce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .asymptotics import (
    NotYetAsymptotic,
    SweepTable,
    check_stationary,
    fit_max_linear,
    recursion_check,
    rho_report,
    slope_sets,
    sweep,
)
from .hilbert import NEG_INF, Subquotient, hs_quotient_ring
from .koszul import koszul_betti, regularity
from .polyring import ParseError
from .problems import ProblemError, ProblemFile, parse_problem
from .reductions import GenericityError, ReductionResult, r_power, r_quotient

__all__ = ["main", "write_sweep_csv", "read_sweep_csv", "model_to_json"]


# ---------------------------------------------------------------------------
# Serialisation
# ---------------------------------------------------------------------------

def _fmt_dim(d) -> str:
    return "empty" if d is None else str(d)


def _fmt_value(v) -> str:
    return "-inf" if v == NEG_INF else str(v)


def _cell_flags(cell, with_reg: bool) -> str:
    flags = []
    if cell.r_power.zero_module:
        flags.append("power=zero-module")
    if cell.r_quotient.zero_module:
        flags.append("quotient=zero-module")
    if with_reg and cell.reg_power is not None and not cell.reg_power[1]:
        flags.append("reg=lower-bound")
    return "|".join(flags)


def write_sweep_csv(table: SweepTable, path: str) -> None:
    meta = table.meta
    m = len(meta.caps)
    lines = ["# rednum-sweep v1"]
    lines.append(f"# p={meta.p}")
    lines.append("# vars=" + ",".join(meta.var_names))
    lines.append("# ideals=" + ",".join(meta.ideal_names))
    for name, degrees in zip(meta.ideal_names, meta.degree_sets):
        lines.append(f"# D_{name}=" + ",".join(str(d) for d in degrees))
    lines.append("# caps=" + ",".join(str(c) for c in meta.caps))
    lines.append(f"# trials={meta.trials}")
    lines.append(f"# seed={meta.seed}")
    lines.append(f"# with_reg={'yes' if meta.with_reg else 'no'}")
    header = [f"a{i + 1}" for i in range(m)]
    header += ["dim_power", "dim_quotient", "r_power", "r_quotient"]
    if meta.with_reg:
        header.append("reg_power")
    header += ["witness_seed", "flags"]
    lines.append(",".join(header))
    for a in table.grid:
        cell = table.cells[a]
        row = [str(x) for x in a]
        row.append(_fmt_dim(cell.dim_power))
        row.append(_fmt_dim(cell.dim_quotient))
        row.append(_fmt_value(cell.r_power.value))
        row.append(_fmt_value(cell.r_quotient.value))
        if meta.with_reg:
            row.append(_fmt_value(cell.reg_power[0]))
        row.append(str(cell.cell_seed))
        row.append(_cell_flags(cell, meta.with_reg))
        lines.append(",".join(row))
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write("\n".join(lines) + "\n")


def read_sweep_csv(path: str) -> tuple[dict, list[dict]]:
    """Parse a sweep CSV back into (metadata, rows of raw string fields)."""
    meta: dict = {"D": {}}
    rows: list[dict] = []
    header: list[str] | None = None
    with open(path, "r", encoding="utf-8") as handle:
        for raw in handle:
            line = raw.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if "=" in body:
                    key, _, value = body.partition("=")
                    key = key.strip()
                    value = value.strip()
                    if key.startswith("D_"):
                        meta["D"][key[2:]] = [int(x) for x in value.split(",") if x]
                    elif key in ("p", "trials", "seed"):
                        meta[key] = int(value)
                    elif key == "caps":
                        meta["caps"] = [int(x) for x in value.split(",")]
                    elif key in ("vars", "ideals"):
                        meta[key] = value.split(",")
                    elif key == "with_reg":
                        meta[key] = value == "yes"
                continue
            if header is None:
                header = line.split(",")
                continue
            fields = line.split(",")
            rows.append(dict(zip(header, fields)))
    if header is None:
        raise ValueError(f"{path}: no table header found")
    return meta, rows


def csv_column(meta: dict, rows: list[dict], name: str) -> dict[tuple, int | None]:
    m = len(meta["caps"])
    column: dict[tuple, int | None] = {}
    for row in rows:
        a = tuple(int(row[f"a{i + 1}"]) for i in range(m))
        raw = row.get(name)
        if raw is None:
            raise ValueError(f"column {name!r} not present in the CSV")
        column[a] = int(raw) if raw not in ("-inf", "empty") else None
    return column


def model_to_json(model, source_seed: int) -> str:
    obj = {
        "pieces": [
            {"slopes": list(p.slopes), "intercept": p.intercept} for p in model.pieces
        ],
        "threshold": list(model.threshold),
        "residual": model.residual,
        "source_seed": source_seed,
    }
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _parse_vector(text: str, length: int, what: str) -> tuple[int, ...]:
    try:
        vec = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"bad {what} {text!r}: expected comma-separated integers")
    if len(vec) != length:
        raise ValueError(f"{what} needs {length} entries, got {len(vec)}")
    return vec


def _load(args) -> ProblemFile:
    return parse_problem(args.file)


def cmd_gb(args) -> int:
    pf = _load(args)
    if args.ideal not in pf.ideals:
        raise ValueError(f"unknown ideal {args.ideal!r}")
    for g in pf.ideals[args.ideal].groebner_basis():
        print(g)
    return 0


def cmd_hilbert(args) -> int:
    pf = _load(args)
    if args.of is None:
        series = Subquotient.cyclic(pf.K).series
    else:
        if args.of not in pf.ideals:
            raise ValueError(f"unknown ideal {args.of!r}")
        series = hs_quotient_ring(pf.ideals[args.of])
    num = " ".join(str(c) for c in series.num) if series.num else "0"
    print(f"numerator: {num}")
    print(f"denominator_exponent: {series.den}")
    dim = series.dimension()
    print(f"pole_order: {0 if dim is None else series.reduced[1]}")
    print(f"dimension: {_fmt_dim(dim)}")
    if dim in (None, 0):
        print(f"a_invariant: {_fmt_value(series.a_invariant())}")
    else:
        print("a_invariant: infinite")
    return 0


def _print_rnum(result: ReductionResult, target: str, a: tuple, seed: int) -> None:
    if result.zero_module:
        print("zero-module")
    else:
        print(_fmt_value(result.value))
    print(f"target: {target}")
    print("a: " + ",".join(str(x) for x in a))
    print(f"trials: {result.trials}")
    print(f"seed: {seed}")
    print(f"witness_seed: {'-' if result.witness_seed is None else result.witness_seed}")
    print(f"dim_module: {_fmt_dim(result.dim_module)}")


def cmd_rnum(args) -> int:
    pf = _load(args)
    ideals = pf.swept_ideals
    if not ideals:
        raise ValueError("no swept ideals declared")
    a = _parse_vector(args.a, len(ideals), "--a")
    fn = r_power if args.target == "power" else r_quotient
    result = fn(ideals, pf.K, a, args.trials, args.seed)
    _print_rnum(result, args.target, a, args.seed)
    return 0


def cmd_betti(args) -> int:
    pf = _load(args)
    module = Subquotient.cyclic(pf.K)
    cap = args.maxdeg
    if cap is None:
        gen_deg = max([1] + list(pf.K.min_degrees()))
        cap = gen_deg * (pf.ring.nvars + 1)
    table = koszul_betti(module, cap)
    print("# i j beta")
    for (i, j), beta in sorted(table.entries.items()):
        print(f"{i} {j} {beta}")
    value, certified = regularity(module, cap)
    print(f"regularity: {_fmt_value(value)}")
    print("certified: yes" if certified else "certified: no (value is a lower bound)")
    return 0


def cmd_sweep(args) -> int:
    pf = _load(args)
    ideals = pf.swept_ideals
    if not ideals:
        raise ValueError("no swept ideals declared")
    caps = _parse_vector(args.caps, len(ideals), "--caps")
    table = sweep(
        ideals,
        pf.K,
        caps,
        trials=args.trials,
        seed=args.seed,
        with_reg=args.with_reg,
        ideal_names=pf.swept_names,
    )
    write_sweep_csv(table, args.out)
    report = check_stationary(table)
    print(f"wrote {args.out}: {len(table.cells)} cells")
    print(f"stationary: {'yes' if report.ok else 'no'}")
    for violation in report.violations:
        print(f"violation: {violation}")
    return 0


def _column_slope_sets(meta: dict, include_zero: bool) -> list[tuple[int, ...]]:
    names = meta.get("ideals")
    if not names or any(name not in meta["D"] for name in names):
        raise ValueError("CSV metadata lacks the per-ideal degree sets")
    return slope_sets([meta["D"][name] for name in names], include_zero=include_zero)


def cmd_fit(args) -> int:
    meta, rows = read_sweep_csv(getattr(args, "in"))
    column = csv_column(meta, rows, args.column)
    sets = _column_slope_sets(meta, include_zero=args.slopes == "D0")
    model = fit_max_linear(
        column,
        tuple(meta["caps"]),
        sets,
        require_all_nonzero_piece=args.require_one_all_d,
    )
    text = model_to_json(model, meta.get("seed", 0))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        print(f"wrote {args.out}: {len(model.pieces)} pieces, threshold "
              + ",".join(str(b) for b in model.threshold))
    else:
        sys.stdout.write(text)
    return 0


def cmd_rho(args) -> int:
    meta, rows = read_sweep_csv(getattr(args, "in"))
    column = csv_column(meta, rows, args.column)
    allowed = [
        set(meta["D"][name]) | ({0} if args.include_zero else set())
        for name in meta["ideals"]
    ]
    report = rho_report(column, tuple(meta["caps"]), allowed)
    for ax in report.axes:
        if ax.slope is None:
            print(f"axis {ax.axis + 1}: not-stabilized")
        else:
            verdict = "yes" if ax.allowed else "no"
            print(
                f"axis {ax.axis + 1}: slope={ax.slope} "
                f"stabilized_from={ax.stabilized_from} allowed={verdict}"
            )
    if not report.all_stabilized:
        raise NotYetAsymptotic("per-axis differences not stabilised on this grid")
    return 0


def cmd_recursion_check(args) -> int:
    pf = _load(args)
    ideals = pf.swept_ideals
    if not ideals:
        raise ValueError("no swept ideals declared")
    caps = _parse_vector(args.caps, len(ideals), "--caps")
    report = recursion_check(ideals, pf.K, caps, seed=args.seed)
    print(f"cells_checked: {report.checked}")
    print(f"mismatches: {len(report.mismatches)}")
    for b, i, lhs, prev, kernel_top in report.mismatches:
        print(
            "mismatch: b=" + ",".join(map(str, b))
            + f" axis={i + 1} lhs={_fmt_value(lhs)} prev={_fmt_value(prev)}"
            + f" kernel_top={_fmt_value(kernel_top)}"
        )
    for violation in report.violations:
        print(f"violation: {violation}")
    print(f"witness_seed: {'-' if report.witness_seed is None else report.witness_seed}")
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rednum",
        description="Reduction numbers of graded modules and their ideal-power families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file(p):
        p.add_argument("file", help="problem file")

    p = sub.add_parser("gb", help="reduced Groebner basis of a named ideal")
    add_file(p)
    p.add_argument("--ideal", required=True)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("hilbert", help="Hilbert series of R/K (default) or R/<ideal>")
    add_file(p)
    p.add_argument("--of", default=None, help="ideal name (default: the module's K)")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("rnum", help="reduction number of I^a*M or M/I^a*M")
    add_file(p)
    p.add_argument("--target", choices=("power", "quotient"), required=True)
    p.add_argument("--a", required=True, help="comma-separated exponent vector")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_rnum)

    p = sub.add_parser("betti", help="graded Betti table and regularity of M = R/K")
    add_file(p)
    p.add_argument("--maxdeg", type=int, default=None)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("sweep", help="evaluate both families on a grid, write CSV")
    add_file(p)
    p.add_argument("--caps", required=True)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--with-reg", action="store_true", dest="with_reg")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fit", help="exact max-of-linear model from a sweep CSV")
    p.add_argument("--in", required=True, help="sweep CSV")
    p.add_argument("--column", default="r_power",
                   choices=("r_power", "r_quotient", "reg_power"))
    p.add_argument("--slopes", choices=("D", "D0"), default="D",
                   help="slope alphabet: generator degrees, optionally with 0")
    p.add_argument(
        "--require-one-all-d",
        "--require-one-all-D",
        action="store_true",
        dest="require_one_all_d",
    )
    p.add_argument("--out", default=None, help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("rho", help="stabilised per-axis slopes from a sweep CSV")
    p.add_argument("--in", required=True)
    p.add_argument("--column", default="r_power",
                   choices=("r_power", "r_quotient", "reg_power"))
    p.add_argument("--include-zero", action="store_true", dest="include_zero")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("recursion-check", help="one-step recursion identity on a grid")
    add_file(p)
    p.add_argument("--caps", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_recursion_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except NotYetAsymptotic as exc:
        print(f"not-yet-asymptotic: {exc}", file=sys.stderr)
        return 2
    except GenericityError as exc:
        print(f"genericity-failure: {exc}", file=sys.stderr)
        return 3
    except (ProblemError, ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
