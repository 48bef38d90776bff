"""Line-oriented problem files.

One statement per line, ``#`` starts a comment.  Statements:

    field 32003
    vars x1, x2
    ideal I: x1^2, x2^3
    ideal K: x2
    module M: quotient K

``field`` is optional (default 32003) and must precede ``vars``; ``vars``
must precede any ``ideal``.  Exactly one ``module`` statement names the
ideal K with M = R/K (the literal ``0`` means the zero ideal).  Every ideal
declared other than K is swept, in declaration order.  All generators must
parse as homogeneous polynomials; errors carry line numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import GradedIdeal
from .polyring import ParseError, Ring, is_prime

__all__ = ["ProblemError", "ProblemFile", "parse_problem"]


class ProblemError(ValueError):
    pass


@dataclass
class ProblemFile:
    ring: Ring
    ideals: dict[str, GradedIdeal]
    module_k: str | None  # None means K = 0
    path: str = ""
    _order: list[str] = field(default_factory=list)

    @property
    def K(self) -> GradedIdeal:
        if self.module_k is None:
            return GradedIdeal.zero(self.ring)
        return self.ideals[self.module_k]

    @property
    def swept_names(self) -> list[str]:
        return [name for name in self._order if name != self.module_k]

    @property
    def swept_ideals(self) -> list[GradedIdeal]:
        return [self.ideals[name] for name in self.swept_names]


def _fail(lineno: int, message: str):
    raise ProblemError(f"line {lineno}: {message}")


def parse_problem(path: str) -> ProblemFile:
    with open(path, "r", encoding="utf-8") as handle:
        raw_lines = handle.readlines()

    modulus = None
    ring: Ring | None = None
    ideals: dict[str, GradedIdeal] = {}
    order: list[str] = []
    module_k: str | None = None
    module_seen = False

    for lineno, raw in enumerate(raw_lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()

        if keyword == "field":
            if ring is not None:
                _fail(lineno, "field must be declared before vars")
            if modulus is not None:
                _fail(lineno, "duplicate field statement")
            try:
                modulus = int(rest)
            except ValueError:
                _fail(lineno, f"bad field modulus {rest!r}")
            if not is_prime(modulus):
                _fail(lineno, f"field modulus {modulus} is not prime")

        elif keyword == "vars":
            if ring is not None:
                _fail(lineno, "duplicate vars statement")
            names = [v.strip() for v in rest.split(",") if v.strip()]
            if not names:
                _fail(lineno, "vars statement declares no variables")
            try:
                ring = Ring(names, modulus if modulus is not None else 32003)
            except ValueError as exc:
                _fail(lineno, str(exc))

        elif keyword == "ideal":
            if ring is None:
                _fail(lineno, "ideal before vars")
            name, colon, gens_text = rest.partition(":")
            name = name.strip()
            if not colon or not name:
                _fail(lineno, "expected 'ideal NAME: gen, gen, ...'")
            if name in ideals:
                _fail(lineno, f"duplicate ideal name {name!r}")
            gens = []
            for chunk in gens_text.split(","):
                chunk = chunk.strip()
                if not chunk:
                    _fail(lineno, "empty generator")
                try:
                    poly = ring.parse(chunk)
                except ParseError as exc:
                    _fail(lineno, f"in generator {chunk!r}: {exc}")
                if not poly.is_zero():
                    gens.append(poly)
            ideals[name] = GradedIdeal(ring, gens)
            order.append(name)

        elif keyword == "module":
            if module_seen:
                _fail(lineno, "duplicate module statement")
            mod_name, colon, decl = rest.partition(":")
            if not colon or not mod_name.strip():
                _fail(lineno, "expected 'module NAME: quotient K'")
            parts = decl.split()
            if len(parts) != 2 or parts[0] != "quotient":
                _fail(lineno, "expected 'module NAME: quotient <ideal|0>'")
            target = parts[1]
            if target == "0":
                module_k = None
            elif target in ideals:
                module_k = target
            else:
                _fail(lineno, f"unknown ideal {target!r} in module statement")
            module_seen = True

        else:
            _fail(lineno, f"unknown statement {keyword!r}")

    if ring is None:
        raise ProblemError("missing vars statement")
    if not module_seen:
        raise ProblemError("missing module statement")
    return ProblemFile(ring=ring, ideals=ideals, module_k=module_k, path=path, _order=order)
