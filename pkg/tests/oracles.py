"""Independent brute-force oracles used to pin the main pipeline.

Everything here is deliberately naive and shares no code path with the
package internals: pure-Python Gaussian elimination, direct monomial
enumeration, and Hilbert functions as codimensions of explicit
multiplication matrices.
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement
from math import comb


def monomials_of_degree(nvars: int, d: int) -> list[tuple]:
    """All exponent tuples of total degree d (sorted, for stable indexing)."""
    if d < 0:
        return []
    out = set()
    for combo in combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for v in combo:
            exps[v] += 1
        out.add(tuple(exps))
    return sorted(out)


def rank_mod(rows: list[list[int]], p: int) -> int:
    """Rank over Z/p by plain Gaussian elimination (no numpy)."""
    mat = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [x * inv % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                c = mat[r][col]
                mat[r] = [(x - c * y) % p for x, y in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _degree_rows(generators, j: int, nvars: int) -> list[list[int]]:
    """Coefficient vectors of every m * g landing in degree j."""
    index = {mon: i for i, mon in enumerate(monomials_of_degree(nvars, j))}
    rows = []
    for g in generators:
        shift = j - g.degree
        if shift < 0:
            continue
        for mult in monomials_of_degree(nvars, shift):
            row = [0] * len(index)
            for mon, c in g.terms.items():
                prod = tuple(a + b for a, b in zip(mon, mult))
                row[index[prod]] = c
            rows.append(row)
    return rows


def hf_quotient_oracle(generators, j: int, nvars: int, p: int) -> int:
    """dim (R/I)_j as dim R_j minus the rank of the degree-j multiplication
    matrix of the generators; independent of any Groebner machinery."""
    ambient = comb(nvars - 1 + j, nvars - 1)
    rows = _degree_rows(generators, j, nvars)
    if not rows:
        return ambient
    return ambient - rank_mod(rows, p)


def membership_oracle(f, generators, p: int) -> bool:
    """f in I, decided in degree deg(f) by a rank comparison."""
    if f.is_zero():
        return True
    nvars = len(f.ring.names)
    j = f.degree
    rows = _degree_rows(generators, j, nvars)
    index = {mon: i for i, mon in enumerate(monomials_of_degree(nvars, j))}
    frow = [0] * len(index)
    for mon, c in f.terms.items():
        frow[index[mon]] = c
    base = rank_mod(rows, p) if rows else 0
    return rank_mod(rows + [frow], p) == base


def hf_monomial_oracle(gens_exps, j: int, nvars: int) -> int:
    """Standard-monomial count in degree j by direct divisibility scan."""
    count = 0
    for mon in monomials_of_degree(nvars, j):
        if not any(all(g[i] <= mon[i] for i in range(nvars)) for g in gens_exps):
            count += 1
    return count


def random_homogeneous(ring, degree: int, rng: random.Random, density: float = 0.7):
    """A random homogeneous polynomial (possibly zero) of the given degree."""
    terms = {}
    for mon in monomials_of_degree(ring.nvars, degree):
        if rng.random() < density:
            c = rng.randrange(ring.modulus)
            if c:
                terms[mon] = c
    return ring.from_terms(terms)
