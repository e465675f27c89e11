"""Degreewise exact linear algebra on graded free complexes.

Every graded piece of a map between graded free modules is a finite matrix
over the coefficient field. Ranks of these matrices give Hilbert functions of
kernels, images and homology without any Groebner basis, which makes this
module an independent check on the presentation-based pipeline.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence

from .complexes import GradedFreeComplex, ModuleMap
from .ring import FieldSpec


@lru_cache(maxsize=None)
def monomials_of_degree(weights: tuple[int, ...], d: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of weighted degree ``d``."""
    if d < 0:
        return ()
    if not weights:
        return ((),) if d == 0 else ()
    w, rest = weights[0], weights[1:]
    out = []
    for e in range(d // w, -1, -1):
        for tail in monomials_of_degree(rest, d - e * w):
            out.append((e,) + tail)
    return tuple(out)


def rank(rows: Iterable[dict], field: FieldSpec) -> int:
    """Rank of a sparse matrix given as ``{column: value}`` rows."""
    p = field.characteristic
    if not p:
        return _rank_rational(rows)
    pivots: dict[int, dict] = {}
    r = 0
    for row in rows:
        row = {k: field.coerce(v) for k, v in row.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = field.inv(row[c])
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                r += 1
                break
            f = row[c]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return r


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = gcd(*row.values())
    return {k: v // g for k, v in row.items()} if g > 1 else row


def _rank_rational(rows: Iterable[dict]) -> int:
    # Clear denominators and eliminate over Z, dividing out the content after
    # every step; Fraction arithmetic is far slower on these matrices.
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for row in rows:
        q = {k: Fraction(v) for k, v in row.items() if v}
        if not q:
            continue
        den = lcm(*(v.denominator for v in q.values()))
        row = _primitive({k: int(v * den) for k, v in q.items()})
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = row
                r += 1
                break
            a, b = piv[c], row[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in row.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
    return r


def graded_piece_rows(phi: ModuleMap, d: int) -> list[dict]:
    """Rows (one per source basis vector) of ``phi`` in internal degree ``d``.

    Each row is the image of ``m * e_k`` written in the target's monomial basis.
    """
    ring = phi.target.ring
    w = ring.weights
    index: dict[tuple[int, tuple[int, ...]], int] = {}
    for i, s in enumerate(phi.target.shifts):
        for m in monomials_of_degree(w, d - s):
            index[(i, m)] = len(index)
    rows = []
    for k, s in enumerate(phi.source.shifts):
        col = [phi.entries[i][k] for i in range(phi.target.rank)]
        for m in monomials_of_degree(w, d - s):
            row: dict[int, object] = {}
            for i, f in enumerate(col):
                for exps, c in f.terms.items():
                    key = (i, tuple(a + b for a, b in zip(exps, m)))
                    j = index[key]
                    row[j] = row.get(j, 0) + c
            rows.append(row)
    return rows


def piece_dim(shifts: Sequence[int], weights: tuple[int, ...], d: int) -> int:
    return sum(len(monomials_of_degree(weights, d - s)) for s in shifts)


def map_rank(phi: ModuleMap, d: int) -> int:
    return rank(graded_piece_rows(phi, d), phi.target.ring.field)


def homology_hf(C: GradedFreeComplex, i: int, degrees: Iterable[int]) -> dict[int, int]:
    """``dim_k H_i(C)_d = dim C_{i,d} - rank d_{i,d} - rank d_{i+1,d}``."""
    w = C.ring.weights
    out = {}
    for d in degrees:
        dim = piece_dim(C.module(i).shifts, w, d)
        out[d] = dim - map_rank(C.d(i), d) - map_rank(C.d(i + 1), d)
    return out


def syzygy_dim(phi: ModuleMap, d: int) -> int:
    """``dim_k`` of the kernel of ``phi`` in internal degree ``d``."""
    return piece_dim(phi.source.shifts, phi.target.ring.weights, d) - map_rank(phi, d)
