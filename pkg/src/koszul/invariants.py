"""Homological invariants of graded modules over a polynomial ring.

Depth and dimension conventions for the zero module: ``dim = -1`` and
``depth = +inf`` (``DEPTH_ZERO``); vacuous theorem instances are skipped
upstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .complexes import (
    BettiTable,
    ComplexError,
    GradedFreeComplex,
    ModuleMap,
    PresentedComplex,
    PresentedModule,
    homology,
    koszul_complex,
    minimize,
)
from .groebner import FreeModule, ModuleElement, groebner_basis, syzygies
from .ring import Polynomial, RingSpec

__all__ = [
    "HilbertSeries",
    "InvariantReport",
    "BassVector",
    "DEPTH_ZERO",
    "free_resolution",
    "hilbert_series",
    "hilbert_series_from_betti",
    "invariant_report",
    "grade",
    "ext_module",
    "ext_modules",
    "hom_into_module",
    "bass_numbers",
    "local_cohomology_hf",
    "canonical_module",
    "s2_check",
    "NotCohenMacaulay",
    "GradeUndefined",
    "koszul_homology",
]

DEPTH_ZERO = math.inf


class NotCohenMacaulay(ValueError):
    pass


class GradeUndefined(ValueError):
    pass


# ---------------------------------------------------------------- Hilbert series


def _poly_mul(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _poly_add(a: Mapping[int, int], b: Mapping[int, int], sign: int = 1) -> dict[int, int]:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def _minimalize(gens: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    gens = sorted(set(gens), key=sum)
    out: list[tuple[int, ...]] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(m, g)) for m in out):
            out.append(g)
    return out


def _numerator(gens: tuple[tuple[int, ...], ...], weights: tuple[int, ...]) -> dict[int, int]:
    """Numerator of the Hilbert series of ``S / (gens)`` over ``prod (1 - t^w)``."""
    gens = tuple(_minimalize(gens))
    return _numerator_min(gens, weights)


@lru_cache(maxsize=200_000)
def _numerator_min(gens: tuple[tuple[int, ...], ...], weights: tuple[int, ...]) -> dict[int, int]:
    if not gens:
        return {0: 1}
    if any(not any(g) for g in gens):
        return {}
    n = len(weights)
    counts = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    if max(counts) <= 1:
        out = {0: 1}
        for g in gens:
            d = sum(e * w for e, w in zip(g, weights))
            out = _poly_mul(out, {0: 1, d: -1})
        return out
    i = max(range(n), key=lambda k: counts[k])
    # a minimal generating set holds at most one pure power of x_i, and it
    # exceeds every other x_i exponent, so the pivot is never already in J
    e = min(g[i] for g in gens if g[i] and sum(g) != g[i])
    pivot = tuple(e if k == i else 0 for k in range(n))
    # N(J) = N(J + p) + t^deg(p) N(J : p)
    plus = _numerator(gens + (pivot,), weights)
    colon = tuple(tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens)
    quot = _numerator(colon, weights)
    d = e * weights[i]
    return _poly_add(plus, {k + d: v for k, v in quot.items()})


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / prod_i (1 - t^{w_i})`` with a Laurent-polynomial numerator."""

    numerator: Mapping[int, int]
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "numerator", {k: v for k, v in sorted(self.numerator.items()) if v})
        object.__setattr__(self, "weights", tuple(self.weights))

    def __eq__(self, other) -> bool:
        return (isinstance(other, HilbertSeries) and self.weights == other.weights
                and self.numerator == other.numerator)

    def __hash__(self):
        return hash((tuple(self.numerator.items()), self.weights))

    def is_zero(self) -> bool:
        return not self.numerator

    def shifted(self, a: int) -> "HilbertSeries":
        """Series of ``M(-a)``."""
        return HilbertSeries({k + a: v for k, v in self.numerator.items()}, self.weights)

    def _ambient_count(self, d: int) -> int:
        if d < 0:
            return 0
        if all(w == 1 for w in self.weights):
            n = len(self.weights)
            return math.comb(d + n - 1, n - 1)
        return _weighted_count(self.weights, d)

    def value(self, d: int) -> int:
        return sum(c * self._ambient_count(d - k) for k, c in self.numerator.items())

    def values(self, lo: int, hi: int) -> list[int]:
        return [self.value(d) for d in range(lo, hi + 1)]

    def reduced(self) -> tuple[dict[int, int], int]:
        """Cancel factors ``(1 - t)`` from the numerator; returns ``(numerator, pole_order)``.

        Each ``1 - t^w`` has a simple zero at ``t = 1``, so the pole order is
        the Krull dimension for any positive weights.
        """
        num = dict(self.numerator)
        if not num:
            return {}, -1
        order = len(self.weights)
        while order > 0 and sum(num.values()) == 0:
            num = _divide_one_minus_t(num)
            order -= 1
        return num, order

    @property
    def dimension(self) -> int:
        return self.reduced()[1]

    def multiplicity(self) -> int:
        num, _ = self.reduced()
        return sum(num.values())

    def total_length(self) -> int:
        """``dim_k M`` for a finite-length module."""
        num, order = self.reduced()
        if order > 0:
            raise ValueError("module does not have finite length")
        return sum(num.values()) if num else 0

    def support_degrees(self) -> tuple[int, int] | None:
        """Lowest and highest degree of a finite-length module."""
        num, order = self.reduced()
        if order > 0:
            raise ValueError("module does not have finite length")
        if not num:
            return None
        return min(num), max(num)

    def to_json(self) -> dict:
        return {"numerator": [[k, v] for k, v in self.numerator.items()], "weights": list(self.weights)}

    def __str__(self) -> str:
        terms = " + ".join(f"{v}*t^{k}" for k, v in self.numerator.items()) or "0"
        return f"({terms}) / prod(1 - t^w), w = {list(self.weights)}"


def _divide_one_minus_t(num: Mapping[int, int]) -> dict[int, int]:
    # num = (1 - t) q  ->  q_k = sum_{j <= k} num_j
    out: dict[int, int] = {}
    acc = 0
    lo, hi = min(num), max(num)
    for k in range(lo, hi):
        acc += num.get(k, 0)
        if acc:
            out[k] = acc
    return out


@lru_cache(maxsize=None)
def _weighted_count(weights: tuple[int, ...], d: int) -> int:
    table = [1] + [0] * d
    for w in weights:
        for k in range(w, d + 1):
            table[k] += table[k - w]
    return table[d]


def hilbert_series(M: PresentedModule) -> HilbertSeries:
    """Exact series via the lead-term module of a Groebner basis of the relations."""
    ring = M.ring
    cover = M.cover
    if cover.rank == 0:
        return HilbertSeries({}, ring.weights)
    cols = [c for c in M.relations.columns() if not c.is_zero()]
    leads: dict[int, list[tuple[int, ...]]] = {i: [] for i in range(cover.rank)}
    if cols:
        gb = groebner_basis(cols, cover)
        for comp, e in gb.lead_terms():
            leads[comp].append(e)
    total: dict[int, int] = {}
    for comp in range(cover.rank):
        num = _numerator(tuple(leads[comp]), ring.weights)
        s = cover.shifts[comp]
        total = _poly_add(total, {k + s: v for k, v in num.items()})
    return HilbertSeries(total, ring.weights)


def hilbert_series_from_betti(betti: BettiTable, weights: Sequence[int]) -> HilbertSeries:
    num: dict[int, int] = {}
    for (i, j), v in betti.entries.items():
        num[j] = num.get(j, 0) + (-1) ** i * v
    return HilbertSeries(num, tuple(weights))


# ---------------------------------------------------------------- resolutions


def free_resolution(M: PresentedModule, length_cap: int | None = None
                    ) -> tuple[GradedFreeComplex, BettiTable]:
    """Minimal graded free resolution ``F_0 <- F_1 <- ...`` of ``M``."""
    ring = M.ring
    n = ring.nvars
    cap = n + 1 if length_cap is None else length_cap
    if cap < 0:
        raise ValueError("length_cap must be nonnegative")
    M = minimize(M)
    mods = {0: M.cover}
    diffs = {}
    if M.cover.rank and cap >= 1 and M.relations.source.rank:
        mods[1] = M.relations.source
        diffs[1] = M.relations
        i = 1
        while i < cap:
            cols = diffs[i].columns()
            E, syz = syzygies(cols, mods[i - 1], list(mods[i].shifts))
            if not syz:
                break
            degs = [s.degree() for s in syz]
            F = FreeModule(ring, tuple(degs))
            mods[i + 1] = F
            diffs[i + 1] = ModuleMap.from_columns(F, mods[i], syz)
            i += 1
    C = GradedFreeComplex(ring, mods, diffs, check=False)
    return C, BettiTable.from_complex(C)


def hom_into_module(F: GradedFreeComplex, N: PresentedModule) -> PresentedComplex:
    """``Hom(F, N)`` as a complex of presented modules, ``Hom(F_p, N)`` at index ``-p``."""
    from .complexes import hom_complex

    ring = F.ring
    L = GradedFreeComplex(ring, {0: N.cover}, {}, check=False)
    covers = hom_complex(F, L, check=False)
    R = N.relations
    G = R.source
    rels = {}
    zero = ring.zero()
    for p in range(F.lo, F.hi + 1):
        Fp = F.module(p)
        cov = covers.module(-p)
        src = FreeModule(ring, tuple(g - a for a in Fp.shifts for g in G.shifts))
        rows = [[zero] * src.rank for _ in range(cov.rank)]
        for j in range(Fp.rank):
            for r in range(G.rank):
                for i in range(N.cover.rank):
                    f = R.entries[i][r]
                    if f:
                        rows[j * N.cover.rank + i][j * G.rank + r] = f
        rels[-p] = ModuleMap(src, cov, rows)
    return PresentedComplex(covers, rels)


def ext_modules(M: PresentedModule, N: PresentedModule, indices: Iterable[int],
                resolution: GradedFreeComplex | None = None) -> dict[int, PresentedModule]:
    if resolution is None:
        resolution, _ = free_resolution(M)
    n = M.ring.nvars
    zero = PresentedModule.free(FreeModule(M.ring, ()))
    out = {}
    hom = None
    for p in indices:
        if p < 0:
            raise ValueError("Ext index must be nonnegative")
        if p > resolution.hi or p > n:
            out[p] = zero
            continue
        if hom is None:
            hom = _hom_complex_for(resolution, N)
        out[p] = homology(hom, -p)
    return out


def _hom_complex_for(F: GradedFreeComplex, N: PresentedModule):
    if N.relations.source.rank == 0:
        from .complexes import hom_complex

        L = GradedFreeComplex(F.ring, {0: N.cover}, {}, check=False)
        return hom_complex(F, L, check=False)
    return hom_into_module(F, N)


def ext_module(p: int, M: PresentedModule, N: PresentedModule,
               resolution: GradedFreeComplex | None = None) -> PresentedModule:
    """Minimal presentation of ``Ext^p(M, N) = H^p(Hom(F(M), N))``."""
    return ext_modules(M, N, [p], resolution)[p]


# ---------------------------------------------------------------- reports


@dataclass
class InvariantReport:
    dim: int
    depth: float
    projdim: int
    grade_of_annihilator: float
    betti: BettiTable
    hilbert: HilbertSeries
    flags: dict[str, bool] = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        def num(x):
            return None if x == math.inf else x

        red, order = self.hilbert.reduced()
        return {
            "dim": self.dim,
            "depth": num(self.depth),
            "projdim": self.projdim,
            "grade": num(self.grade_of_annihilator),
            "betti": self.betti.to_list(),
            "hilbert_numerator": [[k, v] for k, v in self.hilbert.numerator.items()],
            "hilbert_reduced": [[k, v] for k, v in sorted(red.items())],
            "flags": dict(sorted(self.flags.items())),
        }


def invariant_report(M: PresentedModule, ambient_dim: int | None = None,
                     s2: bool = True, resolution: tuple[GradedFreeComplex, BettiTable] | None = None
                     ) -> InvariantReport:
    """Dimension, depth, projective dimension, grade and flags of ``M``.

    ``ambient_dim`` is ``dim A`` for the maximal-Cohen-Macaulay-over-A flag
    (defaults to ``dim M``).
    """
    ring = M.ring
    n = ring.nvars
    hs = hilbert_series(M)
    if hs.is_zero():
        return InvariantReport(-1, DEPTH_ZERO, -1, DEPTH_ZERO, BettiTable({}), hs,
                               {"is_CM": False, "is_perfect": False, "is_S2": False,
                                "is_MCM_over_A": False, "zero": True})
    dim = hs.dimension
    C, betti = resolution if resolution is not None else free_resolution(M)
    projdim = betti.length
    depth = n - projdim
    ga = grade_of_annihilator(M, C)
    flags = {
        "is_CM": depth == dim,
        "is_perfect": projdim == ga,
        "is_MCM_over_A": depth == (dim if ambient_dim is None else ambient_dim),
        "zero": False,
    }
    if s2:
        flags["is_S2"] = s2_check(M, resolution=C)
    notes = {"S2_criterion": "Ext-dimension"} if s2 else {}
    return InvariantReport(dim, depth, projdim, ga, betti, hs, flags, notes)


def grade_of_annihilator(M: PresentedModule, resolution: GradedFreeComplex | None = None) -> float:
    """Least ``i`` with ``Ext^i(M, S) != 0``."""
    ring = M.ring
    if resolution is None:
        resolution, _ = free_resolution(M)
    S = PresentedModule.ring_module(ring)
    for i in range(0, ring.nvars + 1):
        E = ext_module(i, M, S, resolution)
        if E.cover.rank:
            return i
    return DEPTH_ZERO


def _quotient_by_ideal(M: PresentedModule, gens: Sequence[Polynomial]) -> PresentedModule:
    """``M / I M``."""
    cover = M.cover
    cols = list(M.relations.columns())
    degs = list(M.relations.source.shifts)
    for g in gens:
        gd = g.degrees().pop()
        for j in range(cover.rank):
            cols.append(cover.basis(j, g))
            degs.append(cover.shifts[j] + gd)
    return PresentedModule.from_columns(cover, cols, degs)


def koszul_homology(y: Sequence[Polynomial], M: PresentedModule | None = None) -> dict[int, PresentedModule]:
    K = koszul_complex(y, M)
    return {i: homology(K, i) for i in range(len(y) + 1)}


def grade(I: Sequence[Polynomial], M: PresentedModule | None = None, check: bool = True) -> int:
    """``grade(I, M)`` via Ext, cross-checked against Koszul vanishing."""
    I = [f for f in I if f]
    if not I:
        raise GradeUndefined("zero ideal")
    ring = I[0].ring
    if M is None:
        M = PresentedModule.ring_module(ring)
    if _quotient_by_ideal(M, I).is_zero():
        raise GradeUndefined("M = IM; grade is undefined")
    A = PresentedModule.quotient(ring, I)
    res, _ = free_resolution(A)
    g = None
    for i in range(0, ring.nvars + 1):
        E = ext_module(i, A, M, res)
        if E.cover.rank:
            g = i
            break
    if g is None:
        raise GradeUndefined("no nonvanishing Ext found")
    if check:
        g2 = grade_by_koszul(I, M)
        if g2 != g:
            raise AssertionError(f"grade mismatch: Ext gives {g}, Koszul gives {g2}")
    return g


def grade_by_koszul(I: Sequence[Polynomial], M: PresentedModule | None = None) -> int:
    """``l - max{i : H_i(y, M) != 0}``."""
    l = len(I)
    K = koszul_complex(list(I), M)
    for i in range(l, -1, -1):
        if homology(K, i).cover.rank:
            return l - i
    raise GradeUndefined("all Koszul homology vanishes (M = IM)")


# ---------------------------------------------------------------- Bass numbers


@dataclass(frozen=True)
class BassVector:
    mu: Mapping[int, int]

    def __getitem__(self, i: int) -> int:
        return self.mu.get(i, 0)

    def as_list(self, n: int) -> list[int]:
        return [self[i] for i in range(n + 1)]


def bass_numbers(M: PresentedModule, indices: Iterable[int] | None = None) -> BassVector:
    """``mu_i = dim_k H^i(Hom(K(x_1..x_n), M))`` (Koszul cochains on the variables)."""
    ring = M.ring
    n = ring.nvars
    idx = list(range(n + 1)) if indices is None else list(indices)
    K = koszul_complex(ring.gens(), check=False)
    C = _hom_complex_for(K, M)
    mu = {}
    for i in idx:
        if i < 0 or i > n:
            mu[i] = 0
            continue
        H = homology(C, -i)
        mu[i] = hilbert_series(H).total_length()
    return BassVector(mu)


# ---------------------------------------------------------------- duality


def _canonical_twist(ring: RingSpec) -> int:
    return sum(ring.weights)


def local_cohomology_hf(i: int, M: PresentedModule, degree_range: tuple[int, int],
                        resolution: GradedFreeComplex | None = None) -> dict[int, int]:
    """``HF(H^i_m(M))(j) = dim_k Ext^{n-i}(M, S(-n))_{-j}`` for ``j`` in the range."""
    ring = M.ring
    n = ring.nvars
    if not 0 <= i <= n:
        raise ValueError("local cohomology index out of range")
    lo, hi = degree_range
    S = PresentedModule.ring_module(ring)
    E = ext_module(n - i, M, S, resolution).twist(-_canonical_twist(ring))
    hs = hilbert_series(E)
    return {j: hs.value(-j) for j in range(lo, hi + 1)}


def local_cohomology_nonvanishing(M: PresentedModule, resolution: GradedFreeComplex | None = None
                                  ) -> list[int]:
    """Indices ``i`` with ``H^i_m(M) != 0``."""
    ring = M.ring
    n = ring.nvars
    if resolution is None:
        resolution, _ = free_resolution(M)
    S = PresentedModule.ring_module(ring)
    ext = ext_modules(M, S, range(n + 1), resolution)
    return [n - j for j in range(n, -1, -1) if ext[j].cover.rank]


def canonical_module(A: PresentedModule) -> PresentedModule:
    """``omega_A = Ext^g(A, S(-n))`` with ``g = n - dim A``; ``A`` must be Cohen-Macaulay."""
    ring = A.ring
    n = ring.nvars
    hs = hilbert_series(A)
    if hs.is_zero():
        raise NotCohenMacaulay("zero module has no canonical module")
    dim = hs.dimension
    C, betti = free_resolution(A)
    depth = n - betti.length
    if depth != dim:
        raise NotCohenMacaulay(f"not Cohen-Macaulay: depth {depth} < dim {dim}")
    S = PresentedModule.ring_module(ring, _canonical_twist(ring))
    return ext_module(n - dim, A, S, C)


def s2_check(M: PresentedModule, resolution: GradedFreeComplex | None = None) -> bool:
    """Serre's S2 via the Ext criterion: ``dim Ext^{n-i}(M, S) <= i - 2`` for ``i < dim M``."""
    ring = M.ring
    n = ring.nvars
    hs = hilbert_series(M)
    if hs.is_zero():
        raise ValueError("S2 check of the zero module")
    dim = hs.dimension
    if resolution is None:
        resolution, _ = free_resolution(M)
    S = PresentedModule.ring_module(ring)
    ext = ext_modules(M, S, [n - i for i in range(dim)], resolution)
    for i in range(dim):
        E = ext[n - i]
        if E.cover.rank and hilbert_series(E).dimension > i - 2:
            return False
    return True
