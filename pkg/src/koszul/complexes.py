"""Graded free complexes, presented modules and their homology.

Complexes are indexed homologically: ``d_i : C_i -> C_{i-1}``.  A cochain
complex ``C^n`` is stored as the chain complex with ``C_{-n} = C^n``, so
``cohomology(C, n) == homology(C, -n)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Mapping, Sequence

from .groebner import (
    FreeModule,
    InhomogeneousError,
    ModuleElement,
    combination,
    minimal_generators,
    syzygies,
)
from .ring import Homogeneous, Polynomial, RingMismatch, RingSpec, homogeneity

__all__ = [
    "ModuleMap",
    "GradedFreeComplex",
    "PresentedModule",
    "PresentedComplex",
    "BettiTable",
    "ComplexError",
    "koszul_complex",
    "hom_complex",
    "tensor_total",
    "homology",
    "cohomology",
    "minimize",
    "dual_complex",
]


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class ModuleMap:
    """Matrix of polynomials, ``entries[i][j]`` = coefficient of target ``e_i`` in the image of source ``e_j``."""

    source: FreeModule
    target: FreeModule
    entries: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self):
        ent = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", ent)
        if len(ent) != self.target.rank or any(len(r) != self.source.rank for r in ent):
            raise ComplexError("matrix shape does not match source/target ranks")
        for i, row in enumerate(ent):
            for j, f in enumerate(row):
                if not f:
                    continue
                h = homogeneity(f)
                want = self.source.shifts[j] - self.target.shifts[i]
                if not isinstance(h, Homogeneous) or h.degree != want:
                    raise ComplexError(f"entry ({i},{j}) = {f} is not homogeneous of degree {want}")

    @classmethod
    def from_columns(cls, source: FreeModule, target: FreeModule,
                     columns: Sequence[ModuleElement]) -> "ModuleMap":
        rows = [[columns[j].components[i] for j in range(source.rank)] for i in range(target.rank)]
        return cls(source, target, rows)

    @classmethod
    def zero(cls, source: FreeModule, target: FreeModule) -> "ModuleMap":
        z = source.ring.zero()
        return cls(source, target, [[z] * source.rank for _ in range(target.rank)])

    @classmethod
    def identity(cls, F: FreeModule) -> "ModuleMap":
        ring = F.ring
        return cls(F, F, [[ring.one() if i == j else ring.zero() for j in range(F.rank)]
                          for i in range(F.rank)])

    @property
    def ring(self) -> RingSpec:
        return self.source.ring

    def column(self, j: int) -> ModuleElement:
        return ModuleElement(self.target, tuple(row[j] for row in self.entries))

    def columns(self) -> list[ModuleElement]:
        return [self.column(j) for j in range(self.source.rank)]

    def is_zero(self) -> bool:
        return not any(f for row in self.entries for f in row)

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        """Composition ``self o other``."""
        if other.target.rank != self.source.rank:
            raise ComplexError("maps are not composable")
        ring = self.ring
        rows = []
        for i in range(self.target.rank):
            row = []
            for j in range(other.source.rank):
                acc = ring.zero()
                for k in range(self.source.rank):
                    a = self.entries[i][k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return ModuleMap(other.source, self.target, rows)

    def scaled(self, c) -> "ModuleMap":
        return ModuleMap(self.source, self.target, [[f.scale(c) for f in r] for r in self.entries])

    def transpose(self) -> "ModuleMap":
        """Dual map ``Hom(target, S) -> Hom(source, S)``."""
        src = FreeModule(self.ring, tuple(-s for s in self.target.shifts))
        tgt = FreeModule(self.ring, tuple(-s for s in self.source.shifts))
        rows = [[self.entries[i][j] for i in range(self.target.rank)] for j in range(self.source.rank)]
        return ModuleMap(src, tgt, rows)

    def to_json(self) -> dict:
        return {
            "source_shifts": list(self.source.shifts),
            "target_shifts": list(self.target.shifts),
            "entries": [[f.to_text() for f in row] for row in self.entries],
        }


def _twist_free(F: FreeModule, a: int) -> FreeModule:
    return FreeModule(F.ring, tuple(s + a for s in F.shifts))


class GradedFreeComplex:
    """Chain complex of graded free modules with ``d_i : C_i -> C_{i-1}``."""

    def __init__(self, ring: RingSpec, modules: Mapping[int, FreeModule],
                 differentials: Mapping[int, ModuleMap], check: bool = True):
        self.ring = ring
        self.modules = dict(sorted(modules.items()))
        if not self.modules:
            raise ComplexError("empty complex")
        self.lo = min(self.modules)
        self.hi = max(self.modules)
        for i in range(self.lo, self.hi + 1):
            self.modules.setdefault(i, FreeModule(ring, ()))
        self.modules = dict(sorted(self.modules.items()))
        self.differentials = {}
        for i in range(self.lo, self.hi + 2):
            src = self.module(i)
            tgt = self.module(i - 1)
            d = differentials.get(i)
            if d is None:
                d = ModuleMap.zero(src, tgt)
            elif d.source != src or d.target != tgt:
                raise ComplexError(f"differential d_{i} has the wrong source or target")
            self.differentials[i] = d
        if check:
            self.check()

    def module(self, i: int) -> FreeModule:
        return self.modules.get(i, FreeModule(self.ring, ()))

    def d(self, i: int) -> ModuleMap:
        if i in self.differentials:
            return self.differentials[i]
        return ModuleMap.zero(self.module(i), self.module(i - 1))

    def ranks(self) -> dict[int, int]:
        return {i: F.rank for i, F in self.modules.items()}

    def check(self) -> None:
        for i in range(self.lo + 1, self.hi + 1):
            if not (self.d(i) @ self.d(i + 1)).is_zero():
                raise ComplexError(f"d_{i} o d_{i + 1} != 0")

    def twist(self, a: int) -> "GradedFreeComplex":
        mods = {i: _twist_free(F, a) for i, F in self.modules.items()}
        diffs = {i: ModuleMap(mods.get(i, FreeModule(self.ring, ())), mods.get(i - 1, FreeModule(self.ring, ())),
                              d.entries)
                 for i, d in self.differentials.items() if self.lo <= i <= self.hi}
        return GradedFreeComplex(self.ring, mods, diffs, check=False)

    def to_json(self) -> str:
        return json.dumps({
            "ring": self.ring.describe(),
            "modules": {str(i): list(F.shifts) for i, F in self.modules.items()},
            "differentials": {str(i): d.to_json()["entries"] for i, d in self.differentials.items()
                              if self.lo < i <= self.hi},
        }, sort_keys=True)


@dataclass(frozen=True)
class PresentedModule:
    """``coker(relations : G -> cover)``."""

    ring: RingSpec
    cover: FreeModule
    relations: ModuleMap

    def __post_init__(self):
        if self.relations.target != self.cover:
            raise ComplexError("relations must map into the cover")

    @classmethod
    def free(cls, F: FreeModule) -> "PresentedModule":
        return cls(F.ring, F, ModuleMap.zero(FreeModule(F.ring, ()), F))

    @classmethod
    def ring_module(cls, ring: RingSpec, shift: int = 0) -> "PresentedModule":
        return cls.free(FreeModule(ring, (shift,)))

    @classmethod
    def quotient(cls, ring: RingSpec, gens: Sequence[Polynomial]) -> "PresentedModule":
        """``S / (gens)`` with the given (homogeneous) generators as relations."""
        F = FreeModule(ring, (0,))
        cols = [ModuleElement(F, (g,)) for g in gens if g]
        degs = []
        for g in gens:
            if not g:
                continue
            h = homogeneity(g)
            if not isinstance(h, Homogeneous):
                raise InhomogeneousError(f"{g} is not homogeneous")
            degs.append(h.degree)
        G = FreeModule(ring, tuple(degs))
        return cls(ring, F, ModuleMap.from_columns(G, F, cols))

    @classmethod
    def from_columns(cls, cover: FreeModule, cols: Sequence[ModuleElement],
                     degrees: Sequence[int] | None = None) -> "PresentedModule":
        if degrees is None:
            degrees = [c.degree() for c in cols]
        keep = [(c, d) for c, d in zip(cols, degrees) if not c.is_zero()]
        G = FreeModule(cover.ring, tuple(d for _, d in keep))
        return cls(cover.ring, cover, ModuleMap.from_columns(G, cover, [c for c, _ in keep]))

    @property
    def rank(self) -> int:
        return self.cover.rank

    def twist(self, a: int) -> "PresentedModule":
        """``M(a)``: degrees lowered by ``a``."""
        cov = self.cover.twist(a)
        src = self.relations.source.twist(a)
        return PresentedModule(self.ring, cov, ModuleMap(src, cov, self.relations.entries))

    def is_zero(self) -> bool:
        return minimize(self).cover.rank == 0

    def generator_degrees(self) -> list[int]:
        return list(self.cover.shifts)

    def relation_columns(self) -> list[ModuleElement]:
        return self.relations.columns()

    def to_json(self) -> dict:
        return {"cover": list(self.cover.shifts), "relations": self.relations.to_json()}

    def __str__(self) -> str:
        return f"coker(rank {self.cover.rank} <- {self.relations.source.rank} relations)"


class PresentedComplex:
    """Chain complex of presented modules ``C_i = coker(R_i : G_i -> F_i)``.

    ``covers`` is a complex of free modules whose differentials map the
    relation submodules into each other.
    """

    def __init__(self, covers: GradedFreeComplex, relations: Mapping[int, ModuleMap]):
        self.covers = covers
        self.ring = covers.ring
        self.lo, self.hi = covers.lo, covers.hi
        self.relations = {}
        for i in range(self.lo - 1, self.hi + 2):
            R = relations.get(i)
            F = covers.module(i)
            if R is None:
                R = ModuleMap.zero(FreeModule(self.ring, ()), F)
            elif R.target != F:
                raise ComplexError(f"relations at {i} do not map into the cover")
            self.relations[i] = R

    def module(self, i: int) -> PresentedModule:
        return PresentedModule(self.ring, self.covers.module(i), self.relation(i))

    def relation(self, i: int) -> ModuleMap:
        if i in self.relations:
            return self.relations[i]
        return ModuleMap.zero(FreeModule(self.ring, ()), self.covers.module(i))


# ---------------------------------------------------------------- constructions


def _check_generators(y: Sequence[Polynomial]) -> list[int]:
    if not y:
        raise ComplexError("need at least one generator")
    degs = []
    ring = y[0].ring
    for f in y:
        if f.ring != ring:
            raise RingMismatch("generators live in different rings")
        if not f:
            raise ComplexError("zero generator")
        h = homogeneity(f)
        if not isinstance(h, Homogeneous):
            raise InhomogeneousError(f"generator {f} is not homogeneous")
        degs.append(h.degree)
    return degs


def koszul_complex(y: Sequence[Polynomial], coeff: PresentedModule | None = None,
                   check: bool = True):
    """Koszul complex on ``y``; with ``coeff`` the complex ``K(y) (x) M`` of presented modules.

    ``d(e_J) = sum_k (-1)^k y_{j_k} e_{J - j_k}`` over the sorted subset ``J``.
    """
    degs = _check_generators(y)
    ring = y[0].ring
    l = len(y)
    subsets = {p: list(combinations(range(l), p)) for p in range(l + 1)}
    mods = {p: FreeModule(ring, tuple(sum(degs[j] for j in J) for J in subsets[p])) for p in range(l + 1)}
    diffs = {}
    zero = ring.zero()
    for p in range(1, l + 1):
        index = {J: r for r, J in enumerate(subsets[p - 1])}
        rows = [[zero] * len(subsets[p]) for _ in subsets[p - 1]]
        for c, J in enumerate(subsets[p]):
            for k, j in enumerate(J):
                r = index[J[:k] + J[k + 1:]]
                rows[r][c] = y[j] if k % 2 == 0 else -y[j]
        diffs[p] = ModuleMap(mods[p], mods[p - 1], rows)
    K = GradedFreeComplex(ring, mods, diffs, check=check)
    if coeff is None:
        return K
    return tensor_with_module(K, coeff, check=check)


def _kron_identity(d: ModuleMap, F: FreeModule, src: FreeModule, tgt: FreeModule) -> ModuleMap:
    """``d (x) id_F`` with basis order (basis of d's side) x (basis of F)."""
    ring = d.ring
    zero = ring.zero()
    r = F.rank
    rows = [[zero] * src.rank for _ in range(tgt.rank)]
    for i, row in enumerate(d.entries):
        for j, f in enumerate(row):
            if f:
                for k in range(r):
                    rows[i * r + k][j * r + k] = f
    return ModuleMap(src, tgt, rows)


def _tensor_free(A: FreeModule, B: FreeModule) -> FreeModule:
    return FreeModule(A.ring, tuple(a + b for a in A.shifts for b in B.shifts))


def tensor_with_module(C: GradedFreeComplex, M: PresentedModule, check: bool = True) -> PresentedComplex:
    """``C (x) M`` for a free complex ``C`` and ``M = coker(R : G -> F)``."""
    F, R = M.cover, M.relations
    mods = {i: _tensor_free(C.module(i), F) for i in C.modules}
    diffs = {i: _kron_identity(C.d(i), F, mods[i], mods[i - 1])
             for i in range(C.lo + 1, C.hi + 1)}
    covers = GradedFreeComplex(C.ring, mods, diffs, check=check)
    rels = {}
    for i in C.modules:
        Ci = C.module(i)
        G = _tensor_free(Ci, R.source)
        zero = C.ring.zero()
        rows = [[zero] * G.rank for _ in range(mods[i].rank)]
        g = R.source.rank
        for a in range(Ci.rank):
            for k in range(F.rank):
                for j in range(g):
                    f = R.entries[k][j]
                    if f:
                        rows[a * F.rank + k][a * g + j] = f
        rels[i] = ModuleMap(G, mods[i], rows)
    return PresentedComplex(covers, rels)


def _hom_free(A: FreeModule, B: FreeModule) -> FreeModule:
    """``Hom(A, B)`` with basis ``E_{ij}`` (``e_j -> f_i``), ordered by ``(j, i)``."""
    return FreeModule(A.ring, tuple(b - a for a in A.shifts for b in B.shifts))


def hom_complex(K: GradedFreeComplex, L: GradedFreeComplex, check: bool = True) -> GradedFreeComplex:
    """``Hom(K, L)_n = prod_p Hom(K_p, L_{p+n})`` with ``D f = d_L f - (-1)^n f d_K``."""
    if K.ring != L.ring:
        raise RingMismatch("complexes over different rings")
    ring = K.ring
    lo, hi = L.lo - K.hi, L.hi - K.lo
    blocks: dict[int, list[int]] = {}
    mods = {}
    offsets: dict[tuple[int, int], int] = {}
    for n in range(lo, hi + 1):
        shifts: list[int] = []
        blocks[n] = []
        for p in range(K.lo, K.hi + 1):
            q = p + n
            if not (L.lo <= q <= L.hi):
                continue
            offsets[(n, p)] = len(shifts)
            blocks[n].append(p)
            shifts.extend(_hom_free(K.module(p), L.module(q)).shifts)
        mods[n] = FreeModule(ring, tuple(shifts))
    zero = ring.zero()
    diffs = {}
    for n in range(lo + 1, hi + 1):
        rows = [[zero] * mods[n].rank for _ in range(mods[n - 1].rank)]
        sign = -1 if n % 2 == 0 else 1  # -(-1)^n
        for p in blocks[n]:
            q = p + n
            Kp, Lq = K.module(p), L.module(q)
            base = offsets[(n, p)]
            dL = L.d(q)  # L_q -> L_{q-1}
            dK = K.d(p + 1)  # K_{p+1} -> K_p
            for j in range(Kp.rank):
                for i in range(Lq.rank):
                    col = base + j * Lq.rank + i
                    if (n - 1, p) in offsets and q - 1 >= L.lo:
                        tb = offsets[(n - 1, p)]
                        Lq1 = L.module(q - 1)
                        for k in range(Lq1.rank):
                            f = dL.entries[k][i]
                            if f:
                                rows[tb + j * Lq1.rank + k][col] = rows[tb + j * Lq1.rank + k][col] + f
                    if (n - 1, p + 1) in offsets and p + 1 <= K.hi:
                        tb = offsets[(n - 1, p + 1)]
                        for m in range(K.module(p + 1).rank):
                            f = dK.entries[j][m]
                            if f:
                                r = tb + m * Lq.rank + i
                                rows[r][col] = rows[r][col] + f.scale(sign)
        diffs[n] = ModuleMap(mods[n], mods[n - 1], rows)
    return GradedFreeComplex(ring, mods, diffs, check=check)


def ring_complex(ring: RingSpec, shift: int = 0) -> GradedFreeComplex:
    return GradedFreeComplex(ring, {0: FreeModule(ring, (shift,))}, {})


def dual_complex(C: GradedFreeComplex, check: bool = True) -> GradedFreeComplex:
    """``Hom(C, S)``; its cohomology ``H^n`` is ``homology(result, -n)``."""
    return hom_complex(C, ring_complex(C.ring), check=check)


def tensor_total(F: GradedFreeComplex, K: GradedFreeComplex, check: bool = True) -> GradedFreeComplex:
    """``Tot(F (x) K)`` with ``d(a (x) b) = da (x) b + (-1)^{|a|} a (x) db``."""
    if F.ring != K.ring:
        raise RingMismatch("complexes over different rings")
    ring = F.ring
    lo, hi = F.lo + K.lo, F.hi + K.hi
    mods = {}
    offsets: dict[tuple[int, int], int] = {}
    for n in range(lo, hi + 1):
        shifts: list[int] = []
        for p in range(F.lo, F.hi + 1):
            q = n - p
            if not (K.lo <= q <= K.hi):
                continue
            offsets[(p, q)] = len(shifts)
            shifts.extend(_tensor_free(F.module(p), K.module(q)).shifts)
        mods[n] = FreeModule(ring, tuple(shifts))
    zero = ring.zero()
    diffs = {}
    for n in range(lo + 1, hi + 1):
        rows = [[zero] * mods[n].rank for _ in range(mods[n - 1].rank)]
        for p in range(F.lo, F.hi + 1):
            q = n - p
            if (p, q) not in offsets:
                continue
            Fp, Kq = F.module(p), K.module(q)
            base = offsets[(p, q)]
            dF, dK = F.d(p), K.d(q)
            sign = 1 if p % 2 == 0 else -1
            for a in range(Fp.rank):
                for b in range(Kq.rank):
                    col = base + a * Kq.rank + b
                    if (p - 1, q) in offsets:
                        tb = offsets[(p - 1, q)]
                        for a2 in range(F.module(p - 1).rank):
                            f = dF.entries[a2][a]
                            if f:
                                rows[tb + a2 * Kq.rank + b][col] = f
                    if (p, q - 1) in offsets:
                        tb = offsets[(p, q - 1)]
                        Kq1 = K.module(q - 1)
                        for b2 in range(Kq1.rank):
                            f = dK.entries[b2][b]
                            if f:
                                rows[tb + a * Kq1.rank + b2][col] = f.scale(sign)
        diffs[n] = ModuleMap(mods[n], mods[n - 1], rows)
    return GradedFreeComplex(ring, mods, diffs, check=check)


# ---------------------------------------------------------------- homology


def _project(elts: Sequence[ModuleElement], target: FreeModule) -> list[ModuleElement]:
    k = target.rank
    return [ModuleElement(target, e.components[:k]) for e in elts]


def _zero_free(ring: RingSpec) -> FreeModule:
    return FreeModule(ring, ())


def subquotient(cover: FreeModule, gens: Sequence[ModuleElement],
                relations: Sequence[ModuleElement], relation_degrees: Sequence[int] | None = None
                ) -> PresentedModule:
    """Presentation of ``(span gens + N) / N`` where ``N = span relations``."""
    ring = cover.ring
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return PresentedModule.free(_zero_free(ring))
    gdeg = [g.degree() for g in gens]
    keep = minimal_generators(gens, cover)
    gens = [gens[k] for k in keep]
    gdeg = [gdeg[k] for k in keep]
    Z = FreeModule(ring, tuple(gdeg))
    rels = [r for r in relations]
    rdeg = list(relation_degrees) if relation_degrees is not None else [r.degree() for r in rels]
    pairs = [(r, d) for r, d in zip(rels, rdeg) if not r.is_zero()]
    all_gens = gens + [r for r, _ in pairs]
    degs = gdeg + [d for _, d in pairs]
    _, syz = syzygies(all_gens, cover, degs)
    proj = [s for s in _project(syz, Z) if not s.is_zero()]
    return minimize(PresentedModule.from_columns(Z, proj))


def _homology_parts(C, i: int):
    if isinstance(C, PresentedComplex):
        covers = C.covers
        R_prev = C.relation(i - 1).columns()
        R_prev_deg = list(C.relation(i - 1).source.shifts)
        R_here = C.relation(i).columns()
        R_here_deg = list(C.relation(i).source.shifts)
    else:
        covers = C
        R_prev, R_prev_deg, R_here, R_here_deg = [], [], [], []
    return covers, R_prev, R_prev_deg, R_here, R_here_deg


def cycles(C, i: int) -> list[ModuleElement]:
    """Generators of ``ker(C_i -> C_{i-1})`` lifted to the cover ``F_i``."""
    covers, R_prev, R_prev_deg, _, _ = _homology_parts(C, i)
    Fi = covers.module(i)
    D = covers.d(i)
    if Fi.rank == 0:
        return []
    cols = D.columns()
    if all(c.is_zero() for c in cols) or covers.module(i - 1).rank == 0:
        return [Fi.basis(j) for j in range(Fi.rank)]
    gens = cols + R_prev
    degs = list(Fi.shifts) + R_prev_deg
    _, syz = syzygies(gens, covers.module(i - 1), degs)
    return [s for s in _project(syz, Fi) if not s.is_zero()]


def homology(C, i: int) -> PresentedModule:
    """Minimal presentation of ``ker d_i / im d_{i+1}``."""
    if not (C.lo <= i <= C.hi):
        raise ComplexError(f"index {i} outside [{C.lo}, {C.hi}]")
    covers, _, _, R_here, R_here_deg = _homology_parts(C, i)
    Z = cycles(C, i)
    B = covers.d(i + 1).columns() + R_here
    Bdeg = list(covers.module(i + 1).shifts) + R_here_deg
    return subquotient(covers.module(i), Z, B, Bdeg)


def cohomology(C, n: int) -> PresentedModule:
    return homology(C, -n)


# ---------------------------------------------------------------- minimize


def minimize(M: PresentedModule) -> PresentedModule:
    """Eliminate unit entries, then keep a minimal generating set of relations."""
    ring = M.ring
    fld = ring.field
    shifts = list(M.cover.shifts)
    cols = [list(c.components) for c in M.relations.columns()]
    cdeg = list(M.relations.source.shifts)
    rows_alive = list(range(len(shifts)))
    changed = True
    while changed:
        changed = False
        for j, col in enumerate(cols):
            piv = next((r for r, f in enumerate(col) if f and f.is_constant()), None)
            if piv is None:
                continue
            c = col[piv].constant_value()
            inv = fld.inv(c)
            new_cols = []
            new_deg = []
            for j2, col2 in enumerate(cols):
                if j2 == j:
                    continue
                a = col2[piv]
                if a:
                    factor = a.scale(inv)
                    col2 = [x - factor * y if y else x for x, y in zip(col2, col)]
                new_cols.append(col2[:piv] + col2[piv + 1:])
                new_deg.append(cdeg[j2])
            cols = new_cols
            cdeg = new_deg
            del shifts[piv]
            del rows_alive[piv]
            changed = True
            break
    cover = FreeModule(ring, tuple(shifts))
    elems = [ModuleElement(cover, tuple(c)) for c in cols]
    pairs = [(e, d) for e, d in zip(elems, cdeg) if not e.is_zero()]
    if pairs and cover.rank:
        keep = minimal_generators([e for e, _ in pairs], cover)
        pairs = [pairs[k] for k in keep]
    else:
        pairs = []
    G = FreeModule(ring, tuple(d for _, d in pairs))
    return PresentedModule(ring, cover, ModuleMap.from_columns(G, cover, [e for e, _ in pairs]))


# ---------------------------------------------------------------- Betti tables


@dataclass(frozen=True)
class BettiTable:
    """``entries[(i, j)] = beta_{i,j}``: rank of the degree-``j`` part of ``F_i``."""

    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in sorted(self.entries.items()) if v})

    @classmethod
    def from_complex(cls, C: GradedFreeComplex) -> "BettiTable":
        out: dict[tuple[int, int], int] = {}
        for i, F in C.modules.items():
            for s in F.shifts:
                out[(i, s)] = out.get((i, s), 0) + 1
        return cls(out)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def totals(self) -> list[int]:
        if not self.entries:
            return []
        top = max(i for i, _ in self.entries)
        return [self.total(i) for i in range(top + 1)]

    @property
    def length(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def shifted(self, a: int) -> "BettiTable":
        return BettiTable({(i, j + a): v for (i, j), v in self.entries.items()})

    def to_list(self) -> list[list[int]]:
        return [[i, j, v] for (i, j), v in self.entries.items()]

    def __str__(self) -> str:
        if not self.entries:
            return "(zero)"
        cols = range(0, self.length + 1)
        rows = sorted({j - i for i, j in self.entries})
        lines = ["      " + " ".join(f"{i:>4}" for i in cols)]
        for r in rows:
            vals = [self.entries.get((i, i + r), 0) for i in cols]
            lines.append(f"{r:>4}: " + " ".join(f"{v:>4}" if v else "   ." for v in vals))
        lines.append("total " + " ".join(f"{self.total(i):>4}" for i in cols))
        return "\n".join(lines)


def koszul_ranks(l: int) -> list[int]:
    return [comb(l, p) for p in range(l + 1)]
