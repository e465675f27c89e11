"""Groebner bases of homogeneous submodules of graded free modules.

The engine packs a module term ``x^a e_i`` into one integer whose natural
ordering is the module order (weighted degree, then an optional block
index, then the ring order on ``a``, then position).  The packing is
linear, so multiplying a term by a monomial is integer addition and the
quotient of two terms is their difference.  Every computation is
homogeneous and proceeds degree by degree (normal selection strategy),
which is what lets minimal generators and minimal syzygies be read off
during a single Buchberger run.
"""

from __future__ import annotations

import hashlib
import heapq
import os
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from pathlib import Path
from typing import Iterable, Sequence

from .ring import Homogeneous, Polynomial, RingMismatch, RingSpec, homogeneity

__all__ = [
    "FreeModule",
    "ModuleElement",
    "GroebnerBasis",
    "InhomogeneousError",
    "groebner_basis",
    "normal_form",
    "syzygies",
    "lead_module",
    "minimal_generators",
    "verify_buchberger",
    "GBCache",
]

_W = 16
_EXP_LIMIT = (1 << (_W - 1)) - 1


class InhomogeneousError(ValueError):
    pass


@dataclass(frozen=True)
class FreeModule:
    """Graded free module; basis element ``e_i`` has degree ``shifts[i]``."""

    ring: RingSpec
    shifts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "shifts", tuple(int(s) for s in self.shifts))

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def zero(self) -> "ModuleElement":
        return ModuleElement(self, tuple(self.ring.zero() for _ in self.shifts))

    def basis(self, i: int, coeff: Polynomial | None = None) -> "ModuleElement":
        comps = [self.ring.zero()] * self.rank
        comps[i] = coeff if coeff is not None else self.ring.one()
        return ModuleElement(self, tuple(comps))

    def element(self, components: Sequence) -> "ModuleElement":
        ring = self.ring
        comps = tuple(ring.parse(c) if isinstance(c, str) else
                      (c if isinstance(c, Polynomial) else ring.const(c)) for c in components)
        return ModuleElement(self, comps)

    def __add__(self, other: "FreeModule") -> "FreeModule":
        if self.ring != other.ring:
            raise RingMismatch("free modules over different rings")
        return FreeModule(self.ring, self.shifts + other.shifts)

    def twist(self, a: int) -> "FreeModule":
        """``F(a)``: every basis degree lowered by ``a``."""
        return FreeModule(self.ring, tuple(s - a for s in self.shifts))


@dataclass(frozen=True)
class ModuleElement:
    ambient: FreeModule
    components: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if len(self.components) != self.ambient.rank:
            raise ValueError("component count differs from rank")

    def is_zero(self) -> bool:
        return not any(self.components)

    def degree(self):
        """Total degree, or ``None`` for the zero element; raises if inhomogeneous."""
        degs = set()
        for c, s in zip(self.components, self.ambient.shifts):
            for d in c.degrees():
                degs.add(d + s)
        if len(degs) > 1:
            raise InhomogeneousError("inhomogeneous module element")
        return degs.pop() if degs else None

    def is_homogeneous(self) -> bool:
        try:
            self.degree()
        except InhomogeneousError:
            return False
        return True

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        _same(self.ambient, other.ambient)
        return ModuleElement(self.ambient, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        _same(self.ambient, other.ambient)
        return ModuleElement(self.ambient, tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self):
        return ModuleElement(self.ambient, tuple(-a for a in self.components))

    def scale(self, f) -> "ModuleElement":
        if not isinstance(f, Polynomial):
            f = self.ambient.ring.const(f)
        return ModuleElement(self.ambient, tuple(f * a for a in self.components))

    def __getitem__(self, i: int) -> Polynomial:
        return self.components[i]

    def to_text(self) -> str:
        return "[" + ", ".join(c.to_text() for c in self.components) + "]"

    __str__ = to_text


def _same(a: FreeModule, b: FreeModule) -> None:
    if a != b:
        raise ValueError("elements live in different free modules")


def combination(ambient: FreeModule, coeffs: Sequence[Polynomial],
                gens: Sequence[ModuleElement]) -> ModuleElement:
    """``sum coeffs[i] * gens[i]``."""
    comps = [ambient.ring.zero()] * ambient.rank
    for c, g in zip(coeffs, gens):
        if not c:
            continue
        for k, x in enumerate(g.components):
            if x:
                comps[k] = comps[k] + c * x
    return ModuleElement(ambient, tuple(comps))


# ---------------------------------------------------------------- packing


class _Layout:
    """Integer packing of module terms for one ring and one list of components."""

    def __init__(self, ring: RingSpec, shifts: Sequence[int], blocks: Sequence[int] | None = None):
        n = ring.nvars
        self.ring = ring
        self.n = n
        self.p = ring.characteristic
        self.weights = ring.weights
        self.revlex = ring.order == "degrevlex"
        self.Bn = 1 << (_W * n)
        self.guard = sum(1 << (_W * i + _W - 1) for i in range(n))
        self.mask = (1 << _W) - 1
        self.pos = [_W * i for i in range(n)] if self.revlex else [_W * (n - 1 - i) for i in range(n)]
        self.shifts = list(shifts)
        self.blocks = list(blocks) if blocks is not None else [0] * len(self.shifts)
        self.nc = max(1, len(self.shifts))

    def pack(self, exps: Sequence[int]) -> int:
        L = 0
        for e, s in zip(exps, self.pos):
            if e > _EXP_LIMIT:
                raise OverflowError("exponent too large for the packed representation")
            L |= e << s
        return L

    def unpack(self, L: int) -> tuple[int, ...]:
        m = self.mask
        return tuple((L >> s) & m for s in self.pos)

    def term(self, exps: Sequence[int], comp: int) -> int:
        d = 0
        for e, w in zip(exps, self.weights):
            d += e * w
        L = self.pack(exps)
        top = (2 * (d + self.shifts[comp]) + self.blocks[comp]) * self.Bn
        Y = top - L if self.revlex else top + L
        return Y * self.nc + (self.nc - 1 - comp)

    def decode(self, T: int) -> tuple[int, int]:
        nc = self.nc
        Y, r = divmod(T, nc)
        Bn = self.Bn
        if self.revlex:
            q = -((-Y) // Bn)
            return nc - 1 - r, q * Bn - Y
        q = Y // Bn
        return nc - 1 - r, Y - q * Bn

    def tdeg(self, T: int) -> int:
        comp, L = self.decode(T)
        return sum(e * w for e, w in zip(self.unpack(L), self.weights)) + self.shifts[comp]

    def from_components(self, comps: Sequence[Polynomial], offset: int = 0) -> dict:
        out = {}
        for i, poly in enumerate(comps):
            for e, c in poly.terms.items():
                out[self.term(e, i + offset)] = c
        return out

    def to_components(self, terms: dict | Iterable, coeffs=None, lo: int = 0, hi: int | None = None,
                      ring: RingSpec | None = None) -> list[Polynomial]:
        hi = self.nc if hi is None else hi
        ring = ring or self.ring
        buckets: list[dict] = [dict() for _ in range(hi - lo)]
        items = terms.items() if coeffs is None else zip(terms, coeffs)
        for T, c in items:
            comp, L = self.decode(T)
            if lo <= comp < hi:
                buckets[comp - lo][self.unpack(L)] = c
        return [Polynomial(ring, b, _clean=True) for b in buckets]


class _Elt:
    __slots__ = ("terms", "coeffs", "comp", "L", "exps", "tdeg", "blk", "origin")

    def __init__(self, layout: _Layout, terms, coeffs, tdeg, origin):
        self.terms = terms
        self.coeffs = coeffs
        self.comp, self.L = layout.decode(terms[0])
        self.exps = layout.unpack(self.L)
        self.tdeg = tdeg
        self.blk = layout.blocks[self.comp]
        self.origin = origin


class _Reducer:
    def __init__(self, layout: _Layout):
        self.layout = layout
        self.by_comp: dict[int, list] = defaultdict(list)
        self.hit: dict[int, _Elt] = {}
        self.miss: set[int] = set()

    def add(self, elt: _Elt) -> None:
        self.by_comp[elt.comp].append((elt.L, elt))
        self.miss.clear()

    def find(self, T: int):
        e = self.hit.get(T)
        if e is not None:
            return e
        if T in self.miss:
            return None
        comp, L = self.layout.decode(T)
        G = self.layout.guard
        LG = L | G
        for L0, elt in self.by_comp.get(comp, ()):
            if (LG - L0) & G == G:
                self.hit[T] = elt
                return elt
        self.miss.add(T)
        return None


def _reduce(f: dict, reducer: _Reducer, p: int) -> dict:
    """Full reduction of ``f`` (consumed); returns the remainder, descending."""
    heap = [-t for t in f]
    heapq.heapify(heap)
    rem = {}
    find = reducer.find
    pop = heapq.heappop
    push = heapq.heappush
    while heap:
        t = -pop(heap)
        c = f.pop(t, None)
        if c is None:
            continue
        g = find(t)
        if g is None:
            rem[t] = c
            continue
        delta = t - g.terms[0]
        it = zip(g.terms, g.coeffs)
        next(it)
        if p:
            for tg, cg in it:
                k = tg + delta
                old = f.get(k)
                if old is None:
                    f[k] = -c * cg % p
                    push(heap, -k)
                else:
                    v = (old - c * cg) % p
                    if v:
                        f[k] = v
                    else:
                        del f[k]
        else:
            for tg, cg in it:
                k = tg + delta
                old = f.get(k)
                if old is None:
                    f[k] = -c * cg
                    push(heap, -k)
                else:
                    v = old - c * cg
                    if v:
                        f[k] = v
                    else:
                        del f[k]
    return rem


def _make_elt(layout: _Layout, rem: dict, tdeg: int, origin) -> _Elt:
    terms = list(rem)
    c0 = rem[terms[0]]
    p = layout.p
    if p:
        inv = pow(c0, -1, p)
        coeffs = [c * inv % p for c in rem.values()]
    else:
        inv = 1 / Fraction(c0)
        coeffs = [c * inv for c in rem.values()]
    return _Elt(layout, terms, coeffs, tdeg, origin)


def _spair(a: _Elt, b: _Elt, T: int, p: int) -> dict:
    da = T - a.terms[0]
    db = T - b.terms[0]
    f = {t + da: c for t, c in zip(a.terms[1:], a.coeffs[1:])}
    for t, c in zip(b.terms[1:], b.coeffs[1:]):
        k = t + db
        v = f.get(k, 0) - c
        if p:
            v %= p
        if v:
            f[k] = v
        else:
            f.pop(k, None)
    return f


@dataclass
class _RunResult:
    basis: list  # list[_Elt]
    minimal_inputs: list  # indices of inputs that are minimal generators
    new_syz: list  # list[_Elt] new minimal syzygies (lead in block 0, augmented runs only)


def _buchberger(layout: _Layout, inputs: Sequence[tuple[int, dict]], *, product_criterion: bool,
                augmented: bool = False, degree_bound: int | None = None) -> _RunResult:
    """Homogeneous Buchberger with Gebauer-Moeller pair management.

    ``inputs`` are ``(degree, terms)`` pairs.  When ``augmented`` the
    layout has block 1 on the ambient components and block 0 on the
    tracking components; elements whose leading term lands in block 0
    are syzygies.
    """
    p = layout.p
    basis: list[_Elt] = []
    reducer = _Reducer(layout)
    pending: dict[int, dict] = defaultdict(dict)  # degree -> {(i, j): (T, L)}
    degree_heap: list[int] = []
    by_deg: dict[int, list] = defaultdict(list)
    for idx, (d, f) in enumerate(inputs):
        by_deg[d].append(idx)
    degrees = sorted(by_deg)
    for d in degrees:
        heapq.heappush(degree_heap, d)
    seen_degrees = set(degrees)
    minimal_inputs: list[int] = []
    new_syz: list[_Elt] = []
    comp_members: dict[int, list[int]] = defaultdict(list)
    G = layout.guard

    def divides(L0, L):
        return ((L | G) - L0) & G == G

    def add(elt: _Elt) -> None:
        h = len(basis)
        basis.append(elt)
        reducer.add(elt)
        comp = elt.comp
        # old pairs killed by the new leading term
        hL, hexps = elt.L, elt.exps
        new_lcm = {}
        for i in comp_members[comp]:
            e = tuple(a if a > b else b for a, b in zip(basis[i].exps, hexps))
            new_lcm[i] = (layout.term(e, comp), layout.pack(e), e)
        for d, bucket in pending.items():
            dead = []
            for (i, j), (T, L) in bucket.items():
                if layout.decode(T)[0] != comp or not divides(hL, L):
                    continue
                if new_lcm[i][0] != T and new_lcm[j][0] != T:
                    dead.append((i, j))
            for key in dead:
                del bucket[key]
        # new pairs
        groups: dict[int, list[int]] = defaultdict(list)
        for i, (T, L, e) in new_lcm.items():
            groups[T].append(i)
        kept_L = []
        for T in sorted(groups):
            L = new_lcm[groups[T][0]][1]
            if any(divides(L0, L) for L0 in kept_L):
                continue
            kept_L.append(L)
            if product_criterion:
                coprime = False
                for i in groups[T]:
                    if not any(a and b for a, b in zip(basis[i].exps, hexps)):
                        coprime = True
                        break
                if coprime:
                    continue
            i = min(groups[T])
            e = new_lcm[i][2]
            deg = sum(x * w for x, w in zip(e, layout.weights)) + layout.shifts[comp]
            pending[deg][(i, h)] = (T, L)
            if deg not in seen_degrees:
                seen_degrees.add(deg)
                heapq.heappush(degree_heap, deg)
        comp_members[comp].append(h)

    while degree_heap:
        d = heapq.heappop(degree_heap)
        seen_degrees.discard(d)
        if degree_bound is not None and d > degree_bound:
            break
        bucket = pending.pop(d, {})
        if augmented:
            order = sorted(bucket.items(), key=lambda kv: (basis[kv[0][0]].blk != 0, kv[1][0]))
        else:
            order = sorted(bucket.items(), key=lambda kv: kv[1][0])
        # pairs created while processing degree d have degree > d
        for (i, j), (T, L) in order:
            f = _spair(basis[i], basis[j], T, p)
            if not f:
                continue
            rem = _reduce(f, reducer, p)
            if rem:
                elt = _make_elt(layout, rem, d, ("pair", i, j))
                if augmented and elt.blk == 0 and basis[i].blk != 0:
                    new_syz.append(elt)
                add(elt)
        for idx in by_deg.get(d, ()):
            rem = _reduce(dict(inputs[idx][1]), reducer, p)
            if rem:
                elt = _make_elt(layout, rem, d, ("input", idx))
                if augmented and elt.blk == 0:
                    new_syz.append(elt)
                else:
                    minimal_inputs.append(idx)
                add(elt)
        leftover = pending.get(d)
        if leftover:
            raise AssertionError("pair of current degree created during its processing")
    return _RunResult(basis, minimal_inputs, new_syz)


def _interreduce(layout: _Layout, elts: list[_Elt]) -> list[_Elt]:
    G = layout.guard
    elts = sorted(elts, key=lambda e: e.terms[0])
    minimal: list[_Elt] = []
    for e in elts:
        LG = e.L | G
        if any(m.comp == e.comp and (LG - m.L) & G == G for m in minimal):
            continue
        minimal.append(e)
    red = _Reducer(layout)
    for m in minimal:
        red.add(m)
    out = []
    p = layout.p
    for m in minimal:
        tail = dict(zip(m.terms[1:], m.coeffs[1:]))
        rem = _reduce(tail, red, p) if tail else {}
        terms = [m.terms[0]] + list(rem)
        coeffs = [m.coeffs[0]] + list(rem.values())
        out.append(_Elt(layout, terms, coeffs, m.tdeg, m.origin))
    return out


# ---------------------------------------------------------------- public API


def _check_inputs(gens: Sequence[ModuleElement], ambient: FreeModule | None = None,
                  degrees: Sequence[int | None] | None = None) -> tuple[FreeModule, list[int | None]]:
    if ambient is None:
        if not gens:
            raise ValueError("need an ambient free module for an empty generator list")
        ambient = gens[0].ambient
    out = []
    for k, g in enumerate(gens):
        if g.ambient != ambient:
            raise ValueError("generators live in different free modules")
        try:
            d = g.degree()
        except InhomogeneousError:
            raise InhomogeneousError(f"generator {k} is not homogeneous") from None
        if degrees is not None and degrees[k] is not None:
            if d is not None and d != degrees[k]:
                raise ValueError(f"generator {k} has degree {d}, declared {degrees[k]}")
            d = degrees[k]
        out.append(d)
    return ambient, out


@dataclass
class GroebnerBasis:
    ambient: FreeModule
    generators: list[ModuleElement]
    order: str = "term-over-position"
    autoreduced: bool = True
    _layout: _Layout = field(default=None, repr=False)
    _elts: list = field(default=None, repr=False)
    _reducer: _Reducer = field(default=None, repr=False)

    @classmethod
    def _from_elts(cls, ambient: FreeModule, layout: _Layout, elts: list[_Elt]) -> "GroebnerBasis":
        gens = []
        for e in elts:
            comps = layout.to_components(e.terms, e.coeffs, ring=ambient.ring)
            gens.append(ModuleElement(ambient, tuple(comps)))
        red = _Reducer(layout)
        for e in elts:
            red.add(e)
        return cls(ambient, gens, _layout=layout, _elts=elts, _reducer=red)

    def lead_terms(self) -> list[tuple[int, tuple[int, ...]]]:
        """``(component, exponents)`` of every generator's leading term."""
        return [(e.comp, e.exps) for e in self._elts]

    def __len__(self) -> int:
        return len(self.generators)

    def reduce(self, v: ModuleElement) -> ModuleElement:
        return normal_form(v, self)

    def contains(self, v: ModuleElement) -> bool:
        return normal_form(v, self).is_zero()

    def to_text(self) -> str:
        lines = [f"ring: {self.ambient.ring.describe()}",
                 "shifts: " + ",".join(str(s) for s in self.ambient.shifts)]
        lines += [g.to_text() for g in self.generators]
        return "\n".join(lines) + "\n"


def groebner_basis(gens: Sequence[ModuleElement], ambient: FreeModule | None = None,
                   degree_bound: int | None = None, cache: "GBCache | None" = None) -> GroebnerBasis:
    """Autoreduced Groebner basis (term-over-position) of the span of ``gens``.

    With ``degree_bound`` the basis is complete only through that degree.
    """
    ambient, degs = _check_inputs(gens, ambient)
    if cache is None:
        cache = _default_cache
    if cache is not None:
        hit = cache.load(ambient, gens, degree_bound)
        if hit is not None:
            return hit
    layout = _Layout(ambient.ring, ambient.shifts)
    inputs = [(d, layout.from_components(g.components)) for g, d in zip(gens, degs) if d is not None]
    run = _buchberger(layout, inputs, product_criterion=ambient.rank == 1, degree_bound=degree_bound)
    gb = GroebnerBasis._from_elts(ambient, layout, _interreduce(layout, run.basis))
    if cache is not None:
        cache.store(ambient, gens, degree_bound, gb)
    return gb


def normal_form(v: ModuleElement, gb: GroebnerBasis) -> ModuleElement:
    if v.ambient != gb.ambient:
        raise ValueError("element and basis live in different free modules")
    layout = gb._layout
    f = layout.from_components(v.components)
    rem = _reduce(f, gb._reducer, layout.p) if f else {}
    return ModuleElement(gb.ambient, tuple(layout.to_components(rem, ring=gb.ambient.ring)))


def minimal_generators(gens: Sequence[ModuleElement], ambient: FreeModule | None = None) -> list[int]:
    """Indices of a minimal homogeneous generating subset of ``gens``."""
    ambient, degs = _check_inputs(gens, ambient)
    layout = _Layout(ambient.ring, ambient.shifts)
    idx = [k for k, d in enumerate(degs) if d is not None]
    inputs = [(degs[k], layout.from_components(gens[k].components)) for k in idx]
    run = _buchberger(layout, inputs, product_criterion=ambient.rank == 1)
    return sorted(idx[i] for i in run.minimal_inputs)


def syzygies(gens: Sequence[ModuleElement], ambient: FreeModule | None = None,
             degrees: Sequence[int | None] | None = None,
             degree_bound: int | None = None) -> tuple[FreeModule, list[ModuleElement]]:
    """Minimal generators of the module of relations among ``gens``.

    Returns the free module ``E`` with one basis element per generator
    (shifted by that generator's degree) and a minimal list of syzygies
    in ``E``.  Zero generators need an explicit entry in ``degrees``.
    """
    ambient, degs = _check_inputs(gens, ambient, degrees)
    if any(d is None for d in degs):
        raise ValueError("zero generator without a declared degree")
    ring = ambient.ring
    r, k = ambient.rank, len(gens)
    target = FreeModule(ring, tuple(degs))
    if k == 0:
        return target, []
    layout = _Layout(ring, list(ambient.shifts) + list(degs), [1] * r + [0] * k)
    inputs = []
    for j, g in enumerate(gens):
        f = layout.from_components(g.components)
        f[layout.term((0,) * ring.nvars, r + j)] = 1
        inputs.append((degs[j], f))
    run = _buchberger(layout, inputs, product_criterion=False, augmented=True, degree_bound=degree_bound)
    out = []
    for e in run.new_syz:
        comps = layout.to_components(e.terms, e.coeffs, lo=r, hi=r + k, ring=ring)
        out.append(ModuleElement(target, tuple(comps)))
    return target, out


def lead_module(gb: GroebnerBasis) -> list[tuple[int, tuple[int, ...]]]:
    """Minimal monomial generators ``(component, exponents)`` of the lead-term module."""
    leads = sorted(set(gb.lead_terms()), key=lambda t: (t[0], sum(t[1]), t[1]))
    out: list[tuple[int, tuple[int, ...]]] = []
    for comp, e in leads:
        if any(c == comp and all(a <= b for a, b in zip(m, e)) for c, m in out):
            continue
        out.append((comp, e))
    return out


def verify_buchberger(gb: GroebnerBasis) -> bool:
    """Every S-vector of the basis reduces to zero (no criteria applied)."""
    layout = gb._layout
    elts = gb._elts
    p = layout.p
    for a in range(len(elts)):
        for b in range(a + 1, len(elts)):
            ea, eb = elts[a], elts[b]
            if ea.comp != eb.comp:
                continue
            e = tuple(max(x, y) for x, y in zip(ea.exps, eb.exps))
            f = _spair(ea, eb, layout.term(e, ea.comp), p)
            if f and _reduce(f, gb._reducer, p):
                return False
    return True


# ---------------------------------------------------------------- cache


_default_cache: "GBCache | None" = None


def use_cache(cache: "GBCache | None") -> "GBCache | None":
    """Install ``cache`` for every ``groebner_basis`` call without an explicit one; returns the previous."""
    global _default_cache
    prev, _default_cache = _default_cache, cache
    return prev


def _cache_text(gb: GroebnerBasis) -> str:
    # The polynomial grammar has integer coefficients only, so a rational
    # element is written as an integral multiple followed by " / L".
    lines = [f"ring: {gb.ambient.ring.describe()}",
             "shifts: " + ",".join(str(s) for s in gb.ambient.shifts)]
    for g in gb.generators:
        L = lcm(*(c.denominator for comp in g.components for c in comp.terms.values()))
        lines.append(g.to_text() if L == 1 else f"{g.scale(L).to_text()} / {L}")
    return "\n".join(lines) + "\n"


class GBCache:
    """Content-addressed on-disk store of Groebner bases.

    One file per basis, named by the SHA-256 of the canonical key; writes
    are serialized through a lock file and land via atomic rename.
    """

    def __init__(self, directory: str | os.PathLike):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def key(ambient: FreeModule, gens: Sequence[ModuleElement], degree_bound=None) -> str:
        ring = ambient.ring
        text = "\n".join([
            ring.describe(),
            "weights=" + ",".join(map(str, ring.weights)),
            "shifts=" + ",".join(map(str, ambient.shifts)),
            f"bound={degree_bound}",
            *sorted(g.to_text() for g in gens),
        ])
        return hashlib.sha256(text.encode()).hexdigest()

    def path(self, digest: str) -> Path:
        return self.dir / f"{digest}.gb"

    def load(self, ambient, gens, degree_bound=None) -> GroebnerBasis | None:
        path = self.path(self.key(ambient, gens, degree_bound))
        if not path.exists():
            return None
        lines = path.read_text().splitlines()
        ring = ambient.ring
        elems = []
        for line in lines[2:]:
            text, _, den = line.strip().partition(" / ")
            body = text[1:-1]
            parts = [s.strip() for s in body.split(",")] if body else []
            g = ModuleElement(ambient, tuple(ring.parse(s) for s in parts))
            elems.append(g.scale(Fraction(1, int(den))) if den else g)
        layout = _Layout(ring, ambient.shifts)
        elts = []
        for g in elems:
            f = layout.from_components(g.components)
            terms = sorted(f, reverse=True)
            elts.append(_Elt(layout, terms, [f[t] for t in terms], g.degree(), ("cache",)))
        return GroebnerBasis._from_elts(ambient, layout, elts)

    def store(self, ambient, gens, degree_bound, gb: GroebnerBasis) -> Path:
        from filelock import FileLock

        path = self.path(self.key(ambient, gens, degree_bound))
        with FileLock(str(self.dir / ".write.lock")):
            tmp = path.with_suffix(".tmp")
            tmp.write_text(_cache_text(gb))
            os.replace(tmp, path)
        return path

    def stats(self) -> dict:
        files = list(self.dir.glob("*.gb"))
        return {"entries": len(files), "bytes": sum(f.stat().st_size for f in files)}

    def clear(self) -> int:
        files = list(self.dir.glob("*.gb"))
        for f in files:
            f.unlink()
        return len(files)
