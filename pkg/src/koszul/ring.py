"""Exact multivariate polynomials over QQ or a prime field.

Polynomials are immutable maps from exponent tuples to nonzero field
scalars.  Coefficients over QQ are :class:`fractions.Fraction`; over
``F_p`` they are Python ints in ``[0, p)``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Cmp",
    "FieldSpec",
    "QQ",
    "RingSpec",
    "Polynomial",
    "Homogeneous",
    "Inhomogeneous",
    "ZERO_DEGREE",
    "monomial_compare",
    "order_key",
    "ParseError",
    "RingMismatch",
    "poly_combine",
    "homogeneity",
]

ORDERS = ("degrevlex", "deglex", "lex")


class RingMismatch(ValueError):
    pass


class ParseError(ValueError):
    """Syntax error in polynomial or entry text; carries line/column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c < 0 or (c != 0 and not _is_prime(c)):
            raise ValueError(f"characteristic must be 0 or prime, got {c}")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def kind(self) -> str:
        return "Rationals" if self.characteristic == 0 else "PrimeField"

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"Fp({self.characteristic})"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip()
        if text in ("QQ", "Q"):
            return QQ
        m = re.fullmatch(r"(?:Fp|GF|ZZ/)\(?(\d+)\)?", text)
        if not m:
            raise ValueError(f"unknown field {text!r}")
        return cls(int(m.group(1)))

    # scalar arithmetic
    def coerce(self, c):
        p = self.characteristic
        if p:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, p) % p
            return int(c) % p
        return Fraction(c)

    def inv(self, c):
        p = self.characteristic
        if p:
            return pow(c, -1, p)
        return 1 / Fraction(c)

    def signed(self, c):
        """Representative of ``c`` used for printing (symmetric over F_p)."""
        p = self.characteristic
        if p:
            return c - p if c > p // 2 else c
        return c


QQ = FieldSpec(0)


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _weighted_degree(exps: Sequence[int], weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(exps, weights))


def order_key(exps: Sequence[int], order: str, weights: Sequence[int]):
    """Sort key whose natural ordering is the monomial order."""
    if order == "degrevlex":
        return (_weighted_degree(exps, weights), tuple(-e for e in reversed(exps)))
    if order == "deglex":
        return (_weighted_degree(exps, weights), tuple(exps))
    if order == "lex":
        return tuple(exps)
    raise ValueError(f"unknown monomial order {order!r}")


def monomial_compare(a: Sequence[int], b: Sequence[int], order: str = "degrevlex",
                     weights: Sequence[int] | None = None) -> Cmp:
    if len(a) != len(b):
        raise ValueError("exponent vectors of different length")
    if weights is None:
        weights = (1,) * len(a)
    ka, kb = order_key(a, order, weights), order_key(b, order, weights)
    if ka == kb:
        return Cmp.EQ
    return Cmp.GT if ka > kb else Cmp.LT


@dataclass(frozen=True)
class RingSpec:
    field: FieldSpec
    variables: tuple[str, ...]
    weights: tuple[int, ...] = ()
    order: str = "degrevlex"
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")
        for v in self.variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                raise ValueError(f"bad variable name {v!r}")
        w = tuple(self.weights) if self.weights else (1,) * len(self.variables)
        if len(w) != len(self.variables) or any(x <= 0 for x in w):
            raise ValueError("weights must be positive, one per variable")
        object.__setattr__(self, "weights", w)
        if self.order not in ORDERS:
            raise ValueError(f"unknown monomial order {self.order!r}")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.variables)})

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def degree(self, exps: Sequence[int]) -> int:
        return _weighted_degree(exps, self.weights)

    def key(self, exps: Sequence[int]):
        return order_key(exps, self.order, self.weights)

    def with_field(self, fld: FieldSpec) -> "RingSpec":
        return RingSpec(fld, self.variables, self.weights, self.order)

    # constructors
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "Polynomial":
        i = self._index[name]
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.var(v) for v in self.variables]

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): coeff})

    def parse(self, text: str, line: int = 1) -> "Polynomial":
        return _Parser(self, text, line).parse()

    def __call__(self, text: str) -> "Polynomial":
        return self.parse(text)

    def describe(self) -> str:
        text = f"field={self.field}; vars=[{','.join(self.variables)}]; order={self.order}"
        if any(w != 1 for w in self.weights):
            text += f"; weights=[{','.join(map(str, self.weights))}]"
        return text

    @classmethod
    def from_header(cls, text: str) -> "RingSpec":
        """Inverse of :meth:`describe`: ``field=QQ; vars=[x,y]; order=degrevlex``."""
        fields = {}
        for part in text.split(";"):
            part = part.strip()
            if not part:
                continue
            key, sep, val = part.partition("=")
            if not sep:
                raise ValueError(f"expected key=value, got {part!r}")
            fields[key.strip()] = val.strip()
        unknown = set(fields) - {"field", "vars", "order", "weights"}
        if unknown:
            raise ValueError(f"unknown ring keys: {', '.join(sorted(unknown))}")
        if "vars" not in fields:
            raise ValueError("ring header needs vars=[...]")

        def listing(s: str) -> list[str]:
            s = s.strip()
            if not (s.startswith("[") and s.endswith("]")):
                raise ValueError(f"expected a bracketed list, got {s!r}")
            return [t.strip() for t in s[1:-1].split(",") if t.strip()]

        fld = FieldSpec.parse(fields.get("field", "QQ"))
        weights = tuple(int(w) for w in listing(fields["weights"])) if "weights" in fields else ()
        return cls(fld, tuple(listing(fields["vars"])), weights, fields.get("order", "degrevlex"))


class Polynomial:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero scalars."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[tuple, object] | None = None, *,
                 _clean: bool = False):
        self.ring = ring
        if _clean:
            self._terms = terms
        else:
            fld = ring.field
            n = ring.nvars
            t = {}
            for e, c in (terms or {}).items():
                e = tuple(e)
                if len(e) != n or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent vector {e}")
                c = fld.coerce(c)
                if c:
                    t[e] = c
            self._terms = t
        self._hash = None

    @property
    def terms(self) -> Mapping[tuple, object]:
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[tuple, object]]:
        """Terms in descending monomial order."""
        key = self.ring.key
        for e in sorted(self._terms, key=key, reverse=True):
            yield e, self._terms[e]

    def leading_term(self):
        if not self._terms:
            return None
        e = max(self._terms, key=self.ring.key)
        return e, self._terms[e]

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self):
        return self._terms.get((0,) * self.ring.nvars, 0)

    def degrees(self) -> set[int]:
        return {self.ring.degree(e) for e in self._terms}

    # arithmetic
    def _check(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatch("polynomials live in different rings")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return _add(self, other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return _add(self, other, -1)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return _add(other, self, -1)

    def __neg__(self):
        return _add(self.ring.zero(), self, -1)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return _mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        fld = self.ring.field
        c = fld.coerce(c)
        if not c:
            return self.ring.zero()
        p = fld.characteristic
        if p:
            return Polynomial(self.ring, {e: v * c % p for e, v in self._terms.items()}, _clean=True)
        return Polynomial(self.ring, {e: v * c for e, v in self._terms.items()}, _clean=True)

    def shift(self, exps: Sequence[int], c=1) -> "Polynomial":
        """Multiply by the term ``c * x^exps``."""
        return self * self.ring.monomial(exps, c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def homogeneity(self):
        return homogeneity(self)

    def substitute(self, values: Mapping[int, "Polynomial"]) -> "Polynomial":
        """Replace variable ``i`` by ``values[i]``."""
        ring = self.ring
        out = ring.zero()
        for e, c in self._terms.items():
            t = ring.const(c)
            rest = list(e)
            for i, v in values.items():
                if e[i]:
                    t = t * v ** e[i]
                    rest[i] = 0
            out = out + t * ring.monomial(rest)
        return out

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        fld = self.ring.field
        names = self.ring.variables
        pieces = []
        for e, c in self:
            c = fld.signed(c)
            neg = c < 0
            a = -c if neg else c
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            if a != 1 or not factors:
                factors.insert(0, str(a))
            body = "*".join(factors)
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


def _add(f: Polynomial, g: Polynomial, sign: int) -> Polynomial:
    p = f.ring.characteristic
    t = dict(f._terms)
    for e, c in g._terms.items():
        v = t.get(e, 0) + (c if sign > 0 else -c)
        if p:
            v %= p
        if v:
            t[e] = v
        else:
            t.pop(e, None)
    return Polynomial(f.ring, t, _clean=True)


def _mul(f: Polynomial, g: Polynomial) -> Polynomial:
    p = f.ring.characteristic
    if len(f._terms) < len(g._terms):
        f, g = g, f
    t: dict = {}
    for eg, cg in g._terms.items():
        for ef, cf in f._terms.items():
            e = tuple(a + b for a, b in zip(ef, eg))
            v = t.get(e, 0) + cf * cg
            if p:
                v %= p
            if v:
                t[e] = v
            else:
                t.pop(e, None)
    return Polynomial(f.ring, t, _clean=True)


def poly_combine(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if f.ring != g.ring:
        raise RingMismatch("polynomials live in different rings")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


ZERO_DEGREE = float("-inf")


@dataclass(frozen=True)
class Homogeneous:
    degree: int | float


@dataclass(frozen=True)
class Inhomogeneous:
    pass


def homogeneity(f: Polynomial):
    """``Homogeneous(d)`` or ``Inhomogeneous()``; zero is homogeneous of degree -inf."""
    degs = f.degrees()
    if not degs:
        return Homogeneous(ZERO_DEGREE)
    if len(degs) == 1:
        return Homogeneous(degs.pop())
    return Inhomogeneous()


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _Parser:
    """Recursive-descent parser for ``3*x^2*y - 2*y^3``."""

    def __init__(self, ring: RingSpec, text: str, line: int = 1):
        self.ring = ring
        self.text = text
        self.line = line
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                break
            if m.group(0).strip():
                kind = "int" if m.group(1) else "name" if m.group(2) else "op"
                self.tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex) + 1))
            pos = m.end()
        self.i = 0

    def error(self, msg: str, col: int | None = None):
        if col is None:
            col = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text) + 1
        raise ParseError(msg, self.line, col)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            self.error("empty polynomial")
        ring = self.ring
        total = ring.zero()
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        total = total + self.term().scale(sign)
        while self.i < len(self.tokens):
            kind, val, col = self.take()
            if kind != "op" or val not in "+-":
                self.error(f"expected '+' or '-', got {val!r}", col)
            total = total + self.term().scale(-1 if val == "-" else 1)
        return total

    def term(self) -> Polynomial:
        out = self.factor()
        while True:
            kind, val, col = self.peek()
            if kind == "op" and val == "*":
                self.take()
                out = out * self.factor()
            elif kind in ("int", "name"):
                self.error("juxtaposition is not allowed; use '*'", col)
            else:
                return out

    def factor(self) -> Polynomial:
        kind, val, col = self.take()
        ring = self.ring
        if kind == "int":
            base = ring.const(int(val))
        elif kind == "name":
            if val not in ring.variables:
                self.error(f"unknown variable {val!r}", col)
            base = ring.var(val)
        else:
            self.error(f"unexpected {val!r}" if val else "unexpected end of input", col)
        k2, v2, _ = self.peek()
        if k2 == "op" and v2 == "^":
            self.take()
            k3, v3, c3 = self.take()
            if k3 != "int":
                self.error("exponent must be a nonnegative integer", c3)
            base = base ** int(v3)
        return base


def parse_polynomials(ring: RingSpec, texts: Iterable[str]) -> list[Polynomial]:
    return [ring.parse(t) for t in texts]
