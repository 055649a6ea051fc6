"""Exact coefficient rings and dense exact linear algebra.

Three coefficient rings are supported:

* ``QQ`` -- the rationals, with elements represented as :class:`fractions.Fraction`;
* ``PrimeField(p)`` -- residues modulo a prime, elements are :class:`FpElement`;
* ``ParameterRing(names)`` -- polynomials over the rationals in named
  parameters, elements are :class:`ParamPoly`.

Elements of all three support the ordinary Python operators.  Plain ``int``
values are accepted everywhere as scalars; combining elements from two
different rings raises :class:`MixedRingError`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class ExactMathError(Exception):
    """Base class for errors raised by the exact arithmetic layer."""


class MixedRingError(ExactMathError):
    pass


class ZeroDivisionInRing(ExactMathError, ZeroDivisionError):
    pass


class UnsupportedRingError(ExactMathError):
    pass


class DimensionError(ExactMathError, ValueError):
    pass


# ---------------------------------------------------------------------------
# primes


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test (exact for n < 3.3e24)."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    if n < 1681:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# rings


class Ring:
    """Descriptor for a coefficient ring.

    Subclasses provide coercion (``ring(value)``), parsing/formatting of
    coefficient literals and membership tests.
    """

    is_field = True
    name = "ring"

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        raise NotImplementedError

    def contains(self, value) -> bool:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, value) -> str:
        return str(self(value))

    def is_unit(self, value) -> bool:
        """True when ``value`` can be used as an elimination pivot."""
        return bool(value)

    def inv(self, value):
        if not self.is_field:
            raise UnsupportedRingError(f"{self.name} is not a field")
        value = self(value)
        if not value:
            raise ZeroDivisionInRing("inverse of zero")
        return 1 / value

    def to_json(self):
        raise NotImplementedError


_INT_RE = re.compile(r"^\s*([+-]?)\s*(\d+)\s*$")
_RAT_RE = re.compile(r"^\s*([+-]?)\s*(\d+)\s*/\s*(\d+)\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a"`` or ``"a/b"`` (optional sign) into a Fraction."""
    text = str(text).replace("−", "-")
    m = _INT_RE.match(text)
    if m:
        value = Fraction(int(m.group(2)))
        return -value if m.group(1) == "-" else value
    m = _RAT_RE.match(text)
    if m:
        den = int(m.group(3))
        if den == 0:
            raise ZeroDivisionInRing(f"zero denominator in {text!r}")
        value = Fraction(int(m.group(2)), den)
        return -value if m.group(1) == "-" else value
    raise ValueError(f"not a rational literal: {text!r}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class RationalField(Ring):
    name = "QQ"

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return parse_rational(value)
        if isinstance(value, (FpElement, ParamPoly)):
            raise MixedRingError(f"cannot coerce {value!r} into QQ")
        raise TypeError(f"cannot coerce {type(value).__name__} into QQ")

    def contains(self, value) -> bool:
        return isinstance(value, (Fraction, int)) and not isinstance(value, bool)

    def parse(self, text: str) -> Fraction:
        return parse_rational(text)

    def format(self, value) -> str:
        return format_rational(self(value))

    def to_json(self):
        return "rational"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField(Ring):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"

    def __call__(self, value) -> "FpElement":
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise MixedRingError(f"element of GF({value.p}) used in GF({self.p})")
            return value
        if isinstance(value, int):
            return FpElement(value % self.p, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionInRing(f"{value} has no image in GF({self.p})")
            return FpElement(value.numerator * pow(value.denominator, -1, self.p) % self.p, self.p)
        if isinstance(value, str):
            return self(parse_rational(value))
        if isinstance(value, ParamPoly):
            raise MixedRingError(f"cannot coerce {value!r} into GF({self.p})")
        raise TypeError(f"cannot coerce {type(value).__name__} into GF({self.p})")

    def contains(self, value) -> bool:
        return isinstance(value, FpElement) and value.p == self.p

    def parse(self, text: str) -> "FpElement":
        return self(parse_rational(text))

    def format(self, value) -> str:
        return str(self(value).value)

    def to_json(self):
        return {"prime": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class FpElement:
    """Residue class modulo a prime ``p``, stored in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other) -> int:
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise MixedRingError(f"GF({self.p}) and GF({other.p}) elements mixed")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.p
        if isinstance(other, (Fraction, ParamPoly)):
            raise MixedRingError(f"GF({self.p}) element mixed with {type(other).__name__}")
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionInRing(f"inverse of zero in GF({self.p})")
        return FpElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * FpElement(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FpElement(o, self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FpElement(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FpElement({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class ParameterRing(Ring):
    """Polynomial ring Q[c_1, ..., c_m] in named parameters.

    Only ring operations are available; division is restricted to nonzero
    rational constants.
    """

    is_field = False

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate parameter names")
        for nm in names:
            if not nm or any(ch in nm for ch in "+-*^ /"):
                raise ValueError(f"bad parameter name {nm!r}")
        self.names = names
        self.index = {nm: i for i, nm in enumerate(names)}
        self.name = f"QQ[{', '.join(names)}]"

    @property
    def nparams(self) -> int:
        return len(self.names)

    def __call__(self, value) -> "ParamPoly":
        if isinstance(value, ParamPoly):
            if value.ring != self:
                raise MixedRingError("parameter polynomials from different rings")
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return ParamPoly.constant(self, Fraction(value))
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, FpElement):
            raise MixedRingError("GF(p) element used in a parameter ring")
        raise TypeError(f"cannot coerce {type(value).__name__} into {self.name}")

    def gen(self, name: str) -> "ParamPoly":
        i = self.index[name]
        exps = tuple(1 if j == i else 0 for j in range(self.nparams))
        return ParamPoly(self, {exps: Fraction(1)})

    def gens(self) -> list["ParamPoly"]:
        return [self.gen(nm) for nm in self.names]

    def contains(self, value) -> bool:
        return isinstance(value, ParamPoly) and value.ring == self

    def is_unit(self, value) -> bool:
        value = self(value)
        return bool(value) and value.is_constant()

    def inv(self, value):
        value = self(value)
        if not value:
            raise ZeroDivisionInRing("inverse of zero")
        if not value.is_constant():
            raise UnsupportedRingError("only nonzero constants are invertible in a parameter ring")
        return self(1 / value.constant_value())

    def parse(self, text: str) -> "ParamPoly":
        return _parse_param_poly(self, text)

    def format(self, value) -> str:
        return str(self(value))

    def to_json(self):
        return {"parameters": list(self.names)}

    def __eq__(self, other):
        return isinstance(other, ParameterRing) and other.names == self.names

    def __hash__(self):
        return hash(("params", self.names))

    def __repr__(self):
        return f"ParameterRing({list(self.names)!r})"


class ParamPoly:
    """Polynomial in the parameters of a :class:`ParameterRing`.

    ``terms`` maps exponent tuples to nonzero Fractions and is kept sorted
    descending in lex order, so equal polynomials have identical term maps.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ParameterRing, terms: dict):
        clean = {e: Fraction(c) for e, c in terms.items() if c}
        self.ring = ring
        self.terms = dict(sorted(clean.items(), reverse=True))

    @classmethod
    def constant(cls, ring: ParameterRing, c) -> "ParamPoly":
        return cls(ring, {(0,) * ring.nparams: Fraction(c)})

    def _coerce(self, other):
        if isinstance(other, ParamPoly):
            if other.ring != self.ring:
                raise MixedRingError("parameter polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ParamPoly.constant(self.ring, other)
        if isinstance(other, FpElement):
            raise MixedRingError("GF(p) element mixed with a parameter polynomial")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return ParamPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ParamPoly(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o:
            raise ZeroDivisionInRing("division by zero")
        if not o.is_constant():
            raise UnsupportedRingError("division by a non-constant parameter polynomial")
        c = o.constant_value()
        return ParamPoly(self.ring, {e: v / c for e, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise UnsupportedRingError("negative powers in a parameter ring")
        out = ParamPoly.constant(self.ring, 1)
        for _ in range(k):
            out = out * self
        return out

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nparams, Fraction(0))

    def leading(self):
        """(exponents, coefficient) of the lex-greatest monomial."""
        return next(iter(self.terms.items()))

    def monic(self) -> "ParamPoly":
        if not self.terms:
            return self
        return self / self.leading()[1]

    def subs(self, values: dict) -> "ParamPoly":
        """Substitute parameters (by name) with ring elements or scalars."""
        ring = self.ring
        out = ring.zero
        for e, c in self.terms.items():
            term = ring(c)
            for i, k in enumerate(e):
                if k:
                    nm = ring.names[i]
                    base = ring(values[nm]) if nm in values else ring.gen(nm)
                    term = term * base**k
            out = out + term
        return out

    def evaluate(self, values: dict, target: Ring):
        """Evaluate into ``target`` given a value for every parameter present."""
        out = target.zero
        for e, c in self.terms.items():
            term = target(c)
            for i, k in enumerate(e):
                if k:
                    term = term * target(values[self.ring.names[i]]) ** k
            out = out + term
        return out

    def variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            used.update(self.ring.names[i] for i, k in enumerate(e) if k)
        return used

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, ParamPoly) else other
        if o is NotImplemented:
            return NotImplemented
        return self.ring == o.ring and self.terms == o.terms

    def __hash__(self):
        return hash((self.ring, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"ParamPoly({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(self.ring.names[i])
                elif k > 1:
                    factors.append(f"{self.ring.names[i]}^{k}")
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_rational(mag) + "*" + "*".join(factors)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _split_signed(text: str) -> list[tuple[int, str]]:
    """Split ``text`` at top-level + and - signs (braces protect indices)."""
    out = []
    sign, cur, depth = 1, "", 0
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch in "+-" and depth == 0:
            if cur.strip():
                out.append((sign, cur.strip()))
                sign, cur = 1, ""
            if ch == "-":
                sign = -sign
            continue
        cur += ch
    if cur.strip():
        out.append((sign, cur.strip()))
    else:
        raise ValueError(f"dangling sign in {text!r}")
    return out


def _parse_param_poly(ring: ParameterRing, text: str) -> ParamPoly:
    text = str(text).replace("−", "-").strip()
    if text in ("", "0"):
        return ring.zero
    result = ring.zero
    for sign, body in _split_signed(text):
        term = ring.one
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            base, _, power = factor.partition("^")
            base = base.strip()
            k = int(power) if power else 1
            if base in ring.index:
                term = term * ring.gen(base) ** k
            else:
                term = term * ring(parse_rational(base) ** k)
        result = result + (term if sign > 0 else -term)
    return result


def ring_from_json(field) -> Ring:
    """Build a ring from the ``coefficient_field`` document value."""
    if field in (None, "rational", "QQ"):
        return QQ
    if isinstance(field, dict):
        if "prime" in field:
            return PrimeField(int(field["prime"]))
        if "parameters" in field:
            return ParameterRing(field["parameters"])
    raise ValueError(f"unknown coefficient field {field!r}")


def ring_of(value) -> Ring:
    if isinstance(value, FpElement):
        return PrimeField(value.p)
    if isinstance(value, ParamPoly):
        return value.ring
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return QQ
    raise TypeError(f"{value!r} is not a ring element")


def _same_ring(a, b) -> Ring:
    ra, rb = ring_of(a), ring_of(b)
    if ra != rb:
        raise MixedRingError(f"{ra.name} and {rb.name} elements mixed")
    return ra


def ring_add(a, b):
    _same_ring(a, b)
    return a + b


def ring_mul(a, b):
    _same_ring(a, b)
    return a * b


def ring_neg(a):
    ring_of(a)
    return -a


def ring_inv(a):
    ring = ring_of(a)
    if isinstance(a, int):
        a = Fraction(a)
    return ring.inv(a)


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class ExactMatrix:
    """Dense row-major matrix with entries from a single ring."""

    ring: Ring
    rows: tuple

    def __init__(self, ring: Ring, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(ring(v) for v in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(row) != ncols for row in data):
            raise DimensionError("ragged matrix rows")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "ncols", ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> list:
        return [row[j] for row in self.rows]

    def is_zero(self) -> bool:
        return not any(v for row in self.rows for v in row)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def map(self, fn, ring: Ring | None = None) -> "ExactMatrix":
        ring = ring or self.ring
        return ExactMatrix(ring, ([fn(v) for v in row] for row in self.rows), self.ncols)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.ring, zip(*self.rows), self.nrows) if self.nrows else \
            ExactMatrix(self.ring, [[] for _ in range(self.ncols)], 0)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_add(self, other)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_sub(self, other)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def __neg__(self) -> "ExactMatrix":
        return self.map(lambda v: -v)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.shape, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.ring.format(v) for v in row) for row in self.rows)
        return f"ExactMatrix({self.ring.name}, {self.nrows}x{self.ncols}, [{body}])"


def zeros(ring: Ring, nrows: int, ncols: int) -> ExactMatrix:
    z = ring.zero
    return ExactMatrix(ring, [[z] * ncols for _ in range(nrows)], ncols)


def identity(ring: Ring, n: int) -> ExactMatrix:
    z, o = ring.zero, ring.one
    return ExactMatrix(ring, [[o if i == j else z for j in range(n)] for i in range(n)], n)


def _check_same_ring(A: ExactMatrix, B: ExactMatrix) -> None:
    if A.ring != B.ring:
        raise MixedRingError(f"matrices over {A.ring.name} and {B.ring.name}")


def mat_add(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    _check_same_ring(A, B)
    if A.shape != B.shape:
        raise DimensionError(f"cannot add {A.shape} and {B.shape}")
    return ExactMatrix(A.ring, ([a + b for a, b in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)), A.ncols)


def mat_sub(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    _check_same_ring(A, B)
    if A.shape != B.shape:
        raise DimensionError(f"cannot subtract {A.shape} and {B.shape}")
    return ExactMatrix(A.ring, ([a - b for a, b in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)), A.ncols)


def mat_mul(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    _check_same_ring(A, B)
    if A.ncols != B.nrows:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    zero = A.ring.zero
    cols = list(zip(*B.rows)) if B.nrows else [() for _ in range(B.ncols)]
    out = []
    for row in A.rows:
        nz = [(k, a) for k, a in enumerate(row) if a]
        new_row = []
        for col in cols:
            acc = zero
            for k, a in nz:
                b = col[k]
                if b:
                    acc = acc + a * b
            new_row.append(acc)
        out.append(new_row)
    return ExactMatrix(A.ring, out, B.ncols)


def _row_reduce(ring: Ring, rows: list[list], ncols: int):
    """Reduced row echelon form in place on ``rows`` (first ``ncols`` columns).

    Pivots are chosen column by column on the first row with a unit entry.
    Over a field every nonzero entry is a unit; over a parameter ring a
    column whose nonzero entries are all non-constant is skipped, and the
    caller decides whether leftover entries are acceptable.

    Returns the list of pivot columns, one per leading row.
    """
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if ring.is_unit(rows[i][c])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ring.inv(rows[r][c])
        if inv != 1:
            rows[r] = [v * inv for v in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [a - f * b if b else a for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref(A: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    """Reduced row echelon form over a field, and the pivot columns."""
    if not A.ring.is_field:
        raise UnsupportedRingError(f"row reduction needs a field, got {A.ring.name}")
    rows = [list(r) for r in A.rows]
    pivots = _row_reduce(A.ring, rows, A.ncols)
    return ExactMatrix(A.ring, rows, A.ncols), pivots


def rank(A: ExactMatrix) -> int:
    """Rank over the coefficient field by exact Gaussian elimination."""
    if not A.ring.is_field:
        raise UnsupportedRingError(f"rank is only defined here over a field, got {A.ring.name}")
    rows = [list(r) for r in A.rows if any(r)]
    return len(_row_reduce(A.ring, rows, A.ncols))


def nullspace(A: ExactMatrix) -> list[list]:
    """Basis of {x : Ax = 0} over a field."""
    R, pivots = rref(A)
    return _kernel_from_rref(A.ring, R.rows, pivots, A.ncols)


def _kernel_from_rref(ring: Ring, rows, pivots: list[int], ncols: int) -> list[list]:
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [ring.zero] * ncols
        vec[f] = ring.one
        for i, p in enumerate(pivots):
            vec[p] = -rows[i][f]
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class Solution:
    """Outcome of :func:`solve`.

    ``status`` is ``"unique"``, ``"underdetermined"`` or ``"inconsistent"``.
    For consistent systems ``particular`` solves Ax = b and ``nullspace``
    spans the homogeneous solutions.
    """

    status: str
    particular: tuple | None = None
    nullspace: tuple = ()

    @property
    def consistent(self) -> bool:
        return self.status != "inconsistent"


def solve(A: ExactMatrix, b: Sequence) -> Solution:
    """Solve ``A x = b`` exactly.

    Over a field this is plain Gauss-Jordan elimination.  Over a parameter
    ring the elimination only pivots on nonzero rational constants; if some
    coefficient cannot be eliminated that way an
    :class:`UnsupportedRingError` is raised instead of guessing.
    """
    ring = A.ring
    if len(b) != A.nrows:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {A.nrows}")
    rows = [list(r) + [ring(v)] for r, v in zip(A.rows, b)]
    n = A.ncols
    pivots = _row_reduce(ring, rows, n)
    npiv = len(pivots)
    for row in rows[npiv:]:
        if any(row[:n]):
            raise UnsupportedRingError("elimination stalled on non-constant pivots")
        if row[n]:
            return Solution("inconsistent")
    particular = [ring.zero] * n
    for i, p in enumerate(pivots):
        particular[p] = rows[i][n]
    kernel = _kernel_from_rref(ring, [r[:n] for r in rows], pivots, n)
    status = "unique" if not kernel else "underdetermined"
    return Solution(status, tuple(particular), tuple(tuple(v) for v in kernel))
