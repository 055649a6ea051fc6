"""Terms (power products) as exponent tuples.

A term in ``K[x_0, ..., x_n]`` is a tuple of ``n + 1`` nonnegative ints.
Within a degree, the canonical order is lexicographic with ``x_0 > x_1 >
... > x_n``; enumeration lists terms from largest to smallest, which is
exactly Python's reverse tuple order.
"""

from __future__ import annotations

import json
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

Term = tuple

MAX_DEGREE = 10_000


class TermError(ValueError):
    pass


def make_term(exponents: Iterable[int], nvars: int | None = None) -> Term:
    t = tuple(int(e) for e in exponents)
    if nvars is not None and len(t) != nvars:
        raise TermError(f"term {list(t)} has {len(t)} exponents, expected {nvars}")
    if any(e < 0 for e in t):
        raise TermError(f"negative exponent in {list(t)}")
    if sum(t) > MAX_DEGREE:
        raise TermError(f"degree {sum(t)} exceeds the supported maximum {MAX_DEGREE}")
    return t


def one(nvars: int) -> Term:
    return (0,) * nvars


def variable(nvars: int, r: int) -> Term:
    return tuple(1 if i == r else 0 for i in range(nvars))


def degree(t: Term) -> int:
    return sum(t)


def _check(a: Term, b: Term) -> None:
    if len(a) != len(b):
        raise TermError(f"dimension mismatch: {len(a)} vs {len(b)} variables")


def divides(a: Term, b: Term) -> bool:
    _check(a, b)
    return all(x <= y for x, y in zip(a, b))


def mul(a: Term, b: Term) -> Term:
    _check(a, b)
    return tuple(x + y for x, y in zip(a, b))


def div(a: Term, b: Term) -> Term:
    """a / b, assuming b divides a."""
    _check(a, b)
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise TermError(f"{list(b)} does not divide {list(a)}")
    return q


def lcm(a: Term, b: Term) -> Term:
    _check(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Term, b: Term) -> Term:
    _check(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def count_degree(nvars: int, d: int) -> int:
    """Number of terms of degree d in nvars variables."""
    if d < 0:
        return 0
    return comb(d + nvars - 1, nvars - 1)


@lru_cache(maxsize=None)
def enumerate_degree(nvars: int, d: int) -> tuple[Term, ...]:
    """All terms of degree d, largest first in the canonical order."""
    if d < 0:
        raise TermError("negative degree")
    if d > MAX_DEGREE:
        raise TermError(f"degree {d} exceeds the supported maximum {MAX_DEGREE}")
    if nvars == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        for rest in enumerate_degree(nvars - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


def divisors(t: Term) -> list[Term]:
    out: list[Term] = [()]
    for e in t:
        out = [p + (k,) for p in out for k in range(e + 1)]
    return out


def default_names(nvars: int) -> list[str]:
    if nvars <= 3:
        return ["x", "y", "z"][:nvars]
    return [f"x{i}" for i in range(nvars)]


def pretty(t: Term, names: Sequence[str] | None = None) -> str:
    """Human form such as ``x^2*y``; the empty product prints as ``1``."""
    names = names or default_names(len(t))
    factors = []
    for nm, e in zip(names, t):
        if e == 1:
            factors.append(nm)
        elif e > 1:
            factors.append(f"{nm}^{e}")
    return "*".join(factors) or "1"


def to_key(t: Term) -> str:
    """Serialized exponent vector, e.g. ``"[2,1,0]"``."""
    return "[" + ",".join(str(e) for e in t) + "]"


def from_key(text: str, nvars: int | None = None) -> Term:
    try:
        value = json.loads(text) if isinstance(text, str) else text
    except json.JSONDecodeError:
        raise TermError(f"not an exponent vector: {text!r}") from None
    if not isinstance(value, list):
        raise TermError(f"not an exponent vector: {text!r}")
    return make_term(value, nvars)
