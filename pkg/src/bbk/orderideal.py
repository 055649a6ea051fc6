"""Infinite order ideals given as complements of monomial ideals.

An :class:`OrderIdeal` is described by the minimal generators of the
monomial ideal ``I`` with ``O = T \\ I``.  The first border of ``O``
generates ``I``, so the generators double as the minimal generators of
``(border O)``.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from . import monomial as mono
from .monomial import Term

DEFAULT_GOTZMANN_CAP = 200


class OrderIdealError(ValueError):
    pass


class GotzmannCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"no Gotzmann degree found below the search cap {cap}; "
                         f"raise it with BBK_GOTZMANN_CAP or cap=...")
        self.cap = cap


def minimalize(gens: Iterable[Term]) -> list[Term]:
    """Drop generators divisible by another one, and duplicates."""
    out: list[Term] = []
    for g in sorted(set(gens), key=lambda t: (mono.degree(t), tuple(-e for e in t))):
        if not any(mono.divides(h, g) for h in out):
            out.append(g)
    return out


class OrderIdeal:
    """``O = T \\ (generators)`` in ``nvars`` variables.

    Slices, borders and indices are computed on demand and memoized; the
    object itself never changes after construction.
    """

    def __init__(self, nvars: int, complement_generators: Iterable[Sequence[int]],
                 names: Sequence[str] | None = None):
        if nvars < 1:
            raise OrderIdealError("need at least one variable")
        gens = [mono.make_term(g, nvars) for g in complement_generators]
        if any(mono.degree(g) == 0 for g in gens):
            raise OrderIdealError("the complement contains 1, so the order ideal is empty")
        self.nvars = nvars
        self.generators: tuple[Term, ...] = tuple(minimalize(gens))
        self.names = list(names) if names is not None else mono.default_names(nvars)
        if len(self.names) != nvars:
            raise OrderIdealError(f"{len(self.names)} variable names for {nvars} variables")
        pure = {next(i for i, e in enumerate(g) if e) for g in self.generators
                if sum(1 for e in g if e) == 1}
        self.is_infinite = len(pure) < nvars
        self._lock = threading.Lock()
        self._slices: dict[int, tuple[Term, ...]] = {}
        self._borders: dict[int, tuple[Term, ...]] = {}
        self._positions: dict[int, dict[Term, int]] = {}
        self._index: dict[Term, int] = {}
        self._incl_excl: list[tuple[int, int]] | None = None
        for g in self.generators:
            if self.index(g) != 1:
                raise OrderIdealError(f"generator {list(g)} is not a border term")

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, OrderIdeal) and (self.nvars, self.generators) == (other.nvars, other.generators)

    def __hash__(self):
        return hash((self.nvars, self.generators))

    def __repr__(self):
        gens = ", ".join(mono.pretty(g, self.names) for g in self.generators)
        return f"OrderIdeal(T \\ ({gens}))"

    # -- membership ---------------------------------------------------------

    def contains(self, t: Term) -> bool:
        return not any(all(a <= b for a, b in zip(g, t)) for g in self.generators)

    __contains__ = contains

    def is_border(self, t: Term) -> bool:
        if self.contains(t):
            return False
        return any(e and self.contains(t[:j] + (e - 1,) + t[j + 1:]) for j, e in enumerate(t))

    @property
    def min_border_degree(self) -> int | None:
        """mindeg of the border, or None if the border is empty (O = T)."""
        return min((mono.degree(g) for g in self.generators), default=None)

    @property
    def max_generator_degree(self) -> int:
        return max((mono.degree(g) for g in self.generators), default=0)

    # -- graded pieces ------------------------------------------------------

    def _memo(self, table: dict, key, compute):
        try:
            return table[key]
        except KeyError:
            pass
        value = compute()
        with self._lock:
            return table.setdefault(key, value)

    def slice(self, d: int) -> tuple[Term, ...]:
        """O_d in canonical (descending lex) order."""
        if d < 0:
            return ()
        return self._memo(self._slices, d,
                          lambda: tuple(t for t in mono.enumerate_degree(self.nvars, d) if self.contains(t)))

    def border_slice(self, d: int) -> tuple[Term, ...]:
        """Degree-d part of the first border, canonical order."""
        if d < 0:
            return ()
        return self._memo(self._borders, d,
                          lambda: tuple(t for t in mono.enumerate_degree(self.nvars, d) if self.is_border(t)))

    def position(self, t: Term) -> int:
        """Position of t inside ``slice(deg t)``."""
        d = mono.degree(t)
        table = self._memo(self._positions, d, lambda: {s: i for i, s in enumerate(self.slice(d))})
        return table[t]

    def index(self, t: Term) -> int:
        """Smallest k with t = t' * t'', deg t' = k and t'' in O."""
        t = tuple(t)
        if t in self._index:
            return self._index[t]
        if self.contains(t):
            k = 0
        else:
            k = 1 + min(self.index(t[:j] + (e - 1,) + t[j + 1:]) for j, e in enumerate(t) if e)
        with self._lock:
            self._index[t] = k
        return k

    def index_of_support(self, terms: Iterable[Term]) -> int:
        return max((self.index(t) for t in terms), default=0)

    # -- Hilbert function ---------------------------------------------------

    def _subset_lcm_degrees(self) -> list[tuple[int, int]]:
        if self._incl_excl is None:
            pairs = []
            gens = self.generators
            for r in range(1, len(gens) + 1):
                sign = 1 if r % 2 else -1
                for subset in combinations(gens, r):
                    l = subset[0]
                    for g in subset[1:]:
                        l = mono.lcm(l, g)
                    pairs.append((sign, mono.degree(l)))
            self._incl_excl = pairs
        return self._incl_excl

    def hilbert(self, d: int) -> int:
        """|O_d| by inclusion-exclusion over lcms of generator subsets."""
        if d < 0:
            return 0
        in_ideal = sum(sign * mono.count_degree(self.nvars, d - ld) for sign, ld in self._subset_lcm_degrees())
        return mono.count_degree(self.nvars, d) - in_ideal

    def hilbert_data(self, through: int, cap: int | None = None) -> "HilbertData":
        try:
            t = gotzmann_bound(self, cap)
        except GotzmannCapExceeded:
            t = None
        return HilbertData(tuple(self.hilbert(d) for d in range(through + 1)), t)

    # -- documents ----------------------------------------------------------

    def to_json(self) -> dict:
        return {"variables": list(self.names),
                "complement_generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, doc: dict) -> "OrderIdeal":
        gens = doc.get("complement_generators")
        if gens is None:
            raise OrderIdealError("order ideal document needs 'complement_generators'")
        names = doc.get("variables")
        if names is None:
            if not gens:
                raise OrderIdealError("cannot infer the variable count without 'variables'")
            nvars = len(gens[0])
        else:
            nvars = len(names)
        return cls(nvars, gens, names)


@dataclass(frozen=True)
class HilbertData:
    values: tuple[int, ...]
    gotzmann_t: int | None


# ---------------------------------------------------------------------------
# Macaulay representation and Gotzmann degree


def _largest_k(a: int, i: int) -> int:
    """Largest k with comb(k, i) <= a (requires a >= 1, i >= 1)."""
    lo, hi = i, a + i
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if comb(mid, i) <= a:
            lo = mid
        else:
            hi = mid - 1
    return lo


def macaulay_representation(a: int, d: int) -> list[tuple[int, int]]:
    """[(k_d, d), (k_{d-1}, d-1), ...] with a = sum comb(k_i, i)."""
    if a < 0 or d < 1:
        raise ValueError("need a >= 0 and d >= 1")
    out = []
    i = d
    while a > 0 and i >= 1:
        k = _largest_k(a, i)
        out.append((k, i))
        a -= comb(k, i)
        i -= 1
    return out


def macaulay_transform(a: int, d: int) -> int:
    """a^<d>: the maximal growth of a Hilbert function from degree d to d+1."""
    return sum(comb(k + 1, i + 1) for k, i in macaulay_representation(a, d))


def gotzmann_cap_from_env(default: int = DEFAULT_GOTZMANN_CAP) -> int:
    raw = os.environ.get("BBK_GOTZMANN_CAP")
    return int(raw) if raw else default


def gotzmann_bound(O: OrderIdeal, cap: int | None = None) -> int:
    """Least t >= max(1, maxdeg(generators) - 1) with h_{t+1} = h_t^<t>."""
    cap = gotzmann_cap_from_env() if cap is None else cap
    t = max(1, O.max_generator_degree - 1)
    while t <= cap:
        if O.hilbert(t + 1) == macaulay_transform(O.hilbert(t), t):
            return t
        t += 1
    raise GotzmannCapExceeded(cap)
