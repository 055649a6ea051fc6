"""Homogeneous border prebases and the border reduction relation.

A prebasis stores, for every border term ``sigma`` up to ``max_degree``,
the coefficients ``c[sigma, tau]`` over ``tau`` in ``O_{deg sigma}``; the
polynomial it represents is ``g_sigma = sigma - sum c[sigma, tau] * tau``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from . import monomial as mono
from .exactmath import QQ, ExactMatrix, Ring, rank, ring_from_json
from .monomial import Term
from .orderideal import OrderIdeal
from .redstruct import ReductionStructure


class PrebasisError(ValueError):
    pass


class InsufficientDegreeError(PrebasisError):
    def __init__(self, needed: int, available: int):
        super().__init__(f"insufficient prebasis degree: need border polynomials of degree {needed}, "
                         f"prebasis stops at {available}")
        self.needed = needed
        self.available = available


class NonTerminationError(RuntimeError):
    def __init__(self, steps: int, trace: "ReductionTrace"):
        super().__init__(f"reduction did not terminate within {steps} steps")
        self.trace = trace


# ---------------------------------------------------------------------------
# Polynomials


class Polynomial:
    """Sparse polynomial: a map from terms to nonzero coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Term, object] | None = None):
        self.nvars = nvars
        self.terms: dict[Term, object] = {}
        for t, c in (terms or {}).items():
            t = mono.make_term(t, nvars)
            if c:
                self.terms[t] = c

    @classmethod
    def monomial(cls, t: Term, c=1) -> "Polynomial":
        return cls(len(t), {t: c})

    def copy(self) -> "Polynomial":
        p = Polynomial(self.nvars)
        p.terms = dict(self.terms)
        return p

    # arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if other.nvars != self.nvars:
            raise mono.TermError(f"dimension mismatch: {self.nvars} vs {other.nvars} variables")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = self.copy()
        out._iadd(other, 1)
        return out

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = self.copy()
        out._iadd(other, -1)
        return out

    def __neg__(self) -> "Polynomial":
        p = Polynomial(self.nvars)
        p.terms = {t: -c for t, c in self.terms.items()}
        return p

    def _iadd(self, other: "Polynomial", scale, shift: Term | None = None) -> None:
        """self += scale * shift * other, in place."""
        terms = self.terms
        for t, c in other.terms.items():
            if shift is not None:
                t = tuple(a + b for a, b in zip(t, shift))
            v = terms.get(t)
            new = c * scale if v is None else v + c * scale
            if new:
                terms[t] = new
            elif v is not None:
                del terms[t]

    def scale(self, c) -> "Polynomial":
        p = Polynomial(self.nvars)
        if c:
            p.terms = {t: v * c for t, v in self.terms.items()}
        return p

    def shift(self, eta: Term) -> "Polynomial":
        """Multiply by the term eta."""
        p = Polynomial(self.nvars)
        p.terms = {mono.mul(t, eta): c for t, c in self.terms.items()}
        return p

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out = Polynomial(self.nvars)
        for t, c in other.terms.items():
            out._iadd(self, c, t)
        return out

    __rmul__ = __mul__

    # inspection ---------------------------------------------------------

    def __getitem__(self, t: Term):
        return self.terms.get(tuple(t), 0)

    coefficient = __getitem__

    def support(self) -> list[Term]:
        """Terms sorted by degree, then canonical order, largest first."""
        return sorted(self.terms, key=lambda t: (sum(t), t), reverse=True)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self) -> int:
        return max((sum(t) for t in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(t) for t in self.terms}) <= 1

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def pretty(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in self.support():
            c = self.terms[t]
            cs = str(c)
            m = mono.pretty(t, names)
            if m == "1":
                body = cs
            elif cs == "1":
                body = m
            elif cs == "-1":
                body = "-" + m
            elif any(ch in cs.lstrip("-") for ch in "+- "):
                body = f"({cs})*{m}"
            else:
                body = f"{cs}*{m}"
            parts.append(body)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial({self.pretty()})"

    def to_json(self, ring: Ring) -> dict:
        return {mono.to_key(t): ring.format(self.terms[t]) for t in self.support()}

    @classmethod
    def from_json(cls, doc: Mapping[str, str], ring: Ring, nvars: int | None = None) -> "Polynomial":
        terms = {}
        for key, val in doc.items():
            t = mono.from_key(key, nvars)
            if nvars is None:
                nvars = len(t)
            terms[t] = ring(val) if not isinstance(val, str) else ring.parse(val)
        if nvars is None:
            raise PrebasisError("cannot infer the variable count of an empty polynomial")
        return cls(nvars, terms)


def vector_over(p: Polynomial, basis: Sequence[Term], ring: Ring,
                index: Mapping[Term, int] | None = None) -> list:
    """Coefficients of p along ``basis``; p must be supported there."""
    index = index or {t: i for i, t in enumerate(basis)}
    vec = [ring.zero] * len(basis)
    for t, c in p.terms.items():
        try:
            vec[index[t]] = ring(c)
        except KeyError:
            raise PrebasisError(f"term {list(t)} lies outside the coordinate basis") from None
    return vec


# ---------------------------------------------------------------------------
# Prebases


class Prebasis:
    """Homogeneous border prebasis on ``O`` through degree ``max_degree``.

    ``tails`` maps each border term to either a mapping ``tau -> c`` or a
    dense sequence over ``O_{deg sigma}``.  With ``fill_zero`` missing
    border terms get zero tails; otherwise every border term of degree at
    most ``max_degree`` has to be present.
    """

    def __init__(self, order_ideal: OrderIdeal, tails: Mapping[Term, object], ring: Ring = QQ,
                 max_degree: int | None = None, fill_zero: bool = False):
        O = order_ideal
        self.order_ideal = O
        self.ring = ring
        heads = [mono.make_term(s, O.nvars) for s in tails]
        if max_degree is None:
            max_degree = max((mono.degree(s) for s in heads), default=(O.min_border_degree or 0))
        self.max_degree = max_degree
        table: dict[Term, tuple] = {}
        for sigma_raw, tail in tails.items():
            sigma = mono.make_term(sigma_raw, O.nvars)
            if not O.is_border(sigma):
                raise PrebasisError(f"head {list(sigma)} is not a border term")
            d = mono.degree(sigma)
            if d > max_degree:
                raise PrebasisError(f"head {list(sigma)} exceeds max_degree {max_degree}")
            if sigma in table:
                raise PrebasisError(f"duplicate head {list(sigma)}")
            table[sigma] = self._dense(sigma, tail)
        for d in range(max_degree + 1):
            for sigma in O.border_slice(d):
                if sigma not in table:
                    if not fill_zero:
                        raise PrebasisError(f"missing polynomial with head {list(sigma)}")
                    table[sigma] = tuple([ring.zero] * O.hilbert(d))
        self.tails = table
        self._polys: dict[Term, Polynomial] = {}

    def _dense(self, sigma: Term, tail) -> tuple:
        O, ring = self.order_ideal, self.ring
        slice_ = O.slice(mono.degree(sigma))
        if isinstance(tail, Mapping):
            vec = [ring.zero] * len(slice_)
            for tau_raw, c in tail.items():
                tau = mono.from_key(tau_raw, O.nvars) if isinstance(tau_raw, str) else mono.make_term(tau_raw, O.nvars)
                if mono.degree(tau) != mono.degree(sigma) or not O.contains(tau):
                    raise PrebasisError(f"tail term {list(tau)} of head {list(sigma)} is not in O of that degree")
                vec[O.position(tau)] = ring.parse(c) if isinstance(c, str) else ring(c)
            return tuple(vec)
        vec = tuple(ring(c) for c in tail)
        if len(vec) != len(slice_):
            raise PrebasisError(f"tail of {list(sigma)} has length {len(vec)}, expected {len(slice_)}")
        return vec

    # -- constructors -------------------------------------------------------

    @classmethod
    def monomial(cls, O: OrderIdeal, max_degree: int, ring: Ring = QQ) -> "Prebasis":
        return cls(O, {}, ring, max_degree, fill_zero=True)

    @classmethod
    def from_polynomials(cls, O: OrderIdeal, polys: Iterable[Polynomial], ring: Ring = QQ,
                         max_degree: int | None = None, fill_zero: bool = False) -> "Prebasis":
        """Read ``g = sigma - sum c tau`` back into tail coefficients."""
        tails = {}
        for g in polys:
            heads = [t for t in g.terms if not O.contains(t)]
            if len(heads) != 1 or g.terms[heads[0]] != 1:
                raise PrebasisError("each polynomial needs exactly one non-O term with coefficient 1")
            sigma = heads[0]
            tails[sigma] = {tau: -c for tau, c in g.terms.items() if tau != sigma}
        return cls(O, tails, ring, max_degree, fill_zero)

    # -- access -------------------------------------------------------------

    def heads(self, d: int | None = None) -> list[Term]:
        if d is None:
            return [s for k in range(self.max_degree + 1) for s in self.order_ideal.border_slice(k)]
        return list(self.order_ideal.border_slice(d)) if d <= self.max_degree else []

    def tail(self, sigma: Term) -> tuple:
        try:
            return self.tails[tuple(sigma)]
        except KeyError:
            d = mono.degree(sigma)
            if d > self.max_degree and self.order_ideal.is_border(tuple(sigma)):
                raise InsufficientDegreeError(d, self.max_degree) from None
            raise PrebasisError(f"{list(sigma)} is not a head of this prebasis") from None

    def polynomial(self, sigma: Term) -> Polynomial:
        sigma = tuple(sigma)
        if sigma not in self._polys:
            tail = self.tail(sigma)
            terms = {sigma: self.ring.one}
            for tau, c in zip(self.order_ideal.slice(mono.degree(sigma)), tail):
                if c:
                    terms[tau] = -c
            self._polys[sigma] = Polynomial(self.order_ideal.nvars, terms)
        return self._polys[sigma]

    def require_degree(self, d: int) -> None:
        if d > self.max_degree:
            raise InsufficientDegreeError(d, self.max_degree)

    def truncate(self, d: int) -> "Prebasis":
        return Prebasis(self.order_ideal, {s: t for s, t in self.tails.items() if mono.degree(s) <= d},
                        self.ring, d)

    def map_coefficients(self, ring: Ring, fn: Callable | None = None) -> "Prebasis":
        """Same prebasis with every coefficient sent through ``fn`` (default: coercion)."""
        fn = fn or ring
        return Prebasis(self.order_ideal, {s: tuple(fn(c) for c in t) for s, t in self.tails.items()},
                        ring, self.max_degree)

    def __eq__(self, other):
        return (isinstance(other, Prebasis) and self.order_ideal == other.order_ideal
                and self.ring == other.ring and self.max_degree == other.max_degree
                and self.tails == other.tails)

    def __repr__(self):
        return f"Prebasis({self.order_ideal!r}, max_degree={self.max_degree}, ring={self.ring!r})"

    # -- documents ----------------------------------------------------------

    def to_json(self) -> dict:
        O, ring = self.order_ideal, self.ring
        polys = []
        for sigma in self.heads():
            slice_ = O.slice(mono.degree(sigma))
            tail = {mono.to_key(tau): ring.format(c) for tau, c in zip(slice_, self.tails[sigma]) if c}
            polys.append({"head": list(sigma), "tail": tail})
        return {"coefficient_field": ring.to_json(), "max_degree": self.max_degree, "polynomials": polys}

    @classmethod
    def from_json(cls, O: OrderIdeal, doc: Mapping) -> "Prebasis":
        ring = ring_from_json(doc.get("coefficient_field", "rational"))
        tails = {}
        for entry in doc.get("polynomials", []):
            sigma = mono.make_term(entry["head"], O.nvars)
            if sigma in tails:
                raise PrebasisError(f"duplicate head {list(sigma)}")
            tails[sigma] = dict(entry.get("tail", {}))
        fill = doc.get("fill") == "zero"
        return cls(O, tails, ring, doc.get("max_degree"), fill_zero=fill)


# ---------------------------------------------------------------------------
# Reduction


@dataclass(frozen=True)
class ReductionTrace:
    """Steps (c, eta, sigma) with f - result = sum c * eta * g_sigma."""

    steps: tuple
    result: Polynomial

    def replay(self, G: Prebasis) -> Polynomial:
        acc = Polynomial(G.order_ideal.nvars)
        for c, eta, sigma in self.steps:
            acc._iadd(G.polynomial(sigma), c, eta)
        return acc

    def __len__(self):
        return len(self.steps)


def _default_choice(O: OrderIdeal):
    return lambda candidates: max(candidates, key=lambda t: (O.index(t), sum(t), t))


def reduce(G: Prebasis, S: ReductionStructure, f: Polynomial, *,
           choose: Callable[[list[Term]], Term] | None = None,
           max_steps: int | None = None) -> tuple[Polynomial, ReductionTrace]:
    """Reduce f by the border reduction relation to a polynomial supported on O.

    ``choose`` picks which reducible term to rewrite next (default: largest
    index, then degree, then canonical order).  Labelings that are not
    degree-increasing may loop forever, so they require ``max_steps``.
    """
    O = G.order_ideal
    if S.order_ideal != O:
        raise PrebasisError("structure and prebasis live on different order ideals")
    if not S.degree_increasing and max_steps is None:
        raise PrebasisError("a labeling that is not degree-increasing needs max_steps")
    choose = choose or _default_choice(O)
    h = Polynomial(f.nvars, {t: G.ring(c) for t, c in f.terms.items()})
    steps = []
    while True:
        reducible = [t for t in h.terms if not O.contains(t)]
        if not reducible:
            break
        if max_steps is not None and len(steps) >= max_steps:
            raise NonTerminationError(max_steps, ReductionTrace(tuple(steps), h))
        beta = choose(reducible)
        sigma = S.cone_owner(beta)
        if mono.degree(sigma) > G.max_degree:
            raise InsufficientDegreeError(mono.degree(sigma), G.max_degree)
        eta = mono.div(beta, sigma)
        c = h.terms[beta]
        h._iadd(G.polynomial(sigma), -c, eta)
        steps.append((c, eta, sigma))
    return h, ReductionTrace(tuple(steps), h)


# ---------------------------------------------------------------------------
# Spans and the reductor criterion


def _rank_of(polys: Iterable[Polynomial], nvars: int, d: int, ring: Ring) -> int:
    basis = mono.enumerate_degree(nvars, d)
    index = {t: i for i, t in enumerate(basis)}
    rows = [vector_over(p, basis, ring, index) for p in polys]
    if not rows:
        return 0
    return rank(ExactMatrix(ring, rows, len(basis)))


def reductors(G: Prebasis, S: ReductionStructure, d: int) -> list[tuple[Term, Term]]:
    """Pairs (eta, sigma) with eta multiplicative for sigma and degree d."""
    G.require_degree(d)
    return S.reductors(d)


def reductor_span_dim(G: Prebasis, S: ReductionStructure, d: int) -> int:
    """dim of the span of degree-d border reductors eta * g_sigma."""
    pairs = reductors(G, S, d)
    return _rank_of((G.polynomial(s).shift(e) for e, s in pairs), G.order_ideal.nvars, d, G.ring)


def ideal_multiples(G: Prebasis, d: int) -> list[Polynomial]:
    """All m * g_sigma of degree d, m a term."""
    G.require_degree(d)
    nvars = G.order_ideal.nvars
    out = []
    for k in range(d + 1):
        for sigma in G.heads(k):
            g = G.polynomial(sigma)
            out.extend(g.shift(m) for m in mono.enumerate_degree(nvars, d - k))
    return out


def ideal_slice_dim(G: Prebasis, d: int) -> int:
    """dim (G)_d from every monomial multiple of every element."""
    return _rank_of(ideal_multiples(G, d), G.order_ideal.nvars, d, G.ring)


def direct_sum_rank(G: Prebasis, S: ReductionStructure, d: int) -> int:
    """Rank of the degree-d reductors stacked on the unit vectors of O_d."""
    O = G.order_ideal
    polys = [G.polynomial(s).shift(e) for e, s in reductors(G, S, d)]
    polys += [Polynomial.monomial(t, G.ring.one) for t in O.slice(d)]
    return _rank_of(polys, O.nvars, d, G.ring)


@dataclass(frozen=True)
class CriterionResult:
    passed: bool
    failing_degree: int | None
    reductor_dims: dict = field(default_factory=dict)
    ideal_dims: dict = field(default_factory=dict)


def reductor_criterion(G: Prebasis, S: ReductionStructure, d_max: int) -> CriterionResult:
    """Compare dim of reductor spans with dim (G)_d for d <= d_max."""
    G.require_degree(d_max)
    start = G.order_ideal.min_border_degree
    red, ide = {}, {}
    if start is not None:
        for d in range(start, d_max + 1):
            red[d] = reductor_span_dim(G, S, d)
            ide[d] = ideal_slice_dim(G, d)
            if red[d] != ide[d]:
                return CriterionResult(False, d, red, ide)
    return CriterionResult(True, None, red, ide)
