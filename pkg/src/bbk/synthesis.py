"""Border bases from ideal generators, and extension of certified prebases.

Both constructions share one step: in a fixed degree d, row-reduce the
span of all monomial multiples of the generators with the columns outside
``O`` placed first.  The pivots then read off ``g_sigma`` for every border
term, or expose why no border basis exists in that degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import monomial as mono
from .exactmath import QQ, ExactMatrix, Ring, rref
from .monomial import Term
from .orderideal import OrderIdeal
from .prebasis import Polynomial, Prebasis, PrebasisError, vector_over


class SynthesisError(ValueError):
    pass


class InternalInconsistencyError(RuntimeError):
    """The direct-sum condition broke on input that was certified to be a basis."""


@dataclass(frozen=True)
class IdealPresentation:
    generators: tuple
    nvars: int

    def __init__(self, generators: Iterable[Polynomial], nvars: int | None = None):
        gens = tuple(generators)
        if nvars is None:
            if not gens:
                raise SynthesisError("cannot infer the variable count without generators")
            nvars = gens[0].nvars
        for g in gens:
            if g.nvars != nvars:
                raise SynthesisError("generators live in different polynomial rings")
            if g.is_zero():
                raise SynthesisError("zero generator")
            if not g.is_homogeneous():
                raise SynthesisError(f"generator {g.pretty()} is not homogeneous")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "nvars", nvars)

    @classmethod
    def from_json(cls, doc: Mapping, ring: Ring = QQ, nvars: int | None = None) -> "IdealPresentation":
        gens = [Polynomial.from_json(g, ring, nvars) for g in doc.get("generators", [])]
        return cls(gens, nvars)

    def to_json(self, ring: Ring = QQ) -> dict:
        return {"generators": [g.to_json(ring) for g in self.generators]}


@dataclass(frozen=True)
class DegreeFailure:
    degree: int
    kind: str  # "intersection" or "rank_deficit"
    witness: Polynomial | None = None
    rank_deficit: int = 0

    def to_json(self, ring: Ring, names=None) -> dict:
        out = {"degree": self.degree, "kind": self.kind}
        if self.witness is not None:
            out["witness"] = self.witness.to_json(ring)
            out["witness_pretty"] = self.witness.pretty(names)
        if self.kind == "rank_deficit":
            out["rank_deficit"] = self.rank_deficit
        return out


@dataclass(frozen=True)
class SynthesisResult:
    prebasis: Prebasis | None
    failure: DegreeFailure | None
    dims: dict = field(default_factory=dict)  # d -> (dim J_d, |O_d|, dim P_d)

    @property
    def ok(self) -> bool:
        return self.failure is None


def _multiples(polys: Sequence[Polynomial], nvars: int, d: int) -> list[Polynomial]:
    out = []
    for g in polys:
        k = g.degree
        if k <= d:
            out.extend(g.shift(m) for m in mono.enumerate_degree(nvars, d - k))
    return out


def _solve_degree(O: OrderIdeal, polys: Sequence[Polynomial], d: int, ring: Ring,
                  outside_first: bool = True):
    """Tails for the degree-d border, or a DegreeFailure.

    Returns ``(tails, failure, dim_J)``.
    """
    terms = mono.enumerate_degree(O.nvars, d)
    outside = [t for t in terms if not O.contains(t)]
    inside = list(O.slice(d))
    if not outside_first:
        outside = outside[::-1]
    order = outside + inside
    index = {t: i for i, t in enumerate(order)}
    rows = [vector_over(p, order, ring, index) for p in _multiples(polys, O.nvars, d)]
    rows = [r for r in rows if any(r)]
    if rows:
        R, pivots = rref(ExactMatrix(ring, rows, len(order)))
    else:
        R, pivots = None, []
    dim_j = len(pivots)
    nout = len(outside)
    for i, p in enumerate(pivots):
        if p >= nout:
            w = Polynomial(O.nvars, {order[j]: v for j, v in enumerate(R.rows[i]) if v})
            return None, DegreeFailure(d, "intersection", witness=w), dim_j
    if dim_j < nout:
        return None, DegreeFailure(d, "rank_deficit", rank_deficit=nout - dim_j), dim_j
    tails = {}
    by_pivot = {p: R.rows[i] for i, p in enumerate(pivots)}
    for sigma in O.border_slice(d):
        row = by_pivot[index[sigma]]
        tails[sigma] = tuple(-row[nout + k] for k in range(len(inside)))
    return tails, None, dim_j


def basis_from_ideal(J: IdealPresentation, O: OrderIdeal, up_to: int, ring: Ring = QQ,
                     outside_first: bool = True) -> SynthesisResult:
    """The unique border basis of J on O through degree ``up_to``, if it exists.

    ``outside_first=False`` reverses the pivot order among non-O columns;
    the result must not change, which the tests use as a uniqueness check.
    """
    if J.nvars != O.nvars:
        raise SynthesisError("ideal and order ideal have different variable counts")
    gens = [Polynomial(g.nvars, {t: ring(c) for t, c in g.terms.items()}) for g in J.generators]
    tails: dict[Term, tuple] = {}
    dims = {}
    for d in range(up_to + 1):
        found, failure, dim_j = _solve_degree(O, gens, d, ring, outside_first)
        dims[d] = (dim_j, O.hilbert(d), mono.count_degree(O.nvars, d))
        if failure is not None:
            return SynthesisResult(None, failure, dims)
        tails.update(found)
    return SynthesisResult(Prebasis(O, tails, ring, up_to), None, dims)


def extend_unchecked(G: Prebasis, to_degree: int) -> Prebasis:
    """Extend G through ``to_degree`` by per-degree span elimination, without certification."""
    O, ring = G.order_ideal, G.ring
    if to_degree <= G.max_degree:
        return G.truncate(to_degree)
    polys = [G.polynomial(s) for s in G.heads()]
    tails = dict(G.tails)
    for d in range(G.max_degree + 1, to_degree + 1):
        found, failure, _ = _solve_degree(O, polys, d, ring)
        if failure is not None:
            raise InternalInconsistencyError(
                f"direct-sum condition fails in degree {d} ({failure.kind}); the input is not a basis")
        tails.update(found)
    return Prebasis(O, tails, ring, to_degree)


def extend(G: Prebasis, to_degree: int, cap: int | None = None) -> Prebasis:
    """Extend a certified border basis to higher degrees."""
    from .multmatrix import BASIS, check_basis

    cert = check_basis(G, cap)
    if cert.verdict != BASIS:
        raise PrebasisError(f"extend needs a certified basis, check_basis says {cert.verdict}")
    return extend_unchecked(G, to_degree)


# ---------------------------------------------------------------------------
# The identity for x^d modulo (x^3 + x^2 y + y^3)

EQ_IDENTITY_CAP = 200


def k_sequence(n: int) -> list[int]:
    """k_0 .. k_{n-1} with k_0 = k_1 = k_2 = 1 and k_i = k_{i-1} + k_{i-3}."""
    ks: list[int] = []
    for i in range(n):
        ks.append(1 if i < 3 else ks[i - 1] + ks[i - 3])
    return ks


def eq_identity_sides(d: int) -> tuple[Polynomial, Polynomial]:
    """Both sides of the claimed expression of x^d, expanded over QQ."""
    k = k_sequence(d + 1)
    f = Polynomial(2, {(3, 0): 1, (2, 1): 1, (0, 3): 1})
    q = Polynomial(2, {(d - 3 - i, i): (-1) ** i * k[i] for i in range(d - 2)})
    rest = Polynomial(2, {(1, d - 1): (-1) ** (d - 3) * k[d - 4],
                          (2, d - 2): (-1) ** (d - 2) * k[d - 2],
                          (0, d): (-1) ** (d - 2) * k[d - 3]})
    return Polynomial(2, {(d, 0): 1}), q * f + rest


def verify_eq_identity(d: int, cap: int = EQ_IDENTITY_CAP) -> bool:
    if not 4 <= d <= cap:
        raise ValueError(f"degree must lie in [4, {cap}]")
    lhs, rhs = eq_identity_sides(d)
    return lhs == rhs
