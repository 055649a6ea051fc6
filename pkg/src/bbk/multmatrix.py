"""Graded formal multiplication matrices and the finite basis check.

``X_r^(d)`` has one column per term of ``O_d`` and one row per term of
``O_{d+1}``.  The column of ``tau`` is the unit vector of ``x_r * tau``
when that product stays in ``O``; otherwise it is the tail vector of the
prebasis element headed by ``x_r * tau``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import monomial as mono
from .exactmath import ExactMatrix, ParamPoly, ParameterRing, UnsupportedRingError
from .monomial import Term
from .orderideal import gotzmann_bound
from .prebasis import InsufficientDegreeError, Polynomial, Prebasis, reduce
from .redstruct import ReductionStructure

BASIS = "basis"
NOT_BASIS = "not-basis"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class MatrixFamily:
    degree: int
    columns: tuple  # O_d
    rows: tuple  # O_{d+1}
    matrices: tuple  # one ExactMatrix per variable


def build_matrices(G: Prebasis, d: int) -> list[ExactMatrix]:
    return list(matrix_family(G, d).matrices)


def matrix_family(G: Prebasis, d: int) -> MatrixFamily:
    O, ring = G.order_ideal, G.ring
    cols, rows = O.slice(d), O.slice(d + 1)
    mats = []
    for r in range(O.nvars):
        xr = mono.variable(O.nvars, r)
        columns = []
        for tau in cols:
            beta = mono.mul(xr, tau)
            if O.contains(beta):
                vec = [ring.zero] * len(rows)
                vec[O.position(beta)] = ring.one
            else:
                vec = list(G.tail(beta))
            columns.append(vec)
        data = [[columns[j][i] for j in range(len(cols))] for i in range(len(rows))]
        mats.append(ExactMatrix(ring, data, len(cols)))
    return MatrixFamily(d, cols, rows, tuple(mats))


def commutator(G: Prebasis, d: int, r: int, s: int,
               families: dict | None = None) -> ExactMatrix:
    """X_r^(d+1) X_s^(d) - X_s^(d+1) X_r^(d)."""
    families = {} if families is None else families
    for k in (d, d + 1):
        if k not in families:
            families[k] = matrix_family(G, k).matrices
    lo, hi = families[d], families[d + 1]
    return hi[r] @ lo[s] - hi[s] @ lo[r]


@dataclass(frozen=True)
class BasisCertificate:
    verdict: str
    gotzmann_t: int
    checked_range: tuple  # (first d, last d), empty when lo > hi
    witness: dict | None = None
    required_degree: int | None = None
    notes: tuple = field(default_factory=tuple)

    @property
    def checked_degrees(self) -> list[int]:
        lo, hi = self.checked_range
        return list(range(lo, hi + 1))

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "t": self.gotzmann_t, "checked_d": self.checked_degrees}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.required_degree is not None:
            out["required_degree"] = self.required_degree
        return out


def check_window(G: Prebasis, cap: int | None = None) -> tuple[int, int, int]:
    """(t, first d, last d) of the commutator window."""
    O = G.order_ideal
    t = gotzmann_bound(O, cap)
    mindeg = O.min_border_degree
    lo = 0 if mindeg is None else max(mindeg - 1, 0)
    return t, lo, t - 1


def _first_nonzero(M: ExactMatrix):
    for i, row in enumerate(M.rows):
        for j, v in enumerate(row):
            if v:
                return i, j, v
    return None


def check_basis(G: Prebasis, cap: int | None = None) -> BasisCertificate:
    """Decide whether G is a homogeneous border basis.

    Commutators are checked for d in [mindeg(border) - 1, t - 1] and r < s,
    with t the Gotzmann degree of O.  Elements supplied beyond degree t + 1
    must agree with the unique extension of G_{<= t + 1}.
    """
    if isinstance(G.ring, ParameterRing):
        raise UnsupportedRingError("check_basis needs numeric coefficients; use parametric_conditions")
    O = G.order_ideal
    t, lo, hi = check_window(G, cap)
    if O.min_border_degree is None:
        return BasisCertificate(BASIS, t, (lo, hi), notes=("empty border",))
    if G.max_degree < t + 1:
        return BasisCertificate(INDETERMINATE, t, (lo, hi), required_degree=t + 1)
    families: dict = {}
    names = O.names
    for d in range(lo, hi + 1):
        for r in range(O.nvars):
            for s in range(r + 1, O.nvars):
                C = commutator(G, d, r, s, families)
                hit = _first_nonzero(C)
                if hit is not None:
                    i, j, v = hit
                    witness = {"d": d, "r": names[r], "s": names[s], "row": i, "col": j,
                               "row_term": list(O.slice(d + 2)[i]), "col_term": list(O.slice(d)[j]),
                               "entry": G.ring.format(v)}
                    return BasisCertificate(NOT_BASIS, t, (lo, hi), witness)
    if G.max_degree > t + 1:
        mismatch = _extension_mismatch(G, t)
        if mismatch is not None:
            return BasisCertificate(NOT_BASIS, t, (lo, hi), mismatch)
    return BasisCertificate(BASIS, t, (lo, hi))


def _extension_mismatch(G: Prebasis, t: int) -> dict | None:
    """First supplied element above t + 1 that the extension does not reduce to zero."""
    from .synthesis import extend_unchecked

    ext = extend_unchecked(G.truncate(t + 1), G.max_degree)
    S = ReductionStructure(G.order_ideal)
    for sigma in G.heads():
        if mono.degree(sigma) <= t + 1:
            continue
        rest, _ = reduce(ext, S, G.polynomial(sigma))
        if rest:
            return {"kind": "extension", "d": mono.degree(sigma), "head": list(sigma),
                    "residue": rest.to_json(G.ring)}
    return None


def parametric_conditions(G: Prebasis, cap: int | None = None) -> list:
    """Nonzero commutator entries over the window, monic and free of scalar duplicates."""
    if not isinstance(G.ring, ParameterRing):
        raise UnsupportedRingError("parametric_conditions needs a parameter ring")
    O = G.order_ideal
    t, lo, hi = check_window(G, cap)
    if O.min_border_degree is None:
        return []
    if G.max_degree < t + 1:
        raise InsufficientDegreeError(t + 1, G.max_degree)
    seen = set()
    out = []
    families: dict = {}
    for d in range(lo, hi + 1):
        for r in range(O.nvars):
            for s in range(r + 1, O.nvars):
                for row in commutator(G, d, r, s, families).rows:
                    for v in row:
                        if v:
                            m = v.monic()
                            if m not in seen:
                                seen.add(m)
                                out.append(m)
    return out


def linear_system(conditions, unknowns: Sequence[str]) -> tuple[ExactMatrix, list]:
    """Write conditions that are affine in ``unknowns`` as A x = b.

    Coefficients stay in the parameter ring of the conditions, so A and b
    may still involve the remaining parameters.
    """
    conditions = [c for c in conditions if c]
    if not conditions:
        raise ValueError("no nonzero conditions")
    R = conditions[0].ring
    pos = {n: i for i, n in enumerate(R.names)}
    cols = {n: j for j, n in enumerate(unknowns)}
    A, b = [], []
    for c in conditions:
        row = [R.zero] * len(unknowns)
        const = R.zero
        for e, v in c.terms.items():
            hit = [n for n in unknowns if e[pos[n]]]
            if not hit:
                const = const + ParamPoly(R, {e: v})
                continue
            if len(hit) > 1 or e[pos[hit[0]]] > 1:
                raise ValueError(f"condition {c} is not affine in the unknowns")
            rest = list(e)
            rest[pos[hit[0]]] = 0
            row[cols[hit[0]]] = row[cols[hit[0]]] + ParamPoly(R, {tuple(rest): v})
        A.append(row)
        b.append(-const)
    return ExactMatrix(R, A, len(unknowns)), b


def column_polynomial(family: MatrixFamily, r: int, col: int, nvars: int) -> Polynomial:
    """x_r * tau_col minus the column read back as a combination of O_{d+1}."""
    M = family.matrices[r]
    tau = family.columns[col]
    p = Polynomial(nvars, {mono.mul(mono.variable(nvars, r), tau): 1})
    for i, v in enumerate(M.column(col)):
        if v:
            p = p - Polynomial(nvars, {family.rows[i]: v})
    return p


__all__: Sequence[str] = ["MatrixFamily", "BasisCertificate", "build_matrices", "matrix_family",
                          "commutator", "check_basis", "check_window", "parametric_conditions",
                          "column_polynomial", "linear_system", "BASIS", "NOT_BASIS", "INDETERMINATE"]
