"""Border reduction structures: labelings of the border, cones, multiplicative sets.

Border terms are labeled by ``(degree, rank)`` where the rank orders terms
of equal degree.  The cone owner of a term is its border divisor with the
largest label; a multiplier ``eta`` is multiplicative for ``sigma`` exactly
when ``sigma`` owns ``eta * sigma``.
"""

from __future__ import annotations

import threading
from typing import Callable, Mapping, Sequence

from . import monomial as mono
from .monomial import Term
from .orderideal import OrderIdeal

LEX_ASC = "lex_asc"
LEX_DESC = "lex_desc"


class StructureError(ValueError):
    pass


class NotBorderTermError(StructureError):
    def __init__(self, t: Term):
        super().__init__(f"{list(t)} is not a border term")
        self.term = t


class ReductionStructure:
    """A degree-increasing labeling of the border of ``O``.

    ``tie_break`` is ``"lex_asc"`` (default), ``"lex_desc"`` or a mapping
    ``degree -> [border terms in label order]``.  Degrees missing from an
    explicit mapping fall back to ``lex_asc``.
    """

    def __init__(self, order_ideal: OrderIdeal, tie_break="lex_asc"):
        self.order_ideal = order_ideal
        self.degree_increasing = True
        self._explicit: dict[int, dict[Term, int]] = {}
        if tie_break in (LEX_ASC, LEX_DESC):
            self.tie_break = tie_break
        elif isinstance(tie_break, Mapping):
            self.tie_break = "explicit"
            for deg, terms in tie_break.items():
                deg = int(deg)
                ts = [mono.make_term(t, order_ideal.nvars) for t in terms]
                if sorted(ts) != sorted(order_ideal.border_slice(deg)):
                    raise StructureError(f"explicit order for degree {deg} must list each border term "
                                         f"of that degree exactly once")
                self._explicit[deg] = {t: i for i, t in enumerate(ts)}
        else:
            raise StructureError(f"unknown tie-break policy {tie_break!r}")
        self._custom_key: Callable[[Term], object] | None = None
        self._owner: dict[Term, Term | None] = {}
        self._lock = threading.Lock()

    @classmethod
    def unsafe(cls, order_ideal: OrderIdeal, key: Callable[[Term], object]) -> "ReductionStructure":
        """Arbitrary labeling given by ``key`` (larger key = larger label).

        Such structures need not be Noetherian; they exist to reproduce
        non-terminating reductions in tests.
        """
        s = cls(order_ideal)
        s.tie_break = "custom"
        s.degree_increasing = False
        s._custom_key = key
        return s

    # -- labels -------------------------------------------------------------

    def _require_border(self, t: Term) -> None:
        if not self.order_ideal.is_border(t):
            raise NotBorderTermError(t)

    def label(self, sigma: Term):
        """Sort key of a border term; comparisons of labels are comparisons of keys."""
        self._require_border(sigma)
        return self._key(sigma)

    def _key(self, sigma: Term):
        if self._custom_key is not None:
            return self._custom_key(sigma)
        d = mono.degree(sigma)
        if d in self._explicit:
            return (d, self._explicit[d][sigma])
        if self.tie_break == LEX_DESC:
            return (d, tuple(-e for e in sigma))
        return (d, sigma)

    def label_compare(self, a: Term, b: Term) -> int:
        self._require_border(a)
        self._require_border(b)
        ka, kb = self._key(a), self._key(b)
        return (ka > kb) - (ka < kb)

    def ordered_border(self, d: int) -> list[Term]:
        """Border terms of degree d in increasing label order."""
        return sorted(self.order_ideal.border_slice(d), key=self._key)

    # -- cones --------------------------------------------------------------

    def cone_owner(self, beta: Term) -> Term | None:
        beta = tuple(beta)
        if beta in self._owner:
            return self._owner[beta]
        O = self.order_ideal
        if O.contains(beta):
            owner = None
        else:
            owner = max((s for s in mono.divisors(beta) if O.is_border(s)), key=self._key)
        with self._lock:
            self._owner[beta] = owner
        return owner

    def is_multiplicative(self, eta: Term, sigma: Term) -> bool:
        self._require_border(sigma)
        return self.cone_owner(mono.mul(eta, sigma)) == sigma

    def multiplicative_slice(self, sigma: Term, k: int) -> list[Term]:
        self._require_border(sigma)
        return [eta for eta in mono.enumerate_degree(self.order_ideal.nvars, k)
                if self.cone_owner(mono.mul(eta, sigma)) == sigma]

    def reductors(self, d: int) -> list[tuple[Term, Term]]:
        """All pairs (eta, sigma) with eta*sigma of degree d, one per non-O term."""
        out = []
        for beta in mono.enumerate_degree(self.order_ideal.nvars, d):
            sigma = self.cone_owner(beta)
            if sigma is not None:
                out.append((mono.div(beta, sigma), sigma))
        return out

    # -- documents ----------------------------------------------------------

    def to_json(self) -> dict:
        if self.tie_break == "custom":
            raise StructureError("custom labelings cannot be serialized")
        if self.tie_break == "explicit":
            tb = {str(d): [list(t) for t in sorted(m, key=m.get)] for d, m in sorted(self._explicit.items())}
        else:
            tb = self.tie_break
        return {"tie_break": tb}

    @classmethod
    def from_json(cls, order_ideal: OrderIdeal, doc: Mapping | None) -> "ReductionStructure":
        if not doc:
            return cls(order_ideal)
        return cls(order_ideal, doc.get("tie_break", LEX_ASC))

    def __repr__(self):
        return f"ReductionStructure({self.order_ideal!r}, tie_break={self.tie_break!r})"


def describe(S: ReductionStructure, d: int, window: int = 2) -> dict:
    """Labels of the degree-d border plus small multiplicative-set slices."""
    names = S.order_ideal.names
    out = []
    for sigma in S.ordered_border(d):
        out.append({
            "term": list(sigma),
            "pretty": mono.pretty(sigma, names),
            "multiplicative": {str(k): [mono.pretty(e, names) for e in S.multiplicative_slice(sigma, k)]
                               for k in range(window + 1)},
        })
    return {"degree": d, "border": out}


def owners_table(S: ReductionStructure, d: int) -> list[dict]:
    names = S.order_ideal.names
    return [{"term": list(beta), "pretty": mono.pretty(beta, names),
             "owner": list(S.cone_owner(beta)), "owner_pretty": mono.pretty(S.cone_owner(beta), names)}
            for beta in mono.enumerate_degree(S.order_ideal.nvars, d) if S.cone_owner(beta) is not None]


__all__: Sequence[str] = ["ReductionStructure", "StructureError", "NotBorderTermError",
                          "describe", "owners_table", "LEX_ASC", "LEX_DESC"]
