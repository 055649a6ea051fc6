"""Command-line front end.

Every subcommand reads one JSON workspace (``--input FILE`` or stdin) and
writes a JSON report to stdout.  A workspace looks like::

    {"order_ideal": {"variables": [...], "complement_generators": [...]},
     "structure": {"tie_break": "lex_asc"},
     "prebasis": {"coefficient_field": "rational", "polynomials": [...]},
     "ideal": {"generators": [...]}}

A bare order-ideal document is accepted as well.  Exit status: 0 when a
result or verdict was computed, 1 on input errors, 2 for an indeterminate
verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import monomial as mono
from .exactmath import ExactMathError, ParameterRing, ring_from_json
from .multmatrix import INDETERMINATE, check_basis, commutator, matrix_family, parametric_conditions
from .orderideal import GotzmannCapExceeded, OrderIdeal, gotzmann_bound
from .prebasis import NonTerminationError, Polynomial, Prebasis, PrebasisError, reduce
from .redstruct import ReductionStructure, describe, owners_table
from .synthesis import IdealPresentation, InternalInconsistencyError, basis_from_ideal, extend


class InputError(Exception):
    pass


class Workspace:
    def __init__(self, doc: dict):
        if not isinstance(doc, dict):
            raise InputError("workspace must be a JSON object")
        oi = doc.get("order_ideal", doc if "complement_generators" in doc else None)
        if oi is None:
            raise InputError("workspace has no order ideal")
        self.doc = doc
        self.O = OrderIdeal.from_json(oi)

    def structure(self) -> ReductionStructure:
        return ReductionStructure.from_json(self.O, self.doc.get("structure"))

    def prebasis(self) -> Prebasis:
        pb = self.doc.get("prebasis")
        if pb is None:
            raise InputError("workspace has no prebasis")
        return Prebasis.from_json(self.O, pb)

    def ring(self):
        if "prebasis" in self.doc:
            return ring_from_json(self.doc["prebasis"].get("coefficient_field", "rational"))
        return ring_from_json(self.doc.get("coefficient_field", "rational"))

    def ideal(self) -> IdealPresentation:
        ideal = self.doc.get("ideal")
        if ideal is None:
            raise InputError("workspace has no ideal generators")
        return IdealPresentation.from_json(ideal, self.ring(), self.O.nvars)

    def with_prebasis(self, G: Prebasis) -> dict:
        out = {"order_ideal": self.O.to_json()}
        if "structure" in self.doc:
            out["structure"] = self.doc["structure"]
        out["prebasis"] = G.to_json()
        return out


def _terms(O: OrderIdeal, ts) -> list:
    return [list(t) for t in ts]


def _pretty(O: OrderIdeal, ts) -> list:
    return [mono.pretty(t, O.names) for t in ts]


def _var(O: OrderIdeal, v: str) -> int:
    if v in O.names:
        return O.names.index(v)
    try:
        r = int(v)
    except ValueError:
        raise InputError(f"unknown variable {v!r}") from None
    if not 0 <= r < O.nvars:
        raise InputError(f"variable index {r} out of range")
    return r


def _matrix_json(M, ring) -> list:
    return [[ring.format(v) for v in row] for row in M.rows]


# -- subcommands ---------------------------------------------------------------


def cmd_border(ws: Workspace, args) -> tuple[dict, int]:
    ts = ws.O.border_slice(args.degree)
    return {"degree": args.degree, "border": _terms(ws.O, ts), "pretty": _pretty(ws.O, ts)}, 0


def cmd_hilbert(ws: Workspace, args) -> tuple[dict, int]:
    h = [ws.O.hilbert(d) for d in range(args.through + 1)]
    return {"h": h, "t": gotzmann_bound(ws.O, args.cap)}, 0


def cmd_index(ws: Workspace, args) -> tuple[dict, int]:
    t = mono.from_key(args.term, ws.O.nvars)
    return {"term": list(t), "pretty": mono.pretty(t, ws.O.names), "index": ws.O.index(t)}, 0


def cmd_structure(ws: Workspace, args) -> tuple[dict, int]:
    S = ws.structure()
    out = describe(S, args.degree, args.window)
    out["tie_break"] = S.to_json()["tie_break"]
    out["owners"] = owners_table(S, args.degree)
    return out, 0


def _read_poly(ws: Workspace, args, ring) -> Polynomial:
    if args.poly_json is not None:
        doc = json.loads(args.poly_json)
    else:
        with open(args.poly) as fh:
            doc = json.load(fh)
    return Polynomial.from_json(doc, ring, ws.O.nvars)


def cmd_reduce(ws: Workspace, args) -> tuple[dict, int]:
    G = ws.prebasis()
    f = _read_poly(ws, args, G.ring)
    h, trace = reduce(G, ws.structure(), f)
    steps = [{"coefficient": G.ring.format(c), "multiplier": list(e), "head": list(s)} for c, e, s in trace.steps]
    return {"normal_form": h.to_json(G.ring), "pretty": h.pretty(ws.O.names), "trace": steps}, 0


def cmd_matrices(ws: Workspace, args) -> tuple[dict, int]:
    G = ws.prebasis()
    fam = matrix_family(G, args.degree)
    return {"degree": args.degree, "columns": _pretty(ws.O, fam.columns), "rows": _pretty(ws.O, fam.rows),
            "matrices": {ws.O.names[r]: _matrix_json(M, G.ring) for r, M in enumerate(fam.matrices)}}, 0


def cmd_commutator(ws: Workspace, args) -> tuple[dict, int]:
    G = ws.prebasis()
    r, s = (_var(ws.O, v) for v in args.vars)
    C = commutator(G, args.degree, r, s)
    return {"degree": args.degree, "vars": [ws.O.names[r], ws.O.names[s]],
            "matrix": _matrix_json(C, G.ring), "zero": C.is_zero()}, 0


def cmd_check(ws: Workspace, args) -> tuple[dict, int]:
    cert = check_basis(ws.prebasis(), args.cap)
    return cert.to_json(), (2 if cert.verdict == INDETERMINATE else 0)


def cmd_conditions(ws: Workspace, args) -> tuple[dict, int]:
    G = ws.prebasis()
    if not isinstance(G.ring, ParameterRing):
        raise InputError("conditions need a parametric coefficient_field")
    conds = [str(c) for c in parametric_conditions(G, args.cap)]
    if args.text:
        return {"_text": "\n".join(conds)}, 0
    return {"conditions": conds, "count": len(conds)}, 0


def cmd_from_ideal(ws: Workspace, args) -> tuple[dict, int]:
    res = basis_from_ideal(ws.ideal(), ws.O, args.through, ws.ring())
    if res.ok:
        return ws.with_prebasis(res.prebasis), 0
    return {"verdict": "failure", "failure": res.failure.to_json(ws.ring(), ws.O.names)}, 0


def cmd_extend(ws: Workspace, args) -> tuple[dict, int]:
    G = ws.prebasis()
    try:
        E = extend(G, args.to, args.cap)
    except PrebasisError as exc:
        raise InputError(str(exc)) from None
    return ws.with_prebasis(E), 0


COMMANDS = {
    "border": cmd_border, "hilbert": cmd_hilbert, "index": cmd_index, "structure": cmd_structure,
    "reduce": cmd_reduce, "matrices": cmd_matrices, "commutator": cmd_commutator, "check": cmd_check,
    "conditions": cmd_conditions, "from-ideal": cmd_from_ideal, "extend": cmd_extend,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="workspace JSON file (default: stdin)")
    common.add_argument("--cap", type=int, default=None,
                        help="Gotzmann scan cap (default: BBK_GOTZMANN_CAP or 200)")
    p = argparse.ArgumentParser(prog="bbk", description="Homogeneous border bases on infinite order ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("border", parents=[common], help="border terms of one degree")
    sp.add_argument("--degree", type=int, required=True)
    sp = sub.add_parser("hilbert", parents=[common], help="Hilbert values and Gotzmann degree")
    sp.add_argument("--through", type=int, required=True)
    sp = sub.add_parser("index", parents=[common], help="index of a term")
    sp.add_argument("--term", required=True, help='exponent vector such as "[4,2]"')
    sp = sub.add_parser("structure", parents=[common], help="labels, owners and multiplicative sets")
    sp.add_argument("--describe", action="store_true", help="accepted for readability; always on")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--window", type=int, default=2)
    sp = sub.add_parser("reduce", parents=[common], help="normal form and trace")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--poly", help="JSON file mapping exponent vectors to coefficients")
    g.add_argument("--poly-json", help="the same mapping given inline")
    sp = sub.add_parser("matrices", parents=[common], help="formal multiplication matrices")
    sp.add_argument("--degree", type=int, required=True)
    sp = sub.add_parser("commutator", parents=[common], help="one commutator")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--vars", nargs=2, required=True, metavar=("R", "S"))
    sub.add_parser("check", parents=[common], help="decide basis-ness")
    sp = sub.add_parser("conditions", parents=[common], help="parametric basis conditions")
    sp.add_argument("--text", action="store_true", help="one polynomial per line instead of JSON")
    sp = sub.add_parser("from-ideal", parents=[common], help="border basis of an ideal")
    sp.add_argument("--through", type=int, required=True)
    sp = sub.add_parser("extend", parents=[common], help="extend a certified basis")
    sp.add_argument("--to", type=int, required=True)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.input:
            with open(args.input) as fh:
                doc = json.load(fh)
        else:
            doc = json.load(sys.stdin)
        ws = Workspace(doc)
        report, status = COMMANDS[args.command](ws, args)
    except (InputError, ValueError, KeyError, TypeError, OSError, ExactMathError,
            GotzmannCapExceeded, NonTerminationError, InternalInconsistencyError) as exc:
        print(f"bbk {args.command}: {exc}", file=sys.stderr)
        return 1
    if "_text" in report:
        if report["_text"]:
            print(report["_text"])
    else:
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
