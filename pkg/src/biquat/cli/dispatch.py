"""Subcommand handlers.  Each returns (exit code, output document)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from ..biquaternion_chain import (ChainUnknown, ClassMismatch, Vertex, build_chain,
                                  random_same_class_pair, verify_chain)
from ..field_core import parse_field
from ..field_core.artin_schreier import UNKNOWN, SearchBudget
from ..quadratic_forms import SearchExhausted, albert_form, find_isotropic_vector
from ..quadratic_forms.isotropy import FOUND, NOT_FOUND
from ..quaternion import NONSPLIT, SPLIT, QuaternionSymbol, invariant_vector, is_isomorphic, is_split
from ..syntax import _split_top, parse_element, parse_witt_text
from ..witt_symbols import (PreconditionFailed, SymbolEntry, WittVector,
                            decompose_len3, decompose_len4, random_len3_instance, random_len4_instance,
                            solve_e_coords, verify_decomposition)

EXIT_OK, EXIT_NEGATIVE, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3
DOC_VERSION = 1
DEFAULT_FIELD = "GF(2)({t})"


class UsageError(ValueError):
    """Bad arguments; maps to exit code 3."""


@dataclass(frozen=True)
class CommandRequest:
    subcommand: tuple
    field: str = DEFAULT_FIELD
    operands: tuple = ()
    budget_degree: int | None = None
    budget_candidates: int | None = None
    seed: int = 0
    out: str | None = None
    fmt: str = "text"
    options: dict = dc_field(default_factory=dict)

    def budget(self) -> SearchBudget:
        kw = {"seed": self.seed}
        if self.budget_degree is not None:
            kw["max_degree"] = self.budget_degree
        if self.budget_candidates is not None:
            kw["max_candidates"] = self.budget_candidates
        try:
            return SearchBudget(**kw)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc


def _field(req: CommandRequest):
    try:
        return parse_field(req.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _arity(req: CommandRequest, *counts):
    if len(req.operands) not in counts:
        want = " or ".join(str(c) for c in counts)
        raise UsageError(f"'{' '.join(req.subcommand)}' takes {want} operand(s), got {len(req.operands)}")


def _symbol(text: str, F) -> QuaternionSymbol:
    try:
        return QuaternionSymbol.parse(text, F)
    except ValueError as exc:          # ParseError, zero second slot
        raise UsageError(str(exc)) from exc


def _entry(text: str, F) -> SymbolEntry:
    """``[(w1; ...; wn), beta)``; a bare first slot is a length-1 vector."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith(")")):
        raise UsageError(f"a symbol is written [omega, beta): {text!r}")
    parts = _split_top(s[1:-1], ",")
    if len(parts) != 2:
        raise UsageError(f"a symbol has exactly two slots: {text!r}")
    try:
        first = parts[0].strip()
        coords = parse_witt_text(first, F) if ";" in first else [parse_element(first, F)]
        return SymbolEntry(WittVector(tuple(coords)), parse_element(parts[1], F))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _witt_arg(text: str, F) -> WittVector:
    try:
        return WittVector(tuple(parse_witt_text(text, F)))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _doc(command: str, F, **body) -> dict:
    return {"version": DOC_VERSION, "command": command, "field": F.descriptor(), **body}


# -- quaternion level -------------------------------------------------------------

def _split(req):
    _arity(req, 1)
    F = _field(req)
    Q = _symbol(req.operands[0], F)
    res = is_split(Q, req.budget())
    code = {SPLIT: EXIT_OK, NONSPLIT: EXIT_NEGATIVE}.get(res.verdict, EXIT_UNKNOWN)
    return code, _doc("split", F, symbol=str(Q), **res.to_json())


def _iso(req):
    _arity(req, 2)
    F = _field(req)
    Q1, Q2 = (_symbol(s, F) for s in req.operands)
    verdict = is_isomorphic(Q1, Q2, req.budget())
    body = {"symbols": [str(Q1), str(Q2)]}
    if verdict == UNKNOWN:
        return EXIT_UNKNOWN, _doc("iso", F, verdict="unknown", **body)
    if getattr(F, "kind", "") == "rational-1var":
        body["invariants"] = [invariant_vector(Q1).to_json(), invariant_vector(Q2).to_json()]
    return (EXIT_OK if verdict else EXIT_NEGATIVE), _doc("iso", F, verdict="isomorphic" if verdict
                                                           else "not-isomorphic", **body)


def _invariants(req):
    _arity(req, 1)
    F = _field(req)
    if getattr(F, "kind", "") != "rational-1var":
        raise UsageError("local invariants are computed over GF(2^k)(t)")
    Q = _symbol(req.operands[0], F)
    v = invariant_vector(Q)
    return EXIT_OK, _doc("invariants", F, symbol=str(Q), invariants=v.to_json(), split=v.is_zero())


def _albert(req):
    _arity(req, 2)
    F = _field(req)
    Q1, Q2 = (_symbol(s, F) for s in req.operands)
    form = albert_form(Q1, Q2)
    res = find_isotropic_vector(form, req.budget())
    body = {"symbols": [str(Q1), str(Q2)], "form": form.to_json(), "status": res.status}
    if res.status == FOUND:
        body["vector"] = [str(x) for x in res.vector]
        return EXIT_OK, _doc("albert-form", F, **body)
    return (EXIT_NEGATIVE if res.status == NOT_FOUND else EXIT_UNKNOWN), _doc("albert-form", F, **body)


# -- chains -------------------------------------------------------------------------

def _chain_build(req):
    F = _field(req)
    budget = req.budget()
    complexity = req.options.get("random")
    if complexity is not None:
        _arity(req, 0)
        start, end, _ = random_same_class_pair(req.seed, complexity, F)
    else:
        _arity(req, 4)
        a, b, c, d = (_symbol(s, F) for s in req.operands)
        start, end = Vertex(a, b), Vertex(c, d)
    try:
        cert = build_chain(start, end, budget)
    except ClassMismatch as exc:
        return EXIT_NEGATIVE, _doc("chain build", F, status="class-mismatch", detail=str(exc))
    except ChainUnknown as exc:
        return EXIT_UNKNOWN, _doc("chain build", F, status="unknown", step=exc.step,
                                  partial=[s.to_json() for s in exc.partial])
    return EXIT_OK, _doc("chain build", F, status="built", certificate=cert.to_json())


def _load(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read certificate {path!r}: {exc}") from exc
    if isinstance(data, dict) and "certificate" in data and "command" in data:
        data = data["certificate"]
    if not isinstance(data, dict):
        raise UsageError("a certificate is a JSON object")
    return data


def _chain_verify(req):
    _arity(req, 1)
    data = _load(req.operands[0])
    budget = req.budget()
    if "witt" in data:
        rep = verify_decomposition(data, budget)
        kind = "decomposition"
    else:
        rep = verify_chain(data, budget)
        kind = "chain"
    doc = {"version": DOC_VERSION, "command": "chain verify", "kind": kind, **rep.to_json()}
    return (EXIT_OK if rep.accepted else EXIT_NEGATIVE), doc


# -- Witt level ----------------------------------------------------------------------

def _witt_cmd(req):
    F = _field(req)
    op = req.subcommand[1]
    if op == "add":
        _arity(req, 2)
        u, v = (_witt_arg(s, F) for s in req.operands)
        if u.length != v.length:
            raise UsageError("Witt vectors of different lengths")
        return EXIT_OK, _doc("witt add", F, result=(u + v).to_json())
    if op == "neg":
        _arity(req, 1)
        return EXIT_OK, _doc("witt neg", F, result=(-_witt_arg(req.operands[0], F)).to_json())
    _arity(req, 3)
    try:
        a2, c2 = (parse_element(s, F) for s in req.operands[:2])
        n = int(req.operands[2])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not 1 <= n <= 6:
        raise UsageError("Witt length must lie in 1..6")
    out = solve_e_coords(a2, WittVector.teichmuller_like(c2, n))
    return EXIT_OK, _doc("witt solve-e", F, result=out.to_json())


# -- decompositions --------------------------------------------------------------------

def _decompose(req, count: int):
    F = _field(req)
    budget = req.budget()
    complexity = req.options.get("random")
    name = f"decompose{count}"
    if complexity is not None:
        _arity(req, 0)
        gen = random_len4_instance if count == 4 else random_len3_instance
        entries = gen(req.seed, req.options.get("length", 2), complexity, F)
    else:
        _arity(req, count)
        entries = tuple(_entry(s, F) for s in req.operands)
    dec = decompose_len4 if count == 4 else decompose_len3
    try:
        cert = dec(entries, budget)
    except PreconditionFailed as exc:
        return EXIT_NEGATIVE, _doc(name, F, status="precondition", detail=str(exc))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    except (ChainUnknown, SearchExhausted) as exc:
        return EXIT_UNKNOWN, _doc(name, F, status="unknown", detail=str(exc))
    except ClassMismatch as exc:
        return EXIT_NEGATIVE, _doc(name, F, status="class-mismatch", detail=str(exc))
    return EXIT_OK, _doc(name, F, status="decomposed", total=cert.total_budget, bound=cert.bound,
                         certificate=cert.to_json())


# -- selftest ---------------------------------------------------------------------------

def _selftest(req):
    from .selftest import run_selftest

    F = _field(req)
    checks = run_selftest(F, req.seed, req.budget())
    ok = all(c["ok"] for c in checks)
    return (EXIT_OK if ok else EXIT_NEGATIVE), _doc("selftest", F, seed=req.seed, checks=checks)


HANDLERS = {
    ("split",): _split,
    ("iso",): _iso,
    ("invariants",): _invariants,
    ("albert-form",): _albert,
    ("chain", "build"): _chain_build,
    ("chain", "verify"): _chain_verify,
    ("witt", "add"): _witt_cmd,
    ("witt", "neg"): _witt_cmd,
    ("witt", "solve-e"): _witt_cmd,
    ("decompose4",): lambda r: _decompose(r, 4),
    ("decompose3",): lambda r: _decompose(r, 3),
    ("selftest",): _selftest,
}


def dispatch(req: CommandRequest):
    """Run one request: (exit code, output document)."""
    handler = HANDLERS.get(tuple(req.subcommand))
    if handler is None:
        raise UsageError(f"unknown command {' '.join(req.subcommand)!r}")
    return handler(req)


__all__ = ["CommandRequest", "UsageError", "dispatch", "HANDLERS", "DEFAULT_FIELD",
           "EXIT_OK", "EXIT_NEGATIVE", "EXIT_UNKNOWN", "EXIT_USAGE"]
