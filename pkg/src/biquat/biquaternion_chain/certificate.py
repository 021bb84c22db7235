"""Chain certificates, their JSON form, and the independent verifier."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..field_core.artin_schreier import DEFAULT_BUDGET, UNKNOWN, SearchBudget, norm_value
from ..field_core.fields import FieldElement, parse_field
from ..quaternion import QuaternionSymbol, is_isomorphic
from .graph import (MOVE_KINDS, REWRITE_RULES, TYPE_I, TYPE_II, MoveUndefined, RewriteError, Step,
                    Vertex, apply_move, rewrite_symbol)

CERT_VERSION = 1

# failure codes, in the order the verifier checks them
FAIL_VERSION = "version"
FAIL_MALFORMED = "malformed"
FAIL_PATTERN = "pattern"
FAIL_CONTINUITY = "continuity"
FAIL_MOVE = "move-formula"
FAIL_REWRITE = "rewrite-formula"
FAIL_ISO = "rewrite-iso"
FAIL_ENDPOINT = "endpoint"
FAIL_LAMBDA = "lambda-identity"
FAIL_E = "e-decomposition"
FAIL_F = "f-identity"
FAIL_SLOT = "common-slot"


def _enc(v):
    if isinstance(v, FieldElement):
        return str(v)
    if isinstance(v, (tuple, list)):
        return [_enc(x) for x in v]
    if isinstance(v, dict):
        return {k: _enc(x) for k, x in v.items()}
    return v


def _dec(F, v):
    if isinstance(v, str):
        return F(v)
    if isinstance(v, list):
        return tuple(_dec(F, x) for x in v)
    if isinstance(v, dict):
        return {k: _dec(F, x) for k, x in v.items()}
    return v


def budget_to_json(b: SearchBudget) -> dict:
    return {"max_degree": b.max_degree, "max_candidates": b.max_candidates,
            "rounds": b.rounds, "seed": b.seed}


def budget_from_json(d: dict) -> SearchBudget:
    return SearchBudget(**{k: int(v) for k, v in d.items()})


@dataclass(frozen=True)
class ChainCertificate:
    """A path from ``start`` to ``end`` plus the auxiliary witnesses used to build it."""

    field: object
    start: Vertex
    end: Vertex
    steps: tuple
    witnesses: dict = field(default_factory=dict)
    budget: SearchBudget = DEFAULT_BUDGET
    version: int = CERT_VERSION

    def moves(self) -> list:
        return [s.rule for s in self.steps if s.kind == "move"]

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "field": self.field.descriptor(),
            "start": self.start.to_json(),
            "end": self.end.to_json(),
            "steps": [s.to_json() for s in self.steps],
            "witnesses": _enc(self.witnesses),
            "budget": budget_to_json(self.budget),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "ChainCertificate":
        F = parse_field(data["field"])
        return cls(F, Vertex.from_json(F, data["start"]), Vertex.from_json(F, data["end"]),
                   tuple(Step.from_json(F, s) for s in data["steps"]),
                   {k: _dec(F, v) for k, v in data.get("witnesses", {}).items()},
                   budget_from_json(data.get("budget", {})), int(data.get("version", -1)))

    def summary(self) -> str:
        lines = [f"field {self.field.descriptor()}", f"start {self.start}", f"end   {self.end}",
                 f"moves {' '.join(self.moves()) or '(none)'}"]
        for s in self.steps:
            tag = s.rule if s.kind == "move" else f"{s.rule}@{s.component}"
            arrow = "<-" if s.backward else "->"
            lines.append(f"  {s.kind:7s} {tag:9s} {arrow} {s.target}")
        return "\n".join(lines)


@dataclass
class VerifyReport:
    failures: list = field(default_factory=list)     # (code, detail)

    @property
    def accepted(self) -> bool:
        return not self.failures

    def fail(self, code: str, detail: str) -> None:
        self.failures.append((code, detail))

    def codes(self) -> set:
        return {c for c, _ in self.failures}

    def __bool__(self) -> bool:
        return self.accepted

    def to_json(self) -> dict:
        return {"accepted": self.accepted,
                "failures": [{"code": c, "detail": d} for c, d in self.failures]}


def check_pattern(kinds: list) -> str | None:
    """None when the move sequence has at most two type I and one type II, II in the middle."""
    if any(k not in MOVE_KINDS for k in kinds):
        return f"unknown move kinds in {kinds}"
    if kinds.count(TYPE_I) > 2 or kinds.count(TYPE_II) > 1:
        return f"too many moves of one type: {kinds}"
    if len(kinds) == 3 and kinds != [TYPE_I, TYPE_II, TYPE_I]:
        return f"three moves must run I, II, I; got {kinds}"
    return None


def _check_move(step: Step, rep: VerifyReport, i: int) -> None:
    at = step.params.get("at")
    if not isinstance(at, tuple) or len(at) != 4:
        rep.fail(FAIL_MALFORMED, f"step {i}: move without four slots")
        return
    near, far = (step.target, step.source) if step.backward else (step.source, step.target)
    try:
        image = apply_move(step.rule, *at)
    except (MoveUndefined, ValueError) as exc:
        rep.fail(FAIL_MOVE, f"step {i}: {exc}")
        return
    if near != Vertex.of(*at) or far != image:
        rep.fail(FAIL_MOVE, f"step {i}: type {step.rule} move does not match its formula")


def _check_rewrite(step: Step, rep: VerifyReport, i: int, budget: SearchBudget) -> None:
    k = step.component
    if k not in (0, 1) or step.rule not in REWRITE_RULES:
        rep.fail(FAIL_MALFORMED, f"step {i}: bad rewrite rule or component")
        return
    if step.source[1 - k] != step.target[1 - k]:
        rep.fail(FAIL_REWRITE, f"step {i}: rewrite touches the other component")
        return
    src, dst = step.source[k], step.target[k]
    if step.rule != "iso":
        before, after = (dst, src) if step.backward else (src, dst)
        try:
            ok = rewrite_symbol(step.rule, before, step.params) == after
        except (RewriteError, KeyError, ValueError) as exc:
            rep.fail(FAIL_REWRITE, f"step {i}: {exc}")
            return
        if not ok:
            rep.fail(FAIL_REWRITE, f"step {i}: {step.rule} rewrite does not match its formula")
            return
        if getattr(src.field, "kind", None) != "rational-1var":
            return
    verdict = is_isomorphic(src, dst, budget)
    if verdict is not True:
        why = "undecided" if verdict == UNKNOWN else "not isomorphic"
        rep.fail(FAIL_ISO, f"step {i}: {src} vs {dst} {why}")


def _check_lambda(w, steps, rep: VerifyReport) -> None:
    try:
        lam, slots, args = w["lam"], w["slots"], w["args"]
        (a, b), (c, d), (al, be), (ga, de) = slots
        lhs = a + c + al + ga + lam + lam * lam
        rhs = lhs.field.zero_element
        for (s1, s2), (x, y) in zip(slots, args):
            rhs = rhs + s2 * norm_value(s1, x, y)
    except (KeyError, TypeError, ValueError) as exc:
        rep.fail(FAIL_LAMBDA, f"malformed balance witness: {exc}")
        return
    if lhs != rhs:
        rep.fail(FAIL_LAMBDA, "balance identity fails")
    for s in steps:
        if s.kind == "rewrite" and s.rule == "wp" and s.note == "balance" and s.params.get("lam") != lam:
            rep.fail(FAIL_LAMBDA, "balance shift differs from the witness")


def _check_e(w, steps, rep: VerifyReport) -> None:
    try:
        a, c, e, x, y = w["a"], w["c"], w["e"], w["x"], w["y"]
        ok = e == (a + c) * x * x + x * y + y * y and not e.is_zero()
        if not x.is_zero():
            e1, y1 = w["e1"], w["y1"]
            ok = ok and e1 * x * x == e and y1 * x == y and e1 == a + c + y1 + y1 * y1
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        rep.fail(FAIL_E, f"malformed e witness: {exc}")
        return
    if not ok:
        rep.fail(FAIL_E, "e decomposition fails")
        return
    for s in steps:
        if s.kind == "move" and s.rule == TYPE_II and s.note == "e":
            at = s.params["at"]
            if x.is_zero() or at[0] + at[2] != w["e1"]:
                rep.fail(FAIL_E, "type II multiplier differs from the normalized e")


def _check_f(w, rep: VerifyReport) -> None:
    try:
        c, d, ga, de, f, r = w["c"], w["d"], w["gamma"], w["delta"], w["f"], w["r"]
        ok = (f == c + d * norm_value(c, *w["v1"])
              and f == ga + de * norm_value(ga, *w["v2"]) + r * r + r)
    except (KeyError, TypeError, ValueError) as exc:
        rep.fail(FAIL_F, f"malformed f witness: {exc}")
        return
    if not ok:
        rep.fail(FAIL_F, "f identities fail")


def _check_slot(w, rep: VerifyReport) -> None:
    from ..quaternion import AlgebraElement, commutator_sum

    try:
        Q = QuaternionSymbol(w["a"], w["b"])
        z, y = AlgebraElement(Q, w["z"]), AlgebraElement(Q, w["y"])
        x = AlgebraElement.basis(Q)[1]
        one = AlgebraElement.scalar(Q, Q.field.one_element)
        ok = z * z + z == one * w["alpha"] and commutator_sum(x, z) == y
        if not y.is_zero():
            ok = ok and commutator_sum(x, y) == y and commutator_sum(z, y) == y and (y * y).is_scalar()
    except (KeyError, TypeError, ValueError) as exc:
        rep.fail(FAIL_SLOT, f"malformed common-slot witness: {exc}")
        return
    if not ok:
        rep.fail(FAIL_SLOT, "common-slot relations fail")


def verify_chain(cert, budget: SearchBudget | None = None) -> VerifyReport:
    """Check a certificate (object or its JSON dict) and itemize every failure."""
    rep = VerifyReport()
    if isinstance(cert, dict):
        if cert.get("version") != CERT_VERSION:
            rep.fail(FAIL_VERSION, f"unsupported version {cert.get('version')!r}")
            return rep
        try:
            cert = ChainCertificate.from_json(cert)
        except Exception as exc:        # any parse problem is a malformed document
            rep.fail(FAIL_MALFORMED, f"cannot parse certificate: {exc}")
            return rep
    if cert.version != CERT_VERSION:
        rep.fail(FAIL_VERSION, f"unsupported version {cert.version!r}")
        return rep
    budget = budget or cert.budget
    steps = list(cert.steps)

    problem = check_pattern(cert.moves())
    if problem:
        rep.fail(FAIL_PATTERN, problem)
    for i in range(len(steps) - 1):
        if steps[i].target != steps[i + 1].source:
            rep.fail(FAIL_CONTINUITY, f"step {i} ends where step {i + 1} does not start")
    for i, s in enumerate(steps):
        if s.kind == "move":
            _check_move(s, rep, i)
        elif s.kind == "rewrite":
            _check_rewrite(s, rep, i, budget)
        else:
            rep.fail(FAIL_MALFORMED, f"step {i}: unknown kind {s.kind!r}")

    first = steps[0].source if steps else cert.start
    last = steps[-1].target if steps else cert.start
    for label, have, want in (("start", first, cert.start), ("end", last, cert.end)):
        if have != want and want.same_vertex(have, budget) is not True:
            rep.fail(FAIL_ENDPOINT, f"path {label} {have} is not the vertex {want}")

    w = cert.witnesses
    if "lambda" in w:
        _check_lambda(w["lambda"], steps, rep)
    if "e" in w:
        _check_e(w["e"], steps, rep)
    if "f" in w:
        _check_f(w["f"], rep)
    if "slot" in w:
        _check_slot(w["slot"], rep)
    return rep


__all__ = ["CERT_VERSION", "ChainCertificate", "VerifyReport", "verify_chain", "check_pattern",
           "budget_to_json", "budget_from_json", "FAIL_VERSION", "FAIL_MALFORMED", "FAIL_PATTERN",
           "FAIL_CONTINUITY", "FAIL_MOVE", "FAIL_REWRITE", "FAIL_ISO", "FAIL_ENDPOINT",
           "FAIL_LAMBDA", "FAIL_E", "FAIL_F", "FAIL_SLOT"]
