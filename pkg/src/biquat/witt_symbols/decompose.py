"""Symbol-length decompositions of products of four or three degree-2^n symbols.

Both procedures split the product into classes of exponent dividing 2^(n-1)
and count them in reduction units: a pair of degree-2^n symbols whose product
lies in exponent 2^(n-1) costs 4, a single symbol whose first-coordinate
residue is split costs 1.  The units are counted, not expanded.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from ..biquaternion_chain import ChainCertificate, Vertex, build_chain, verify_chain
from ..field_core.artin_schreier import DEFAULT_BUDGET, SearchBudget, norm_value
from ..field_core.fields import parse_field
from ..quadratic_forms import (QuadraticForm, SearchExhausted, albert_form, albert_lemma_extract,
                               find_isotropic_vector)
from ..quaternion import invariant_vector, is_split
from .symbols import SymbolEntry, SymbolExpr, apply_rule
from .witt import WittVector, solve_e_coords

DECOMP_VERSION = 1
PAIR_BUDGET = 4
SINGLE_BUDGET = 1
LEN4_BOUND = 32
LEN3_BOUND = 9


class PreconditionFailed(ValueError):
    """The residual product is not split, so the input is not in exponent 2^(n-1)."""


@dataclass(frozen=True)
class Unit:
    kind: str           # "pair" or "single"
    indices: tuple      # positions in the class word
    budget: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "indices": list(self.indices), "budget": self.budget}


@dataclass(frozen=True)
class DecompClass:
    label: str
    expr: SymbolExpr
    units: tuple

    @property
    def budget(self) -> int:
        return sum(u.budget for u in self.units)

    def to_json(self) -> dict:
        return {"label": self.label, **self.expr.to_json(), "units": [u.to_json() for u in self.units]}

    @classmethod
    def from_json(cls, F, data) -> "DecompClass":
        return cls(data["label"], SymbolExpr.from_json(F, data),
                   tuple(Unit(u["kind"], tuple(u["indices"]), int(u["budget"])) for u in data["units"]))


@dataclass(frozen=True)
class DecompositionCertificate:
    kind: str                       # "len4" or "len3"
    field: object
    inputs: tuple
    classes: tuple
    chain: ChainCertificate | None = None
    witnesses: dict = field(default_factory=dict)
    version: int = DECOMP_VERSION

    @property
    def total_budget(self) -> int:
        return sum(c.budget for c in self.classes)

    @property
    def bound(self) -> int:
        return LEN4_BOUND if self.kind == "len4" else LEN3_BOUND

    def to_json(self) -> dict:
        out = {
            "version": self.version, "kind": self.kind, "field": self.field.descriptor(),
            "witt": {"inputs": [e.to_json() for e in self.inputs],
                     "classes": [c.to_json() for c in self.classes]},
            "budget": {"total": self.total_budget, "bound": self.bound,
                       "classes": [c.budget for c in self.classes]},
            "witnesses": {k: (v if isinstance(v, (int, list)) else str(v))
                          for k, v in self.witnesses.items()},
        }
        if self.chain is not None:
            out["chain"] = self.chain.to_json()
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "DecompositionCertificate":
        F = parse_field(data["field"])
        w = data["witt"]
        wit = {}
        for k, v in data.get("witnesses", {}).items():
            if isinstance(v, str):
                wit[k] = F(v)
            elif isinstance(v, list):
                wit[k] = [[str(x) for x in row] for row in v]
            else:
                wit[k] = v
        chain = ChainCertificate.from_json(data["chain"]) if "chain" in data else None
        return cls(data["kind"], F, tuple(SymbolEntry.from_json(F, e) for e in w["inputs"]),
                   tuple(DecompClass.from_json(F, c) for c in w["classes"]), chain, wit,
                   int(data.get("version", -1)))

    def summary(self) -> str:
        lines = [f"{self.kind} decomposition over {self.field.descriptor()}",
                 f"total budget {self.total_budget} (bound {self.bound})"]
        for c in self.classes:
            lines.append(f"  [{c.budget}] {c.label}: {c.expr}")
        return "\n".join(lines)


def _kind(F) -> str:
    return getattr(F, "kind", "finite")


def _residual_split(entries) -> bool | None:
    """Is the product of first-coordinate residues split?  None off GF(2^k)(t) and GF(2^k)."""
    if not entries:
        return True
    F = entries[0].field
    kind = _kind(F)
    if kind == "finite":
        return True
    if kind != "rational-1var":
        return None
    total = None
    for e in entries:
        v = invariant_vector(e.residual())
        total = v if total is None else total + v
    return total.is_zero()


def _check_inputs(entries, count: int):
    entries = tuple(entries)
    if len(entries) != count:
        raise ValueError(f"expected {count} entries")
    if any(e.n != entries[0].n or e.field != entries[0].field or e.op for e in entries):
        raise ValueError("entries must be non-opposite symbols of one degree over one field")
    if _residual_split(entries) is False:
        raise PreconditionFailed("the product of first-coordinate residues is not split")
    return entries


def _pair_units(size: int) -> tuple:
    return tuple(Unit("pair", (i, i + size // 2), PAIR_BUDGET) for i in range(size // 2))


def _lift(slots, kind: str, n: int, witnesses: list):
    a, b, c, d = slots
    first = SymbolEntry(WittVector.teichmuller_like(a, n), b)
    if kind == "II":
        cvec = solve_e_coords(a, WittVector.teichmuller_like(c, n))
        witnesses.append([str(a), str(c)] + [str(x) for x in cvec.coords[1:]])
    else:
        cvec = WittVector.teichmuller_like(c, n)
    return first, SymbolEntry(cvec, d)


def decompose_len4(entries, budget: SearchBudget = DEFAULT_BUDGET) -> DecompositionCertificate:
    """Four symbols with product in exponent 2^(n-1): one class of budget 8 per chain stage."""
    entries = _check_inputs(entries, 4)
    F = entries[0].field
    n = entries[0].n
    if all(e.is_trivially_split() for e in entries):
        return DecompositionCertificate("len4", F, entries, ())
    res = [e.residual() for e in entries]
    chain = build_chain(Vertex(res[0], res[1]), Vertex(res[2], res[3]), budget)
    moves = [(s.rule, s.source.slots()) for s in chain.steps if s.kind == "move"]

    e_rows = []
    lifts, images, logs = [], [], []
    for kind, slots in moves:
        L = _lift(slots, kind, n, e_rows)
        log = []
        if kind == "I":
            M = apply_rule("slot_add", L, log)
        else:
            a, _, c, _ = slots
            M = apply_rule("common_t", L, log, t=a + c)
        lifts.append(L)
        images.append(M)
        logs.append(tuple(log))

    classes = []
    head = entries[:2]
    tail = entries[2:]
    k = len(moves)
    if k == 0:
        classes.append(DecompClass("start (x) end", SymbolExpr(head + tail), _pair_units(4)))
    else:
        word = head + tuple(x.opposite() for x in lifts[0])
        classes.append(DecompClass("start (x) lift(1)^op", SymbolExpr(word), _pair_units(4)))
        for i in range(1, k):
            word = images[i - 1] + tuple(x.opposite() for x in lifts[i])
            classes.append(DecompClass(f"move({i}) (x) lift({i + 1})^op",
                                       SymbolExpr(word, logs[i - 1]), _pair_units(4)))
        classes.append(DecompClass(f"move({k}) (x) end", SymbolExpr(images[k - 1] + tail, logs[k - 1]),
                                   _pair_units(4)))
    wit = {"moves": [[m[0]] for m in moves]}
    if e_rows:
        wit["e_coords"] = e_rows
    cert = DecompositionCertificate("len4", F, entries, tuple(classes), chain, wit)
    assert cert.total_budget <= LEN4_BOUND
    return cert


def _albert_data(entries, budget, witness):
    """(lam, (y, x, z, t)) with w1 + p1 + lam^2 + lam + b1 N_w1(y, x) + b2 N_p1(z, t) = 0."""
    Q1, Q2 = entries[0].residual(), entries[1].residual()
    s = Q1.alpha + Q2.alpha
    if witness is None:
        form = albert_form(Q1, Q2)
        res = find_isotropic_vector(form, budget)
        if not res:
            raise SearchExhausted("albert form of the residual pair", res)
        lam, v = albert_lemma_extract(s, QuadraticForm(form.blocks[1:]), res.vector)
    else:
        lam, v = witness
    y, x, z, t = v
    g1 = Q1.beta * norm_value(Q1.alpha, y, x)
    g2 = Q2.beta * norm_value(Q2.alpha, z, t)
    if s + lam * lam + lam + g1 + g2 != 0:
        raise ValueError("Albert witness fails its identity")
    return lam, (y, x, z, t), g1, g2


def decompose_len3(entries, budget: SearchBudget = DEFAULT_BUDGET, albert_witness=None
                   ) -> DecompositionCertificate:
    """Three symbols with product in exponent 2^(n-1): budgets 4 + 1 + 4.

    ``albert_witness`` = (lam, (y, x, z, t)) may be supplied instead of searching.
    gamma_i include the second slots: gamma1 = b1 N_w1(y, x), gamma2 = b2 N_p1(z, t).
    """
    entries = _check_inputs(entries, 3)
    F = entries[0].field
    n = entries[0].n
    if all(e.is_trivially_split() for e in entries):
        return DecompositionCertificate("len3", F, entries, ())
    E1, E2, E3 = entries
    lam, (y, x, z, t), g1, g2 = _albert_data(entries, budget, albert_witness)
    wit = {"lambda": lam, "x": x, "y": y, "z": z, "t": t, "gamma1": g1, "gamma2": g2}
    log = []
    classes = []
    if g1.is_zero() and not g2.is_zero():
        # the same argument with the roles of the first two entries exchanged
        E1, E2, g1, g2 = E2, E1, g2, g1
        wit["swapped"] = 1
    if g1.is_zero():
        # w1 + p1 lies in wp(F): [w, b1) (x) [p, b2) = [w + p, b1) (x) [p, b2 / b1)
        single, rest = apply_rule("slot_add", (E1, E2), log)
        classes.append(DecompClass("single", SymbolExpr((single,), tuple(log)),
                                   (Unit("single", (0,), SINGLE_BUDGET),)))
        classes.append(DecompClass("rest (x) third", SymbolExpr((rest, E3)), _pair_units(2)))
        return DecompositionCertificate("len3", F, entries, tuple(classes), None, wit)
    G1 = SymbolEntry(E1.omega, g1)
    (m1,) = apply_rule("merge", (E1, G1.opposite()), log)
    if g2.is_zero():
        first = SymbolExpr((m1,), tuple(log))
        log2 = []
        single, rest = apply_rule("slot_add", (G1, E2), log2)
    else:
        G2 = SymbolEntry(E2.omega, g2)
        (m2,) = apply_rule("merge", (E2, G2.opposite()), log)
        first = SymbolExpr((m1, m2), tuple(log))
        log2 = []
        (A1,) = apply_rule("absorb", (G1,), log2)
        (A2,) = apply_rule("absorb", (G2,), log2)
        single, rest = apply_rule("slot_add", (A1, A2), log2)
    if len(first.entries) == 1:
        units = (Unit("single", (0,), SINGLE_BUDGET),)
    else:
        units = (Unit("pair", (0, 1), PAIR_BUDGET),)
    classes.append(DecompClass("first two against their norms", first, units))
    classes.append(DecompClass("single", SymbolExpr((single,), tuple(log2)),
                               (Unit("single", (0,), SINGLE_BUDGET),)))
    classes.append(DecompClass("rest (x) third", SymbolExpr((rest, E3)),
                               (Unit("pair", (0, 1), PAIR_BUDGET),)))
    cert = DecompositionCertificate("len3", F, entries, tuple(classes), None, wit)
    assert cert.total_budget <= LEN3_BOUND
    return cert


# -- verification --------------------------------------------------------------

@dataclass
class DecompositionReport:
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.accepted

    def fail(self, code: str, detail: str) -> None:
        self.failures.append((code, detail))

    def codes(self) -> set:
        return {c for c, _ in self.failures}

    def to_json(self) -> dict:
        return {"accepted": self.accepted, "notes": self.notes,
                "failures": [{"code": c, "detail": d} for c, d in self.failures]}


def _signed(entry: SymbolEntry):
    return (entry.omega, entry.beta), (-1 if entry.op else 1)


def _formal_product(cert: DecompositionCertificate) -> bool:
    """Undo every logged rule on the multiset of class entries; the inputs must remain."""
    count = Counter()
    for c in cert.classes:
        for e in c.expr.entries:
            key, sgn = _signed(e)
            count[key] += sgn
    for c in cert.classes:
        for entry in reversed(c.expr.log):
            for e in entry.outputs:
                key, sgn = _signed(e)
                count[key] -= sgn
            for e in entry.inputs:
                key, sgn = _signed(e)
                count[key] += sgn
    want = Counter((e.omega, e.beta) for e in cert.inputs)
    # split symbols are trivial in the Brauer group and may appear or vanish freely
    split = lambda key: key[0].is_zero() or key[1] == key[1].field.one_element
    return ({k: v for k, v in count.items() if v and not split(k)}
            == {k: v for k, v in want.items() if not split(k)})


def verify_decomposition(cert, budget: SearchBudget | None = None) -> DecompositionReport:
    rep = DecompositionReport()
    if isinstance(cert, dict):
        if cert.get("version") != DECOMP_VERSION:
            rep.fail("version", f"unsupported version {cert.get('version')!r}")
            return rep
        try:
            cert = DecompositionCertificate.from_json(cert)
        except Exception as exc:        # any parse problem is a malformed document
            rep.fail("malformed", f"cannot parse certificate: {exc}")
            return rep
    budget = budget or DEFAULT_BUDGET
    if cert.total_budget > cert.bound:
        rep.fail("budget", f"total {cert.total_budget} exceeds {cert.bound}")
    for ci, c in enumerate(cert.classes):
        for u in c.units:
            want = PAIR_BUDGET if u.kind == "pair" else SINGLE_BUDGET
            if len(u.indices) != (2 if u.kind == "pair" else 1):
                rep.fail("unit-shape", f"class {ci}: unit {u.kind} covers {len(u.indices)} entries")
                continue
            if u.budget != want:
                rep.fail("budget", f"class {ci}: unit {u.kind} carries {u.budget}")
            verdict = _residual_split([c.expr.entries[i] for i in u.indices])
            if verdict is False:
                rep.fail("unit-residual", f"class {ci} ({c.label}): residual of unit {u.indices} not split")
            elif verdict is None:
                rep.notes.append(f"class {ci}: residual check skipped off GF(2^k)(t)")
        for entry in c.expr.log:
            if not entry.replay():
                rep.fail("log", f"class {ci}: rule {entry.rule} does not replay")
    if not _formal_product(cert):
        rep.fail("class-product", "classes do not multiply back to the input")
    if cert.classes and _residual_split(list(cert.inputs)) is False:
        rep.fail("input-residual", "input residual product is not split")
    w = cert.witnesses
    if cert.kind == "len4" and cert.classes:
        if cert.chain is None:
            rep.fail("chain", "missing chain certificate")
        else:
            chain_rep = verify_chain(cert.chain, budget)
            if not chain_rep:
                rep.fail("chain", f"chain rejected: {sorted(chain_rep.codes())}")
            res = [e.residual() for e in cert.inputs]
            if cert.chain.start != Vertex(res[0], res[1]) or cert.chain.end != Vertex(res[2], res[3]):
                rep.fail("chain", "chain endpoints are not the input residues")
        F = cert.field
        for row in w.get("e_coords", []):
            a, c = F(row[0]), F(row[1])
            n = len(row) - 1
            vec = WittVector(tuple(F(x) for x in row[1:]))
            lhs = WittVector.teichmuller_like(a, n)
            if lhs + vec != WittVector.teichmuller_like(a + c, n):
                rep.fail("e-coords", "Witt equation for the e-coordinates fails")
    if cert.kind == "len3" and cert.classes:
        try:
            E1, E2 = cert.inputs[0].residual(), cert.inputs[1].residual()
            lam, x, y, z, t = (w[k] for k in ("lambda", "x", "y", "z", "t"))
            g1 = E1.beta * norm_value(E1.alpha, y, x)
            g2 = E2.beta * norm_value(E2.alpha, z, t)
            ok = (E1.alpha + E2.alpha + lam * lam + lam + g1 + g2 == 0
                  and g1 == w["gamma1"] and g2 == w["gamma2"])
        except (KeyError, TypeError, ValueError) as exc:
            rep.fail("albert", f"malformed Albert witness: {exc}")
        else:
            if not ok:
                rep.fail("albert", "Albert identity fails")
    return rep


__all__ = ["DECOMP_VERSION", "PAIR_BUDGET", "SINGLE_BUDGET", "LEN4_BOUND", "LEN3_BOUND",
           "PreconditionFailed", "Unit", "DecompClass", "DecompositionCertificate",
           "DecompositionReport", "decompose_len4", "decompose_len3", "verify_decomposition"]
