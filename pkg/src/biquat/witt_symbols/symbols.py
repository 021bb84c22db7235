"""Degree-2^n symbols [omega, beta) as formal objects and their rewrite rules."""

from __future__ import annotations

from dataclasses import dataclass

from ..quaternion import QuaternionSymbol
from .witt import WittVector, witt_add


class RuleError(ValueError):
    """A rewrite rule was applied outside its side condition."""


@dataclass(frozen=True)
class SymbolEntry:
    """[omega, beta) of degree 2^n with n = len(omega); ``op`` marks the opposite algebra."""

    omega: WittVector
    beta: object
    op: bool = False

    def __post_init__(self):
        if self.beta.is_zero():
            raise ValueError("beta must be nonzero")
        if self.beta.field != self.omega.field:
            raise ValueError("slots over different fields")

    @property
    def n(self) -> int:
        return self.omega.length

    @property
    def field(self):
        return self.beta.field

    def opposite(self) -> "SymbolEntry":
        return SymbolEntry(self.omega, self.beta, not self.op)

    def residual(self) -> QuaternionSymbol:
        """First-coordinate quaternion symbol (the opposite has the same class in degree 2)."""
        return QuaternionSymbol(self.omega[0], self.beta)

    def is_trivially_split(self) -> bool:
        return self.omega.is_zero() or self.beta == self.beta.field.one_element

    def __str__(self) -> str:
        body = f"[{self.omega}, {self.beta})_{2 ** self.n}"
        return body + "^op" if self.op else body

    def to_json(self) -> dict:
        return {"omega": self.omega.to_json(), "beta": str(self.beta), "op": self.op}

    @classmethod
    def from_json(cls, F, data) -> "SymbolEntry":
        return cls(WittVector.from_json(F, data["omega"]), F(data["beta"]), bool(data.get("op", False)))


def _same_degree(e1: SymbolEntry, e2: SymbolEntry):
    if e1.n != e2.n or e1.field != e2.field:
        raise RuleError("entries of different degrees or fields")


def power_reduce(entry: SymbolEntry, m: int) -> SymbolEntry:
    """The 2^m-th tensor power: truncate omega to n - m coordinates."""
    if not 0 <= m < entry.n:
        raise RuleError(f"need 0 <= m < n, got m={m}, n={entry.n}")
    return SymbolEntry(entry.omega.truncate(entry.n - m), entry.beta, entry.op)


def lemma41_slot_add(e1: SymbolEntry, e2: SymbolEntry) -> tuple:
    """[w, b) (x) [p, d) = [w + p, b) (x) [p, d / b)."""
    _same_degree(e1, e2)
    if e1.op or e2.op:
        raise RuleError("slot addition acts on non-opposite entries")
    return (SymbolEntry(witt_add(e1.omega, e2.omega), e1.beta),
            SymbolEntry(e2.omega, e2.beta / e1.beta))


def lemma41_common_t(e1: SymbolEntry, e2: SymbolEntry, t) -> tuple:
    """[w, b) (x) [p, d) = [w, b t) (x) [p, d t) when w + p = (t, 0, ..., 0)."""
    _same_degree(e1, e2)
    if e1.op or e2.op:
        raise RuleError("the common-t rule acts on non-opposite entries")
    if t.is_zero():
        raise RuleError("t must be nonzero")
    if witt_add(e1.omega, e2.omega) != WittVector.teichmuller_like(t, e1.n):
        raise RuleError("omega + pi is not (t, 0, ..., 0)")
    return (SymbolEntry(e1.omega, e1.beta * t), SymbolEntry(e2.omega, e2.beta * t))


def witt_absorb(e: SymbolEntry) -> SymbolEntry:
    """[w, b) = [w + (b, 0, ..., 0), b)."""
    return SymbolEntry(witt_add(e.omega, WittVector.teichmuller_like(e.beta, e.n)), e.beta, e.op)


def merge_second(e1: SymbolEntry, e2: SymbolEntry) -> SymbolEntry:
    """[w, b) (x) [w, c)^op = [w, b / c)."""
    _same_degree(e1, e2)
    if e1.omega != e2.omega or e1.op or not e2.op:
        raise RuleError("merge needs [w, b) and [w, c)^op")
    return SymbolEntry(e1.omega, e1.beta / e2.beta)


RULES = {
    "slot_add": lambda ins, p: lemma41_slot_add(*ins),
    "common_t": lambda ins, p: lemma41_common_t(*ins, p["t"]),
    "absorb": lambda ins, p: (witt_absorb(*ins),),
    "merge": lambda ins, p: (merge_second(*ins),),
    "power_reduce": lambda ins, p: (power_reduce(ins[0], p["m"]),),
}


@dataclass(frozen=True)
class LogEntry:
    """One rule application: outputs = RULES[rule](inputs, params)."""

    rule: str
    inputs: tuple
    outputs: tuple
    params: dict

    def replay(self) -> bool:
        try:
            return tuple(RULES[self.rule](self.inputs, self.params)) == tuple(self.outputs)
        except (RuleError, KeyError, ValueError):
            return False

    def to_json(self) -> dict:
        params = {k: (v if isinstance(v, int) else str(v)) for k, v in self.params.items()}
        return {"rule": self.rule, "inputs": [e.to_json() for e in self.inputs],
                "outputs": [e.to_json() for e in self.outputs], "params": params}

    @classmethod
    def from_json(cls, F, data) -> "LogEntry":
        params = {k: (v if isinstance(v, int) else F(v)) for k, v in data.get("params", {}).items()}
        return cls(data["rule"], tuple(SymbolEntry.from_json(F, e) for e in data["inputs"]),
                   tuple(SymbolEntry.from_json(F, e) for e in data["outputs"]), params)


def apply_rule(rule: str, inputs, log: list, **params) -> tuple:
    """Apply a rule and append the application to ``log``."""
    outs = tuple(RULES[rule](tuple(inputs), params))
    log.append(LogEntry(rule, tuple(inputs), outs, dict(params)))
    return outs


@dataclass(frozen=True)
class SymbolExpr:
    """A formal tensor word of entries together with the log that produced it."""

    entries: tuple
    log: tuple = ()

    def __post_init__(self):
        es = tuple(self.entries)
        if es and any(e.n != es[0].n or e.field != es[0].field for e in es):
            raise ValueError("entries of one word share degree and field")
        object.__setattr__(self, "entries", es)
        object.__setattr__(self, "log", tuple(self.log))

    def residuals(self) -> list:
        return [e.residual() for e in self.entries]

    def __str__(self) -> str:
        return " (x) ".join(str(e) for e in self.entries) or "1"

    def to_json(self) -> dict:
        return {"entries": [e.to_json() for e in self.entries],
                "log": [entry.to_json() for entry in self.log]}

    @classmethod
    def from_json(cls, F, data) -> "SymbolExpr":
        return cls(tuple(SymbolEntry.from_json(F, e) for e in data["entries"]),
                   tuple(LogEntry.from_json(F, x) for x in data.get("log", [])))


__all__ = ["RuleError", "SymbolEntry", "SymbolExpr", "LogEntry", "RULES", "apply_rule",
           "power_reduce", "lemma41_slot_add", "lemma41_common_t", "witt_absorb", "merge_second"]
