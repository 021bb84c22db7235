"""Vertices of the presentation graph, edge moves and same-vertex rewrites."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..field_core.artin_schreier import DEFAULT_BUDGET, UNKNOWN, SearchBudget, norm_value
from ..quaternion import QuaternionSymbol, is_isomorphic

TYPE_I = "I"
TYPE_II = "II"
MOVE_KINDS = (TYPE_I, TYPE_II)
REWRITE_RULES = ("norm", "wp", "absorb", "iso")


class MoveUndefined(ValueError):
    """An edge move was requested with a zero multiplier or second slot."""


class RewriteError(ValueError):
    """A same-vertex rewrite could not be justified."""


@dataclass(frozen=True)
class Vertex:
    """An ordered pair of presentations; graph identity is componentwise isomorphism."""

    first: QuaternionSymbol
    second: QuaternionSymbol

    def __post_init__(self):
        if self.first.field != self.second.field:
            raise ValueError("components over different fields")

    @property
    def field(self):
        return self.first.field

    def __getitem__(self, k: int) -> QuaternionSymbol:
        return (self.first, self.second)[k]

    def replace(self, k: int, Q: QuaternionSymbol) -> "Vertex":
        return Vertex(Q, self.second) if k == 0 else Vertex(self.first, Q)

    def slots(self) -> tuple:
        return (self.first.alpha, self.first.beta, self.second.alpha, self.second.beta)

    def same_vertex(self, other: "Vertex", budget: SearchBudget = DEFAULT_BUDGET):
        """True / False / UNKNOWN from componentwise ``is_isomorphic``."""
        verdicts = []
        for k in (0, 1):
            v = is_isomorphic(self[k], other[k], budget)
            if v is False:
                return False
            verdicts.append(v)
        return True if all(v is True for v in verdicts) else UNKNOWN

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"

    def to_json(self) -> list:
        return [self.first.to_json(), self.second.to_json()]

    @classmethod
    def from_json(cls, F, data) -> "Vertex":
        return cls(QuaternionSymbol.from_json(F, data[0]), QuaternionSymbol.from_json(F, data[1]))

    @classmethod
    def of(cls, a, b, c, d) -> "Vertex":
        return cls(QuaternionSymbol(a, b), QuaternionSymbol(c, d))


def apply_type1(a, b, c, d) -> Vertex:
    """([a+c, b), [c, bd))."""
    if b.is_zero() or d.is_zero():
        raise MoveUndefined("second slots must be nonzero")
    return Vertex.of(a + c, b, c, b * d)


def apply_type2(a, b, c, d) -> Vertex:
    """([a, b(a+c)), [c, d(a+c))); needs a != c."""
    if b.is_zero() or d.is_zero():
        raise MoveUndefined("second slots must be nonzero")
    m = a + c
    if m.is_zero():
        raise MoveUndefined("a + c = 0: the type II multiplier vanishes")
    return Vertex.of(a, b * m, c, d * m)


def apply_move(kind: str, a, b, c, d) -> Vertex:
    if kind == TYPE_I:
        return apply_type1(a, b, c, d)
    if kind == TYPE_II:
        return apply_type2(a, b, c, d)
    raise ValueError(f"unknown move kind {kind!r}")


@dataclass(frozen=True)
class Step:
    """One path segment.  Forward: target = rule(source); backward: source = rule(target).

    Moves carry ``params = {"at": (a, b, c, d)}``.  Rewrites act on one
    component with params: norm {"x", "y"}, wp {"lam"}, absorb {}, iso {}.
    """

    kind: str                       # "move" or "rewrite"
    rule: str                       # I, II, norm, wp, absorb, iso
    source: Vertex
    target: Vertex
    component: int | None = None
    params: dict = field(default_factory=dict)
    backward: bool = False
    note: str = ""

    def reversed(self) -> "Step":
        return Step(self.kind, self.rule, self.target, self.source, self.component,
                    self.params, not self.backward, self.note)

    def to_json(self) -> dict:
        params = {}
        for k, v in self.params.items():
            params[k] = [str(x) for x in v] if isinstance(v, tuple) else str(v)
        out = {"kind": self.kind, "rule": self.rule, "source": self.source.to_json(),
               "target": self.target.to_json(), "params": params, "backward": self.backward}
        if self.component is not None:
            out["component"] = self.component
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, F, data) -> "Step":
        params = {k: tuple(F(x) for x in v) if isinstance(v, list) else F(v)
                  for k, v in data.get("params", {}).items()}
        return cls(data["kind"], data["rule"], Vertex.from_json(F, data["source"]),
                   Vertex.from_json(F, data["target"]), data.get("component"), params,
                   bool(data.get("backward", False)), data.get("note", ""))


def move_step(kind: str, V: Vertex, note: str = "") -> Step:
    return Step("move", kind, V, apply_move(kind, *V.slots()), params={"at": V.slots()}, note=note)


def rewrite_symbol(rule: str, Q: QuaternionSymbol, params: dict) -> QuaternionSymbol:
    """The formula behind each rewrite rule except ``iso``."""
    if rule == "norm":
        n = norm_value(Q.alpha, params["x"], params["y"])
        if n.is_zero():
            raise RewriteError("norm value is zero")
        return QuaternionSymbol(Q.alpha, Q.beta * n)
    if rule == "wp":
        lam = params["lam"]
        return QuaternionSymbol(Q.alpha + lam * lam + lam, Q.beta)
    if rule == "absorb":
        # i -> i + j gives (i + j)^2 + (i + j) = alpha + beta
        return QuaternionSymbol(Q.alpha + Q.beta, Q.beta)
    raise ValueError(f"no formula for rewrite rule {rule!r}")


def same_vertex_rewrite(V: Vertex, rule: str, component: int, params: dict | None = None,
                        replacement: QuaternionSymbol | None = None,
                        budget: SearchBudget = DEFAULT_BUDGET, note: str = "") -> Step:
    """Rewrite one component of V; ``iso`` needs a replacement certified by is_isomorphic."""
    params = dict(params or {})
    Q = V[component]
    if rule == "iso":
        if replacement is None:
            raise RewriteError("iso rewrite needs a replacement symbol")
        if is_isomorphic(Q, replacement, budget) is not True:
            raise RewriteError(f"{Q} and {replacement} not certified isomorphic")
        new = replacement
    else:
        new = rewrite_symbol(rule, Q, params)
    return Step("rewrite", rule, V, V.replace(component, new), component, params, note=note)


__all__ = ["TYPE_I", "TYPE_II", "MOVE_KINDS", "REWRITE_RULES", "MoveUndefined", "RewriteError",
           "Vertex", "Step", "apply_type1", "apply_type2", "apply_move", "move_step",
           "rewrite_symbol", "same_vertex_rewrite"]
