"""Split and isomorphism tests for quaternion symbols."""

from __future__ import annotations

from dataclasses import dataclass

from ..field_core.artin_schreier import (DEFAULT_BUDGET, UNKNOWN, Place, SearchBudget,
                                         artin_schreier_solve, derivative, norm_value,
                                         place_from_text, trace_residue)
from ..field_core.gf2k import GF2k
from ..field_core.local_symbols import symbol_invariants
from ..quadratic_forms import Block, QuadraticForm, conic_scale, represent_value
from .symbol import QuaternionSymbol

SPLIT = "split"
NONSPLIT = "nonsplit"


def _kind(F) -> str:
    return "finite" if isinstance(F, GF2k) else F.kind


@dataclass(frozen=True)
class InvariantVector:
    """Local invariants of a symbol; places missing from ``entries`` carry 0."""

    field: object
    entries: tuple          # ((Place, bit), ...) sorted, infinity last

    @classmethod
    def from_mapping(cls, F, mapping: dict) -> "InvariantVector":
        items = sorted(mapping.items(), key=lambda kv: kv[0].sort_key(F))
        return cls(F, tuple((P, int(b)) for P, b in items))

    def __getitem__(self, place: Place) -> int:
        for P, b in self.entries:
            if P == place:
                return b
        return 0

    def support(self) -> frozenset:
        return frozenset(P for P, b in self.entries if b)

    def is_zero(self) -> bool:
        return not self.support()

    def __add__(self, other: "InvariantVector") -> "InvariantVector":
        merged = {}
        for P, b in self.entries + other.entries:
            merged[P] = merged.get(P, 0) ^ b
        return InvariantVector.from_mapping(self.field, merged)

    def __eq__(self, other) -> bool:
        if not isinstance(other, InvariantVector):
            return NotImplemented
        return self.field == other.field and self.support() == other.support()

    def __hash__(self) -> int:
        return hash(self.support())

    def to_json(self) -> list:
        return [[P.label(self.field), b] for P, b in self.entries]

    @classmethod
    def from_json(cls, F, data) -> "InvariantVector":
        return cls.from_mapping(F, {place_from_text(F, str(lab)): int(b) for lab, b in data})

    def __str__(self) -> str:
        body = ", ".join(f"{P.label(self.field)}: {b}" for P, b in self.entries)
        return "{" + body + "}"


def _require_1var(Q: QuaternionSymbol):
    if _kind(Q.field) != "rational-1var":
        raise TypeError("local invariants need a field GF(2^k)(t)")


def local_invariant(Q: QuaternionSymbol, place: Place) -> int:
    """Tr Res_P(alpha dbeta / beta) in GF(2)."""
    _require_1var(Q)
    F = Q.field
    if Q.alpha.is_zero():
        return 0
    g = F.mul(Q.alpha.raw, F.div(derivative(F, Q.beta.raw), Q.beta.raw))
    return 0 if F.is_zero(g) else trace_residue(F, g, place)


def invariant_vector(Q: QuaternionSymbol) -> InvariantVector:
    """Invariants over the support places; reciprocity is asserted on the way."""
    _require_1var(Q)
    return InvariantVector.from_mapping(Q.field, symbol_invariants(Q.alpha, Q.beta))


@dataclass(frozen=True)
class SplitResult:
    """verdict SPLIT (with ``r`` or ``uv``), NONSPLIT (with ``certificate``) or UNKNOWN."""

    verdict: str
    r: object = None
    uv: tuple | None = None
    certificate: InvariantVector | None = None
    method: str = ""

    def __bool__(self) -> bool:
        return self.verdict == SPLIT

    def verify(self, Q: QuaternionSymbol) -> bool:
        if self.verdict == SPLIT:
            if self.r is not None:
                return self.r * self.r + self.r == Q.alpha
            return self.uv is not None and norm_value(Q.alpha, *self.uv) == Q.beta
        if self.verdict == NONSPLIT:
            return (self.certificate is not None and not self.certificate.is_zero()
                    and invariant_vector(Q) == self.certificate)
        return True

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "method": self.method}
        if self.r is not None:
            out["r"] = str(self.r)
        if self.uv is not None:
            out["uv"] = [str(x) for x in self.uv]
        if self.certificate is not None:
            out["invariants"] = self.certificate.to_json()
        return out


def _immediate(Q: QuaternionSymbol):
    F = Q.field
    one, zero = F.one_element, F.zero_element
    if Q.beta == one:
        return (one, zero)
    if Q.beta == Q.alpha:
        return (zero, one)
    return None


def _finite_witness(Q: QuaternionSymbol):
    """u^2 + uv + alpha v^2 = beta over GF(2^k): one AS equation per v."""
    F = Q.field
    for raw in range(F.order):
        v = F.elem(raw)
        if v.is_zero():
            if F.is_square(Q.beta.raw):
                return (F.elem(F.sqrt(Q.beta.raw)), v)
            continue
        w = artin_schreier_solve((Q.beta + Q.alpha * v * v) / (v * v))
        if w is not None:
            return (w * v, v)
    raise AssertionError("norm form of a finite field failed to be surjective")


def is_split(Q: QuaternionSymbol, budget: SearchBudget = DEFAULT_BUDGET) -> SplitResult:
    F = Q.field
    kind = _kind(F)
    r = artin_schreier_solve(Q.alpha, budget)
    if r is not None and r != UNKNOWN:
        out = SplitResult(SPLIT, r=r, method="artin-schreier")
    elif (uv := _immediate(Q)) is not None:
        out = SplitResult(SPLIT, uv=uv, method="immediate")
    elif kind == "finite":
        out = SplitResult(SPLIT, uv=_finite_witness(Q), method="finite-field")
    elif kind == "rational-1var":
        inv = invariant_vector(Q)
        if not inv.is_zero():
            return SplitResult(NONSPLIT, certificate=inv, method="local-invariants")
        s = conic_scale(Q.alpha, Q.beta, budget)
        if s is None:
            raise AssertionError(f"no norm witness for the locally split symbol {Q}")
        rr = artin_schreier_solve(Q.alpha + Q.beta * s * s)
        out = SplitResult(SPLIT, uv=(rr / s, F.one_element / s), method="norm-descent")
    else:
        res = represent_value(QuadraticForm([Block(F.one_element, F.one_element, Q.alpha)]),
                              Q.beta, budget)
        if not res:
            return SplitResult(UNKNOWN, method="bounded-search")
        out = SplitResult(SPLIT, uv=tuple(res.vector), method="bounded-search")
    assert out.verify(Q), "split witness failed to verify"
    return out


def _witness_isomorphic(Q1: QuaternionSymbol, Q2: QuaternionSymbol, budget) -> bool:
    """Sufficient conditions that need no local theory."""
    F = Q1.field
    if Q1 == Q2:
        return True
    shift = artin_schreier_solve(Q1.alpha + Q2.alpha, budget)
    if shift is not None and shift != UNKNOWN:
        ratio = Q1.beta / Q2.beta
        res = represent_value(QuadraticForm([Block(F.one_element, F.one_element, Q1.alpha)]),
                              ratio, budget)
        if res:
            return True
    return bool(is_split(Q1, budget)) and bool(is_split(Q2, budget))


def is_isomorphic(Q1: QuaternionSymbol, Q2: QuaternionSymbol,
                  budget: SearchBudget = DEFAULT_BUDGET):
    """True, False, or UNKNOWN (only off GF(2^k) and GF(2^k)(t))."""
    if Q1.field != Q2.field:
        raise ValueError("symbols over different fields")
    kind = _kind(Q1.field)
    if Q1 == Q2 or kind == "finite":
        return True
    if kind == "rational-1var":
        return invariant_vector(Q1) == invariant_vector(Q2)
    return True if _witness_isomorphic(Q1, Q2, budget) else UNKNOWN


__all__ = ["SPLIT", "NONSPLIT", "InvariantVector", "SplitResult", "local_invariant",
           "invariant_vector", "is_split", "is_isomorphic"]
