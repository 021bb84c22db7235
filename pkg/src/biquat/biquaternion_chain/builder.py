"""Constructive chain of at most three edge moves between two presentations.

Both sides are first brought to a common first slot a' (one type I move
each, balanced by ``lambda_balance``).  The remaining pair
([a,b),[c,d)) / ([a,beta),[gamma,delta)) is joined by at most one type II
move, either directly through a common slot when gamma - c lies in wp(F),
or after rewriting both second components to a common first slot f taken
from an isotropic vector of the Albert form of [c,d) and [gamma,delta).
"""

from __future__ import annotations

from ..field_core.artin_schreier import DEFAULT_BUDGET, UNKNOWN, SearchBudget, artin_schreier_solve, norm_value
from ..quadratic_forms import (Block, QuadraticForm, SearchExhausted, albert_extract_common,
                               lambda_balance, represent_value)
from ..quaternion import PreconditionViolated, QuaternionSymbol, common_slot, is_isomorphic
from .certificate import ChainCertificate, check_pattern
from .graph import (MOVE_KINDS, TYPE_I, TYPE_II, MoveUndefined, RewriteError, Step, Vertex,
                    apply_move, move_step, same_vertex_rewrite)


class ChainUnknown(RuntimeError):
    """A search ran out of budget; ``partial`` holds the steps built so far."""

    def __init__(self, step: str, partial: tuple = (), witnesses: dict | None = None):
        super().__init__(f"chain construction undecided at step '{step}'")
        self.step = step
        self.partial = tuple(partial)
        self.witnesses = dict(witnesses or {})


class ClassMismatch(ValueError):
    """The two vertices do not present the same biquaternion class."""


class _Path:
    """Steps from a fixed vertex, appended in order."""

    def __init__(self, V: Vertex, budget: SearchBudget):
        self.steps = []
        self.here = V
        self.budget = budget

    def rewrite(self, rule, component, params=None, replacement=None, note=""):
        if rule == "iso" and replacement == self.here[component]:
            return
        step = same_vertex_rewrite(self.here, rule, component, params, replacement, self.budget, note)
        if step.target != step.source:
            self.steps.append(step)
            self.here = step.target

    def move(self, kind, note=""):
        step = move_step(kind, self.here, note)
        self.steps.append(step)
        self.here = step.target

    def iso_to(self, V: Vertex, note=""):
        for k in (0, 1):
            try:
                self.rewrite("iso", k, replacement=V[k], note=note)
            except RewriteError as exc:
                verdict = is_isomorphic(self.here[k], V[k], self.budget)
                if verdict is False:
                    raise ClassMismatch(str(exc)) from exc
                raise ChainUnknown(f"iso rewrite ({note})", self.steps) from exc


def _absorb_value(path: _Path, k: int, xy, note: str):
    """[s, t) -> [s, t N_s(xy)) -> [s + t N_s(xy), t N_s(xy)); no-op for a zero norm value."""
    Q = path.here[k]
    n = norm_value(Q.alpha, *xy)
    if n.is_zero():
        return
    path.rewrite("norm", k, {"x": xy[0], "y": xy[1]}, note=note)
    path.rewrite("absorb", k, note=note)


def _short_chain(start: Vertex, end: Vertex, budget: SearchBudget):
    """Certificates with zero or one move when they exist by direct replay."""
    if start.same_vertex(end, budget) is True:
        p = _Path(start, budget)
        p.iso_to(end, "same vertex")
        return p.steps
    for kind in MOVE_KINDS:
        for forward in (True, False):
            src, dst = (start, end) if forward else (end, start)
            try:
                image = apply_move(kind, *src.slots())
            except MoveUndefined:
                continue
            if image.same_vertex(dst, budget) is not True:
                continue
            p = _Path(src, budget)
            p.move(kind, "replay")
            p.iso_to(dst, "replay")
            return p.steps if forward else [s.reversed() for s in reversed(p.steps)]
    return None


def _represent_e(a, c, e, budget):
    F = e.field
    form = QuadraticForm([Block(F.one_element, a + c, F.one_element)])
    res = represent_value(form, e, budget)
    if not res:
        raise ChainUnknown("e decomposition")
    x, y = res.vector
    return x, y


def _common_first_slot(left: _Path, right: _Path, witnesses: dict, budget: SearchBudget):
    """Join ([a,b),[c,d)) and ([a,beta),[c,delta)) with at most one type II move.

    ``left`` runs forward to the meeting vertex; ``right`` is reversed later.
    """
    (a, b, c, d), (_, beta, _, delta) = left.here.slots(), right.here.slots()
    Q1 = QuaternionSymbol(a, b * beta)
    Q2 = QuaternionSymbol(c, d * delta)
    try:
        e, z, y = common_slot(Q1, Q2, budget)
    except SearchExhausted as exc:
        raise ChainUnknown("common slot", left.steps, witnesses) from exc
    except PreconditionViolated as exc:
        raise ClassMismatch(str(exc)) from exc
    witnesses["slot"] = {"a": a, "b": b * beta, "alpha": c, "z": z.coords, "y": y.coords}
    x_, y_ = _represent_e(a, c, e, budget)
    w = {"a": a, "c": c, "e": e, "x": x_, "y": y_}
    witnesses["e"] = w
    goal = right.here
    if x_.is_zero():
        # e = y^2 is a square: [a, b) = [a, b e) = [a, beta), likewise for [c, d)
        for k in (0, 1):
            left.rewrite("norm", k, {"x": y_, "y": e.field.zero_element}, note="e square")
        left.iso_to(goal, "e square")
        return
    y1 = y_ / x_
    w["e1"], w["y1"] = e / (x_ * x_), y1
    left.rewrite("wp", 0, {"lam": y1}, note="e")
    left.move(TYPE_II, note="e")
    left.rewrite("wp", 0, {"lam": y1}, note="e")
    left.iso_to(goal, "e")


def build_chain(start: Vertex, end: Vertex, budget: SearchBudget = DEFAULT_BUDGET,
                shortcuts: bool = True) -> ChainCertificate:
    """A certificate joining ``start`` to ``end`` with moves in the pattern I, II, I.

    With ``shortcuts`` off, the zero- and one-move replays are skipped and
    the full balancing pipeline always runs.

    Raises ChainUnknown when a bounded search gives up (partial steps are
    attached) and ClassMismatch when the vertices present different classes.
    """
    if start.field != end.field:
        raise ValueError("vertices over different fields")
    F = start.field
    short = _short_chain(start, end, budget) if shortcuts else None
    if short is not None:
        return ChainCertificate(F, start, end, tuple(short), {}, budget)

    witnesses = {}
    a, b, c, d = start.slots()
    al, be, ga, de = end.slots()
    try:
        bal = lambda_balance(a, c, al, ga, b, d, be, de, budget)
    except SearchExhausted as exc:
        raise ChainUnknown("lambda balance", (), witnesses) from exc
    witnesses["lambda"] = {"lam": bal.lam, "slots": bal.slots, "args": bal.args}

    left, right = _Path(start, budget), _Path(end, budget)
    for path, (p0, p1) in ((left, bal.args[:2]), (right, bal.args[2:])):
        _absorb_value(path, 0, p0, "balance")
        _absorb_value(path, 1, p1, "balance")
        path.move(TYPE_I, note="balance")
    left.rewrite("wp", 0, {"lam": bal.lam}, note="balance")
    if left.here.first.alpha != right.here.first.alpha:
        raise AssertionError("balanced first slots differ")

    # reduced pair ([a,b),[c,d)) and ([a,beta),[gamma,delta))
    if shortcuts and left.here.same_vertex(right.here, budget) is True:
        left.iso_to(right.here, "reduced")
    else:
        c, d = left.here.second.alpha, left.here.second.beta
        ga, de = right.here.second.alpha, right.here.second.beta
        mu = artin_schreier_solve(c + ga, budget)
        if mu is not None and mu != UNKNOWN:
            right.rewrite("wp", 1, {"lam": mu}, note="shift")
        else:
            try:
                f, r, v1, v2 = albert_extract_common(left.here.second, right.here.second, budget)
            except SearchExhausted as exc:
                raise ChainUnknown("albert form", left.steps, witnesses) from exc
            witnesses["f"] = {"c": c, "d": d, "gamma": ga, "delta": de, "f": f, "r": r,
                              "v1": v1, "v2": v2}
            _absorb_value(left, 1, v1, "f")
            _absorb_value(right, 1, v2, "f")
            right.rewrite("wp", 1, {"lam": r}, note="f")
            if left.here.second.alpha != right.here.second.alpha:
                raise AssertionError("Albert extraction did not give a common slot")
        if shortcuts and left.here.same_vertex(right.here, budget) is True:
            left.iso_to(right.here, "reduced")
        else:
            _common_first_slot(left, right, witnesses, budget)

    steps = left.steps + [s.reversed() for s in reversed(right.steps)]
    cert = ChainCertificate(F, start, end, tuple(steps), witnesses, budget)
    problem = check_pattern(cert.moves())
    assert problem is None, problem
    return cert


__all__ = ["ChainUnknown", "ClassMismatch", "build_chain"]
