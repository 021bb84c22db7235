"""Random pairs of vertices in one class, for tests and acceptance runs."""

from __future__ import annotations

import random

from ..field_core import make_field
from ..field_core.artin_schreier import norm_value
from .graph import TYPE_I, TYPE_II, Vertex, apply_move, rewrite_symbol


def random_element(F, rng: random.Random, max_degree: int, nonzero: bool = False):
    """n / d with deg n, deg d <= max_degree and d monic."""
    R = F.ring
    while True:
        n = R.from_coeffs([rng.randrange(F.base.order) for _ in range(rng.randint(0, max_degree) + 1)])
        dd = rng.randint(0, max_degree)
        d = R.from_coeffs([rng.randrange(F.base.order) for _ in range(dd)] + [1])
        x = F.elem(F.make(n, d))
        if not (nonzero and x.is_zero()):
            return x


def random_vertex(F, rng: random.Random, max_degree: int) -> Vertex:
    el = lambda nz=False: random_element(F, rng, max_degree, nz)
    return Vertex.of(el(), el(True), el(), el(True))


def _random_rewrite(V: Vertex, F, rng, max_degree):
    k = rng.randrange(2)
    Q = V[k]
    rule = rng.choice(("norm", "wp", "absorb"))
    if rule == "norm":
        small = max(0, max_degree - 1)
        x, y = random_element(F, rng, small), random_element(F, rng, small)
        if norm_value(Q.alpha, x, y).is_zero():
            return V, None
        params = {"x": x, "y": y}
    elif rule == "wp":
        params = {"lam": random_element(F, rng, max(0, max_degree - 1))}
    else:
        params = {}
    return V.replace(k, rewrite_symbol(rule, Q, params)), {"rewrite": rule, "component": k,
                                                           "params": {p: str(v) for p, v in params.items()}}


def random_same_class_pair(seed: int, complexity: int, F=None, max_degree: int = 2):
    """(start, end, trace): ``complexity`` edge moves, each after an optional rewrite.

    The trace records the generating operations for the harness; the builder
    never sees it.
    """
    F = F if F is not None else make_field(1, None, ("t",))
    rng = random.Random(seed)
    start = random_vertex(F, rng, max_degree)
    V, trace = start, []
    for _ in range(complexity):
        if rng.random() < 0.5:
            V, op = _random_rewrite(V, F, rng, max_degree)
            if op:
                trace.append(op)
        kind = TYPE_I if V.first.alpha == V.second.alpha else rng.choice((TYPE_I, TYPE_II))
        V = apply_move(kind, *V.slots())
        trace.append({"move": kind})
    return start, V, trace


__all__ = ["random_element", "random_vertex", "random_same_class_pair"]
