"""Random inputs for the decompositions: products whose residues cancel."""

from __future__ import annotations

import random

from ..biquaternion_chain.generator import random_element, random_same_class_pair
from ..biquaternion_chain.graph import TYPE_I, TYPE_II, Vertex, apply_move
from ..field_core import make_field
from ..field_core.artin_schreier import norm_value
from ..quaternion import QuaternionSymbol
from .symbols import SymbolEntry
from .witt import WittVector


def _lift(Q, n, rng, F, max_degree):
    tail = tuple(random_element(F, rng, max_degree) for _ in range(n - 1))
    return SymbolEntry(WittVector((Q.alpha,) + tail), Q.beta)


def random_len4_instance(seed: int, n: int = 2, complexity: int = 2, F=None, max_degree: int = 2):
    """Four degree-2^n symbols whose residues are two presentations of one biquaternion class."""
    F = F if F is not None else make_field(1, None, ("t",))
    A, B, _ = random_same_class_pair(seed, complexity, F, max_degree)
    rng = random.Random(seed ^ 0x5EED)
    return tuple(_lift(Q, n, rng, F, max_degree) for Q in (A.first, A.second, B.first, B.second))


def random_len3_instance(seed: int, n: int = 2, complexity: int = 2, F=None, max_degree: int = 2):
    """Three degree-2^n symbols; the first two residues present the class of the third."""
    F = F if F is not None else make_field(1, None, ("t",))
    rng = random.Random(seed)
    el = lambda nz=False: random_element(F, rng, max_degree, nz)
    a, rho, b = el(), el(), el(True)
    V = Vertex.of(a, b, rho + a, b)
    for _ in range(complexity):
        kind = TYPE_I if V.first.alpha == V.second.alpha else rng.choice((TYPE_I, TYPE_II))
        V = apply_move(kind, *V.slots())
    third = QuaternionSymbol(rho, b)
    return tuple(_lift(Q, n, rng, F, max_degree) for Q in (V.first, V.second, third))


def random_len3_witnessed(seed: int, n: int = 2, F=None, max_degree: int = 2, one_sided: bool = False):
    """(entries, witness) built around a chosen Albert witness (lam, (y, x, z, 0)).

    p1 = w1 + lam^2 + lam + g1 + g2 with g1 = b1 N_w1(y, x) and g2 = b2 z^2, so
    the witness identity holds by construction; the third entry is
    [p1 + g2, g2 / g1), the class left over once both norms are split off.
    With ``one_sided`` the second norm value is zero (z = 0) and the third
    entry becomes [p1, b2 / g1).
    """
    F = F if F is not None else make_field(1, None, ("t",))
    rng = random.Random(seed)
    el = lambda nz=False: random_element(F, rng, max_degree, nz)
    w1, b1, b2, lam = el(), el(True), el(True), el()
    while True:
        y, x = el(), el()
        g1 = b1 * norm_value(w1, y, x)
        if not g1.is_zero():
            break
    zero = F.zero_element
    z = zero if one_sided else el(True)
    g2 = b2 * z * z
    p1 = w1 + lam * lam + lam + g1 + g2
    third = QuaternionSymbol(p1, b2 / g1) if one_sided else QuaternionSymbol(p1 + g2, g2 / g1)
    Qs = (QuaternionSymbol(w1, b1), QuaternionSymbol(p1, b2), third)
    entries = tuple(_lift(Q, n, rng, F, max_degree) for Q in Qs)
    return entries, (lam, (y, x, z, zero))


def random_len3_one_sided(seed: int, n: int = 2, F=None, max_degree: int = 2):
    """(entries, witness) whose Albert witness has z = t = 0, so the second norm value vanishes."""
    return random_len3_witnessed(seed, n, F, max_degree, one_sided=True)


__all__ = ["random_len4_instance", "random_len3_instance", "random_len3_one_sided",
           "random_len3_witnessed"]
