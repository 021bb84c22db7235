"""Artin-Schreier utilities: wp(x) = x^2 + x, reduction modulo wp(F), places.

Over GF(2^k)(t) every element x has a unique normal form NF(x) with
x - NF(x) in wp(F), where NF(x) has

* only odd-order poles at each finite place (P-adic digits of degree < deg P),
* a polynomial part with only odd-degree terms,
* a constant term that is 0 or a fixed element of absolute trace 1.

NF is additive, so ``x in wp(F)`` iff ``NF(x) == 0`` and systems of the form
``NF(x_0 + sum_i u_i x_i) = 0`` are linear over GF(2).
"""

from __future__ import annotations

import itertools

from dataclasses import dataclass, field

from .fields import FieldElement, RationalFunctionField
from .gf2k import GF2k
from .linalg import BitIndexer


class BudgetExhausted(Exception):
    """A bounded search ran out of budget without an answer."""


UNKNOWN = "unknown"


def wp(x: FieldElement) -> FieldElement:
    """The Artin-Schreier map x -> x^2 + x."""
    return x * x + x


def norm_value(a: FieldElement, x: FieldElement, y: FieldElement) -> FieldElement:
    """N_a(x, y) = x^2 + xy + a y^2."""
    return x * x + x * y + a * y * y


@dataclass(frozen=True)
class Place:
    """A place of GF(2^k)(t): a monic irreducible polynomial, or infinity (poly None)."""

    poly: object = None

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    def degree(self, F) -> int:
        return 1 if self.poly is None else F.ring.deg(self.poly)

    def label(self, F) -> str:
        return "inf" if self.poly is None else F.ring.to_str(self.poly)

    def sort_key(self, F):
        return (1, 0) if self.poly is None else (0, F.ring.key(self.poly))


INFINITY = Place(None)


def place_from_text(F, text: str) -> Place:
    if text.strip() == "inf":
        return INFINITY
    p = F(text)
    if not F.is_polynomial(p.raw):
        raise ValueError("a place is given by a polynomial")
    P = F.ring.monic(p.raw[0])
    if not F.ring.is_irreducible(P):
        raise ValueError(f"{text} is not irreducible")
    return Place(P)


def _require_1var(F):
    if getattr(F, "kind", None) != "rational-1var":
        raise TypeError(f"operation requires a field GF(2^k)(t), got {F}")


def invert_variable(F: RationalFunctionField, x):
    """Raw x(1/t), used to move the place at infinity to t = 0."""
    R = F.ring
    n, d = x
    D = max(R.deg(n), R.deg(d))
    rn = R.from_coeffs(list(reversed(R.coeffs(n) + [F.base.zero] * (D - R.deg(n)))))
    rd = R.from_coeffs(list(reversed(R.coeffs(d) + [F.base.zero] * (D - R.deg(d)))))
    return F.make(rn, rd)


def derivative(F: RationalFunctionField, x):
    """Raw d/dt of a raw rational function."""
    R = F.ring
    n, d = x
    return F.make(R.add(R.mul(R.derivative(n), d), R.mul(n, R.derivative(d))), R.mul(d, d))


_DEN_CACHE: dict = {}


def _denominator_data(F, d):
    """Per-factor data (P, e, P^e, (d/P^e)^-1 mod P^e) for a monic denominator."""
    key = (F, F.ring.key(d))
    hit = _DEN_CACHE.get(key)
    if hit is None:
        R = F.ring
        hit = []
        if R.deg(d) > 0:
            for P, e in R.factor(d):
                Pe = R.power(P, e)
                E = R.div_exact(d, Pe)
                Einv = R.inv_mod(R.mod(E, Pe), Pe) if R.deg(E) > 0 else R.one
                hit.append((P, e, Pe, Einv))
        if len(_DEN_CACHE) > 4096:
            _DEN_CACHE.clear()
        _DEN_CACHE[key] = hit
    return hit


def partial_fractions(F: RationalFunctionField, x):
    """Split n/d as (polynomial, {P: {order: digit}}) with digits of degree < deg P.

    The fraction need not be reduced; d must be nonzero.
    """
    R = F.ring
    n, d = x
    lc = R.lc(d)
    if lc != F.base.one:
        inv = F.base.inv(lc)
        n, d = R.scale(inv, n), R.scale(inv, d)
    pol, rem = R.divmod(n, d)
    polar = {}
    for P, e, Pe, Einv in _denominator_data(F, d):
        A = R.mod(R.mul(R.mod(rem, Pe), Einv), Pe)
        digs = {}
        for j, c in enumerate(R.digits(A, P, e)):
            if not R.is_zero(c):
                digs[e - j] = c
        if digs:
            polar[P] = digs
    return pol, polar


@dataclass
class ASNormalForm:
    """NF(x) together with w such that x = NF(x) + wp(w)."""

    field: RationalFunctionField
    poly: dict            # odd degree -> GF(2^k) coefficient (raw)
    const: int            # 0 or the fixed trace-one constant
    polar: dict           # place poly -> {odd order -> digit}
    w_poly: object        # polynomial part of w
    w_polar: list         # (P, {i: g}) meaning sum g / P^i

    @property
    def w(self):
        """Raw w with x = NF(x) + wp(w)."""
        F = self.field
        R = F.ring
        out = F.from_poly(self.w_poly)
        for P, terms in self.w_polar:
            top = max(terms)
            num = R.zero
            for i, g in terms.items():
                num = R.add(num, R.mul(g, R.power(P, top - i)))
            out = F.add(out, F.make(num, R.power(P, top)))
        return out

    def is_zero(self) -> bool:
        return not self.poly and not self.const and not any(self.polar.values())

    def pole_order(self, P) -> int:
        digs = self.polar.get(P)
        return max(digs) if digs else 0

    def keys(self):
        """GF(2)-coordinates of NF(x) as hashable keys."""
        F = self.field
        R = F.ring
        k = F.base.k
        for j, c in self.poly.items():
            for b in range(k):
                if (c >> b) & 1:
                    yield ("inf", j, b)
        if self.const:
            yield ("c",)
        for P, digs in self.polar.items():
            pk = R.key(P)
            for m, dig in digs.items():
                for j, c in enumerate(R.coeffs(dig)):
                    for b in range(k):
                        if (c >> b) & 1:
                            yield ("P", pk, m, j, b)

    def value(self):
        """The raw element NF(x)."""
        F = self.field
        R = F.ring
        out = F.from_poly(R.from_coeffs(
            [self.poly.get(j, F.base.zero) if j else self.const
             for j in range(max(self.poly, default=0) + 1)]))
        for P, digs in self.polar.items():
            for m, dig in digs.items():
                out = F.add(out, F.make(dig, R.power(P, m)))
        return out


def as_normal_form(F: RationalFunctionField, x) -> ASNormalForm:
    """Canonical representative of x modulo wp(F) over GF(2^k)(t)."""
    _require_1var(F)
    R = F.ring
    Fq = F.base
    pol, polar = partial_fractions(F, x)
    w_poly = R.zero
    w_polar = []
    reduced = {}
    for P, digs in polar.items():
        digs = dict(digs)
        wp_terms = {}
        top = max(digs, default=0)
        for m in range(top, 1, -1):
            cm = digs.get(m)
            if m % 2 or cm is None or R.is_zero(cm):
                continue
            i = m // 2
            g = R.sqrt_mod(cm, P)
            h = R.divmod(R.square(g), P)[0]
            del digs[m]
            for order, extra in ((m - 1, h), (i, g)):
                if R.is_zero(extra):
                    continue
                cur = R.add(digs.get(order, R.zero), extra)
                if R.is_zero(cur):
                    digs.pop(order, None)
                else:
                    digs[order] = cur
            wp_terms[i] = R.add(wp_terms.get(i, R.zero), g)
        if wp_terms:
            w_polar.append((P, wp_terms))
        digs = {m: c for m, c in digs.items() if not R.is_zero(c)}
        if digs:
            reduced[P] = digs
    cs = R.coeffs(pol)
    for j in range(len(cs) - 1, 0, -1):
        c = cs[j]
        if j % 2 == 0 and not Fq.is_zero(c):
            s = Fq.sqrt(c)
            cs[j] = Fq.zero
            cs[j // 2] = Fq.add(cs[j // 2], s)
            w_poly = R.add(w_poly, R.monomial(s, j // 2))
    c0 = cs[0] if cs else Fq.zero
    const = 0
    if Fq.trace(c0):
        const = Fq.trace_one_element()
        r = Fq.wp_solve(Fq.add(c0, const))
    else:
        r = Fq.wp_solve(c0)
    if r:
        w_poly = R.add(w_poly, R.const(r))
    poly = {j: cs[j] for j in range(1, len(cs)) if not Fq.is_zero(cs[j])}
    return ASNormalForm(F, poly, const, reduced, w_poly, w_polar)


def nf_vector(F, x, indexer: BitIndexer) -> int:
    """NF(x) packed as a GF(2) bit vector under a shared indexer."""
    return indexer.pack(as_normal_form(F, x).keys())


@dataclass(frozen=True)
class SearchBudget:
    """Bounds for deterministic searches.

    ``seed`` keys instance generation and the local-lift sampler of the
    two-block isotropy search; a fixed budget gives identical results.
    """

    max_degree: int = 6
    max_candidates: int = 20000
    rounds: int = 6
    seed: int = 0

    def __post_init__(self):
        if min(self.max_degree, self.max_candidates, self.rounds) < 1:
            raise ValueError("budget bounds must be positive")


DEFAULT_BUDGET = SearchBudget()


def artin_schreier_solve(alpha: FieldElement, budget: SearchBudget = DEFAULT_BUDGET):
    """r with r^2 + r = alpha, None when provably unsolvable, UNKNOWN otherwise.

    Exact over GF(2^k) and GF(2^k)(t); bounded search over GF(2^k)(s,t).
    """
    F = alpha.field
    if isinstance(F, GF2k):
        r = F.wp_solve(alpha.raw)
        if r is None:
            return None
        out = F.elem(r)
    elif F.kind == "rational-1var":
        nf = as_normal_form(F, alpha.raw)
        if not nf.is_zero():
            return None
        w = nf.w
        w1 = F.add(w, F.one)
        out = F.elem(min(w, w1, key=F.key))
    else:
        out = _as_solve_bivariate(alpha, budget)
        if out is None or out == UNKNOWN:
            return out
    assert wp(out) == alpha, "artin_schreier_solve post-check failed"
    return out


def _as_solve_bivariate(alpha: FieldElement, budget: SearchBudget):
    """Bounded search over GF(2^k)(s)(t): r = P/Q with Q^2 the denominator."""
    F = alpha.field
    R = F.ring
    K = F.base
    n, d = alpha.raw
    if not R.is_square(d):
        return None  # the denominator of wp(r) is a square
    Q = R.sqrt_exact(d)
    # r = P/Q needs P^2 + PQ = n; deg P is forced by leading terms.
    dn, dq = R.deg(n), R.deg(Q)
    if dn > 2 * dq:
        if dn % 2:
            return None
        dp = dn // 2
    elif dn < 2 * dq:
        dp = dn - dq
    else:
        dp = dq
    if dp < 0:
        dp = 0
    inner = K.ring
    cands = [K.make(p, inner.one) for p in inner.polys_upto(budget.max_degree)]
    for count, combo in enumerate(itertools.product(cands, repeat=dp + 1)):
        if count >= budget.max_candidates:
            return UNKNOWN
        P = R.from_coeffs(list(combo))
        if R.eq(R.add(R.square(P), R.mul(P, Q)), n):
            return F.elem(F.make(P, Q))
    return UNKNOWN


@dataclass
class ResidueData:
    """Local data of a symbol [alpha, beta) at a place."""

    place: Place
    beta_valuation: int
    alpha_pole_order: int                 # after reduction modulo wp; odd or 0
    reduced_alpha: FieldElement           # alpha' = alpha + wp(w)
    residue: FieldElement | None = None   # image of the regular part (if pole order 0)
    residue_trace: int | None = None
    extras: dict = field(default_factory=dict)


def _local_setup(F, x, place: Place):
    """Move the place to a finite polynomial: returns (raw x, P)."""
    if place.is_infinite:
        return invert_variable(F, x), F.ring.gen
    return x, place.poly


def valuation(F, x, place: Place) -> int:
    R = F.ring
    if F.is_zero(x):
        raise ValueError("valuation of zero")
    y, P = _local_setup(F, x, place)
    return R.valuation(y[0], P) - R.valuation(y[1], P)


def reduce_mod(F, x, P):
    """Image of a raw element regular at P in GF(2^k)[t]/(P)."""
    R = F.ring
    n, d = x
    if R.is_zero(R.mod(d, P)):
        raise ValueError("element has a pole at P")
    return R.mod(R.mul(n, R.inv_mod(d, P)), P)


def residue_data(alpha: FieldElement, beta: FieldElement, place: Place) -> ResidueData:
    """Valuation of beta and the Artin-Schreier reduction of alpha at a place."""
    F = alpha.field
    _require_1var(F)
    if beta.is_zero():
        raise ValueError("beta must be nonzero")
    R = F.ring
    a, P = _local_setup(F, alpha.raw, place)
    nf = as_normal_form(F, a)
    reduced = nf.value()
    order = nf.pole_order(P)
    v_beta = valuation(F, beta.raw, place)
    reduced_alpha = F.elem(invert_variable(F, reduced) if place.is_infinite else reduced)
    if order:
        return ResidueData(place, v_beta, order, reduced_alpha)
    regular = reduced
    res = reduce_mod(F, regular, P)
    tr = R.trace_mod(res, P)
    res_el = F.elem(F.from_poly(res))
    return ResidueData(place, v_beta, 0, reduced_alpha, res_el, tr)


def trace_residue(F, g, place: Place) -> int:
    """Tr_{kappa/GF(2)} Res_P(g dt) for a raw rational function g."""
    R = F.ring
    if place.is_infinite:
        # g(t) dt = -g(1/u) u^-2 du
        u2 = F.from_poly(R.monomial(F.base.one, 2))
        g = F.div(invert_variable(F, g), u2)
        P = R.gen
    else:
        P = place.poly
    n, d = g
    e = R.valuation(d, P)
    if e == 0:
        return 0
    Pe = R.power(P, e)
    E = R.div_exact(d, Pe)
    rem = R.mod(n, d)
    A = R.mod(R.mul(rem, R.inv_mod(E, Pe)), Pe) if R.deg(E) > 0 else R.mod(rem, Pe)
    top = R.deg(Pe) - 1
    c = R.coeff(A, top) if R.deg(A) == top else F.base.zero
    return F.base.trace(c)
