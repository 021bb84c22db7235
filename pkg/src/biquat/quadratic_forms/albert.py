"""Extraction from isotropic vectors of [1, alpha] perp psi, the 10-dimensional
form attached to four symbols, and Albert forms of symbol pairs."""

from __future__ import annotations

from dataclasses import dataclass

from ..field_core.artin_schreier import DEFAULT_BUDGET, UNKNOWN, SearchBudget, artin_schreier_solve
from .forms import Block, QuadraticForm
from .isotropy import FOUND, SearchResult, find_isotropic_vector


class InvalidWitness(ValueError):
    """The vector handed in is not an isotropic vector of the form."""


class SearchExhausted(RuntimeError):
    """A bounded search ended without a decision."""

    def __init__(self, step: str, result: SearchResult | None = None):
        super().__init__(f"search exhausted at step '{step}'")
        self.step = step
        self.result = result


def polar(form: QuadraticForm, u, w):
    """b(u, w) = q(u + w) - q(u) - q(w)."""
    F = form.field
    total = F.zero_element
    for i, blk in enumerate(form.blocks):
        total = total + blk.lam * (u[2 * i] * w[2 * i + 1] + w[2 * i] * u[2 * i + 1])
    return total


def universal_vector(psi: QuadraticForm, iso, value):
    """v with psi(v) = value, given a nonzero isotropic vector ``iso`` of psi.

    psi is nonsingular, so some basis vector e has b(iso, e) != 0.  With
    u = e / b(iso, e) one gets psi(s iso + u) = s + psi(u).
    """
    F = psi.field
    if psi.evaluate(iso) != 0 or all(x.is_zero() for x in iso):
        raise InvalidWitness("not a nonzero isotropic vector of psi")
    for k in range(psi.dim):
        e = [F.zero_element] * psi.dim
        e[k] = F.one_element
        b = polar(psi, iso, e)
        if not b.is_zero():
            u = [x / b for x in e]
            s = value + psi.evaluate(u)
            v = tuple(s * x + y for x, y in zip(iso, u))
            assert psi.evaluate(v) == value
            return v
    raise AssertionError("polar form degenerate on a nonsingular form")


def albert_lemma_extract(alpha, psi: QuadraticForm, w):
    """(r, v) with r^2 + r + alpha + psi(v) = 0 from an isotropic vector w of [1, alpha] perp psi."""
    F = psi.field
    alpha = F(alpha)
    if psi.dim < 2:
        raise ValueError("psi must have dimension at least 2")
    full = QuadraticForm([Block(F.one_element, F.one_element, alpha)]).perp(psi)
    w = tuple(F(x) for x in w)
    if len(w) != full.dim or all(x.is_zero() for x in w) or not full.evaluate(w).is_zero():
        raise InvalidWitness("w is not a nonzero isotropic vector of [1, alpha] perp psi")
    x, y, rest = w[0], w[1], w[2:]
    if not y.is_zero():
        r, v = x / y, tuple(c / y for c in rest)
    elif x.is_zero():
        # psi(rest) = 0 with rest != 0: psi is isotropic, hence universal
        r = F.zero_element
        v = universal_vector(psi, rest, alpha) if not alpha.is_zero() else tuple(F.zero_element for _ in rest)
    else:
        r, v = alpha, tuple(alpha / x * c for c in rest)
    assert (r * r + r + alpha + psi.evaluate(v)).is_zero(), "extraction identity failed"
    return r, v


def phi_form(a, b, c, d, alpha, beta, gamma, delta) -> QuadraticForm:
    """[1, a+c+alpha+gamma] perp b[1,a] perp d[1,c] perp beta[1,alpha] perp delta[1,gamma]."""
    F = b.field
    one = F.one_element
    return QuadraticForm([
        Block(one, one, a + c + alpha + gamma),
        Block(b, one, a), Block(d, one, c), Block(beta, one, alpha), Block(delta, one, gamma),
    ])


@dataclass(frozen=True)
class LambdaBalance:
    """lam with a+c+alpha+gamma + lam + lam^2 = b N_a(p0) + d N_c(p1) + beta N_alpha(p2) + delta N_gamma(p3)."""

    lam: object
    slots: tuple          # ((a, b), (c, d), (alpha, beta), (gamma, delta))
    args: tuple           # four (x, y) pairs

    def values(self) -> tuple:
        return tuple(s2 * (x * x + x * y + s1 * y * y) for (s1, s2), (x, y) in zip(self.slots, self.args))

    def lhs(self):
        (a, _), (c, _), (alpha, _), (gamma, _) = self.slots
        return a + c + alpha + gamma + self.lam + self.lam * self.lam

    def rhs(self):
        vals = self.values()
        return vals[0] + vals[1] + vals[2] + vals[3]

    def holds(self) -> bool:
        return self.lhs() == self.rhs()

    def is_degenerate(self) -> bool:
        return all(x.is_zero() and y.is_zero() for x, y in self.args)


def lambda_balance(a, c, alpha, gamma, b, d, beta, delta,
                   budget: SearchBudget = DEFAULT_BUDGET) -> LambdaBalance:
    """Solve the four-symbol balance identity via isotropy of ``phi_form``.

    The product [a,b)[c,d)[alpha,beta)[gamma,delta) must be split; then phi
    has trivial Arf and Clifford invariants in dimension 10 and is isotropic,
    so the search runs without round limits.  When a+c+alpha+gamma lies in
    wp(F) the all-zero arguments already balance both sides at 0.
    """
    F = b.field
    slots = ((a, b), (c, d), (alpha, beta), (gamma, delta))
    zero = F.zero_element
    s = a + c + alpha + gamma
    r = artin_schreier_solve(s, budget)
    if r is not None and r != UNKNOWN:
        out = LambdaBalance(r, slots, tuple((zero, zero) for _ in range(4)))
        assert out.holds()
        return out
    phi = phi_form(a, b, c, d, alpha, beta, gamma, delta)
    res = find_isotropic_vector(phi, budget, guaranteed=True)
    if res.status != FOUND:
        raise SearchExhausted("lambda_balance", res)
    psi = QuadraticForm(phi.blocks[1:])
    lam, v = albert_lemma_extract(s, psi, res.vector)
    out = LambdaBalance(lam, slots, tuple((v[2 * i], v[2 * i + 1]) for i in range(4)))
    assert out.holds(), "balance identity failed"
    return out


def albert_form(Q1, Q2) -> QuadraticForm:
    """[1, c+gamma] perp d[1,c] perp delta[1,gamma] for Q1 = [c,d), Q2 = [gamma,delta)."""
    F = Q1.field
    one = F.one_element
    c, d, gamma, delta = Q1.alpha, Q1.beta, Q2.alpha, Q2.beta
    return QuadraticForm([Block(one, one, c + gamma), Block(d, one, c), Block(delta, one, gamma)])


def albert_extract_common(Q1, Q2, budget: SearchBudget = DEFAULT_BUDGET):
    """f = c + d N_c(v1) = gamma + delta N_gamma(v2) + r^2 + r from an isotropic Albert form.

    Returns (f, r, v1, v2); raises SearchExhausted when no isotropic vector
    is found (the exception carries the search result).
    """
    form = albert_form(Q1, Q2)
    res = find_isotropic_vector(form, budget)
    if res.status != FOUND:
        raise SearchExhausted("albert_form", res)
    psi = QuadraticForm(form.blocks[1:])
    r, v = albert_lemma_extract(Q1.alpha + Q2.alpha, psi, res.vector)
    v1, v2 = (v[0], v[1]), (v[2], v[3])
    f = Q1.alpha + psi.blocks[0].evaluate(*v1)
    assert f == Q2.alpha + psi.blocks[1].evaluate(*v2) + r * r + r
    return f, r, v1, v2


__all__ = [
    "InvalidWitness", "SearchExhausted", "polar", "universal_vector", "albert_lemma_extract",
    "phi_form", "LambdaBalance", "lambda_balance", "albert_form", "albert_extract_common",
]
