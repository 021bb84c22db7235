"""Independent reference computations used by the tests.

None of these call into the code under test beyond element construction
and parsing; each recomputes its answer from first principles.
"""

from __future__ import annotations

import itertools
import random

import sympy
from hypothesis import strategies as st

X, T = sympy.symbols("x t")


# -- element generation ----------------------------------------------------------

def poly_element(F, rng: random.Random, max_degree: int):
    """A random polynomial in t (or a random constant of a finite field)."""
    base = F.finite_field
    consts = [base.elem(i) for i in range(base.order)]
    if not F.function_vars:
        return F(rng.choice(consts))
    t = F(F.function_vars[-1])
    out = F.zero_element
    for k in range(rng.randint(0, max_degree) + 1):
        out = out + F(str(rng.choice(consts))) * t ** k
    return out


def elements(F, max_degree: int = 2, nonzero: bool = False, fractions: bool = True):
    """Hypothesis strategy for elements n/d of F with small degrees."""
    base = F.finite_field
    consts = st.integers(0, base.order - 1).map(lambda i: str(base.elem(i)))
    if not F.function_vars:
        s = consts.map(F)
    else:
        t = F.function_vars[-1]

        def build(cs):
            terms = [f"({c})*{t}^{k}" for k, c in enumerate(cs) if c != "0"]
            return "+".join(terms) or "0"

        poly = st.lists(consts, min_size=1, max_size=max_degree + 1).map(build)
        if fractions:
            s = st.tuples(poly, st.lists(consts, min_size=0, max_size=max_degree)).map(
                lambda p: F(f"({p[0]})/({build(p[1] + ['1'])})"))
        else:
            s = poly.map(F)
    return s.filter(lambda x: not x.is_zero()) if nonzero else s


# -- Witt vectors: ghost components over an integral lift ------------------------------

def lift(el):
    """Integral polynomial lift of an element of GF(2^k)[t] (coefficients 0/1)."""
    return sympy.expand(sympy.sympify(str(el).replace("^", "**"), locals={"x": X, "t": T}))


def drop(expr, F):
    """Reduce an integral polynomial in x, t mod 2 and read it in F."""
    poly = sympy.Poly(sympy.expand(expr), X, T)
    terms = []
    for (ex, et), c in poly.terms():
        if int(c) % 2:
            factors = ([f"x^{ex}"] if ex else []) + ([f"t^{et}"] if et else [])
            terms.append("*".join(factors) or "1")
    return F("+".join(terms)) if terms else F.zero_element


def ghost(xs, k):
    return sum(2 ** i * xs[i] ** (2 ** (k - i)) for i in range(k + 1))


def ghost_sum(us, vs):
    """Witt sum of integral vectors: the unique S with ghost(S) = ghost(u) + ghost(v)."""
    out = []
    for k in range(len(us)):
        rest = sum(2 ** i * out[i] ** (2 ** (k - i)) for i in range(k))
        val = sympy.expand(ghost(us, k) + ghost(vs, k) - rest)
        coeffs = sympy.Poly(val, X, T).coeffs()
        assert all(int(c) % 2 ** k == 0 for c in coeffs), "ghost division was not exact"
        out.append(sympy.expand(val / 2 ** k))
    return out


def oracle_witt_add(u, v, F):
    """Coordinates of u + v computed on integral lifts, reduced mod 2."""
    S = ghost_sum([lift(c) for c in u], [lift(c) for c in v])
    return tuple(drop(s, F) for s in S)


# -- splitting: brute-force norm equation --------------------------------------------------

def small_polys(F, max_degree: int):
    base = F.finite_field
    consts = [F(str(base.elem(i))) for i in range(base.order)]
    t = F(F.function_vars[-1])
    powers = [t ** k for k in range(max_degree + 1)]
    for cs in itertools.product(consts, repeat=max_degree + 1):
        yield sum((c * p for c, p in zip(cs, powers)), F.zero_element)


def norm_search(alpha, beta, max_degree: int):
    """Nonzero (u, v, w) of polynomials with u^2 + uv + alpha v^2 = beta w^2, or None.

    Any such triple proves [alpha, beta) split.
    """
    F = alpha.field
    polys = list(small_polys(F, max_degree))
    for u, v, w in itertools.product(polys, repeat=3):
        if u.is_zero() and v.is_zero() and w.is_zero():
            continue
        if u * u + u * v + alpha * v * v == beta * w * w:
            return u, v, w
    return None


# -- quadratic forms: exhaustive isotropy over a finite field ----------------------------

def exhaustive_isotropic_vector(form):
    F = form.field
    elems = [F.elem(i) for i in range(F.order)]
    for v in itertools.product(elems, repeat=form.dim):
        if any(not x.is_zero() for x in v) and form.evaluate(v).is_zero():
            return v
    return None


# -- quaternion multiplication from the defining relations -------------------------------

def quaternion_mul(alpha, beta, p, q):
    """(1, i, j, ij) coordinates of p*q, expanding words in i, j with the rewriting
    system i i -> i + alpha, j j -> beta, j i -> i j + j."""
    def reduce(word):
        # returns {normal word: coefficient}
        for k in range(len(word) - 1):
            a, b = word[k], word[k + 1]
            pre, post = word[:k], word[k + 2:]
            if (a, b) == ("i", "i"):
                return _merge(reduce(pre + "i" + post), reduce(pre + post), alpha)
            if (a, b) == ("j", "j"):
                return _scale(reduce(pre + post), beta)
            if (a, b) == ("j", "i"):
                return _merge(reduce(pre + "ij" + post), reduce(pre + "j" + post), None)
        return {word: alpha.field.one_element}

    basis = ["", "i", "j", "ij"]
    out = {w: alpha.field.zero_element for w in basis}
    for wa, ca in zip(basis, p):
        for wb, cb in zip(basis, q):
            if ca.is_zero() or cb.is_zero():
                continue
            for w, c in reduce(wa + wb).items():
                out[w] = out[w] + ca * cb * c
    return tuple(out[w] for w in basis)


def _scale(d, c):
    return {w: v * c for w, v in d.items()}


def _merge(d1, d2, c2):
    out = dict(d1)
    for w, v in d2.items():
        v = v * c2 if c2 is not None else v
        out[w] = out[w] + v if w in out else v
    return out
