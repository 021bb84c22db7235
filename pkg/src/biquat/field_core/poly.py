"""Univariate polynomial rings over characteristic-2 fields.

Two representations share one interface:

* ``GF2PolyRing`` -- polynomials over GF(2) packed into Python ints
  (bit ``i`` is the coefficient of ``t^i``);
* ``PolyRing`` -- tuples of raw base-field coefficients, low degree first,
  with no trailing zeros (``()`` is zero).

The rings never wrap values in objects; callers pass raw representations.
Factorization is available when the base field is finite.
"""

from __future__ import annotations

import random

from .gf2k import GF2k, bdivmod, bgcd, bmod, clmul


class _RingCommon:
    """Algorithms written against the abstract ring interface."""

    base = None

    def pow_mod(self, p, e: int, m):
        r = self.one
        p = self.mod(p, m)
        while e:
            if e & 1:
                r = self.mod(self.mul(r, p), m)
            p = self.mod(self.mul(p, p), m)
            e >>= 1
        return r

    def frob_mod(self, p, times: int, m):
        """p^(2^times) mod m."""
        p = self.mod(p, m)
        for _ in range(times):
            p = self.mod(self.mul(p, p), m)
        return p

    def inv_mod(self, a, m):
        """Inverse of a modulo m (must be coprime)."""
        r0, r1 = m, self.mod(a, m)
        s0, s1 = self.zero, self.one
        while not self.is_zero(r1):
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.add(s0, self.mul(q, s1))
        if self.deg(r0) != 0:
            raise ZeroDivisionError("not invertible modulo m")
        return self.mod(self.scale(self.base.inv(self.lc(r0)), s0), m)

    def div_exact(self, a, b):
        q, r = self.divmod(a, b)
        if not self.is_zero(r):
            raise ArithmeticError("inexact polynomial division")
        return q

    def power(self, p, e: int):
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, p)
            p = self.mul(p, p)
            e >>= 1
        return r

    def valuation(self, p, P) -> int:
        """Multiplicity of P in p (p nonzero)."""
        v = 0
        while True:
            q, r = self.divmod(p, P)
            if not self.is_zero(r):
                return v
            p = q
            v += 1

    def digits(self, p, P, n: int) -> list:
        """First n P-adic digits of p (each of degree < deg P)."""
        out = []
        for _ in range(n):
            p, r = self.divmod(p, P)
            out.append(r)
        return out

    def from_digits(self, digits, P):
        r = self.zero
        for d in reversed(digits):
            r = self.add(self.mul(r, P), d)
        return r

    # -- finite-base algorithms ---------------------------------------------
    def _require_finite(self):
        if not isinstance(self.base, GF2k):
            raise TypeError("operation requires a finite coefficient field")

    def trace_mod(self, c, P):
        """Absolute trace to GF(2) of c in GF(2^k)[t]/(P), returned as 0 or 1."""
        self._require_finite()
        n = self.base.k * self.deg(P)
        c = self.mod(c, P)
        acc = self.zero
        for _ in range(n):
            acc = self.add(acc, c)
            c = self.mod(self.mul(c, c), P)
        if self.is_zero(acc):
            return 0
        assert self.deg(acc) == 0 and self.lc(acc) == self.base.one
        return 1

    def sqrt_mod(self, c, P):
        """Square root of c in GF(2^k)[t]/(P) for P squarefree."""
        self._require_finite()
        n = self.base.k * self.deg(P)
        return self.frob_mod(c, n - 1, P)

    def sqrt_exact(self, p):
        """Square root of a polynomial whose odd coefficients vanish."""
        cs = self.coeffs(p)
        if any(not self.base.is_zero(c) for c in cs[1::2]):
            raise ArithmeticError("not a square")
        return self.from_coeffs([self.base.sqrt(c) for c in cs[0::2]])

    def is_square(self, p) -> bool:
        cs = self.coeffs(p)
        if any(not self.base.is_zero(c) for c in cs[1::2]):
            return False
        return all(self.base.is_square(c) for c in cs[0::2])

    def _squarefree(self, f):
        """Squarefree decomposition of a monic f: list of (g, multiplicity)."""
        res = []
        df = self.derivative(f)
        if self.is_zero(df):
            return [(g, 2 * i) for g, i in self._squarefree(self.sqrt_exact(f))]
        c = self.gcd(f, df)
        w = self.div_exact(f, c)
        i = 1
        while self.deg(w) > 0:
            y = self.gcd(w, c)
            z = self.div_exact(w, y)
            if self.deg(z) > 0:
                res.append((z, i))
            i += 1
            w = y
            c = self.div_exact(c, y)
        if self.deg(c) > 0:
            res.extend((g, 2 * j) for g, j in self._squarefree(self.sqrt_exact(c)))
        return res

    def squarefree_split(self, f):
        """(s, h) with f = lc(f) * s * h^2 and s monic squarefree, without factoring."""
        self._require_finite()
        f = self.monic(f)
        s = self.one
        if self.deg(f) > 0:
            for g, e in self._squarefree(f):
                if e % 2:
                    s = self.mul(s, g)
        return s, self.sqrt_exact(self.div_exact(f, s))

    def _ddf(self, f):
        q = self.base.k
        res = []
        h = self.gen
        i = 0
        while self.deg(f) >= 2 * (i + 1):
            i += 1
            h = self.frob_mod(h, q, f)
            g = self.gcd(self.add(h, self.gen), f)
            if self.deg(g) > 0:
                res.append((g, i))
                f = self.div_exact(f, g)
                h = self.mod(h, f)
        if self.deg(f) > 0:
            res.append((f, self.deg(f)))
        return res

    def _edf(self, f, d: int, rng: random.Random):
        n = self.deg(f)
        if n == d:
            return [f]
        kd = self.base.k * d
        while True:
            r = self.from_coeffs([rng.randrange(self.base.order) if isinstance(self.base, GF2k) else 0
                                  for _ in range(n)])
            if self.deg(r) < 1:
                continue
            acc = self.zero
            x = r
            for _ in range(kd):
                acc = self.add(acc, x)
                x = self.mod(self.mul(x, x), f)
            g = self.gcd(acc, f)
            if 0 < self.deg(g) < n:
                return self._edf(g, d, rng) + self._edf(self.div_exact(f, g), d, rng)

    def factor(self, f) -> list:
        """Monic irreducible factorization ``[(P, e), ...]`` of a nonzero f, sorted."""
        self._require_finite()
        if self.is_zero(f):
            raise ValueError("cannot factor zero")
        f = self.monic(f)
        if self.deg(f) == 0:
            return []
        key = f
        hit = self._factor_cache.get(key)
        if hit is not None:
            return hit
        rng = random.Random(self.deg(f))
        found: dict = {}
        for g, e in self._squarefree(f):
            for h, d in self._ddf(g):
                for P in self._edf(h, d, rng):
                    P = self.monic(P)
                    found[P] = found.get(P, 0) + e
        out = sorted(found.items(), key=lambda pe: self.key(pe[0]))
        if len(self._factor_cache) > 20000:
            self._factor_cache.clear()
        self._factor_cache[key] = out
        return out

    def is_irreducible(self, f) -> bool:
        fs = self.factor(f)
        return len(fs) == 1 and fs[0][1] == 1

    def monic_polys(self, degree: int):
        """All monic polynomials of the given degree, in graded order."""
        self._require_finite()
        q = self.base.order
        for idx in range(q ** degree):
            cs = []
            for _ in range(degree):
                cs.append(idx % q)
                idx //= q
            yield self.from_coeffs(cs + [1])

    def polys_upto(self, degree: int):
        """All polynomials of degree <= ``degree`` (zero first), graded order."""
        self._require_finite()
        q = self.base.order
        yield self.zero
        for d in range(degree + 1):
            for idx in range(1, q):
                for m in self.monic_polys(d):
                    yield self.scale(idx, m)


class GF2PolyRing(_RingCommon):
    """GF(2)[var] with int-packed polynomials."""

    def __init__(self, base: GF2k, var: str):
        assert base.k == 1
        self.base = base
        self.var = var
        self.zero = 0
        self.one = 1
        self.gen = 0b10
        self._factor_cache: dict = {}

    def is_zero(self, p) -> bool:
        return p == 0

    def deg(self, p) -> int:
        return p.bit_length() - 1

    def lc(self, p):
        return 1 if p else 0

    def coeff(self, p, i):
        return (p >> i) & 1

    def coeffs(self, p) -> list:
        return [(p >> i) & 1 for i in range(p.bit_length())]

    def from_coeffs(self, cs) -> int:
        r = 0
        for i, c in enumerate(cs):
            if c:
                r |= 1 << i
        return r

    def const(self, c) -> int:
        return 1 if c else 0

    def monomial(self, c, n: int) -> int:
        return (1 << n) if c else 0

    def add(self, p, q):
        return p ^ q

    def mul(self, p, q):
        return clmul(p, q)

    def square(self, p):
        r = 0
        i = 0
        while p:
            if p & 1:
                r |= 1 << (2 * i)
            p >>= 1
            i += 1
        return r

    def scale(self, c, p):
        return p if c else 0

    def shift(self, p, n: int):
        return p << n

    def divmod(self, p, q):
        return bdivmod(p, q)

    def mod(self, p, q):
        if not q:
            raise ZeroDivisionError("modulo the zero polynomial")
        return bmod(p, q)

    def gcd(self, p, q):
        return bgcd(p, q)

    def monic(self, p):
        return p

    def monic_with_lc(self, p):
        return 1, p

    def derivative(self, p):
        # odd-degree terms survive, shifted down one place
        n = p.bit_length()
        mask = (4 ** ((n + 1) // 2) - 1) // 3
        return (p >> 1) & mask

    def eq(self, p, q) -> bool:
        return p == q

    def key(self, p):
        return p

    def evaluate(self, p, x):
        """Evaluate at a GF(2) scalar."""
        if not x:
            return p & 1
        return bin(p).count("1") & 1

    def to_str(self, p) -> str:
        return poly_str(self, p)


class PolyRing(_RingCommon):
    """Polynomials over an arbitrary characteristic-2 base field (tuple form)."""

    def __init__(self, base, var: str):
        self.base = base
        self.var = var
        self.zero = ()
        self.one = (base.one,)
        self.gen = (base.zero, base.one)
        self._factor_cache: dict = {}

    def _trim(self, cs):
        z = self.base.is_zero
        n = len(cs)
        while n and z(cs[n - 1]):
            n -= 1
        return tuple(cs[:n])

    def is_zero(self, p) -> bool:
        return not p

    def deg(self, p) -> int:
        return len(p) - 1

    def lc(self, p):
        return p[-1] if p else self.base.zero

    def coeff(self, p, i):
        return p[i] if i < len(p) else self.base.zero

    def coeffs(self, p) -> list:
        return list(p)

    def from_coeffs(self, cs):
        return self._trim(list(cs))

    def const(self, c):
        return self._trim([c])

    def monomial(self, c, n: int):
        if self.base.is_zero(c):
            return ()
        return tuple([self.base.zero] * n + [c])

    def add(self, p, q):
        if len(p) < len(q):
            p, q = q, p
        add = self.base.add
        out = list(p)
        for i, c in enumerate(q):
            out[i] = add(out[i], c)
        if len(p) == len(q):
            return self._trim(out)
        return tuple(out)

    def mul(self, p, q):
        if not p or not q:
            return ()
        B = self.base
        add, mul, zero = B.add, B.mul, B.zero
        out = [zero] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if B.is_zero(a):
                continue
            for j, b in enumerate(q):
                out[i + j] = add(out[i + j], mul(a, b))
        return self._trim(out)

    def square(self, p):
        B = self.base
        out = [B.zero] * (2 * len(p) - 1) if p else []
        for i, a in enumerate(p):
            out[2 * i] = B.mul(a, a)
        return self._trim(out)

    def scale(self, c, p):
        if self.base.is_zero(c):
            return ()
        mul = self.base.mul
        return tuple(mul(c, a) for a in p)

    def shift(self, p, n: int):
        if not p:
            return p
        return tuple([self.base.zero] * n) + p

    def divmod(self, p, q):
        if not q:
            raise ZeroDivisionError("division by the zero polynomial")
        B = self.base
        dq = len(q) - 1
        if len(p) - 1 < dq:
            return (), p
        inv = B.inv(q[-1])
        r = list(p)
        quo = [B.zero] * (len(p) - dq)
        for i in range(len(p) - 1, dq - 1, -1):
            c = r[i]
            if B.is_zero(c):
                continue
            f = B.mul(c, inv)
            quo[i - dq] = f
            for j in range(dq + 1):
                r[i - dq + j] = B.add(r[i - dq + j], B.mul(f, q[j]))
        return self._trim(quo), self._trim(r[:dq])

    def mod(self, p, q):
        return self.divmod(p, q)[1]

    def gcd(self, p, q):
        while q:
            p, q = q, self.mod(p, q)
        return self.monic(p)

    def monic(self, p):
        if not p or self.base.eq(p[-1], self.base.one):
            return p
        return self.scale(self.base.inv(p[-1]), p)

    def monic_with_lc(self, p):
        c = self.lc(p)
        return c, self.monic(p)

    def derivative(self, p):
        B = self.base
        return self._trim([p[i] if i % 2 == 1 else B.zero for i in range(1, len(p))])

    def eq(self, p, q) -> bool:
        if len(p) != len(q):
            return False
        return all(self.base.eq(a, b) for a, b in zip(p, q))

    def key(self, p):
        return (len(p), tuple(self.base.key(c) for c in reversed(p)))

    def evaluate(self, p, x):
        B = self.base
        r = B.zero
        for c in reversed(p):
            r = B.add(B.mul(r, x), c)
        return r

    def to_str(self, p) -> str:
        return poly_str(self, p)


def make_poly_ring(base, var: str):
    if isinstance(base, GF2k) and base.k == 1:
        return GF2PolyRing(base, var)
    return PolyRing(base, var)


def _needs_parens(s: str) -> bool:
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+/":
            return True
    return False


def poly_str(ring, p) -> str:
    """Canonical text for a polynomial: highest degree first, no spaces."""
    if ring.is_zero(p):
        return "0"
    B = ring.base
    terms = []
    cs = ring.coeffs(p)
    for i in range(len(cs) - 1, -1, -1):
        c = cs[i]
        if B.is_zero(c):
            continue
        mono = "" if i == 0 else ring.var if i == 1 else f"{ring.var}^{i}"
        cstr = B.to_str(c)
        if not mono:
            terms.append(cstr)
        elif B.eq(c, B.one):
            terms.append(mono)
        else:
            if _needs_parens(cstr):
                cstr = f"({cstr})"
            terms.append(f"{cstr}*{mono}")
    return "+".join(terms)
