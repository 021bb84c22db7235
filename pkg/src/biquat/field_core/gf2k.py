"""Arithmetic in GF(2^k).

Elements are integers in ``range(2**k)``; bit ``i`` is the coefficient of
``x^i`` in the residue modulo the defining polynomial.  The modulus is an
integer bitmask as well (``0b1011`` is ``x^3+x+1``).
"""

from __future__ import annotations

# Default irreducible moduli for k <= 8 (bitmasks over GF(2)).
DEFAULT_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
}

TABLE_LIMIT = 12


def clmul(a: int, b: int) -> int:
    """Carry-less product of two binary polynomials."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        low = b & -b
        r ^= a * low
        b ^= low
    return r


def bdivmod(a: int, b: int) -> tuple[int, int]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    la = a.bit_length()
    while la >= db:
        s = la - db
        q ^= 1 << s
        a ^= b << s
        la = a.bit_length()
    return q, a


def bmod(a: int, b: int) -> int:
    db = b.bit_length()
    la = a.bit_length()
    while la >= db:
        a ^= b << (la - db)
        la = a.bit_length()
    return a


def bgcd(a: int, b: int) -> int:
    while b:
        a, b = b, bmod(a, b)
    return a


def is_irreducible_gf2(f: int) -> bool:
    """Rabin-style test: x^(2^i) - x coprime to f for i <= deg/2."""
    n = f.bit_length() - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if not f & 1:
        return False
    h = 0b10
    for _ in range(n // 2):
        h = bmod(clmul(h, h), f)
        if bgcd(f, h ^ 0b10) != 1:
            return False
    return True


def poly_to_str(f: int, var: str = "x") -> str:
    if not f:
        return "0"
    terms = []
    for i in range(f.bit_length() - 1, -1, -1):
        if (f >> i) & 1:
            if i == 0:
                terms.append("1")
            elif i == 1:
                terms.append(var)
            else:
                terms.append(f"{var}^{i}")
    return "+".join(terms)


class GF2k:
    """The finite field GF(2^k) = GF(2)[x]/(modulus)."""

    kind = "finite"

    def __init__(self, k: int, modulus: int | None = None):
        if k < 1:
            raise ValueError("k must be positive")
        if modulus is None:
            if k not in DEFAULT_MODULI:
                raise ValueError(f"no default modulus for k={k}; supply one")
            modulus = DEFAULT_MODULI[k]
        if modulus.bit_length() - 1 != k:
            raise ValueError("modulus degree does not match k")
        if not is_irreducible_gf2(modulus):
            raise ValueError(f"modulus {poly_to_str(modulus)} is reducible over GF(2)")
        self.k = k
        self.modulus = modulus
        self.order = 1 << k
        self.zero = 0
        self.one = 1
        self.vars: tuple[str, ...] = ()
        self.base = None
        self._exp = self._log = None
        self._wp_cols = None
        if 1 < k <= TABLE_LIMIT:
            self._build_tables()
        self._trace_one = self._least_trace_one()

    # -- construction helpers -------------------------------------------------
    def _slow_mul(self, a: int, b: int) -> int:
        return bmod(clmul(a, b), self.modulus)

    def _build_tables(self) -> None:
        n = self.order - 1
        for g in range(2, self.order):
            exp = [0] * (2 * n)
            x = 1
            ok = True
            for i in range(n):
                exp[i] = x
                x = self._slow_mul(x, g)
                if x == 1 and i < n - 1:
                    ok = False
                    break
            if ok:
                log = [0] * self.order
                for i in range(n):
                    exp[i + n] = exp[i]
                    log[exp[i]] = i
                self._exp, self._log = exp, log
                return
        raise AssertionError("no primitive element found")  # pragma: no cover

    def _least_trace_one(self) -> int:
        for c in range(self.order):
            if self.trace(c):
                return c
        raise AssertionError  # pragma: no cover

    # -- raw arithmetic -------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.k == 1:
            return 1
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero in GF(2^k)")
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def sqrt(self, a: int) -> int:
        """Unique square root (Frobenius is bijective)."""
        for _ in range(self.k - 1):
            a = self.mul(a, a)
        return a

    def trace(self, a: int) -> int:
        """Absolute trace to GF(2), as 0 or 1."""
        t = 0
        x = a
        for _ in range(self.k):
            t ^= x
            x = self.mul(x, x)
        assert t in (0, 1)
        return t

    def is_zero(self, a: int) -> bool:
        return a == 0

    def eq(self, a: int, b: int) -> bool:
        return a == b

    def key(self, a: int):
        return a

    def is_square(self, a: int) -> bool:
        return True

    def trace_one_element(self) -> int:
        """Least element (as an integer) of absolute trace 1."""
        return self._trace_one

    def elements(self):
        return range(self.order)

    def basis(self) -> list[int]:
        return [1 << i for i in range(self.k)]

    def wp_solve(self, a: int) -> int | None:
        """Least r with r^2 + r = a, or None when Tr(a) = 1."""
        if self.trace(a):
            return None
        if self.k == 1:
            return 0
        from .linalg import solve_affine

        if self._wp_cols is None:
            self._wp_cols = [self.mul(b, b) ^ b for b in self.basis()]
        sol = solve_affine(self._wp_cols, a)
        assert sol is not None
        return min(sol, sol ^ 1)

    # -- printing -------------------------------------------------------------
    def to_str(self, a: int) -> str:
        return poly_to_str(a, "x")

    def __str__(self) -> str:
        if self.k == 1:
            return "GF(2)"
        if self.modulus == DEFAULT_MODULI.get(self.k):
            return f"GF(2^{self.k})"
        return f"GF(2^{self.k}; modulus={poly_to_str(self.modulus)})"

    def __repr__(self) -> str:
        return f"GF2k({self.k}, {bin(self.modulus)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF2k) and (self.k, self.modulus) == (other.k, other.modulus)

    def __hash__(self) -> int:
        return hash(("GF2k", self.k, self.modulus))
