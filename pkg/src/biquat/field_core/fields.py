"""Field descriptors and exact field elements.

Three kinds of field are supported:

=================  ===========================================
``finite``         GF(2^k)
``rational-1var``  GF(2^k)(t)
``rational-2var``  GF(2^k)(s, t), built as (GF(2^k)(s))(t)
=================  ===========================================

Rational functions are stored as a reduced fraction with monic denominator,
so equality of elements is equality of representations.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .gf2k import DEFAULT_MODULI, GF2k, poly_to_str
from .poly import GF2PolyRing, _needs_parens, make_poly_ring


class FieldMismatchError(ValueError):
    """Raised when elements of different fields are combined."""


class _FieldAPI:
    """Element construction shared by all field kinds."""

    def elem(self, raw) -> "FieldElement":
        return FieldElement(self, raw)

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, int):
            return self.elem(self.one if value % 2 else self.zero)
        if isinstance(value, str):
            from ..syntax import parse_element

            return parse_element(value, self)
        raise TypeError(f"cannot convert {type(value).__name__} to a field element")

    @property
    def zero_element(self) -> "FieldElement":
        return self.elem(self.zero)

    @property
    def one_element(self) -> "FieldElement":
        return self.elem(self.one)

    def gens(self) -> dict:
        return {name: self.gen(name) for name in self.var_names()}


class FiniteField(GF2k, _FieldAPI):
    """GF(2^k) with element construction."""

    def var_names(self) -> tuple[str, ...]:
        return ("x",) if self.k > 1 else ()

    def gen(self, name: str) -> "FieldElement":
        if name == "x" and self.k > 1:
            return self.elem(2)
        raise KeyError(name)

    def raw_gen(self, name: str):
        if name == "x" and self.k > 1:
            return 2
        raise KeyError(name)

    @property
    def finite_field(self) -> "FiniteField":
        return self

    @property
    def function_vars(self) -> tuple[str, ...]:
        return ()

    def descriptor(self) -> str:
        if self.k == 1:
            return "GF(2)"
        return f"GF(2^{self.k}; modulus={poly_to_str(self.modulus)})"

    __str__ = descriptor


class RationalFunctionField(_FieldAPI):
    """base(var): reduced fractions of polynomials over ``base``."""

    def __init__(self, base, var: str):
        self.base = base
        self.var = var
        self.ring = make_poly_ring(base, var)
        R = self.ring
        self.zero = (R.zero, R.one)
        self.one = (R.one, R.one)
        self.kind = "rational-1var" if isinstance(base, GF2k) else "rational-2var"
        self.k = base.k
        self.modulus = base.modulus
        self._fast = isinstance(R, GF2PolyRing)

    # -- structure ------------------------------------------------------------
    @property
    def finite_field(self):
        return self.base.finite_field

    @property
    def function_vars(self) -> tuple[str, ...]:
        return self.base.function_vars + (self.var,)

    def var_names(self) -> tuple[str, ...]:
        return self.base.var_names() + (self.var,)

    def raw_gen(self, name: str):
        if name == self.var:
            return (self.ring.gen, self.ring.one)
        return self.embed(self.base.raw_gen(name))

    def gen(self, name: str) -> "FieldElement":
        return self.elem(self.raw_gen(name))

    def embed(self, c):
        """Raw constant from a raw base element."""
        return (self.ring.const(c), self.ring.one)

    def descriptor(self) -> str:
        return f"{self.finite_field.descriptor()}({{{','.join(self.function_vars)}}})"

    __str__ = descriptor

    def __repr__(self) -> str:
        return f"RationalFunctionField({self.descriptor()!r})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalFunctionField) and self.var == other.var
                and self.base == other.base)

    def __hash__(self) -> int:
        return hash(("RFF", self.var, self.base))

    # -- raw arithmetic -------------------------------------------------------
    def make(self, n, d):
        """Normalize a fraction n/d."""
        R = self.ring
        if R.is_zero(d):
            raise ZeroDivisionError("rational function with zero denominator")
        if R.is_zero(n):
            return self.zero
        g = R.gcd(n, d)
        if R.deg(g) > 0:
            n = R.div_exact(n, g)
            d = R.div_exact(d, g)
        if not self._fast:
            c = R.lc(d)
            if not self.base.eq(c, self.base.one):
                ci = self.base.inv(c)
                n = R.scale(ci, n)
                d = R.scale(ci, d)
        return (n, d)

    def add(self, x, y):
        R = self.ring
        n1, d1 = x
        n2, d2 = y
        if R.is_zero(n1):
            return y
        if R.is_zero(n2):
            return x
        if R.eq(d1, d2):
            if R.deg(d1) == 0:
                return (R.add(n1, n2), d1)
            return self.make(R.add(n1, n2), d1)
        g = R.gcd(d1, d2)
        if R.deg(g) == 0:
            return self.make(R.add(R.mul(n1, d2), R.mul(n2, d1)), R.mul(d1, d2))
        e1 = R.div_exact(d1, g)
        e2 = R.div_exact(d2, g)
        return self.make(R.add(R.mul(n1, e2), R.mul(n2, e1)), R.mul(d1, e2))

    def mul(self, x, y):
        R = self.ring
        n1, d1 = x
        n2, d2 = y
        if R.is_zero(n1) or R.is_zero(n2):
            return self.zero
        if R.deg(d1) > 0 or R.deg(d2) > 0:
            g1 = R.gcd(n1, d2)
            g2 = R.gcd(n2, d1)
            if R.deg(g1) > 0:
                n1 = R.div_exact(n1, g1)
                d2 = R.div_exact(d2, g1)
            if R.deg(g2) > 0:
                n2 = R.div_exact(n2, g2)
                d1 = R.div_exact(d1, g2)
        return (R.mul(n1, n2), R.mul(d1, d2))

    def square(self, x):
        R = self.ring
        return (R.square(x[0]), R.square(x[1]))

    def inv(self, x):
        n, d = x
        R = self.ring
        if R.is_zero(n):
            raise ZeroDivisionError("inverse of zero")
        if self._fast:
            return (d, n)
        c = R.lc(n)
        ci = self.base.inv(c)
        return (R.scale(ci, d), R.scale(ci, n))

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, e: int):
        if e < 0:
            x = self.inv(x)
            e = -e
        R = self.ring
        return (R.power(x[0], e), R.power(x[1], e))

    def is_zero(self, x) -> bool:
        return self.ring.is_zero(x[0])

    def eq(self, x, y) -> bool:
        R = self.ring
        return R.eq(x[0], y[0]) and R.eq(x[1], y[1])

    def key(self, x):
        R = self.ring
        n, d = x
        return (max(R.deg(n), R.deg(d)), R.deg(d), R.key(d), R.key(n))

    def is_square(self, x) -> bool:
        R = self.ring
        return R.is_square(x[0]) and R.is_square(x[1])

    def sqrt(self, x):
        """Square root of a perfect square; ArithmeticError otherwise."""
        R = self.ring
        if not self.is_square(x):
            raise ArithmeticError("not a square")
        return (R.sqrt_exact(x[0]), R.sqrt_exact(x[1]))

    def is_polynomial(self, x) -> bool:
        return self.ring.deg(x[1]) == 0

    def from_poly(self, p):
        return (p, self.ring.one)

    # -- printing -------------------------------------------------------------
    def to_str(self, x) -> str:
        if self.kind == "rational-2var":
            n, d = _clear_inner(self, x)
            return _frac_str(_bipoly_str(self, n), _bipoly_str(self, d))
        R = self.ring
        return _frac_str(R.to_str(x[0]), R.to_str(x[1]))


def _frac_str(ns: str, ds: str) -> str:
    if ds == "1":
        return ns
    if _needs_parens(ns):
        ns = f"({ns})"
    if _needs_parens(ds) or "*" in ds:
        ds = f"({ds})"
    return f"{ns}/{ds}"


def _clear_inner(F: RationalFunctionField, x):
    """Multiply numerator and denominator by the lcm of inner denominators."""
    K = F.base
    S = K.ring
    lcm = S.one
    for p in x:
        for c in F.ring.coeffs(p):
            den = c[1]
            g = S.gcd(lcm, den)
            lcm = S.mul(lcm, S.div_exact(den, g))
    out = []
    for p in x:
        terms = {}
        for j, c in enumerate(F.ring.coeffs(p)):
            num = S.mul(c[0], S.div_exact(lcm, c[1]))
            for i, a in enumerate(S.coeffs(num)):
                if not K.base.is_zero(a):
                    terms[(j, i)] = a
        out.append(terms)
    return out


def _bipoly_str(F: RationalFunctionField, terms: dict) -> str:
    if not terms:
        return "0"
    GF = F.finite_field
    s, t = F.function_vars
    parts = []
    for (j, i) in sorted(terms, reverse=True):
        c = terms[(j, i)]
        mono = []
        if i:
            mono.append(s if i == 1 else f"{s}^{i}")
        if j:
            mono.append(t if j == 1 else f"{t}^{j}")
        cs = GF.to_str(c)
        if not mono:
            parts.append(cs)
        elif c == 1:
            parts.append("*".join(mono))
        else:
            if _needs_parens(cs):
                cs = f"({cs})"
            parts.append("*".join([cs] + mono))
    return "+".join(parts)


class FieldElement:
    """An immutable element of one of the supported fields."""

    __slots__ = ("field", "raw")

    def __init__(self, field, raw):
        self.field = field
        self.raw = raw

    def _other(self, o):
        if isinstance(o, FieldElement):
            if o.field is not self.field and o.field != self.field:
                raise FieldMismatchError(f"cannot combine elements of {self.field} and {o.field}")
            return o.raw
        if isinstance(o, int):
            return self.field.one if o % 2 else self.field.zero
        return NotImplemented

    def __add__(self, o):
        r = self._other(o)
        if r is NotImplemented:
            return r
        return FieldElement(self.field, self.field.add(self.raw, r))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, o):
        r = self._other(o)
        if r is NotImplemented:
            return r
        return FieldElement(self.field, self.field.mul(self.raw, r))

    __rmul__ = __mul__

    def __truediv__(self, o):
        r = self._other(o)
        if r is NotImplemented:
            return r
        return FieldElement(self.field, self.field.div(self.raw, r))

    def __rtruediv__(self, o):
        r = self._other(o)
        if r is NotImplemented:
            return r
        return FieldElement(self.field, self.field.div(r, self.raw))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.raw, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.raw))

    def square(self):
        return FieldElement(self.field, self.field.mul(self.raw, self.raw))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.raw)

    def __bool__(self) -> bool:
        return not self.field.is_zero(self.raw)

    def __eq__(self, o) -> bool:
        if isinstance(o, FieldElement):
            return self.field == o.field and self.field.eq(self.raw, o.raw)
        if isinstance(o, int):
            return self.field.eq(self.raw, self.field.one if o % 2 else self.field.zero)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(str(self))

    def sort_key(self):
        return self.field.key(self.raw)

    def __lt__(self, o: "FieldElement") -> bool:
        return self.sort_key() < o.sort_key()

    def __str__(self) -> str:
        return self.field.to_str(self.raw)

    def __repr__(self) -> str:
        return f"<{self} in {self.field}>"


_DESC_RE = re.compile(
    r"^\s*GF\(\s*(?P<q>[0-9]+(?:\s*\^\s*[0-9]+)?)\s*(?:;\s*modulus\s*=\s*(?P<mod>[^)]*))?\)"
    r"\s*(?:\(\s*\{(?P<vars>[^}]*)\}\s*\))?\s*$"
)


def _parse_gf2_poly(src: str) -> int:
    """Parse a polynomial over GF(2) in x, e.g. ``x^3+x+1``."""
    out = 0
    for term in src.replace(" ", "").split("+"):
        if not term:
            raise ValueError(f"bad modulus {src!r}")
        if term in ("0", "1"):
            out ^= int(term)
        elif term == "x":
            out ^= 0b10
        elif term.startswith("x^") and term[2:].isdigit():
            out ^= 1 << int(term[2:])
        else:
            raise ValueError(f"bad modulus term {term!r}")
    return out


@lru_cache(maxsize=None)
def _build(k: int, modulus: int, names: tuple[str, ...]):
    F = FiniteField(k, modulus)
    for name in names:
        F = RationalFunctionField(F, name)
    return F


def make_field(k: int = 1, modulus: int | None = None, variables: tuple[str, ...] | str = ()):
    """Cached field constructor; equal descriptors give the same object."""
    if isinstance(variables, str):
        variables = tuple(v.strip() for v in variables.split(",") if v.strip())
    if modulus is None:
        if k not in DEFAULT_MODULI:
            raise ValueError(f"no default modulus for k={k}")
        modulus = DEFAULT_MODULI[k]
    if len(variables) > 2:
        raise ValueError("at most two function-field variables are supported")
    if len(set(variables)) != len(variables):
        raise ValueError("repeated variable names")
    for v in variables:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v) or v == "x":
            raise ValueError(f"bad variable name {v!r} ('x' names the generator of GF(2^k))")
    return _build(k, modulus, tuple(variables))


def parse_field(desc: str):
    """Parse ``GF(2^k; modulus=...)({t})`` and friends."""
    m = _DESC_RE.match(desc)
    if not m:
        raise ValueError(f"cannot parse field descriptor {desc!r}")
    q = m.group("q").replace(" ", "")
    if "^" in q:
        b, e = q.split("^")
        if b != "2":
            raise ValueError("only characteristic 2 is supported")
        k = int(e)
    else:
        n = int(q)
        if n < 2 or n & (n - 1):
            raise ValueError("field order must be a power of 2")
        k = n.bit_length() - 1
    modulus = _parse_gf2_poly(m.group("mod")) if m.group("mod") else None
    names = tuple(v.strip() for v in (m.group("vars") or "").split(",") if v.strip())
    return make_field(k, modulus, names)
