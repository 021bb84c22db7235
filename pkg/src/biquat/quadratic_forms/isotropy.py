"""Isotropy search and representation of values by block forms.

Strategy over GF(2^k) and GF(2^k)(t): pick a pivot block lam1 [a1, b1] and
put y1 = 1 (or 1/sigma when representing a value), x1 = r / a1.  Fixing a
direction (X_i, Y_i) for every other block and scaling it by an unknown s_i
turns the problem into

    wp(r) = a1 b1 + (a1 / lam1) * sum_i lam_i [a_i, b_i](X_i, Y_i) s_i^2,

which is linear over GF(2) in the s_i modulo wp(F).  Directions, candidate
denominators and degrees are enlarged round by round in a fixed order.
Over GF(2^k)(s, t) a bounded enumeration is used instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..field_core.artin_schreier import DEFAULT_BUDGET, UNKNOWN, SearchBudget, artin_schreier_solve
from ..field_core.gf2k import GF2k
from ..field_core.wp_linear import candidate_space, denominator, solve_linear_wp, support_polys
from .forms import Block, QuadraticForm

FOUND = "found"
NOT_FOUND = "not-found"


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a search: status FOUND / NOT_FOUND / UNKNOWN and the vector."""

    status: str
    vector: tuple | None = None
    method: str = ""

    def __bool__(self) -> bool:
        return self.status == FOUND


IsotropyResult = SearchResult


class _Meter:
    def __init__(self, budget: SearchBudget, unbounded: bool = False):
        self.left = None if unbounded else budget.max_candidates

    def spend(self, n: int = 1) -> bool:
        if self.left is None:
            return True
        self.left -= n
        return self.left >= 0


def _kind(F) -> str:
    return "finite" if isinstance(F, GF2k) else F.kind


# -- single blocks -------------------------------------------------------------

def block_isotropic_vector(blk: Block, budget: SearchBudget = DEFAULT_BUDGET):
    """(x, y) != 0 with blk(x, y) = 0, None if anisotropic, UNKNOWN if undecided."""
    F = blk.lam.field
    one, zero = F.one_element, F.zero_element
    if blk.a.is_zero():
        return (one, zero)
    if blk.b.is_zero():
        return (zero, one)
    r = artin_schreier_solve(blk.a * blk.b, budget)
    if r is None or r == UNKNOWN:
        return r
    return (r / blk.a, one)


def _block_represent(blk: Block, e, budget):
    """Direct representations of e by one block when they are immediate."""
    F = e.field
    one, zero = F.one_element, F.zero_element
    u = e / blk.lam
    if blk.a.is_zero():
        return (u + blk.b, one)
    if blk.b.is_zero():
        return (one, u + blk.a)
    for target, slot in ((u / blk.b, 1), (u / blk.a, 0)):
        if F.is_square(target.raw):
            root = F.elem(F.sqrt(target.raw))
            return (zero, root) if slot else (root, zero)
    w = block_isotropic_vector(blk, budget)
    if w is not None and w != UNKNOWN:
        # x = x' + (rho / a) y turns the block into lam [a, 0]
        rho = w[0] * blk.a
        y = u + blk.a
        return (one + rho / blk.a * y, y)
    return None


# -- direction patterns ------------------------------------------------------------

def _iter_directions(F):
    """Coprime normalized pairs (X, Y) in a fixed graded order (finite list off 1var)."""
    one, zero = F.one_element, F.zero_element
    yield (one, zero)
    yield (zero, one)
    yield (one, one)
    if _kind(F) == "finite":
        for c in F.elements():
            if c > 1:
                yield (F.elem(c), one)
        return
    if _kind(F) != "rational-1var":
        return
    R = F.ring
    d = 1
    while True:
        for X in R.polys_upto(d):
            for Y in R.polys_upto(d):
                if max(R.deg(X), R.deg(Y)) != d:
                    continue
                first = X if not R.is_zero(X) else Y
                if not R.eq(R.monic(first), first):
                    continue
                if R.deg(R.gcd(X, Y)) > 0:
                    continue
                yield (F.elem(F.from_poly(X)), F.elem(F.from_poly(Y)))
        d += 1


def _directions(F, count: int) -> list:
    return list(itertools.islice(_iter_directions(F), count))


def _patterns(n: int, r: int):
    """Index tuples of length n with sum <= r, graded by sum."""
    for total in range(r + 1):
        for combo in itertools.product(range(total + 1), repeat=n):
            if sum(combo) == total:
                yield combo


def _irreducibles(F, max_deg: int) -> list:
    R = F.ring
    out = []
    for d in range(1, max_deg + 1):
        out.extend(P for P in R.monic_polys(d) if R.is_irreducible(P))
    return out


def _spaces(F, coeffs, r: int, budget: SearchBudget):
    """Candidate GF(2)-basis for the unknown scalings in round r."""
    if _kind(F) == "finite":
        return list(F.basis())
    R = F.ring
    places = support_polys(F, [c.raw for c in coeffs])
    extra_deg = r // 2
    keys = {R.key(P) for P in places}
    for P in _irreducibles(F, extra_deg):
        if R.key(P) not in keys:
            places.append(P)
    e = (r + 1) // 2
    g = denominator(F, places, e)
    D = budget.max_degree + e * sum(R.deg(P) for P in places)
    return candidate_space(F, D, g)


# -- the pivot reduction -------------------------------------------------------------

def _pivot_search(form: QuadraticForm, e, budget: SearchBudget, unbounded: bool):
    """Isotropic vector (e None) or representation of e via the linear method."""
    F = form.field
    blocks = form.blocks
    n = len(blocks)
    meter = _Meter(budget, unbounded)
    one = F.one_element
    finite = _kind(F) == "finite"
    pivots = [p for p, blk in enumerate(blocks) if not blk.a.is_zero()]
    coeffs = [x for blk in blocks for x in (blk.lam, blk.a, blk.b)]
    if e is not None:
        coeffs.append(e)
    r = 0
    while unbounded or r < (1 if finite else budget.rounds):
        space = _spaces(F, coeffs, r, budget)
        dirs = _directions(F, r + 1)
        for p in pivots:
            b1 = blocks[p]
            others = [i for i in range(n) if i != p]
            for pat in _patterns(len(others), min(r, len(dirs) - 1)):
                if any(k >= len(dirs) for k in pat):
                    continue
                if not meter.spend():
                    return SearchResult(UNKNOWN, method="linear-wp")
                scale = b1.a / b1.lam
                m0 = b1.a * b1.b
                terms, spaces = [], []
                for i, k in zip(others, pat):
                    X, Y = dirs[k]
                    val = blocks[i].evaluate(X, Y)
                    terms.append(((scale * val).raw, F.zero))
                    spaces.append(space)
                nonzero = None
                if e is not None:
                    terms.append(((scale * e).raw, F.zero))
                    spaces.append(space)
                    nonzero = len(terms) - 1
                zs = solve_linear_wp(F, m0.raw, terms, spaces, nonzero=nonzero)
                if zs is None:
                    continue
                zs = [F.elem(z) for z in zs]
                rhs = m0
                for (c, _), z in zip(terms, zs):
                    rhs = rhs + F.elem(c) * z * z
                w = artin_schreier_solve(rhs, budget)
                assert w is not None and w != UNKNOWN
                inv = one if e is None else zs[-1].inverse()
                v = [F.zero_element] * (2 * n)
                v[2 * p] = w / b1.a * inv
                v[2 * p + 1] = inv
                for i, k, z in zip(others, pat, zs):
                    X, Y = dirs[k]
                    v[2 * i] = z * X * inv
                    v[2 * i + 1] = z * Y * inv
                v = tuple(v)
                want = F.zero_element if e is None else e
                assert form.evaluate(v) == want, "linear-wp witness failed its check"
                if e is None and all(x.is_zero() for x in v):
                    continue
                return SearchResult(FOUND, v, "linear-wp")
        r += 1
    return SearchResult(UNKNOWN, method="linear-wp")


def _conic_linear(F, A0, nf, C0, budget: SearchBudget):
    """Linear wp-search for s with A0 + C0 s^2 in wp(F); C0 a squarefree polynomial."""
    R = F.ring
    base = {}
    for P, digs in nf.polar.items():
        vC = R.valuation(C0.raw[0], P)
        base[R.key(P)] = max(0, -(-(max(digs) - vC) // 2))
    inf_pole = max(nf.poly, default=0)
    base_inf = max(0, (inf_pole - R.deg(C0.raw[0]) + 1) // 2)
    for r in range(budget.rounds):
        places = support_polys(F, [A0.raw, C0.raw])
        keys = {R.key(P) for P in places}
        for P in _irreducibles(F, r // 2):
            if R.key(P) not in keys:
                places.append(P)
        extra = (r + 1) // 2
        g = R.one
        for P in places:
            g = R.mul(g, R.power(P, base.get(R.key(P), 0) + extra))
        D = R.deg(g) + base_inf + budget.max_degree // 2 + r
        space = candidate_space(F, D, g)
        zs = solve_linear_wp(F, A0.raw, [(C0.raw, F.zero)], [space], nonzero=0)
        if zs is not None:
            return F.elem(zs[0])
    return None


def conic_scale(A, C, budget: SearchBudget = DEFAULT_BUDGET):
    """Nonzero s with A + C s^2 in wp(F) over GF(2^k)(t), or None within budget.

    C is reduced to a squarefree polynomial C0 (C = C0 h^2) and A to its
    normal form A0.  Norm descent on C0 alternates with reduction of A0
    modulo C0 F^2 before the linear search, since solutions for large
    coefficients tend to need denominators at unpredictable places.
    """
    from ..field_core.artin_schreier import as_normal_form
    from ..field_core.norm_equation import solve_conic

    F = A.field
    R = F.ring
    C0, h = _squarefree_split(F, C)
    A0 = F.elem(as_normal_form(F, A.raw).value())

    def finish(a, c):
        Ae = F.elem(a)
        Ce = F.elem(F.make(c, R.one))
        if Ae.is_zero():
            # N(u, v) = u (u + v): take u in {1, t} and v = u + C / u
            for u in (F.one_element, F.gen(R.var)):
                v = u + Ce / u
                if not v.is_zero():
                    return (F.one_element / v).raw
        found = _conic_linear(F, Ae, as_normal_form(F, a), Ce, budget)
        return None if found is None else found.raw

    raw = solve_conic(F, A0.raw, C0.raw[0], finish)
    if raw is None:
        raw = finish(A0.raw, C0.raw[0])
    if raw is None:
        return None
    s_ = F.elem(raw) / h
    assert artin_schreier_solve(A + C * s_ * s_, budget) is not None
    return s_


def _local_invariant(F, A, C, place) -> int:
    from ..field_core.artin_schreier import derivative, trace_residue

    g = F.mul(A.raw, F.div(derivative(F, C.raw), C.raw))
    return 0 if F.is_zero(g) else trace_residue(F, g, place)


def _local_solution(F, A, scale, blk, P, rng, tries: int = 64):
    """Residues (X_P, Y_P, P^K) making [A, scale * blk(X, Y)) split at P.

    The invariant at P only depends on scale * blk(X, Y) up to units that are
    1 mod P^(m + 1), m the pole order of A at P, so K = m + (pole order of
    the block) + 2 suffices when v_P(blk(X_P, Y_P) / lam) <= 1.
    """
    from ..field_core.artin_schreier import Place, valuation

    R = F.ring
    place = Place(P)
    m_a = max(0, -valuation(F, A.raw, place))
    m_o = max([0] + [-valuation(F, x.raw, place) for x in (blk.a, blk.b) if not x.is_zero()])
    K = m_a + m_o + 2
    mod = R.power(P, K)
    top = K * R.deg(P)
    q = F.base.order
    fixed = [(R.one, R.zero), (R.zero, R.one), (R.one, R.one)]
    for i in range(tries):
        if i < len(fixed):
            Xp, Yp = fixed[i]
        else:
            Xp = R.from_coeffs([rng.randrange(q) for _ in range(top)])
            Yp = R.from_coeffs([rng.randrange(q) for _ in range(top)])
        X, Y = F.elem(F.from_poly(Xp)), F.elem(F.from_poly(Yp))
        N = blk.evaluate(X, Y) / blk.lam
        if N.is_zero() or valuation(F, N.raw, place) > 1:
            continue
        if _local_invariant(F, A, scale * blk.lam * N, place) == 0:
            return Xp, Yp, mod
    return None


def _two_block_search(form: QuadraticForm, budget: SearchBudget) -> SearchResult:
    """Isotropy of lam1 [a1, b1] perp lam2 [a2, b2] over GF(2^k)(t).

    With y1 = 1 and block 2 along (X, Y) scaled by s, solvability is the
    splitting of [a1 b1, (a1 / lam1) lam2 [a2, b2](X, Y)).  At the finitely
    many places where that can fail for structural reasons, local solutions
    are glued by CRT into (X0, Y0) mod M; the scan then runs over
    (X0 + M u, Y0 + M v) and only needs the remaining primes of the value
    to split, which one wp-root computation modulo their product decides.
    """
    import random

    from ..field_core.artin_schreier import Place
    from ..field_core.norm_equation import crt, wp_root_mod

    F = form.field
    R = F.ring
    meter = _Meter(budget)
    rng = random.Random(budget.seed)
    setups = []
    for p, o in ((0, 1), (1, 0)):
        b1, b2 = form.blocks[p], form.blocks[o]
        A = b1.a * b1.b
        scale = b1.a / b1.lam
        ratio = scale * b2.lam
        parts = [A.raw[1], ratio.raw[0], ratio.raw[1]]
        parts += [x.raw[1] for x in (b2.a, b2.b) if not x.is_zero()]
        S = support_polys(F, [(x, R.one) for x in parts])
        sols = [_local_solution(F, A, scale, b2, P, rng) for P in S]
        if any(x is None for x in sols):
            continue
        X0, M = crt(R, [x[0] for x in sols], [x[2] for x in sols])
        Y0, _ = crt(R, [x[1] for x in sols], [x[2] for x in sols])
        setups.append((p, o, b1, b2, A, scale, S, X0, Y0, M, _graded_tuples(F, 2)))
    if not setups:
        return SearchResult(UNKNOWN, method="two-block")
    while True:
        for p, o, b1, b2, A, scale, S, X0, Y0, M, gen in setups:
            if not meter.spend():
                return SearchResult(UNKNOWN, method="two-block")
            u, v = next(gen)
            X = F.elem(F.from_poly(R.add(X0, R.mul(M, u.raw[0]))))
            Y = F.elem(F.from_poly(R.add(Y0, R.mul(M, v.raw[0]))))
            C = scale * b2.evaluate(X, Y)
            if C.is_zero():
                continue
            G = C.raw[0]
            for P in S:
                while R.is_zero(R.mod(G, P)):
                    G = R.div_exact(G, P)
            G, _ = R.squarefree_split(G)
            if R.deg(G) > 0:
                a, d = A.raw
                if wp_root_mod(R, R.mod(R.mul(a, R.inv_mod(d, G)), G), G) is None:
                    continue
            # every finite invariant vanishes, hence also the one at infinity
            if any(_local_invariant(F, A, C, Place(P)) for P in S):
                continue
            s_ = conic_scale(A, C, budget)
            if s_ is None:
                continue
            w = artin_schreier_solve(A + C * s_ * s_, budget)
            vec = [None] * 4
            vec[2 * p], vec[2 * p + 1] = w / b1.a, F.one_element
            vec[2 * o], vec[2 * o + 1] = s_ * X, s_ * Y
            vec = tuple(vec)
            assert form.evaluate(vec).is_zero()
            return SearchResult(FOUND, vec, "two-block")


def _graded_tuples(F, m: int):
    """Tuples of m polynomials of GF(2^k)[t], graded by the largest degree."""
    R = F.ring
    if m == 0:
        yield ()
        return
    d = 0
    while True:
        polys = [F.elem(F.from_poly(p)) for p in R.polys_upto(d)]
        for combo in itertools.product(polys, repeat=m):
            top = max((R.deg(x.raw[0]) for x in combo if not x.is_zero()), default=-1)
            if top == d or (d == 0 and top < 0):
                yield combo
        d += 1


def _tail_scan(form: QuadraticForm, e, budget: SearchBudget) -> SearchResult:
    """Representation (or isotropy when e is None) for normalized forms over GF(2^k)(t).

    A pivot block lam [1, n] must represent e' = e + (value of the other
    blocks on a small tail vector); this is the splitting of [n, e' / lam),
    decided by local invariants and solved by ``conic_scale``.  For a single
    block the split test is exact, so a failure there is NOT_FOUND.
    """
    from ..field_core.local_symbols import is_split_local

    F = form.field
    n = len(form.blocks)
    meter = _Meter(budget)
    zero = F.zero_element
    target = zero if e is None else e
    gens = [(p, _graded_tuples(F, 2 * (n - 1))) for p in range(n)]
    while True:
        for p, gen in gens:
            if not meter.spend():
                return SearchResult(UNKNOWN, method="conic")
            tail = next(gen, None)
            if tail is None:
                if n == 1:
                    return SearchResult(NOT_FOUND, method="conic")
                continue
            if e is None and all(x.is_zero() for x in tail):
                continue
            others = [i for i in range(n) if i != p]
            rest = target
            for j, i in enumerate(others):
                rest = rest + form.blocks[i].evaluate(tail[2 * j], tail[2 * j + 1])
            piv = form.blocks[p]
            if rest.is_zero():
                xy = (zero, zero)
            else:
                C = rest / piv.lam
                if not is_split_local(piv.b, C):
                    continue
                s_ = conic_scale(piv.b, C, budget)
                if s_ is None:
                    continue
                r = artin_schreier_solve(piv.b + C * s_ * s_, budget)
                xy = (r / s_, s_.inverse())
            v = [zero] * (2 * n)
            v[2 * p], v[2 * p + 1] = xy
            for j, i in enumerate(others):
                v[2 * i], v[2 * i + 1] = tail[2 * j], tail[2 * j + 1]
            v = tuple(v)
            assert form.evaluate(v) == target, "conic witness failed its check"
            return SearchResult(FOUND, v, "conic")


def _small_elements(F, budget: SearchBudget) -> list:
    """A fixed finite list of small elements of a 2-variable field."""
    K = F.base
    inner = K.ring
    R = F.ring
    deg = max(1, min(2, budget.max_degree))
    out = []
    for p in inner.polys_upto(deg):
        for q in inner.polys_upto(1):
            out.append(F.elem(F.from_poly(R.from_coeffs([K.make(p, inner.one),
                                                         K.make(q, inner.one)]))))
    seen, uniq = set(), []
    for x in out:
        if str(x) not in seen:
            seen.add(str(x))
            uniq.append(x)
    return uniq


def _bounded_search(form: QuadraticForm, e, budget: SearchBudget):
    """Pivot on block 0 and enumerate small vectors for the other blocks."""
    F = form.field
    blocks = form.blocks
    n = len(blocks)
    meter = _Meter(budget)
    smalls = _small_elements(F, budget)
    one = F.one_element
    for p, b1 in enumerate(blocks):
        if b1.a.is_zero():
            continue
        others = [i for i in range(n) if i != p]
        for tail in itertools.product(smalls, repeat=2 * len(others) + (e is not None)):
            if not meter.spend():
                return SearchResult(UNKNOWN, method="bounded")
            sigma = one
            if e is not None:
                sigma, tail = tail[-1], tail[:-1]
                if sigma.is_zero():
                    continue
            rest = F.zero_element
            for j, i in enumerate(others):
                rest = rest + blocks[i].evaluate(tail[2 * j], tail[2 * j + 1])
            if e is not None:
                rest = rest + e * sigma * sigma
            rhs = b1.a * b1.b + b1.a / b1.lam * rest
            w = artin_schreier_solve(rhs, SearchBudget(1, 64, 1))
            if w is None or w == UNKNOWN:
                continue
            inv = sigma.inverse() if e is not None else one
            v = [F.zero_element] * (2 * n)
            v[2 * p] = w / b1.a * inv
            v[2 * p + 1] = inv
            for j, i in enumerate(others):
                v[2 * i] = tail[2 * j] * inv
                v[2 * i + 1] = tail[2 * j + 1] * inv
            v = tuple(v)
            want = F.zero_element if e is None else e
            assert form.evaluate(v) == want
            return SearchResult(FOUND, v, "bounded")
    return SearchResult(UNKNOWN, method="bounded")


# -- normalization over GF(2^k)(t) ---------------------------------------------------

def _squarefree_split(F, x):
    """x = lam0 * s^2 with lam0 a squarefree monic polynomial; returns (lam0, s)."""
    R = F.ring
    n, d = x.raw
    nd = R.mul(n, d)
    c = R.lc(nd)
    sqf, h = R.squarefree_split(nd)
    s = F.elem(F.make(R.scale(F.base.sqrt(c), h), d))
    return F.elem(F.from_poly(sqf)), s


def _normalize_block(blk: Block):
    """Isometry lam [a, b] -> lam0 [1, n] with n in normal form modulo wp(F).

    Returns the new block and a map sending new coordinates to old ones.
    """
    from ..field_core.artin_schreier import as_normal_form

    F = blk.lam.field
    a, b, lam = blk.a, blk.b, blk.lam
    nf = as_normal_form(F, (a * b).raw)
    n, w = F.elem(nf.value()), F.elem(nf.w)
    lam0, s = _squarefree_split(F, lam / a)

    def back(xy):
        x2, y2 = xy
        y = y2 / s
        return ((x2 / s + w * y) / a, y)

    return Block(lam0, F.one_element, n), back


def _normalized(form: QuadraticForm):
    pairs = [_normalize_block(b) for b in form.blocks]
    return QuadraticForm([p[0] for p in pairs]), [p[1] for p in pairs]


def _pull_back(form: QuadraticForm, maps, res: SearchResult, want) -> SearchResult:
    if not res:
        return res
    v = []
    for i, back in enumerate(maps):
        v.extend(back(res.vector[2 * i:2 * i + 2]))
    v = tuple(v)
    assert form.evaluate(v) == want, "pulled-back witness failed its check"
    return SearchResult(res.status, v, res.method)


# -- public operations -----------------------------------------------------------------

def _embed(form: QuadraticForm, i: int, xy) -> tuple:
    F = form.field
    v = [F.zero_element] * form.dim
    v[2 * i], v[2 * i + 1] = xy
    return tuple(v)


def exhaustive_isotropic(form: QuadraticForm, limit: int = 1 << 16) -> SearchResult:
    """Least isotropic vector over GF(2^k) in graded order, by full enumeration."""
    F = form.field
    if _kind(F) != "finite":
        raise TypeError("exhaustive search needs a finite field")
    q = F.order
    if q ** form.dim > limit:
        raise ValueError("form too large for exhaustive enumeration")
    for m in range(1, q):
        for raw in itertools.product(range(m + 1), repeat=form.dim):
            if max(raw) != m:
                continue
            v = tuple(F.elem(c) for c in raw)
            if form.evaluate(v).is_zero():
                return SearchResult(FOUND, v, "exhaustive")
    return SearchResult(NOT_FOUND, method="exhaustive")


def find_isotropic_vector(form: QuadraticForm, budget: SearchBudget = DEFAULT_BUDGET,
                          guaranteed: bool = False) -> SearchResult:
    """Nonzero v with form(v) = 0.

    NOT_FOUND is returned only when anisotropy is proven: one-block forms over
    GF(2^k) and GF(2^k)(t), and exhaustive enumeration over small GF(2^k).
    ``guaranteed`` lifts the round and candidate bounds (for forms known to be
    isotropic, e.g. 10-dimensional with trivial Arf and Clifford invariants).
    """
    F = form.field
    kind = _kind(F)
    undecided = False
    for i, blk in enumerate(form.blocks):
        w = block_isotropic_vector(blk, budget)
        if w == UNKNOWN:
            undecided = True
        elif w is not None:
            return SearchResult(FOUND, _embed(form, i, w), "block")
    if len(form.blocks) == 1:
        return SearchResult(UNKNOWN if undecided else NOT_FOUND, method="block")
    if kind == "finite" and F.order ** form.dim <= 1 << 12:
        return exhaustive_isotropic(form)
    if kind == "finite":
        return _pivot_search(form, None, budget, guaranteed)
    if kind == "rational-1var":
        norm, maps = _normalized(form)
        if len(form.blocks) == 2 and not guaranteed:
            res = _two_block_search(norm, budget)
        else:
            res = _pivot_search(norm, None, budget, guaranteed)
        return _pull_back(form, maps, res, F.zero_element)
    return _bounded_search(form, None, budget)


def represent_value(form: QuadraticForm, e, budget: SearchBudget = DEFAULT_BUDGET) -> SearchResult:
    """A vector v with form(v) = e (e nonzero)."""
    F = form.field
    e = F(e)
    if e.is_zero():
        raise ValueError("represent_value needs a nonzero value")
    for i, blk in enumerate(form.blocks):
        xy = _block_represent(blk, e, budget)
        if xy is not None:
            v = _embed(form, i, xy)
            assert form.evaluate(v) == e
            return SearchResult(FOUND, v, "block")
    kind = _kind(F)
    if kind == "finite":
        res = _pivot_search(form, e, budget, False)
        if res:
            return res
    elif kind == "rational-1var":
        norm, maps = _normalized(form)
        res = _tail_scan(norm, e, budget)
        if not res:
            res = _pivot_search(norm, e, budget, False)
        return _pull_back(form, maps, res, e)
    return _bounded_search(form, e, budget)
