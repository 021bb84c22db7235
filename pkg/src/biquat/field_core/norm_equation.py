"""Descent for norm equations u^2 + u v + A v^2 = C over GF(2^k)(t).

Elements u + v w with w^2 + w = A multiply as

    (u1 + v1 w)(u2 + v2 w) = (u1 u2 + A v1 v2) + (u1 v2 + u2 v1 + v1 v2) w,

and N(u + v w) = u^2 + u v + A v^2 is multiplicative.  With A = a / delta,
f(U, V) = delta U^2 + delta U V + a V^2 = delta N(U + V w) is integral.  For
a prime Q of C not dividing delta with a root rho of f(rho, 1) mod Q, a short
vector of the lattice {(U, V) : U = rho V mod Q} gives f(U, V) = Q M with M
small, so C can be traded for the squarefree part of (C / Q) M delta.
"""

from __future__ import annotations

from .linalg import BitIndexer, solve_affine


def norm_mul(F, A, z1, z2):
    (u1, v1), (u2, v2) = z1, z2
    u = F.add(F.mul(u1, u2), F.mul(A, F.mul(v1, v2)))
    v = F.add(F.add(F.mul(u1, v2), F.mul(u2, v1)), F.mul(v1, v2))
    return (u, v)


def norm(F, A, z):
    u, v = z
    return F.add(F.add(F.square(u), F.mul(u, v)), F.mul(A, F.square(v)))


def norm_inverse(F, A, z):
    u, v = z
    n = norm(F, A, z)
    return (F.div(F.add(u, v), n), F.div(v, n))


def wp_root_mod(R, c, Q):
    """rho with rho^2 + rho = c in GF(2^k)[t]/(Q) (Q squarefree), or None."""
    base = R.base
    n = R.deg(Q)
    idx = BitIndexer()

    def bits(p):
        keys = []
        for j, coef in enumerate(R.coeffs(R.mod(p, Q))):
            for b in range(base.k):
                if (coef >> b) & 1:
                    keys.append((j, b))
        return idx.pack(keys)

    basis = [R.monomial(e, j) for j in range(n) for e in base.basis()]
    cols = [bits(R.add(R.square(p), p)) for p in basis]
    combo = solve_affine(cols, bits(c))
    if combo is None:
        return None
    rho = R.zero
    i = 0
    while combo:
        if combo & 1:
            rho = R.add(rho, basis[i])
        combo >>= 1
        i += 1
    return rho


def _squarefree_poly(R, p):
    """p = sqf * h^2 with sqf monic squarefree; constants are squares."""
    sqf, h = R.squarefree_split(p)
    return sqf, R.scale(R.base.sqrt(R.lc(p)), h)


def _short_vector(R, Q, rho, a, delta):
    """(U, V) with U = rho V mod Q minimizing deg f(U, V) along the Euclid sequence."""
    best = None
    r0, r1 = Q, R.mod(rho, Q)
    t0, t1 = R.zero, R.one
    while True:
        U, V = r1, t1
        if not (R.is_zero(U) and R.is_zero(V)):
            size = max(R.deg(delta) + 2 * R.deg(U) if not R.is_zero(U) else -1,
                       R.deg(a) + 2 * R.deg(V) if not R.is_zero(V) else -1)
            if best is None or size < best[0]:
                best = (size, U, V)
        if R.is_zero(r1):
            break
        q, r2 = R.divmod(r0, r1)
        r0, r1 = r1, r2
        t0, t1 = t1, R.add(t0, R.mul(q, t1))
    return best[1], best[2]


def crt(R, residues, moduli):
    """x with x = residues[i] mod moduli[i] (pairwise coprime), deg x < deg prod."""
    M = R.one
    for Q in moduli:
        M = R.mul(M, Q)
    x = R.zero
    for r, Q in zip(residues, moduli):
        Mi = R.div_exact(M, Q)
        x = R.add(x, R.mul(R.mul(r, Mi), R.inv_mod(R.mod(Mi, Q), Q)))
    return R.mod(x, M), M


def _trade(F, A, C, modulus, rho):
    """One descent step with U = rho V mod ``modulus`` (a divisor of C).

    Returns (new_C, z_inv, W_factor) with C = new_C * N(z_inv) * W_factor^2,
    or None when the step does not shrink C.
    """
    R = F.ring
    a, delta = A
    U, V = _short_vector(R, modulus, rho, a, delta)
    fUV = R.add(R.add(R.mul(delta, R.square(U)), R.mul(delta, R.mul(U, V))),
                R.mul(a, R.square(V)))
    if R.is_zero(fUV):
        return None
    M, rem = R.divmod(fUV, modulus)
    if not R.is_zero(rem):
        return None
    new_C, h = _squarefree_poly(R, R.mul(R.mul(R.div_exact(C, modulus), M), delta))
    if R.deg(new_C) >= R.deg(C):
        return None
    # C N(z) = modulus^2 new_C h^2 / delta^2
    z = (F.make(U, R.one), F.make(V, R.one))
    return new_C, norm_inverse(F, A, z), F.make(R.mul(modulus, h), delta)


def descend(F, A, C_poly, max_steps: int = 64):
    """Reduce u^2 + uv + A v^2 = C (C a squarefree polynomial).

    Returns (C_fin, zeta, W) with C = C_fin * N(zeta) * W^2 and C_fin a
    squarefree polynomial of degree no larger than that of C.  Each step uses
    the whole part C' of C prime to the denominator of A as lattice modulus
    (a root of rho^2 + rho = A mod C' needs no factorization) and only falls
    back to single primes when that does not shrink C.
    """
    R = F.ring
    a, delta = A
    zeta = (F.one, F.zero)
    W = F.one
    C = C_poly
    for _ in range(max_steps):
        if R.deg(C) <= 0:
            break
        Cp = R.div_exact(C, R.gcd(C, delta)) if R.deg(delta) > 0 else C
        if R.deg(Cp) <= 0:
            break
        rho = wp_root_mod(R, R.mod(R.mul(a, R.inv_mod(delta, Cp)), Cp), Cp)
        if rho is None:
            break
        step = _trade(F, A, C, Cp, rho)
        if step is None:
            for Q, _ in sorted(R.factor(Cp), key=lambda pe: (-R.deg(pe[0]), R.key(pe[0]))):
                step = _trade(F, A, C, Q, R.mod(rho, Q))
                if step is not None:
                    break
        if step is None:
            break
        C, z_inv, w = step
        zeta = norm_mul(F, A, zeta, z_inv)
        W = F.mul(W, w)
    return C, zeta, W


def nf_height(F, nf) -> int:
    """Total pole degree of a normal form (infinity counted with degree 1)."""
    R = F.ring
    h = max(nf.poly, default=0)
    for P, digs in nf.polar.items():
        if digs:
            h += max(digs) * R.deg(P)
    return h


def _key_weight(key):
    """Pole weight of a normal-form coordinate key, used to order bits."""
    if key[0] == "inf":
        return (key[1], key)
    if key[0] == "c":
        return (0, key)
    pk = key[1]
    deg = pk.bit_length() - 1 if isinstance(pk, int) else pk[0] - 1
    return (key[2] * deg, key)


def reduce_by_multiple(F, A, C_poly):
    """Shrink the wp-class of A using A ~ A + C c^2.

    Returns (A_new, c) with A = A_new + C c^2 + wp(x) and A_new in normal
    form of smaller height, or None when no reduction is found.
    """
    from .artin_schreier import as_normal_form
    from .wp_linear import _term_value, candidate_space

    R = F.ring
    nf = as_normal_form(F, A)
    height = nf_height(F, nf)
    if height == 0:
        return None
    g = R.one
    for P, digs in nf.polar.items():
        if digs:
            g = R.mul(g, R.power(P, max(digs)))
    inf_a = max(nf.poly, default=0)
    D = R.deg(g) + (2 * inf_a - R.deg(C_poly)) // 2
    if D < 0:
        return None
    C = F.make(C_poly, R.one)
    space = candidate_space(F, D, g)
    key_lists = [list(as_normal_form(F, _term_value(F, C, F.zero, z)).keys()) for z in space]
    target_keys = list(nf.keys())
    every = {k for ks in key_lists for k in ks} | set(target_keys)
    order = {k: i for i, k in enumerate(sorted(every, key=_key_weight))}

    def pack(keys):
        v = 0
        for k in keys:
            v ^= 1 << order[k]
        return v

    from .linalg import eliminate, reduce_partial

    basis, _ = eliminate([pack(ks) for ks in key_lists])
    _, combo = reduce_partial(basis, pack(target_keys))
    if not combo:
        return None
    c = F.zero
    i = 0
    while combo:
        if combo & 1:
            c = F.add(c, space[i])
        combo >>= 1
        i += 1
    new = as_normal_form(F, F.add(A, F.mul(C, F.square(c))))
    if nf_height(F, new) >= height:
        return None
    return new.value(), c


def solve_conic(F, A, C_poly, finish, max_rounds: int = 40):
    """Nonzero raw s with A + C s^2 in wp(F); A in normal form, C squarefree.

    Alternates norm descent on C with reduction of A modulo C F^2 and wp(F),
    hands the reduced pair to ``finish(A, C_poly)`` and lifts its answer back.
    Returns None when ``finish`` fails or a lift degenerates.
    """
    from .artin_schreier import artin_schreier_solve

    steps = []
    for _ in range(max_rounds):
        moved = False
        C1, zeta, W = descend(F, A, C_poly)
        if F.ring.deg(C1) < F.ring.deg(C_poly):
            steps.append(("C", A, C1, zeta, W))
            C_poly = C1
            moved = True
        red = reduce_by_multiple(F, A, C_poly)
        if red is not None:
            A_new, c = red
            steps.append(("A", c))
            A = A_new
            moved = True
        if not moved:
            break
    s = finish(A, C_poly)
    if s is None:
        return None
    for step in reversed(steps):
        if F.is_zero(s):
            return None
        if step[0] == "A":
            s = F.add(s, step[1])
        else:
            _, A_i, C_new, zeta, W = step
            val = F.add(A_i, F.mul(F.make(C_new, F.ring.one), F.square(s)))
            r = artin_schreier_solve(F.elem(val)).raw
            z = (F.div(r, s), F.inv(s))
            u, v = norm_mul(F, A_i, z, zeta)
            v = F.mul(W, v)
            if F.is_zero(v):
                return None
            s = F.inv(v)
    return None if F.is_zero(s) else s
