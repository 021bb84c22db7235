"""GF(2)-linear solving modulo wp(F) over GF(2^k) and GF(2^k)(t).

For fixed coefficients ``c, d`` the map ``z -> c z^2 + d z`` is additive, and
so is the normal form modulo wp(F).  Conditions of the shape

    m0 + sum_j (c_j z_j^2 + d_j z_j)  in  wp(F)

therefore become linear systems over GF(2) once each unknown ``z_j`` ranges
over a finite-dimensional GF(2)-space of candidates.
"""

from __future__ import annotations

from .artin_schreier import as_normal_form
from .gf2k import GF2k
from .linalg import BitIndexer, eliminate, reduce_target


def wp_class_keys(F, x):
    """GF(2)-coordinates of the class of a raw x in F / wp(F) (finite or 1var).

    Over GF(2^k)(t) the pair x = (n, d) may be an unreduced fraction.
    """
    if isinstance(F, GF2k):
        return [("tr",)] if F.trace(x) else []
    return as_normal_form(F, x).keys()


def _term_value(F, c, d, z):
    """c z^2 + d z as a possibly unreduced fraction (avoids gcd work)."""
    if isinstance(F, GF2k):
        return F.add(F.mul(c, F.square(z)), F.mul(d, z))
    R = F.ring
    (cn, cd), (dn, dd), (zn, zd) = c, d, z
    if R.is_zero(dn):
        return (R.mul(cn, R.square(zn)), R.mul(cd, R.square(zd)))
    num = R.add(R.mul(R.mul(cn, R.square(zn)), dd), R.mul(R.mul(dn, zn), R.mul(cd, zd)))
    return (num, R.mul(R.mul(cd, R.square(zd)), dd))


def support_polys(F, elems) -> list:
    """Monic irreducible factors of numerators and denominators of raw elements."""
    R = F.ring
    seen = {}
    for x in elems:
        if F.is_zero(x):
            continue
        for part in x:
            if R.deg(part) > 0:
                for P, _ in R.factor(part):
                    seen.setdefault(R.key(P), P)
    return [seen[k] for k in sorted(seen)]


def candidate_space(F, degree: int, den) -> list:
    """GF(2)-basis of {f/den : deg f <= degree} as raw elements."""
    R = F.ring
    basis = F.base.basis()
    out = []
    for i in range(degree + 1):
        for c in basis:
            out.append(F.make(R.monomial(c, i), den))
    return out


def denominator(F, places, exponent: int):
    R = F.ring
    g = R.one
    for P in places:
        g = R.mul(g, R.power(P, exponent))
    return g


def solve_linear_wp(F, m0, terms, spaces, nonzero: int | None = None):
    """Find raw z_j in span(spaces[j]) with m0 + sum(c z^2 + d z) in wp(F).

    ``terms`` is a list of raw pairs (c, d).  With ``nonzero = j`` the
    solution must have z_j != 0.  Returns the list of z_j or None.
    """
    idx = BitIndexer()
    cols = []
    owners = []
    for j, ((c, d), space) in enumerate(zip(terms, spaces)):
        for z in space:
            val = _term_value(F, c, d, z)
            cols.append(idx.pack(wp_class_keys(F, val)))
            owners.append((j, z))
    target = idx.pack(wp_class_keys(F, m0))
    basis, kernel = eliminate(cols)
    combo = reduce_target(basis, target)
    if combo is None:
        return None
    if nonzero is not None:
        mask = 0
        for i, (j, _) in enumerate(owners):
            if j == nonzero:
                mask |= 1 << i
        if not combo & mask:
            fix = next((k for k in kernel if k & mask), None)
            if fix is None:
                return None
            combo ^= fix
    zs = [F.zero] * len(terms)
    i = 0
    while combo:
        if combo & 1:
            j, z = owners[i]
            zs[j] = F.add(zs[j], z)
        combo >>= 1
        i += 1
    return zs
