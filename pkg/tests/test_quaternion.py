import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from biquat.biquaternion_chain.graph import rewrite_symbol
from biquat.field_core import make_field
from biquat.field_core.artin_schreier import UNKNOWN, Place, norm_value, place_from_text
from biquat.quaternion import (NONSPLIT, SPLIT, AlgebraElement, PreconditionViolated, QuaternionSymbol,
                               SymbolMismatch, algebra_mul, commutator_sum, common_slot, invariant_vector,
                               is_isomorphic, is_split, local_invariant)

from oracles import elements, norm_search, quaternion_mul

F2t = make_field(1, None, ("t",))
F4t = make_field(2, None, ("t",))
F4 = make_field(2)
F2st = make_field(1, None, ("s", "t"))
t = F2t("t")


def Q(a, b, F=F2t):
    return QuaternionSymbol(F(a), F(b))


# -- structure constants ---------------------------------------------------------------

def test_multiplication_examples():
    A = Q("t^2+1", "t")
    one, i, j, ij = AlgebraElement.basis(A)
    assert i * i == i + one * A.alpha
    assert j * j == one * A.beta
    assert j * i == ij + j


def test_symbol_mismatch():
    with pytest.raises(SymbolMismatch):
        algebra_mul(AlgebraElement.basis(Q("t", "t"))[1], AlgebraElement.basis(Q("1", "t"))[1])


SYM = st.tuples(elements(F2t, 2), elements(F2t, 2, nonzero=True)).map(lambda ab: QuaternionSymbol(*ab))
VEC = st.lists(elements(F2t, 1), min_size=4, max_size=4)


@given(SYM, VEC, VEC)
def test_multiplication_matches_word_rewriting(S, p, q):
    got = AlgebraElement(S, p) * AlgebraElement(S, q)
    assert got.coords == quaternion_mul(S.alpha, S.beta, p, q)


@given(SYM, VEC, VEC, VEC)
def test_associative_and_distributive(S, p, q, r):
    x, y, z = (AlgebraElement(S, v) for v in (p, q, r))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z


def _rank(rows):
    rows = [list(r) for r in rows]
    rank, ncols = 0, len(rows[0])
    for c in range(ncols):
        piv = next((k for k in range(rank, len(rows)) if not rows[k][c].is_zero()), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for k in range(len(rows)):
            if k != rank and not rows[k][c].is_zero():
                f = rows[k][c] / rows[rank][c]
                rows[k] = [a + f * b for a, b in zip(rows[k], rows[rank])]
        rank += 1
    return rank


def test_center_is_scalars_for_nonsplit():
    for S in (Q(1, "t"), Q(1, "t+1"), Q("t", "t+1")):
        assert is_split(S).verdict == NONSPLIT
        basis = AlgebraElement.basis(S)
        # columns: commutators of each basis vector with i and with j, stacked
        cols = [commutator_sum(e, basis[1]).coords + commutator_sum(e, basis[2]).coords for e in basis]
        rows = list(zip(*cols))
        assert _rank(rows) == 3          # kernel is F*1


# -- splitting ---------------------------------------------------------------------------

def test_split_examples():
    res = is_split(Q(0, "t^2+1"))
    assert res.verdict == SPLIT and res.verify(Q(0, "t^2+1"))
    res = is_split(Q(1, 1))
    assert res.verdict == SPLIT and (res.r is not None or res.uv == (F2t.one_element, F2t.zero_element))
    a = t ** 3 + t + 1
    res = is_split(QuaternionSymbol(a, F2t.one_element))
    assert res.uv == (F2t.one_element, F2t.zero_element)
    res = is_split(QuaternionSymbol(a, a))
    assert res.uv == (F2t.zero_element, F2t.one_element)


def test_one_t_is_nonsplit():
    S = Q(1, "t")
    res = is_split(S)
    assert res.verdict == NONSPLIT and res.verify(S)
    assert norm_search(S.alpha, S.beta, 3) is None


@given(SYM)
def test_split_verdicts_carry_valid_witnesses(S):
    res = is_split(S)
    assert res.verdict in (SPLIT, NONSPLIT)
    assert res.verify(S)


@given(st.tuples(elements(F4t, 2), elements(F4t, 2, nonzero=True)))
def test_split_verdicts_gf4t(ab):
    S = QuaternionSymbol(*ab)
    res = is_split(S)
    assert res.verdict in (SPLIT, NONSPLIT) and res.verify(S)


def test_finite_fields_split_everything():
    for F in (make_field(1), F4, make_field(3)):
        for a in range(F.order):
            for b in range(1, F.order):
                S = QuaternionSymbol(F.elem(a), F.elem(b))
                res = is_split(S)
                assert res.verdict == SPLIT and res.verify(S)


def test_bivariate_split_is_witness_based(F2st):
    s = F2st("s")
    S = QuaternionSymbol(s, s)
    assert is_split(S).verdict == SPLIT
    S = QuaternionSymbol(s, F2st("t"))
    assert is_split(S).verdict in (UNKNOWN, NONSPLIT) or is_split(S).verify(S)
    assert is_split(S).verdict != NONSPLIT


# -- local invariants ------------------------------------------------------------------------

def test_local_invariant_examples():
    P = place_from_text(F2t, "t")
    for place in (P, place_from_text(F2t, "t+1"), Place(None)):
        assert local_invariant(Q(0, "t^2+t+1"), place) == 0
        assert local_invariant(Q("t^2+t", "t"), place) == 0
    assert local_invariant(Q(1, "t"), P) == 1


def test_invariant_vector_examples():
    assert invariant_vector(Q(0, "t/(t+1)")).is_zero()
    v = invariant_vector(Q(1, "t"))
    assert v.support() == frozenset([place_from_text(F2t, "t"), Place(None)])
    assert invariant_vector(Q("t^2+1", "t^2+1")).is_zero()


@given(SYM)
def test_reciprocity(S):
    v = invariant_vector(S)
    assert len(v.support()) % 2 == 0


@given(st.tuples(elements(F4t, 2), elements(F4t, 2, nonzero=True)))
def test_reciprocity_gf4t(ab):
    v = invariant_vector(QuaternionSymbol(*ab))
    assert len(v.support()) % 2 == 0


@given(elements(F2t, 2), elements(F2t, 2), elements(F2t, 2, nonzero=True), elements(F2t, 2, nonzero=True))
def test_invariants_are_bilinear(a1, a2, b1, b2):
    inv = lambda a, b: invariant_vector(QuaternionSymbol(a, b))
    assert inv(a1, b1 * b2) == inv(a1, b1) + inv(a1, b2)
    assert inv(a1 + a2, b1) == inv(a1, b1) + inv(a2, b1)


@given(st.tuples(elements(F2t, 2, fractions=False), elements(F2t, 2, nonzero=True, fractions=False)))
def test_search_oracle_agreement(ab):
    S = QuaternionSymbol(*ab)
    found = norm_search(S.alpha, S.beta, 1)
    inv = invariant_vector(S)
    if found is not None:
        assert inv.is_zero()
    if not inv.is_zero():
        assert found is None


# -- isomorphism --------------------------------------------------------------------------------

def test_isomorphism_examples():
    S = Q("t", "t+1")
    assert is_isomorphic(S, S) is True
    lam = t * t + 1
    assert is_isomorphic(S, QuaternionSymbol(S.alpha + lam * lam + lam, S.beta)) is True
    assert is_isomorphic(Q(1, "t"), Q(0, "t")) is False


@given(SYM, elements(F2t, 2), elements(F2t, 2))
def test_norm_multiplier_preserves_class(S, x, y):
    n = norm_value(S.alpha, x, y)
    if n.is_zero():
        return
    assert is_isomorphic(S, QuaternionSymbol(S.alpha, S.beta * n)) is True


# -- common slot ----------------------------------------------------------------------------------

def _rewritten(S, rng, steps):
    for _ in range(steps):
        rule = rng.choice(("norm", "wp", "absorb"))
        if rule == "norm":
            x, y = t ** rng.randrange(3) + F2t(rng.randrange(2)), F2t(rng.randrange(2)) * t
            if norm_value(S.alpha, x, y).is_zero():
                continue
            S = rewrite_symbol("norm", S, {"x": x, "y": y})
        elif rule == "wp":
            S = rewrite_symbol("wp", S, {"lam": t ** rng.randrange(3) + F2t(rng.randrange(2))})
        else:
            S = rewrite_symbol("absorb", S, {})
    return S


def check_common_slot(Q1, Q2):
    cs = common_slot(Q1, Q2)
    e, z, y = cs
    one = AlgebraElement.scalar(Q1, F2t.one_element)
    x = AlgebraElement.basis(Q1)[1]
    assert z * z + z == one * Q2.alpha
    links = (Q1, QuaternionSymbol(Q1.alpha, e), QuaternionSymbol(Q2.alpha, e), Q2)
    for left, right in zip(links, links[1:]):
        assert invariant_vector(left) == invariant_vector(right)
    if not cs.commuting():
        assert commutator_sum(x, y) == y and commutator_sum(z, y) == y
        assert (y * y).is_scalar() and not y.is_scalar()
    return cs


def test_common_slot_examples():
    S = Q("t", "t^2+1")
    cs = check_common_slot(S, S)
    assert cs.commuting() and cs.e == S.beta and cs.z == AlgebraElement.basis(S)[1]
    lam = t + 1
    cs = check_common_slot(S, QuaternionSymbol(S.alpha + lam * lam + lam, S.beta))
    assert cs.commuting() and cs.e == S.beta


def test_common_slot_from_one_t():
    rng = random.Random(3)
    nontrivial = 0
    for _ in range(12):
        S1 = _rewritten(Q(1, "t"), rng, 2)
        S2 = _rewritten(Q(1, "t"), rng, 3)
        nontrivial += not check_common_slot(S1, S2).commuting()
    assert nontrivial > 0


def test_common_slot_rejects_non_isomorphic():
    with pytest.raises(PreconditionViolated):
        common_slot(Q(1, "t"), Q(0, "t"))
