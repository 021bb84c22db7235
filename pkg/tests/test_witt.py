import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biquat.field_core import make_field
from biquat.quaternion import QuaternionSymbol, invariant_vector, is_split
from biquat.witt_symbols import (LengthMismatch, LogEntry, RuleError, SymbolEntry, SymbolExpr, WittVector,
                                 addition_polynomials, apply_rule, lemma41_common_t, lemma41_slot_add,
                                 merge_second, power_reduce, solve_e_coords, witt_absorb, witt_add)

from oracles import elements, oracle_witt_add

F2 = make_field(1)
F4 = make_field(2)
F2t = make_field(1, None, ("t",))
t = F2t("t")
one, zero = F2t.one_element, F2t.zero_element


def W(*cs, F=F2t):
    return WittVector(tuple(F(c) if isinstance(c, (str, int)) else c for c in cs))


def vectors(F, n, degree=2, fractions=False):
    return st.lists(elements(F, degree, fractions=fractions), min_size=n, max_size=n).map(
        lambda cs: WittVector(tuple(cs)))


# -- addition ------------------------------------------------------------------------------

def test_length_one_is_field_addition():
    assert W(t) + W("t+1") == W(1)
    assert -W(t) == W(t)


def test_length_two_law():
    a1, a2, b1, b2 = t, t * t + 1, t + 1, F2t("t^3")
    assert W(a1, a2) + W(b1, b2) == W(a1 + b1, a2 + b2 + a1 * b1)
    assert -W(a1, a2) == W(a1, a2 + a1 * a1)


def test_polynomials_are_cached_and_bounded():
    assert addition_polynomials(3) is addition_polynomials(3)
    with pytest.raises(ValueError):
        addition_polynomials(0)


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        witt_add(W(t), W(t, t))


@pytest.mark.parametrize("F", [F2, F4, F2t], ids=lambda F: F.descriptor())
@pytest.mark.parametrize("n", [2, 3])
@settings(max_examples=25)
@given(data=st.data())
def test_addition_matches_ghost_oracle(F, n, data):
    deg = 0 if F.kind == "finite" else 2
    u, v = data.draw(vectors(F, n, deg)), data.draw(vectors(F, n, deg))
    assert (u + v).coords == oracle_witt_add(u.coords, v.coords, F)


@given(vectors(F2t, 3, fractions=True), vectors(F2t, 3, fractions=True), vectors(F2t, 3, fractions=True))
def test_group_laws(u, v, w):
    assert u + v == v + u
    assert (u + v) + w == u + (v + w)
    assert (u + (-u)).is_zero()
    assert u + WittVector.zero(F2t, 3) == u
    assert (u - v) + v == u


@given(vectors(F2t, 3), st.integers(1, 2))
def test_truncation_is_a_homomorphism(u, m):
    v = WittVector((t, one, t + 1))
    assert (u + v).truncate(m) == u.truncate(m) + v.truncate(m)


# -- solve_e -----------------------------------------------------------------------------------

def test_solve_e_examples():
    assert solve_e_coords(t, W(t + 1)) == W(t + 1)
    assert solve_e_coords(zero, W(t, 0, 0)) == W(t, 0, 0)
    a2, c2 = t, t * t + 1
    assert solve_e_coords(a2, W(c2, 0)) == W(c2, a2 * c2)


@given(elements(F2t, 2), elements(F2t, 2), st.integers(1, 4))
def test_solve_e_identity(a2, c2, n):
    e = solve_e_coords(a2, WittVector.teichmuller_like(c2, n))
    assert e[0] == c2
    assert WittVector.teichmuller_like(a2, n) + e == WittVector.teichmuller_like(a2 + c2, n)


# -- symbol rules ------------------------------------------------------------------------------------

def E(w, b, op=False):
    return SymbolEntry(w, F2t(b) if isinstance(b, (str, int)) else b, op)


def test_power_reduce():
    e = E(W(t, 1, "t+1"), t)
    assert power_reduce(e, 0) == e
    assert power_reduce(e, 2) == E(W(t), t)
    with pytest.raises(RuleError):
        power_reduce(e, 3)


def test_slot_add_example():
    e1, e2 = E(W(t, 1), "t+1"), E(W(1, t), t)
    out = lemma41_slot_add(e1, e2)
    assert out == (E(W(t, 1) + W(1, t), "t+1"), E(W(1, t), t / (t + 1)))
    with pytest.raises(RuleError):
        lemma41_slot_add(e1.opposite(), e2)
    with pytest.raises(RuleError):
        lemma41_slot_add(e1, E(W(t), t))


def test_common_t():
    w = W(t, 1)
    p = -w + W(t + 1, 0)
    out = lemma41_common_t(E(w, t), E(p, "t^2"), t + 1)
    assert out == (E(w, t * (t + 1)), E(p, t * t * (t + 1)))
    with pytest.raises(RuleError):
        lemma41_common_t(E(w, t), E(p, "t^2"), t)
    with pytest.raises(RuleError):
        lemma41_common_t(E(w, t), E(p, "t^2"), zero)


def test_absorb_and_merge():
    e = E(W(t, 1), "t+1")
    assert witt_absorb(e) == E(W(t, 1) + W(t + 1, 0), "t+1")
    assert merge_second(e, E(W(t, 1), t, op=True)) == E(W(t, 1), (t + 1) / t)
    with pytest.raises(RuleError):
        merge_second(e, E(W(t, 1), t))


def _class(entries):
    total = None
    for e in entries:
        v = invariant_vector(e.residual())
        total = v if total is None else total + v
    return total


ENTRY = st.tuples(vectors(F2t, 2), elements(F2t, 2, nonzero=True)).map(lambda wb: SymbolEntry(*wb))


@given(ENTRY, ENTRY)
def test_rules_preserve_residual_class(e1, e2):
    assert _class(lemma41_slot_add(e1, e2)) == _class((e1, e2))
    assert _class((witt_absorb(e1),)) == _class((e1,))
    s = witt_add(e1.omega, e2.omega)
    if s.coords[1:] == (zero,) and not s[0].is_zero():
        assert _class(lemma41_common_t(e1, e2, s[0])) == _class((e1, e2))


@given(elements(F2t, 2, nonzero=True))
def test_common_t_residual_split(s):
    S = QuaternionSymbol(s, s)
    assert is_split(S).verify(S) and is_split(S).verdict == "split"


def test_log_replay_and_round_trip():
    log = []
    e1, e2 = E(W(t, 1), "t+1"), E(W(1, t), t)
    outs = apply_rule("slot_add", (e1, e2), log)
    apply_rule("absorb", (outs[0],), log)
    assert all(entry.replay() for entry in log)
    expr = SymbolExpr(outs, log)
    again = SymbolExpr.from_json(F2t, expr.to_json())
    assert again == expr
    bad = LogEntry("slot_add", (e1, e2), (e1, e2), {})
    assert not bad.replay()


def test_expr_degree_check():
    with pytest.raises(ValueError):
        SymbolExpr((E(W(t), t), E(W(t, 1), t)))
