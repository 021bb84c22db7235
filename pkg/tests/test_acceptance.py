"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the report lines.
"""

import copy
import json
import random
import time

import pytest

from biquat.biquaternion_chain import (TYPE_I, TYPE_II, ChainUnknown, apply_type1, apply_type2,
                                       build_chain, check_pattern, random_same_class_pair, random_vertex,
                                       verify_chain)
from biquat.biquaternion_chain.graph import rewrite_symbol
from biquat.field_core import make_field
from biquat.field_core.artin_schreier import norm_value
from biquat.quadratic_forms import (Block, QuadraticForm, albert_form, albert_lemma_extract,
                                    arf_is_trivial, find_isotropic_vector, lambda_balance, phi_form)
from biquat.quaternion import (AlgebraElement, QuaternionSymbol, commutator_sum, common_slot,
                               invariant_vector, is_isomorphic, is_split)
from biquat.witt_symbols import (LEN3_BOUND, LEN4_BOUND, PAIR_BUDGET, SINGLE_BUDGET, WittVector,
                                 decompose_len3, decompose_len4, random_len3_instance,
                                 random_len3_witnessed, random_len4_instance, solve_e_coords, verify_decomposition)

from oracles import norm_search, oracle_witt_add, poly_element

F2t = make_field(1, None, ("t",))
F4t = make_field(2, None, ("t",))
t = F2t("t")
one, zero = F2t.one_element, F2t.zero_element


def report(capsys, name, ok, detail):
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'}: {name} ({detail})")
    assert ok, detail


def vertex_class(W):
    return invariant_vector(W.first) + invariant_vector(W.second)


def rand_el(rng, deg, nonzero=False, fractions=True):
    while True:
        x = poly_element(F2t, rng, deg)
        if fractions and rng.random() < 0.3:
            d = poly_element(F2t, rng, deg)
            if not d.is_zero():
                x = x / d
        if not (nonzero and x.is_zero()):
            return x


# -- chain suite (also feeds the negative controls) ---------------------------------------------

def _chain_runs(shortcuts):
    runs = []
    start = time.monotonic()
    for seed in range(100):
        A, B, _ = random_same_class_pair(seed, seed % 5 + 1, F2t, 2)
        try:
            cert = build_chain(A, B, shortcuts=shortcuts)
        except ChainUnknown:
            cert = None
        runs.append((A, B, cert))
    return runs, time.monotonic() - start


@pytest.fixture(scope="module")
def chain_runs():
    """Default builder and the full pipeline with the replay shortcuts disabled."""
    return {"default": _chain_runs(True), "full pipeline": _chain_runs(False)}


def test_chain_suite(capsys, chain_runs):
    ok, parts = True, []
    for mode, (runs, elapsed) in chain_runs.items():
        built = [c for _, _, c in runs if c is not None]
        accepted = sum(verify_chain(json.loads(c.dumps())).accepted for c in built)
        pattern = all(check_pattern(c.moves()) is None and c.moves().count(TYPE_I) <= 2
                      and c.moves().count(TYPE_II) <= 1 for c in built)
        ok = ok and len(runs) >= 100 and len(built) >= 0.95 * len(runs) and accepted == len(built) and pattern
        parts.append(f"{mode}: {len(built)}/{len(runs)} built, {accepted} accepted, "
                     f"pattern {'ok' if pattern else 'violated'}, {elapsed:.1f}s")
    report(capsys, "chain suite", ok, "; ".join(parts))


# -- edge soundness -----------------------------------------------------------------------------

def test_edge_soundness(capsys):
    rng = random.Random(2024)
    counts = {TYPE_I: 0, TYPE_II: 0}
    failures = 0
    while min(counts.values()) < 100:
        W = random_vertex(F2t, rng, 2)
        a, b, c, d = W.slots()
        for kind, move in ((TYPE_I, apply_type1), (TYPE_II, apply_type2)):
            if counts[kind] >= 100 or (kind == TYPE_II and (a + c).is_zero()):
                continue
            counts[kind] += 1
            failures += vertex_class(move(a, b, c, d)) != vertex_class(W)
    report(capsys, "edge soundness", failures == 0,
           f"{counts[TYPE_I]} type I, {counts[TYPE_II]} type II, {failures} failures")


# -- extraction and balance exactness ------------------------------------------------------------

def _rewrite_randomly(S, rng, steps=2):
    for _ in range(steps):
        rule = rng.choice(("norm", "wp", "absorb"))
        if rule == "norm":
            x, y = rand_el(rng, 1), rand_el(rng, 1)
            if norm_value(S.alpha, x, y).is_zero():
                continue
            S = rewrite_symbol("norm", S, {"x": x, "y": y})
        elif rule == "wp":
            S = rewrite_symbol("wp", S, {"lam": rand_el(rng, 1)})
        else:
            S = rewrite_symbol("absorb", S, {})
    return S


def test_extraction_and_balance_exactness(capsys):
    rng = random.Random(31)
    extract_ok = 0
    for k in range(100):
        if k % 2:
            # isotropic vectors of [1, a+c] + b[1,a] + d[1,c] for isomorphic pairs
            S = QuaternionSymbol(rand_el(rng, 2), rand_el(rng, 2, True))
            Q1, Q2 = _rewrite_randomly(S, rng), _rewrite_randomly(S, rng)
            form = albert_form(Q1, Q2)
            vec = find_isotropic_vector(form, guaranteed=True).vector
            alpha, psi = Q1.alpha + Q2.alpha, QuadraticForm(form.blocks[1:])
        else:
            psi = QuadraticForm([Block(rand_el(rng, 2, True), rand_el(rng, 2), rand_el(rng, 2))
                                 for _ in range(rng.randint(1, 3))])
            r0 = rand_el(rng, 2)
            v0 = [rand_el(rng, 2) for _ in range(psi.dim)]
            alpha = r0 * r0 + r0 + psi.evaluate(v0)
            scale = rand_el(rng, 1, True)
            vec = tuple(scale * c for c in (r0, one, *v0))
        r, v = albert_lemma_extract(alpha, psi, vec)
        extract_ok += (r * r + r + alpha + psi.evaluate(v)).is_zero()

    balance_ok = 0
    for seed in range(100):
        A, B, _ = random_same_class_pair(1000 + seed, seed % 4 + 1, F2t, 2)
        a, b, c, d = A.slots()
        al, be, ga, de = B.slots()
        bal = lambda_balance(a, c, al, ga, b, d, be, de)
        lam, args = bal.lam, bal.args
        lhs = a + c + al + ga + lam * lam + lam
        rhs = zero
        for (s1, s2), (x, y) in zip(((a, b), (c, d), (al, be), (ga, de)), args):
            rhs = rhs + s2 * norm_value(s1, x, y)
        balance_ok += lhs == rhs
    ok = extract_ok == 100 and balance_ok == 100
    report(capsys, "extraction and balance exactness", ok,
           f"extraction {extract_ok}/100, balance {balance_ok}/100")


# -- Arf class of phi -------------------------------------------------------------------------------

def test_arf_of_phi(capsys):
    trivial = witnessed = 0
    for seed in range(50):
        A, B, _ = random_same_class_pair(2000 + seed, seed % 5 + 1, F2t, 2)
        phi = phi_form(*A.slots(), *B.slots())
        trivial += arf_is_trivial(phi) is True
        res = find_isotropic_vector(phi, guaranteed=True)
        witnessed += bool(res) and any(not x.is_zero() for x in res.vector) and phi.evaluate(res.vector).is_zero()
    report(capsys, "Arf class of phi", trivial == witnessed == 50,
           f"Arf trivial {trivial}/50, isotropic witness {witnessed}/50")


# -- common slot ----------------------------------------------------------------------------------------

def test_common_slot(capsys):
    rng = random.Random(77)
    good = nontrivial = 0
    for k in range(50):
        seed_symbol = QuaternionSymbol(one, t) if k % 2 == 0 else \
            QuaternionSymbol(rand_el(rng, 2), rand_el(rng, 2, True))
        Q1 = _rewrite_randomly(seed_symbol, rng, 2)
        Q2 = _rewrite_randomly(seed_symbol, rng, 3)
        e, z, y = common_slot(Q1, Q2)
        links = (Q1, QuaternionSymbol(Q1.alpha, e), QuaternionSymbol(Q2.alpha, e), Q2)
        linked = all(is_isomorphic(p, q) is True and invariant_vector(p) == invariant_vector(q)
                     for p, q in zip(links, links[1:]))
        x = AlgebraElement.basis(Q1)[1]
        unit = AlgebraElement.scalar(Q1, one)
        rel = z * z + z == unit * Q2.alpha
        if not y.is_zero():
            nontrivial += 1
            rel = rel and commutator_sum(x, y) == y and commutator_sum(z, y) == y and (y * y).is_scalar()
        good += linked and rel
    report(capsys, "common slot", good == 50, f"{good}/50 verified, {nontrivial} with y nonzero")


# -- split-test cross-validation -------------------------------------------------------------------------

def test_split_cross_validation(capsys):
    rng = random.Random(5)
    contradictions = reciprocity = witnesses = found = 0
    for _ in range(200):
        S = QuaternionSymbol(rand_el(rng, 3), rand_el(rng, 3, True))
        inv = invariant_vector(S)
        reciprocity += len(inv.support()) % 2 == 0
        sol = norm_search(S.alpha, S.beta, 1)
        found += sol is not None
        if sol is not None and not inv.is_zero():
            contradictions += 1
        res = is_split(S)
        witnesses += res.verify(S) and (res.verdict == "split") == inv.is_zero()
    ok = contradictions == 0 and reciprocity == 200 and witnesses == 200
    report(capsys, "split-test cross-validation", ok,
           f"{contradictions} contradictions, {found} search hits, reciprocity {reciprocity}/200, "
           f"verified verdicts {witnesses}/200")


# -- Witt suite ---------------------------------------------------------------------------------------------

def test_witt_suite(capsys):
    rng = random.Random(11)
    agree = solved = law = law_cases = 0
    for k in range(500):
        F = F2t if k % 5 else F4t
        n = 2 + k % 2
        u = WittVector(tuple(poly_element(F, rng, 2) for _ in range(n)))
        v = WittVector(tuple(poly_element(F, rng, 2) for _ in range(n)))
        agree += (u + v).coords == oracle_witt_add(u.coords, v.coords, F)
        a2, c2 = poly_element(F, rng, 2), poly_element(F, rng, 2)
        e = solve_e_coords(a2, WittVector.teichmuller_like(c2, n))
        solved += WittVector.teichmuller_like(a2, n) + e == WittVector.teichmuller_like(a2 + c2, n)
        if n == 2:
            law_cases += 1
            (a1, a2_), (b1, b2) = u.coords, v.coords
            law += (u + v).coords == (a1 + b1, a2_ + b2 + a1 * b1)
    ok = agree == 500 and solved == 500 and law == law_cases
    report(capsys, "Witt suite", ok, f"oracle {agree}/500, solve_e {solved}/500, n=2 law {law}/{law_cases}")


# -- symbol-length budgets ------------------------------------------------------------------------------------

def _units_split(cert):
    for c in cert.classes:
        for u in c.units:
            total = None
            for i in u.indices:
                inv = invariant_vector(c.expr.entries[i].residual())
                total = inv if total is None else total + inv
            if not total.is_zero():
                return False
    return True


def test_symbol_length_budgets(capsys):
    len4 = []
    for seed in range(20):
        cert = decompose_len4(random_len4_instance(seed, n=2, complexity=seed % 4 + 1))
        moves = len(cert.chain.moves()) if cert.chain else 0
        good = (verify_decomposition(json.loads(cert.dumps())).accepted and _units_split(cert)
                and cert.total_budget <= LEN4_BOUND and (moves == 3 or cert.total_budget < LEN4_BOUND))
        len4.append((good, cert.total_budget))
    len3 = []
    searched = [(random_len3_instance(seed, n=2, complexity=seed % 4 + 1), None) for seed in range(20)]
    witnessed = [random_len3_witnessed(seed, n=2) for seed in range(20)]
    for k, (entries, witness) in enumerate(searched + witnessed):
        cert = decompose_len3(entries, albert_witness=witness)
        blocks = [c.budget for c in cert.classes]
        nondeg = not cert.witnesses["gamma1"].is_zero() and not cert.witnesses["gamma2"].is_zero()
        good = (verify_decomposition(json.loads(cert.dumps())).accepted and _units_split(cert)
                and cert.total_budget <= LEN3_BOUND
                and (not nondeg or blocks == [PAIR_BUDGET, SINGLE_BUDGET, PAIR_BUDGET])
                and (witness is None or nondeg))
        len3.append((good, cert.total_budget, nondeg))
    ok4, ok3 = sum(g for g, _ in len4), sum(g for g, _, _ in len3)
    report(capsys, "symbol-length budgets", ok4 == 20 and ok3 == 40,
           f"len4 {ok4}/20 budgets {sorted({b for _, b in len4})}, len3 {ok3}/40 budgets "
           f"{sorted({b for _, b, _ in len3})}, {sum(n for _, _, n in len3)} with 4+1+4 blocks")


# -- negative controls ----------------------------------------------------------------------------------------

def _corrupt_lambda(doc):
    w = doc["witnesses"]["lambda"]
    w["lam"] = str(F2t(w["lam"]) + t)
    return "lambda-identity"


def _reorder(doc):
    steps = doc["steps"]
    i = next(k for k, s in enumerate(steps) if s["kind"] == "move" and s["rule"] == TYPE_II)
    steps.insert(0, steps.pop(i))
    return "pattern"


def _swap_slots(doc):
    step = next(s for s in doc["steps"] if s["kind"] == "move" and s["target"][0] != s["target"][1])
    step["target"] = [step["target"][1], step["target"][0]]
    return "move-formula"


def test_negative_controls(capsys, chain_runs):
    runs, _ = chain_runs["full pipeline"]
    certs = [c for _, _, c in runs if c is not None]
    with_lambda = [c for c in certs if "lambda" in c.witnesses]
    full = [c for c in certs if c.moves() == [TYPE_I, TYPE_II, TYPE_I]]
    with_move = [c for c in certs if c.moves() and c.moves() != [TYPE_I] * 2]
    plan = ([(c, _corrupt_lambda) for c in with_lambda[:17]] + [(c, _reorder) for c in full[:17]]
            + [(c, _swap_slots) for c in with_move[:16]])
    caught = 0
    for cert, mutate in plan:
        doc = copy.deepcopy(cert.to_json())
        want = mutate(doc)
        assert doc != cert.to_json(), "mutation left the certificate unchanged"
        caught += want in verify_chain(doc).codes()
    report(capsys, "negative controls", len(plan) == 50 and caught == 50,
           f"{caught}/{len(plan)} mutations rejected with the expected item")
