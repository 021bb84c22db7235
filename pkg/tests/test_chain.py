import copy
import json

import pytest
from hypothesis import given

from biquat.biquaternion_chain import (CERT_VERSION, TYPE_I, TYPE_II, ChainCertificate, ClassMismatch,
                                       MoveUndefined, RewriteError, Vertex, apply_type1, apply_type2,
                                       build_chain, check_pattern, random_same_class_pair,
                                       same_vertex_rewrite, verify_chain)
from biquat.biquaternion_chain.graph import move_step
from biquat.field_core import make_field
from biquat.quadratic_forms import Block, QuadraticForm, represent_value
from biquat.quaternion import QuaternionSymbol, invariant_vector, is_split

from oracles import elements

F2t = make_field(1, None, ("t",))
t = F2t("t")
one, zero = F2t.one_element, F2t.zero_element


def V(a, b, c, d):
    return Vertex.of(*(F2t(x) if isinstance(x, (str, int)) else x for x in (a, b, c, d)))


def klass(W: Vertex):
    return invariant_vector(W.first) + invariant_vector(W.second)


# -- moves ---------------------------------------------------------------------------------

def test_move_examples():
    W = apply_type1(t, t + 1, one, t * t)
    assert W.slots() == (t + 1, t + 1, one, (t + 1) * t * t)
    W = apply_type2(t, t + 1, one, t * t)
    assert W.slots() == (t, (t + 1) * (t + 1), one, t * t * (t + 1))


def test_move_errors():
    with pytest.raises(MoveUndefined):
        apply_type2(t, one, t, one)
    with pytest.raises(MoveUndefined):
        apply_type1(t, zero, one, one)


SLOTS = (elements(F2t, 2), elements(F2t, 2, nonzero=True), elements(F2t, 2), elements(F2t, 2, nonzero=True))


@given(*SLOTS)
def test_type1_preserves_class(a, b, c, d):
    assert klass(apply_type1(a, b, c, d)) == klass(Vertex.of(a, b, c, d))


@given(*SLOTS)
def test_type2_preserves_class(a, b, c, d):
    if (a + c).is_zero():
        return
    assert klass(apply_type2(a, b, c, d)) == klass(Vertex.of(a, b, c, d))


@given(elements(F2t, 3, nonzero=True))
def test_type2_multiplier_symbol_splits(s):
    S = QuaternionSymbol(s, s)
    res = is_split(S)
    assert res.verdict == "split" and res.verify(S)


# -- rewrites ---------------------------------------------------------------------------------

def test_same_vertex_rewrites():
    W = V(t, "t+1", 1, t)
    step = same_vertex_rewrite(W, "wp", 0, {"lam": t})
    assert step.target.first == QuaternionSymbol(t * t, t + 1) and step.target.second == W.second
    step = same_vertex_rewrite(W, "absorb", 1)
    assert step.target.second == QuaternionSymbol(t + 1, t)
    step = same_vertex_rewrite(W, "norm", 0, {"x": one, "y": one})
    assert step.target.first.beta == (t + 1) * (1 + t + 1)
    with pytest.raises(RewriteError):
        same_vertex_rewrite(W, "iso", 0, replacement=QuaternionSymbol(zero, t))
    with pytest.raises(RewriteError):
        same_vertex_rewrite(W, "norm", 0, {"x": zero, "y": zero})


# -- builder ------------------------------------------------------------------------------------

def _accepted(cert):
    rep = verify_chain(cert)
    assert rep.accepted, rep.failures
    rep = verify_chain(json.loads(cert.dumps()))
    assert rep.accepted, rep.failures
    return cert


def test_identical_vertices():
    W = V(t, "t+1", "t^2", "1/t")
    cert = _accepted(build_chain(W, W))
    assert cert.moves() == []


def test_single_move_replay():
    W = V(t, "t+1", "t^2", "1/t")
    for W2 in (apply_type1(*W.slots()), apply_type2(*W.slots())):
        assert len(_accepted(build_chain(W, W2)).moves()) == 1


def test_swapped_components():
    W = V(t, "t+1", 1, t)
    cert = _accepted(build_chain(W, Vertex(W.second, W.first)))
    assert len(cert.moves()) <= 3


def test_distance_two():
    W = V("t^2+1", t, t, "t+1")
    W2 = apply_type1(*apply_type2(*W.slots()).slots())
    cert = _accepted(build_chain(W, W2))
    assert check_pattern(cert.moves()) is None


def test_full_pipeline_without_shortcuts():
    for seed in range(6):
        A, B, _ = random_same_class_pair(seed, 3, F2t)
        cert = _accepted(build_chain(A, B, shortcuts=False))
        assert "lambda" in cert.witnesses


def test_class_mismatch():
    with pytest.raises(ClassMismatch):
        build_chain(V(1, t, 0, 1), V(0, 1, 0, 1))


def test_e_witness_is_represented_by_three_forms():
    found = 0
    for seed in range(20):
        A, B, _ = random_same_class_pair(seed, 3, F2t)
        w = build_chain(A, B).witnesses.get("e")
        if not w or w["x"].is_zero():
            continue
        found += 1
        a, c, e = w["a"], w["c"], w["e"]
        assert e == QuadraticForm([Block(one, a + c, one)]).evaluate([w["x"], w["y"]])
        slot = build_chain(A, B).witnesses["slot"]
        for f in (QuadraticForm([Block(slot["b"], one, a)]), QuadraticForm([Block(one, one, a + c)])):
            res = represent_value(f, e)
            assert res and f.evaluate(res.vector) == e
    assert found > 0


def test_random_pairs():
    for seed in range(10):
        A, B, trace = random_same_class_pair(seed, 4, F2t)
        assert klass(A) == klass(B)
        _accepted(build_chain(A, B))


def test_generator_complexity():
    A, B, trace = random_same_class_pair(5, 0, F2t)
    assert A == B and trace == []
    A, B, trace = random_same_class_pair(5, 1, F2t)
    assert [op["move"] for op in trace if "move" in op] in ([TYPE_I], [TYPE_II])


def test_certificate_round_trip():
    A, B, _ = random_same_class_pair(2, 3, F2t)
    cert = build_chain(A, B)
    again = ChainCertificate.from_json(json.loads(cert.dumps()))
    assert again.dumps() == cert.dumps()
    assert again.summary() == cert.summary()


# -- verifier negatives --------------------------------------------------------------------------

def test_pattern_rule():
    assert check_pattern([]) is None
    assert check_pattern([TYPE_I, TYPE_II, TYPE_I]) is None
    assert check_pattern([TYPE_II, TYPE_II]) is not None
    assert check_pattern([TYPE_II, TYPE_I, TYPE_I]) is not None
    assert check_pattern([TYPE_I] * 3) is not None


def _cert_with(*keys):
    for seed in range(40):
        A, B, _ = random_same_class_pair(seed, 3, F2t)
        cert = build_chain(A, B)
        if all(k in cert.witnesses for k in keys) and TYPE_II in cert.moves():
            return cert.to_json()
    raise AssertionError("no suitable certificate")


def _codes(doc):
    return verify_chain(doc).codes()


def test_rejects_bad_version():
    doc = _cert_with()
    doc["version"] = CERT_VERSION + 1
    assert _codes(doc) == {"version"}


def test_rejects_extra_type2():
    doc = _cert_with()
    i = next(k for k, s in enumerate(doc["steps"]) if s["kind"] == "move" and s["rule"] == TYPE_II)
    doc["steps"].insert(i + 1, copy.deepcopy(doc["steps"][i]))
    assert "pattern" in _codes(doc)


def test_rejects_type2_ahead_of_both_type1():
    A = V(t, "t+1", "t^2", "1/t")
    path, W = [], A
    for kind in (TYPE_II, TYPE_I, TYPE_I):
        step = move_step(kind, W)
        path.append(step.to_json())
        W = step.target
    doc = build_chain(A, A).to_json()
    doc["end"], doc["steps"] = W.to_json(), path
    assert _codes(doc) == {"pattern"}


def test_rejects_corrupted_lambda():
    doc = _cert_with("lambda")
    doc["witnesses"]["lambda"]["lam"] = str(F2t(doc["witnesses"]["lambda"]["lam"]) + t)
    assert "lambda-identity" in _codes(doc)


def test_rejects_corrupted_e():
    doc = _cert_with("e")
    doc["witnesses"]["e"]["e"] = str(F2t(doc["witnesses"]["e"]["e"]) * t)
    assert "e-decomposition" in _codes(doc)


def test_rejects_swapped_move_slots():
    doc = _cert_with()
    step = next(s for s in doc["steps"] if s["kind"] == "move")
    step["target"] = [step["target"][1], step["target"][0]]
    codes = _codes(doc)
    assert "move-formula" in codes


def test_rejects_wrong_endpoint():
    doc = _cert_with()
    doc["end"] = V(1, t, 0, 1).to_json()
    assert "endpoint" in _codes(doc)


def test_rejects_garbage():
    doc = _cert_with()
    doc["steps"][0]["source"] = "not a vertex"
    assert _codes(doc) == {"malformed"}
