"""A short randomized run over every module, keyed by the seed."""

from __future__ import annotations

import random

from ..biquaternion_chain import build_chain, random_same_class_pair, verify_chain
from ..biquaternion_chain.generator import random_element
from ..quaternion import QuaternionSymbol, is_split
from ..witt_symbols import (WittVector, decompose_len3, decompose_len4, random_len3_instance,
                            random_len4_instance, solve_e_coords, verify_decomposition)


def _check(name, fn):
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported rather than raised
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return {"name": name, "ok": bool(ok), "detail": detail}


def run_selftest(F, seed: int, budget) -> list:
    rng = random.Random(seed)
    one_var = getattr(F, "kind", "") == "rational-1var"
    el = (lambda: random_element(F, rng, 2)) if one_var else (lambda: F.elem(rng.randrange(F.order)))
    checks = []

    def witt_law():
        a1, a2, b1, b2 = el(), el(), el(), el()
        s = WittVector((a1, a2)) + WittVector((b1, b2))
        e = solve_e_coords(a1, WittVector((b1, F.zero_element)))
        return s == WittVector((a1 + b1, a2 + b2 + a1 * b1)) and e[1] == a1 * b1, str(s)

    checks.append(_check("witt n=2 law", witt_law))

    def split_checks():
        t = F(F.var_names()[-1]) if one_var else F.one_element
        s0 = is_split(QuaternionSymbol(F.zero_element, t), budget)
        ok = bool(s0) and s0.verify(QuaternionSymbol(F.zero_element, t))
        if one_var:
            s1 = is_split(QuaternionSymbol(F.one_element, t), budget)
            ok = ok and not s1 and s1.verify(QuaternionSymbol(F.one_element, t))
        return ok, "[0, t) split; [1, t) nonsplit" if one_var else "[0, 1) split"

    checks.append(_check("split verdicts", split_checks))
    if not one_var:
        return checks

    def chain():
        A, B, _ = random_same_class_pair(seed, 3, F)
        cert = build_chain(A, B, budget)
        rep = verify_chain(cert.to_json(), budget)
        return rep.accepted, " ".join(cert.moves()) or "no moves"

    checks.append(_check("chain build and verify", chain))
    for name, gen, dec in (("decompose4", random_len4_instance, decompose_len4),
                           ("decompose3", random_len3_instance, decompose_len3)):
        def run(gen=gen, dec=dec):
            cert = dec(gen(seed, 2, 2, F), budget)
            rep = verify_decomposition(cert.to_json(), budget)
            return rep.accepted and cert.total_budget <= cert.bound, f"budget {cert.total_budget}"

        checks.append(_check(name, run))
    return checks


__all__ = ["run_selftest"]
