"""Argument parsing and output rendering."""

from __future__ import annotations

import argparse
import json
import sys

from .dispatch import DEFAULT_FIELD, EXIT_USAGE, CommandRequest, UsageError, dispatch


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", default=DEFAULT_FIELD, help='field descriptor, e.g. "GF(2)({t})"')
    p.add_argument("--budget-degree", type=int, default=None, help="degree bound for searches")
    p.add_argument("--budget-candidates", type=int, default=None, help="candidate bound for searches")
    p.add_argument("--seed", type=int, default=0, help="seed for instance generation")
    p.add_argument("--out", default=None, help="write the output document (or certificate) here")
    p.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")


def build_parser() -> argparse.ArgumentParser:
    root = _Parser(prog="biquat", description="Quaternion and symbol-algebra computations in characteristic 2.")
    sub = root.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def leaf(parent, name, help_, operands=True, random=False, length=False):
        p = parent.add_parser(name, help=help_)
        _common(p)
        if operands:
            p.add_argument("operands", nargs="*")
        if random:
            p.add_argument("--random", type=int, default=None, metavar="COMPLEXITY",
                           help="generate the input from --seed instead of reading operands")
        if length:
            p.add_argument("--length", type=int, default=2, help="Witt length of generated inputs")
        return p

    leaf(sub, "split", "decide whether [alpha, beta) is split")
    leaf(sub, "iso", "decide whether two symbols are isomorphic")
    leaf(sub, "invariants", "local invariants of a symbol over GF(2^k)(t)")
    leaf(sub, "albert-form", "Albert form of two symbols and an isotropic vector")
    chain = sub.add_parser("chain", help="chains of edge moves")
    csub = chain.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    leaf(csub, "build", "certificate joining ([a,b),[c,d)) to ([e,f),[g,h))", random=True)
    leaf(csub, "verify", "check a chain or decomposition certificate file")
    witt = sub.add_parser("witt", help="Witt vector arithmetic")
    wsub = witt.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    leaf(wsub, "add", "u + v")
    leaf(wsub, "neg", "-u")
    leaf(wsub, "solve-e", "(c; e_2; ...; e_n) from a2, c2 and n")
    leaf(sub, "decompose4", "decompose four degree-2^n symbols", random=True, length=True)
    leaf(sub, "decompose3", "decompose three degree-2^n symbols", random=True, length=True)
    leaf(sub, "selftest", "quick randomized self-check", operands=False)
    return root


def _request(ns) -> CommandRequest:
    sub = (ns.cmd,) + ((ns.sub,) if getattr(ns, "sub", None) else ())
    options = {}
    if getattr(ns, "random", None) is not None:
        options["random"] = ns.random
    if hasattr(ns, "length"):
        options["length"] = ns.length
    return CommandRequest(sub, ns.field, tuple(getattr(ns, "operands", ())), ns.budget_degree,
                          ns.budget_candidates, ns.seed, ns.out, ns.fmt, options)


def _text(doc: dict, indent: str = "") -> str:
    lines = []
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_text(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.append(f"{indent}  -")
                lines.append(_text(item, indent + "    "))
        else:
            lines.append(f"{indent}{key}: {json.dumps(value) if isinstance(value, list) else value}")
    return "\n".join(lines)


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True)
    return _text(doc)


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        req = _request(ns)
        code, doc = dispatch(req)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if req.out:
        payload = doc.get("certificate", doc)
        with open(req.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    print(render(doc, req.fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
