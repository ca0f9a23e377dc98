"""Command-line front end.

One binary, subcommand style; every number printed is an exact rational
and the output ordering is canonical, so identical inputs give
byte-identical output.

Exit codes: 0 success, 1 axiom failure (verify), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .fock import (
    class_of,
    coaction_rho,
    fock_coproduct,
    fock_delta,
    pclass_of,
    pi_project,
)
from .graphs import Graph, canon_bound, graph_from_json, pgraph_partition
from .lincomb import LinComb
from .partitions import parse_partition
from .quasishuffle import (
    Monomial,
    Word,
    delta_word,
    kx_realize,
    kx_words_str,
    poly_str,
    preset_by_name,
    qsh_product,
)
from .species_bialgebra import (
    coproduct_delta_AB,
    coproduct_delta_AB_prime,
    delta_prime,
    extraction_contraction,
    full_delta,
    product_m,
)
from .verify import SUITE_NAMES, run_suites

SINGLE_OP_CAP = 8
VERIFY_CAP = 4


class InputError(Exception):
    pass


def _read_graph(path: str):
    """Graph argument: a file path, or inline JSON starting with '{'."""
    text = path if path.lstrip().startswith("{") else None
    if text is None:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read graph file {path!r}: {exc}")
    try:
        return graph_from_json(text)
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(f"bad graph JSON in {path!r}: {exc}")


def _parse_split(text: str):
    parts = text.split(";")
    if len(parts) != 2:
        raise InputError(f'bad split literal {text!r}: expected "A;B"')
    a = frozenset(x.strip() for x in parts[0].split(",") if x.strip())
    b = frozenset(x.strip() for x in parts[1].split(",") if x.strip())
    return a, b


def _parse_word(text: str, preset) -> Word:
    text = text.strip()
    if preset.generators == 0:
        if text in ("1", "[]"):
            return Word.empty()
        if text == "x":
            return Word((Monomial(()),))
        if text.startswith("x^"):
            try:
                n = int(text[2:])
            except ValueError:
                raise InputError(f"bad word literal {text!r}")
            if n < 0:
                raise InputError(f"bad word literal {text!r}")
            return Word((Monomial(()),) * n)
        raise InputError(f'bad word literal {text!r}: expected "x^n" or "1"')
    if not (text.startswith("[") and text.endswith("]")):
        raise InputError(f"bad word literal {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return Word.empty()
    letters = []
    for chunk in inner.split(","):
        exps = tuple(int(e) for e in chunk.strip().split("."))
        try:
            letters.append(preset.validate(Monomial(exps)))
        except ValueError as exc:
            raise InputError(str(exc))
    return Word(tuple(letters))


def _resolve_decorations(g: Graph, raw, preset, keys=None):
    """Exponent vectors from JSON -> monomials under the active preset."""
    if raw is None:
        raise InputError("this command needs a decorated graph")
    want = set(keys) if keys is not None else set(g.vertices)
    if set(raw) != want:
        raise InputError("decoration keys must cover exactly the label set")
    out = {}
    for v, exps in raw.items():
        try:
            out[v] = preset.validate(Monomial(tuple(exps)))
        except ValueError as exc:
            raise InputError(str(exc))
    return out


def _check_bound(n: int, cap: int = SINGLE_OP_CAP):
    limit = min(canon_bound(), cap)
    if n > limit:
        raise InputError(f"input size {n} exceeds the bound {limit}")


def _emit(lc: LinComb, fmt: str) -> str:
    if fmt == "json":
        terms = [
            {
                "coeff": str(c),
                "term": [str(x) for x in b] if isinstance(b, tuple) else str(b),
            }
            for b, c in lc.items()
        ]
        return json.dumps({"terms": terms}, ensure_ascii=False)
    return str(lc)


def _cmd_delta(args, fmt):
    g, _ = _read_graph(args.graph)
    _check_bound(len(g.vertices))
    if args.partition:
        try:
            p = parse_partition(args.partition)
        except ValueError as exc:
            raise InputError(str(exc))
        try:
            out = extraction_contraction(g, p)
        except ValueError as exc:
            raise InputError(str(exc))
    else:
        out = full_delta(g)
    return _emit(out, fmt)


def _cmd_delta_prime(args, fmt):
    g, _ = _read_graph(args.graph)
    try:
        ground = pgraph_partition(g).ground
    except ValueError as exc:
        raise InputError(str(exc))
    _check_bound(len(ground))
    return _emit(delta_prime(g), fmt)


def _cmd_coproduct(args, fmt):
    g, _ = _read_graph(args.graph)
    partitioned = any("," in v for v in g.vertices)
    fn = coproduct_delta_AB_prime if partitioned else coproduct_delta_AB
    n = len(pgraph_partition(g).ground) if partitioned else len(g.vertices)
    _check_bound(n)
    if not args.split:
        raise InputError('coproduct needs --split "A;B"')
    a, b = _parse_split(args.split)
    try:
        out = fn(g, a, b)
    except ValueError as exc:
        raise InputError(str(exc))
    return _emit(out, fmt)


def _cmd_product(args, fmt):
    graphs = [_read_graph(p)[0] for p in args.graph]
    if not graphs:
        raise InputError("product needs at least one --graph")
    acc = LinComb.single(graphs[0])
    try:
        for g in graphs[1:]:
            acc = product_m(acc, LinComb.single(g))
    except ValueError as exc:
        raise InputError(str(exc))
    return _emit(acc, fmt)


def _cmd_qsh(args, fmt):
    preset = _preset(args)
    w1 = _parse_word(args.left, preset)
    w2 = _parse_word(args.right, preset)
    out = qsh_product(LinComb.single(w1), LinComb.single(w2))
    if preset.generators == 0 and fmt == "text":
        return kx_words_str(out)
    return _emit(out, fmt)


def _cmd_delta_t(args, fmt):
    preset = _preset(args)
    w = _parse_word(args.word, preset)
    return _emit(delta_word(w), fmt)


def _cmd_realize_kx(args, fmt):
    preset = _preset(args)
    if preset.generators != 0:
        raise InputError("realize-kx requires --V k")
    w = _parse_word(args.word, preset)
    poly = kx_realize(LinComb.single(w))
    if fmt == "json":
        return json.dumps({str(d): str(c) for d, c in poly.items()})
    return poly_str(poly)


def _decorated_class(args):
    preset = _preset(args)
    g, raw = _read_graph(args.graph)
    decs = _resolve_decorations(g, raw, preset)
    _check_bound(len(g.vertices))
    try:
        return class_of(g, decs)
    except ValueError as exc:
        raise InputError(str(exc))


def _cmd_fock_delta(args, fmt):
    return _emit(fock_delta(_decorated_class(args)), fmt)


def _cmd_fock_coproduct(args, fmt):
    return _emit(fock_coproduct(_decorated_class(args)), fmt)


def _cmd_rho(args, fmt):
    return _emit(coaction_rho(_decorated_class(args)), fmt)


def _cmd_pi(args, fmt):
    preset = _preset(args)
    g, raw = _read_graph(args.graph)
    try:
        ground = pgraph_partition(g).ground
    except ValueError as exc:
        raise InputError(str(exc))
    decs = _resolve_decorations(g, raw, preset, keys=ground)
    _check_bound(len(ground))
    try:
        dp = pclass_of(g, decs)
    except ValueError as exc:
        raise InputError(str(exc))
    return _emit(pi_project(dp), fmt)


def _cmd_verify(args, fmt):
    max_n = args.max_n if args.max_n is not None else 3
    if max_n > VERIFY_CAP:
        raise InputError(f"verify is capped at --max-n {VERIFY_CAP}")
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    rows = run_suites(names, max_n)
    ok = all(r.passed for r in rows)
    if fmt == "json":
        out = json.dumps(
            {
                "results": [
                    {
                        "axiom": r.axiom,
                        "scope": ",".join(r.x),
                        "cases": r.cases,
                        "passed": r.passed,
                        "counterexample": r.counterexample,
                    }
                    for r in rows
                ],
                "ok": ok,
            },
            ensure_ascii=False,
        )
    else:
        out = "\n".join(r.row() for r in rows)
    return out, 0 if ok else 1


def _preset(args):
    try:
        return preset_by_name(args.V)
    except ValueError as exc:
        raise InputError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="species-hopf",
        description="Exact twisted-bialgebra operations on graphs, set "
        "compositions, and quasishuffle words.",
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", dest="format"
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(verb, **kwargs):
        p = sub.add_parser(verb, **kwargs)
        return p

    p = add("delta", help="extraction-contraction coproduct of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--partition", help='partition literal like "{a,b|c}"')

    p = add("delta-prime", help="δ' of a partitioned graph")
    p.add_argument("--graph", required=True)

    p = add("coproduct", help="Δ_{A,B} (or Δ'_{A,B} on block-label graphs)")
    p.add_argument("--graph", required=True)
    p.add_argument("--split", required=True, help='split literal "A;B"')

    p = add("product", help="disjoint union of graphs")
    p.add_argument("--graph", action="append", required=True)

    p = add("qsh", help="quasishuffle product of two words")
    p.add_argument("--V", default="qsym")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("delta-t", help="interval-fusion coproduct of a word")
    p.add_argument("--V", default="qsym")
    p.add_argument("--word", required=True)

    p = add("realize-kx", help="realize a K-preset word as a polynomial")
    p.add_argument("--V", default="k")
    p.add_argument("--word", required=True)

    for verb in ("fock-delta", "fock-coproduct", "rho"):
        p = add(verb, help=f"{verb} of a decorated graph class")
        p.add_argument("--graph", required=True)
        p.add_argument("--V", default="free:2")

    p = add("pi", help="project a decorated partitioned class")
    p.add_argument("--graph", required=True)
    p.add_argument("--V", default="free:2")

    p = add("verify", help="run axiom suites")
    p.add_argument("--suite", default="all", choices=("all",) + SUITE_NAMES)
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    return parser


_HANDLERS = {
    "delta": _cmd_delta,
    "delta-prime": _cmd_delta_prime,
    "coproduct": _cmd_coproduct,
    "product": _cmd_product,
    "qsh": _cmd_qsh,
    "delta-t": _cmd_delta_t,
    "realize-kx": _cmd_realize_kx,
    "fock-delta": _cmd_fock_delta,
    "fock-coproduct": _cmd_fock_coproduct,
    "rho": _cmd_rho,
    "pi": _cmd_pi,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = _HANDLERS[args.verb](args, args.format)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, tuple):
        out, code = result
    else:
        out, code = result, 0
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
