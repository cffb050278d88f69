"""Command line for enumeration, orders, products, fibers and verification."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CapExceeded, ParseError, PermfacesError, SizeMismatch
from .gamma import fiber, gamma, max_word, min_word
from .hasse import HasseDiagram
from .order import HARD_CAP, OrderKind, build_order, check_cap, default_cap
from .pword import enumerate_rank, enumerate_words, parse
from .tree import build_tree_order, enumerate_trees, parse_tree, to_dot
from .trialg import Op, pword_product, tree_product
from .verify import SUITES, run_suite

SWEEP_CAP = 5
FREENESS_CAP = 4


def _parse(kind: str, text: str):
    return parse(text) if kind == "pword" else parse_tree(text)


def _diagram(kind: str, order: str, n: int, cap: int) -> HasseDiagram:
    k = OrderKind(order)
    return build_order(n, k, cap) if kind == "pword" else build_tree_order(n, k, cap)


def cmd_enumerate(args, out) -> int:
    check_cap(args.n, args.cap)
    if args.kind == "pword":
        items = enumerate_rank(args.n, args.rank) if args.rank else enumerate_words(args.n)
    else:
        items = enumerate_trees(args.n, args.cap)
    if args.format == "json":
        out.write(json.dumps({"count": len(items), "elements": [str(x) for x in items]}) + "\n")
    else:
        for x in items:
            out.write(f"{x}\n")
        out.write(f"count={len(items)}\n")
    return 0


def cmd_order(args, out) -> int:
    a, b = _parse(args.kind, args.a), _parse(args.kind, args.b)
    if a.degree != b.degree:
        raise SizeMismatch(f"degrees {a.degree} and {b.degree} differ")
    d = _diagram(args.kind, args.order, a.degree, args.cap)
    res = {"leq": d.leq(a, b)}
    if args.interval:
        res["interval"] = [str(x) for x in d.interval(a, b)]
    out.write(json.dumps(res) + "\n")
    return 0


def hasse_dot(d: HasseDiagram, name: str) -> str:
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for i, e in enumerate(d.elements):
        lines.append(f'  n{i} [label="{e}"];')
    for i, j in sorted(d.covers):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_json(d: HasseDiagram) -> str:
    return json.dumps(
        {
            "elements": [str(e) for e in d.elements],
            "covers": [[str(d.elements[i]), str(d.elements[j])] for i, j in sorted(d.covers)],
        }
    ) + "\n"


def cmd_hasse(args, out) -> int:
    d = _diagram(args.kind, args.order, args.n, args.cap)
    if args.format == "json":
        out.write(hasse_json(d))
    else:
        out.write(hasse_dot(d, f"{args.kind}-{args.order}-{args.n}"))
    return 0


def cmd_product(args, out) -> int:
    x, y = _parse(args.basis, args.x), _parse(args.basis, args.y)
    op = Op(args.op)
    if args.basis == "pword":
        res = pword_product(x, y, op, args.method or "shuffle", args.cap)
    else:
        res = tree_product(x, y, op, args.method or "recursion", args.cap)
    out.write(res.to_json() + "\n")
    return 0


def cmd_gamma(args, out) -> int:
    out.write(f"{gamma(parse(args.word))}\n")
    return 0


def cmd_fiber(args, out) -> int:
    t = parse_tree(args.tree)
    lo, hi = min_word(t), max_word(t)
    words = fiber(t, cap=args.cap)
    if args.format == "json":
        out.write(json.dumps({"tree": str(t), "min": str(lo), "max": str(hi),
                              "fiber": [str(w) for w in words]}) + "\n")
    else:
        for w in words:
            marks = [m for m, v in (("min", lo), ("max", hi)) if v == w]
            out.write(f"{w}" + (f"  <- {','.join(marks)}" if marks else "") + "\n")
        out.write(f"count={len(words)}\n")
    return 0


def cmd_minmax(args, out) -> int:
    t = parse_tree(args.tree)
    out.write(f"min={min_word(t)}\nmax={max_word(t)}\n")
    return 0


def cmd_render(args, out) -> int:
    out.write(to_dot(parse_tree(args.tree)))
    return 0


def cmd_verify(args, out) -> int:
    cap = args.cap if args.cap_given else (FREENESS_CAP if args.suite == "freeness" else SWEEP_CAP)
    check_cap(cap, HARD_CAP)
    reports = run_suite(args.suite, cap, literal=args.literal)
    for r in reports:
        out.write(r.line() + "\n")
        for note in r.notes:
            out.write(f"    {note}\n")
    failed = sum(not r.ok for r in reports)
    out.write(f"{len(reports) - failed} passed, {failed} failed\n")
    return 1 if failed else 0


class _Parser(argparse.ArgumentParser):
    # usage errors get the parse exit code so that 2 stays reserved for caps
    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="permfaces", description=__doc__)
    p.add_argument("--cap", type=int, default=None, help="degree cap (default $PERMFACES_CAP or 6, at most 8)")
    sub = p.add_subparsers(dest="verb", required=True)

    e = sub.add_parser("enumerate", help="list packed words or trees of a degree")
    e.add_argument("kind", choices=["pword", "tree"])
    e.add_argument("n", type=int)
    e.add_argument("--rank", type=int, default=None)
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.set_defaults(func=cmd_enumerate)

    o = sub.add_parser("order", help="compare two elements")
    o.add_argument("kind", choices=["pword", "tree"])
    o.add_argument("order", choices=[k.value for k in OrderKind])
    o.add_argument("a")
    o.add_argument("b")
    o.add_argument("--interval", action="store_true")
    o.set_defaults(func=cmd_order)

    h = sub.add_parser("hasse", help="cover relations of an order, lower -> upper")
    h.add_argument("kind", choices=["pword", "tree"])
    h.add_argument("order", choices=[k.value for k in OrderKind])
    h.add_argument("n", type=int)
    h.add_argument("--format", choices=["dot", "json"], default="dot")
    h.set_defaults(func=cmd_hasse)

    pr = sub.add_parser("product", help="trialgebra product as a JSON linear combination")
    pr.add_argument("basis", choices=["pword", "tree"])
    pr.add_argument("op", choices=[o.value for o in Op])
    pr.add_argument("x")
    pr.add_argument("y")
    pr.add_argument("--method", choices=["shuffle", "interval", "fiber", "recursion"], default=None)
    pr.set_defaults(func=cmd_product)

    g = sub.add_parser("gamma", help="tree of a packed word")
    g.add_argument("word")
    g.set_defaults(func=cmd_gamma)

    f = sub.add_parser("fiber", help="packed words over a tree")
    f.add_argument("tree")
    f.add_argument("--format", choices=["text", "json"], default="text")
    f.set_defaults(func=cmd_fiber)

    m = sub.add_parser("minmax", help="endpoints of the fiber over a tree")
    m.add_argument("tree")
    m.set_defaults(func=cmd_minmax)

    r = sub.add_parser("render", help="Graphviz drawing of one tree")
    r.add_argument("tree")
    r.set_defaults(func=cmd_render)

    v = sub.add_parser("verify", help="run verification sweeps")
    v.add_argument("suite", choices=list(SUITES) + ["all"])
    v.add_argument("--cap", dest="verify_cap", type=int, default=None)
    v.add_argument("--literal", action="store_true",
                   help="also check statements known to fail as printed")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        cap = getattr(args, "verify_cap", None)
        if cap is None:
            cap = args.cap
        args.cap_given = cap is not None
        args.cap = default_cap() if cap is None else cap
        if args.cap > HARD_CAP:
            raise CapExceeded(f"cap {args.cap} is above the hard ceiling {HARD_CAP}")
        if args.verb == "product" and args.method in ("fiber", "recursion") and args.basis == "pword":
            raise ParseError(f"method {args.method} is for trees")
        if args.verb == "product" and args.method in ("shuffle",) and args.basis == "tree":
            raise ParseError("method shuffle is for packed words")
        return args.func(args, out)
    except PermfacesError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
