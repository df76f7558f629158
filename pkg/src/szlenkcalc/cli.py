"""Command-line surface.

Every library operation is reachable as a subcommand with canonical text
output, or machine-readable JSON via ``--format record``.  Output is
byte-identical across identical invocations.

Exit codes: 0 success, 1 domain or precondition error, 2 parse error,
3 size or overflow bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import hierarchy, szlenk, trees
from .errors import CalcError, ParseError, SizeBoundError
from .ordinals import (
    Ordinal,
    cofinality,
    fundamental_sequence,
    gamma_of,
    parse_ext_ordinal,
    parse_ordinal,
    render_ext_ordinal,
    render_ordinal,
)
from .rationals import parse_rational

FORMAT_ENV_VAR = "SZLENKCALC_FORMAT"


class _Result:
    def __init__(self, operation, inputs, value, audit=(), text=None):
        self.operation = operation
        self.inputs = inputs
        self.value = value
        self.audit = list(audit)
        self.text = text if text is not None else str(value)

    def record(self) -> dict:
        return {
            "operation": self.operation,
            "inputs": self.inputs,
            "value": self.value,
            "audit": [b.as_record() for b in self.audit],
        }


def _ord_text(x, style) -> str:
    return render_ext_ordinal(x, style)


def _bound_line(b, style) -> str:
    return (
        f"[{b.kind}] {b.subject} eps={b.epsilon}: "
        f"{render_ext_ordinal(b.value, style)} ({b.justification})"
    )


# -- handlers ----------------------------------------------------------------


def _cmd_ord(args, style) -> _Result:
    op = args.subop
    if op == "parse":
        value = _ord_text(parse_ordinal(args.expr), style)
        return _Result("ord.parse", {"expr": args.expr}, value)
    if op == "cmp":
        a, b = parse_ordinal(args.a), parse_ordinal(args.b)
        verdict = "lt" if a < b else ("gt" if a > b else "eq")
        return _Result("ord.cmp", {"a": _ord_text(a, style), "b": _ord_text(b, style)}, verdict)
    if op in ("add", "mul", "pow"):
        a, b = parse_ordinal(args.a), parse_ordinal(args.b)
        out = a + b if op == "add" else (a * b if op == "mul" else a ** b)
        inputs = {"a": _ord_text(a, style), "b": _ord_text(b, style)}
        return _Result(f"ord.{op}", inputs, _ord_text(out, style))
    if op == "divmod":
        a, b = parse_ordinal(args.a), parse_ordinal(args.b)
        q, r = divmod(a, b)
        inputs = {"a": _ord_text(a, style), "b": _ord_text(b, style)}
        value = {"quotient": _ord_text(q, style), "remainder": _ord_text(r, style)}
        text = f"quotient: {value['quotient']}\nremainder: {value['remainder']}"
        return _Result("ord.divmod", inputs, value, text=text)
    if op == "gamma":
        a = parse_ext_ordinal(args.a)
        return _Result("ord.gamma", {"a": _ord_text(a, style)}, _ord_text(gamma_of(a), style))
    if op == "cof":
        a = parse_ordinal(args.a)
        return _Result("ord.cof", {"a": _ord_text(a, style)}, _ord_text(cofinality(a), style))
    if op == "fundseq":
        a = parse_ordinal(args.a)
        value = _ord_text(fundamental_sequence(a, args.n), style)
        return _Result("ord.fundseq", {"a": _ord_text(a, style), "n": str(args.n)}, value)
    raise AssertionError(op)


def _cmd_tree(args, style) -> _Result:
    op = args.subop
    if op == "order":
        if args.family is not None:
            fam = trees.BnFamily(parse_ordinal(args.family))
            value = _ord_text(trees.tree_order(fam), style)
            return _Result("tree.order", {"family": args.family}, value)
        if args.tree is None:
            raise ParseError("tree order needs a tree or --family BOUND")
        t = trees.parse_tree(args.tree)
        return _Result(
            "tree.order", {"tree": trees.render_tree(t)}, _ord_text(trees.tree_order(t), style)
        )
    if op == "derive":
        t = trees.derive_tree(trees.parse_tree(args.tree))
        value = "empty" if t is None else trees.render_tree(t)
        return _Result("tree.derive", {"tree": args.tree}, value)
    if op in ("embed", "embed-brute"):
        s = trees.parse_tree(args.s)
        t = trees.parse_tree(args.t)
        inputs = {"s": trees.render_tree(s), "t": trees.render_tree(t)}
        if op == "embed-brute":
            found = trees.embed_exists_bruteforce(s, t)
            return _Result("tree.embed-brute", inputs, "true" if found else "false")
        mapping = trees.monotone_embed(s, t)
        if mapping is None:
            return _Result("tree.embed", inputs, "none")
        pairs = sorted(mapping.items())
        value = [["/".join(map(str, a)), "/".join(map(str, b))] for a, b in pairs]
        text = "\n".join(f"{a} -> {b}" for a, b in value)
        return _Result("tree.embed", inputs, value, text=text)
    if op == "oracle":
        value = _ord_text(trees.quotient_tree_order_oracle(args.m), style)
        return _Result("tree.oracle", {"m": str(args.m)}, value)
    raise AssertionError(op)


def _cmd_bn(args, style) -> _Result:
    node = trees.parse_bn_node(args.node)
    if args.subop == "member":
        ok = trees.bn_derived_member(node, parse_ordinal(args.bound), parse_ordinal(args.zeta))
        inputs = {"node": trees.render_bn_node(node), "bound": args.bound, "zeta": args.zeta}
        return _Result("bn.member", inputs, "true" if ok else "false")
    if args.subop == "block":
        g = trees.scale_block_index(node, parse_ordinal(args.xi), args.k)
        inputs = {"node": trees.render_bn_node(node), "xi": args.xi, "k": str(args.k)}
        return _Result("bn.block", inputs, _ord_text(g, style))
    raise AssertionError(args.subop)


def _cmd_cb(args, style) -> _Result:
    xi = parse_ordinal(args.xi)
    if args.subop == "deriv":
        zeta = parse_ordinal(args.zeta)
        stage = trees.cb_interval_derivative(xi, zeta)
        inputs = {"xi": _ord_text(xi, style), "zeta": _ord_text(zeta, style)}
        if stage.is_empty:
            return _Result("cb.deriv", inputs, "empty")
        value = {"level": _ord_text(stage.level, style), "count": _ord_text(stage.count, style)}
        text = f"level: {value['level']}\ncount: {value['count']}"
        return _Result("cb.deriv", inputs, value, text=text)
    if args.subop == "index":
        value = _ord_text(trees.cb_interval_index(xi), style)
        return _Result("cb.index", {"xi": _ord_text(xi, style)}, value)
    raise AssertionError(args.subop)


def _cmd_gnode(args, style) -> _Result:
    op = args.subop
    if op == "enum":
        xi = parse_ordinal(args.xi)
        nodes = hierarchy.enumerate_truncated(xi, args.budget)
        value = [hierarchy.render_gamma_node(t, style) for t in nodes]
        inputs = {"xi": _ord_text(xi, style), "budget": str(args.budget)}
        return _Result("gnode.enum", inputs, value, text="\n".join(value))
    xi = parse_ordinal(args.xi)
    node = hierarchy.parse_gamma_node(args.node)
    inputs = {"node": hierarchy.render_gamma_node(node, style), "xi": _ord_text(xi, style)}
    if op == "classify":
        return _Result("gnode.classify", inputs, hierarchy.classify(node, xi).value)
    if op == "decompose":
        d = hierarchy.decompose(node, xi, args.n)
        inputs["n"] = str(args.n)
        value = {
            "n": d.n,
            "m": d.m,
            "parts": [hierarchy.render_gamma_node(p, style) for p in d.parts],
            "iota": hierarchy.render_gamma_node(d.iota, style),
            "pi": hierarchy.render_gamma_node(d.pi, style) if d.pi else "[]",
        }
        text = "\n".join(
            [
                f"n: {value['n']}",
                f"m: {value['m']}",
                f"pi: {value['pi']}",
                f"iota: {value['iota']}",
                "parts: " + " ".join(value["parts"]),
            ]
        )
        return _Result("gnode.decompose", inputs, value, text=text)
    if op == "prob":
        return _Result("gnode.prob", inputs, str(hierarchy.probability(node, xi)))
    if op == "dist":
        dist = hierarchy.branch_distribution(node, xi)
        value = [[hierarchy.render_gamma_node(t, style), str(p)] for t, p in dist]
        text = "\n".join(f"{t} {p}" for t, p in value)
        return _Result("gnode.dist", inputs, value, text=text)
    raise AssertionError(op)


def _cmd_gnode_unit(args, style) -> _Result:
    xi = parse_ordinal(args.xi)
    t1 = hierarchy.parse_gamma_node(args.node1)
    t2 = hierarchy.parse_gamma_node(args.node2)
    ok = hierarchy.same_unit(t1, t2, xi, args.n)
    inputs = {
        "node1": hierarchy.render_gamma_node(t1, style),
        "node2": hierarchy.render_gamma_node(t2, style),
        "xi": _ord_text(xi, style),
        "n": str(args.n),
    }
    return _Result("gnode.unit", inputs, "true" if ok else "false")


def _cmd_szlenk(args, style) -> _Result:
    op = args.subop
    if op == "hull":
        a = parse_ext_ordinal(args.a)
        return _Result(
            "szlenk.hull", {"a": _ord_text(a, style)}, _ord_text(szlenk.sz_convex_hull(a), style)
        )
    if op == "ck":
        a = parse_ext_ordinal(args.a)
        return _Result(
            "szlenk.ck", {"i_k": _ord_text(a, style)}, _ord_text(szlenk.sz_ck(a), style)
        )
    if op == "c-interval":
        xi = parse_ordinal(args.xi)
        value = _ord_text(szlenk.sz_c_interval(xi), style)
        return _Result("szlenk.c-interval", {"xi": _ord_text(xi, style)}, value)
    if op in ("tensor", "ckx"):
        a = parse_ext_ordinal(args.a)
        b = parse_ext_ordinal(args.b)
        context = "tensor" if op == "tensor" else "ck_x"
        value = _ord_text(szlenk.sz_max_rule(context, a, b), style)
        inputs = {"a": _ord_text(a, style), "b": _ord_text(b, style)}
        return _Result(f"szlenk.{op}", inputs, value)
    if op == "union":
        eps = parse_rational(args.eps)
        bounds = [
            szlenk.DerivationBound(
                subject=f"input-{i}",
                epsilon=eps,
                kind=szlenk.UPPER,
                value=parse_ordinal(v),
                justification="given",
            )
            for i, v in enumerate(args.values, start=1)
        ]
        out = szlenk.sz_union_bound(bounds, epsilon=eps)
        inputs = {"eps": str(eps), "values": ",".join(args.values)}
        return _Result("szlenk.union", inputs, _ord_text(out.value, style), audit=[out])
    if op == "l35":
        params = szlenk.NormingParams(
            alpha=parse_ordinal(args.alpha), theta=parse_rational(args.theta)
        )
        b = szlenk.family_derivation_bound(
            args.n, args.k, parse_ordinal(args.gamma), parse_rational(args.eps), params
        )
        inputs = {
            "n": str(args.n),
            "k": str(args.k),
            "gamma": args.gamma,
            "eps": args.eps,
            "alpha": args.alpha,
            "theta": args.theta,
        }
        text = f"{b.kind}: {render_ext_ordinal(b.value, style)}"
        return _Result("szlenk.l35", inputs, _ord_text(b.value, style), audit=[b], text=text)
    if op in ("frak-g", "frak-s"):
        if op == "frak-g":
            params = szlenk.NormingParams(
                alpha=parse_ordinal(args.alpha), theta=parse_rational(args.theta)
            )
            value, audit = szlenk.sz_geometric_family(params, depth=args.depth)
            inputs = {"alpha": args.alpha, "theta": args.theta, "depth": str(args.depth)}
        else:
            params = szlenk.NormingParams(
                alpha=parse_ordinal(args.alpha),
                theta=parse_rational(args.theta),
                beta=parse_ordinal(args.beta),
            )
            value, audit = szlenk.sz_staircase_family(params, depth=args.depth)
            inputs = {
                "alpha": args.alpha,
                "beta": args.beta,
                "theta": args.theta,
                "depth": str(args.depth),
            }
        lines = [f"value: {render_ext_ordinal(value, style)}"]
        lines += ["  " + _bound_line(b, style) for b in audit]
        return _Result(
            f"szlenk.{op}", inputs, _ord_text(value, style), audit=audit, text="\n".join(lines)
        )
    if op == "attainable":
        x = parse_ext_ordinal(args.value)
        ok = szlenk.attainable(args.kind, x)
        inputs = {"kind": args.kind, "value": _ord_text(x, style)}
        return _Result("szlenk.attainable", inputs, "true" if ok else "false")
    raise AssertionError(op)


# -- argument parser ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "record"),
        default=None,
        help="output style (record = JSON); default from $" + FORMAT_ENV_VAR,
    )
    common.add_argument(
        "--style", choices=("ascii", "unicode"), default="ascii", help="ordinal rendering"
    )

    parser = argparse.ArgumentParser(
        prog="szlenkcalc",
        description="Exact calculator for ordinal and tree combinatorics "
        "behind Szlenk-index closed forms.",
    )
    top = parser.add_subparsers(dest="group", required=True)

    def group(name, help):
        return top.add_parser(name, help=help).add_subparsers(dest="subop", required=True)

    def leaf(sub, name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p_ord = group("ord", "ordinal arithmetic")
    sp = leaf(p_ord, "parse", help="canonicalize an expression")
    sp.add_argument("expr")
    for name in ("cmp", "add", "mul", "pow", "divmod"):
        sp = leaf(p_ord, name)
        sp.add_argument("a")
        sp.add_argument("b")
    sp = leaf(p_ord, "gamma", help="least gamma number above")
    sp.add_argument("a")
    sp = leaf(p_ord, "cof", help="cofinality: 0, 1 or w")
    sp.add_argument("a")
    sp = leaf(p_ord, "fundseq", help="canonical fundamental sequence entry")
    sp.add_argument("a")
    sp.add_argument("n", type=int)

    p_tree = group("tree", "finite trees")
    sp = leaf(p_tree, "order", help="derived-tree order (root counted)")
    sp.add_argument("tree", nargs="?")
    sp.add_argument("--family", help="symbolic family bound instead of an explicit tree")
    sp = leaf(p_tree, "derive", help="remove maximal nodes once")
    sp.add_argument("tree")
    for name in ("embed", "embed-brute"):
        sp = leaf(p_tree, name)
        sp.add_argument("s")
        sp.add_argument("t")
    sp = leaf(p_tree, "oracle", help="quotient-tree order for finite bound m")
    sp.add_argument("m", type=int)

    p_bn = group("bn", "bounded decreasing-sequence nodes")
    sp = leaf(p_bn, "member", help="membership in the zeta-th derived stage")
    sp.add_argument("node")
    sp.add_argument("--bound", required=True)
    sp.add_argument("--zeta", required=True)
    sp = leaf(p_bn, "block", help="scale-k partition block index")
    sp.add_argument("node")
    sp.add_argument("--xi", required=True)
    sp.add_argument("--k", type=int, required=True)

    p_cb = group("cb", "interval derivatives")
    sp = leaf(p_cb, "deriv")
    sp.add_argument("xi")
    sp.add_argument("zeta")
    sp = leaf(p_cb, "index")
    sp.add_argument("xi")

    p_g = group("gnode", "hierarchy nodes")
    sp = leaf(p_g, "classify")
    sp.add_argument("node")
    sp.add_argument("--xi", required=True)
    sp = leaf(p_g, "decompose")
    sp.add_argument("node")
    sp.add_argument("--xi", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp = leaf(p_g, "prob")
    sp.add_argument("node")
    sp.add_argument("--xi", required=True)
    sp = leaf(p_g, "dist")
    sp.add_argument("node")
    sp.add_argument("--xi", required=True)
    sp = leaf(p_g, "unit")
    sp.add_argument("node1")
    sp.add_argument("node2")
    sp.add_argument("--xi", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp = leaf(p_g, "enum")
    sp.add_argument("--xi", required=True)
    sp.add_argument("--budget", type=int, default=3)

    p_sz = group("szlenk", "index closed forms")
    for name in ("hull", "ck"):
        sp = leaf(p_sz, name)
        sp.add_argument("a")
    sp = leaf(p_sz, "c-interval")
    sp.add_argument("xi")
    for name in ("tensor", "ckx"):
        sp = leaf(p_sz, name)
        sp.add_argument("a")
        sp.add_argument("b")
    sp = leaf(p_sz, "union")
    sp.add_argument("values", nargs="+")
    sp.add_argument("--eps", required=True)
    sp = leaf(p_sz, "l35", help="per-family derivation bound")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--gamma", default="0")
    sp.add_argument("--eps", required=True)
    sp.add_argument("--alpha", default="0")
    sp.add_argument("--theta", default="1/2")
    sp = leaf(p_sz, "frak-g", help="geometric-family total index")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--theta", default="1/2")
    sp.add_argument("--depth", type=int, default=4)
    sp = leaf(p_sz, "frak-s", help="staircase-family total index")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--theta", default="1/2")
    sp.add_argument("--depth", type=int, default=4)
    sp = leaf(p_sz, "attainable")
    sp.add_argument("kind", choices=("sz", "i1", "iinf"))
    sp.add_argument("value")

    return parser


_HANDLERS = {
    "ord": _cmd_ord,
    "tree": _cmd_tree,
    "bn": _cmd_bn,
    "cb": _cmd_cb,
    "szlenk": _cmd_szlenk,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.format is None:
        args.format = os.environ.get(FORMAT_ENV_VAR, "text")
    try:
        if args.group == "gnode" and args.subop == "unit":
            result = _cmd_gnode_unit(args, args.style)
        elif args.group == "gnode":
            result = _cmd_gnode(args, args.style)
        else:
            result = _HANDLERS[args.group](args, args.style)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except (SizeBoundError, OverflowError) as e:
        print(f"size bound: {e}", file=sys.stderr)
        return 3
    except (CalcError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if args.format == "record":
        print(json.dumps(result.record(), ensure_ascii=False))
    else:
        print(result.text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
