"""The recursive hierarchy of B-trees realizing every gamma number as an
order, together with its exact branch-probability weights.

For an index xi the family lives on [0, w^xi) and has order w^xi.  The
recursion:

  index 0:          the single node (0)
  index xi + 1:     union over n >= 1 of the n-level stage, whose nodes
                    concatenate blocks (w^xi*(n-1) + t1) ... (w^xi*(n-m) + tm)
                    with t1 .. t(m-1) maximal members of the index-xi family
                    and tm any member
  limit index xi:   union over zeta < xi of w^zeta + (index zeta + 1 family),
                    a totally incomparable union

Probabilities: the single node at index 0 has weight 1; at a successor
index a node on the n-level stage weighs 1/n times the weight of its last
block; at a limit the unique branch decides.  Every maximal branch then
carries an exact probability distribution over its nonempty prefixes.

Nodes are plain tuples of ordinals; the index is passed alongside.  All
functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from random import Random
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import NotMaximalError, NotMemberError, ParseError, SizeBoundError
from .ordinals import (
    ONE,
    ZERO,
    Ordinal,
    _coerce,
    fundamental_sequence,
    left_subtract,
    omega_pow,
    parse_ordinal,
    render_ordinal,
)
from .trees import FiniteTree

GammaNode = Tuple[Ordinal, ...]

ENUMERATION_NODE_CAP = 50_000


class Membership(Enum):
    NOT_MEMBER = "not-member"
    MEMBER = "member"
    MAXIMAL = "maximal"


@dataclass(frozen=True)
class Decomposition:
    """Unique block structure of a node on the n-level stage over index xi.

    parts are the blocks translated back into the index-xi family; pi is the
    untranslated prefix covering the first m - 1 blocks (empty for m = 1).
    """

    n: int
    m: int
    parts: Tuple[GammaNode, ...]
    iota: GammaNode
    pi: GammaNode


def _normalize_node(t) -> Optional[GammaNode]:
    if not isinstance(t, (tuple, list)) or not t:
        return None
    out = []
    for e in t:
        o = _coerce(e)
        if o is None:
            return None
        out.append(o)
    return tuple(out)


def _split_blocks(t: GammaNode, base: Ordinal):
    """Split a node into its blocks relative to w^base.

    Returns (n, blocks) with blocks translated down into the index-``base``
    family, or None when the quotient tags do not form the required pattern
    (first tag n-1, constant within a block, dropping by exactly one at each
    block boundary).
    """
    w_base = omega_pow(base)
    tags = []
    for e in t:
        q = e // w_base
        if not q.is_finite:
            return None
        tags.append(int(q))
    n = tags[0] + 1
    blocks: List[List[Ordinal]] = [[]]
    expected = tags[0]
    for e, tag in zip(t, tags):
        if tag == expected:
            blocks[-1].append(e)
        elif tag == expected - 1:
            blocks.append([e])
            expected = tag
        else:
            return None
    translated = []
    offset_tag = n - 1
    for block in blocks:
        off = w_base * offset_tag
        if offset_tag:
            translated.append(tuple(left_subtract(off, e) for e in block))
        else:
            translated.append(tuple(block))
        offset_tag -= 1
    return n, translated


def classify(t, xi) -> Membership:
    """Membership of a node in the family of the given index."""
    node = _normalize_node(t)
    xi = _coerce(xi)
    if node is None or xi is None:
        return Membership.NOT_MEMBER
    if xi.is_zero:
        return Membership.MAXIMAL if node == (ZERO,) else Membership.NOT_MEMBER
    if xi.is_successor:
        eta = xi.predecessor()
        split = _split_blocks(node, eta)
        if split is None:
            return Membership.NOT_MEMBER
        n, blocks = split
        for block in blocks[:-1]:
            if classify(block, eta) is not Membership.MAXIMAL:
                return Membership.NOT_MEMBER
        last = classify(blocks[-1], eta)
        if last is Membership.NOT_MEMBER:
            return Membership.NOT_MEMBER
        if len(blocks) == n and last is Membership.MAXIMAL:
            return Membership.MAXIMAL
        return Membership.MEMBER
    # limit index: the leading exponent of the first entry selects the branch
    first = node[0]
    if first.is_zero:
        return Membership.NOT_MEMBER
    zeta = first.leading_exponent
    if not zeta < xi:
        return Membership.NOT_MEMBER
    w_zeta = omega_pow(zeta)
    translated = []
    for e in node:
        if e.is_zero or e.leading_exponent != zeta:
            return Membership.NOT_MEMBER
        translated.append(left_subtract(w_zeta, e))
    return classify(tuple(translated), zeta + ONE)


def decompose(t, xi, n: int) -> Decomposition:
    """The unique block decomposition of a node on the n-level stage over xi."""
    node = _normalize_node(t)
    xi = _coerce(xi)
    if node is None or xi is None:
        raise NotMemberError("malformed node")
    split = _split_blocks(node, xi)
    if split is None or split[0] != n:
        raise NotMemberError(
            f"node {render_gamma_node(node)} is not on the n={n} stage over "
            f"index {render_ordinal(xi)}"
        )
    blocks = split[1]
    for block in blocks[:-1]:
        if classify(block, xi) is not Membership.MAXIMAL:
            raise NotMemberError("a non-final block is not a maximal member")
    if classify(blocks[-1], xi) is Membership.NOT_MEMBER:
        raise NotMemberError("final block is not a member")
    m = len(blocks)
    prefix_len = sum(len(b) for b in blocks[:-1])
    return Decomposition(
        n=n,
        m=m,
        parts=tuple(blocks),
        iota=blocks[-1],
        pi=node[:prefix_len],
    )


def level_of(t, xi, n: int) -> int:
    """The level m of a node on the n-level stage over xi."""
    return decompose(t, xi, n).m


def stage_of(t, xi) -> int:
    """The unique n with the node on the n-level stage over xi."""
    node = _normalize_node(t)
    xi = _coerce(xi)
    if node is None or xi is None:
        raise NotMemberError("malformed node")
    split = _split_blocks(node, xi)
    if split is None:
        raise NotMemberError("node lies on no stage over the given index")
    n = split[0]
    if classify(node, xi + ONE) is Membership.NOT_MEMBER:
        raise NotMemberError("node lies on no stage over the given index")
    return n


def probability(t, xi) -> Fraction:
    """Exact branch weight of a member node at the given index."""
    node = _normalize_node(t)
    xi = _coerce(xi)
    if node is None or xi is None:
        raise NotMemberError("malformed node")
    if classify(node, xi) is Membership.NOT_MEMBER:
        raise NotMemberError(
            f"{render_gamma_node(node)} is not a member at index {render_ordinal(xi)}"
        )
    return _probability(node, xi)


def _probability(node: GammaNode, xi: Ordinal) -> Fraction:
    if xi.is_zero:
        return Fraction(1)
    if xi.is_successor:
        eta = xi.predecessor()
        n, blocks = _split_blocks(node, eta)
        return Fraction(1, n) * _probability(blocks[-1], eta)
    zeta = node[0].leading_exponent
    w_zeta = omega_pow(zeta)
    translated = tuple(left_subtract(w_zeta, e) for e in node)
    return _probability(translated, zeta + ONE)


def branch_distribution(t, xi) -> List[Tuple[GammaNode, Fraction]]:
    """Weights of all nonempty prefixes of a maximal node; they sum to 1."""
    node = _normalize_node(t)
    xi = _coerce(xi)
    if node is None or xi is None or classify(node, xi) is not Membership.MAXIMAL:
        raise NotMaximalError("branch distributions are defined for maximal nodes")
    weights = _branch_weights(node, xi)
    return [(node[:i], p) for i, p in enumerate(weights, start=1)]


def _branch_weights(node: GammaNode, xi: Ordinal) -> List[Fraction]:
    """Weights of all prefixes in one pass (a prefix ending inside block i
    has the weight of its partial block, scaled by the stage count)."""
    if xi.is_zero:
        return [Fraction(1)]
    if xi.is_successor:
        eta = xi.predecessor()
        n, blocks = _split_blocks(node, eta)
        scale = Fraction(1, n)
        out: List[Fraction] = []
        for block in blocks:
            out.extend(scale * p for p in _branch_weights(block, eta))
        return out
    zeta = node[0].leading_exponent
    w_zeta = omega_pow(zeta)
    translated = tuple(left_subtract(w_zeta, e) for e in node)
    return _branch_weights(translated, zeta + ONE)


def same_unit(t1, t2, xi, n: int) -> bool:
    """Whether two nodes on the n-level stage share their level-(m-1) prefix."""
    return decompose(t1, xi, n).pi == decompose(t2, xi, n).pi


# -- enumeration and sampling ------------------------------------------------


def enumerate_truncated(xi, budget: int = 3) -> List[GammaNode]:
    """All members whose stage indices and limit-branch choices stay within
    the budget, in a deterministic order.

    At a limit index only the branches selected by the canonical fundamental
    sequence (positions 1..budget) are expanded; a node's branch is readable
    from the leading exponent of its first entry.
    """
    xi = _coerce(xi)
    if xi is None:
        raise TypeError("enumerate_truncated expects an ordinal index")
    if not isinstance(budget, int) or budget < 1:
        raise ValueError("budget must be a positive integer")
    total, _ = _window_counts(xi, budget)
    if total > ENUMERATION_NODE_CAP:
        raise SizeBoundError(
            f"window holds {total} nodes, above the cap of {ENUMERATION_NODE_CAP}; "
            "lower the budget"
        )
    members, _ = _window(xi, budget)
    return members


def _window_counts(xi: Ordinal, budget: int) -> Tuple[int, int]:
    """(member, maximal) counts of the truncated window, without building it."""
    if xi.is_zero:
        return 1, 1
    if xi.is_successor:
        mem, mx = _window_counts(xi.predecessor(), budget)
        members = sum(mx ** (m - 1) * mem for n in range(1, budget + 1) for m in range(1, n + 1))
        maximals = sum(mx ** n for n in range(1, budget + 1))
        return members, maximals
    members = maximals = 0
    for j in range(1, budget + 1):
        mem, mx = _window_counts(fundamental_sequence(xi, j) + ONE, budget)
        members += mem
        maximals += mx
    return members, maximals


def _window(xi: Ordinal, budget: int):
    if xi.is_zero:
        node = (ZERO,)
        return [node], [node]
    if xi.is_successor:
        eta = xi.predecessor()
        mem_eta, max_eta = _window(eta, budget)
        max_set = set(max_eta)
        w_eta = omega_pow(eta)
        members: List[GammaNode] = []
        maximals: List[GammaNode] = []
        for n in range(1, budget + 1):
            offsets = [w_eta * (n - i) if n - i else None for i in range(1, n + 1)]
            for m in range(1, n + 1):
                pools = [max_eta] * (m - 1) + [mem_eta]
                for combo in product(*pools):
                    node: GammaNode = ()
                    for off, block in zip(offsets, combo):
                        if off is not None:
                            node += tuple(off + e for e in block)
                        else:
                            node += block
                    members.append(node)
                    if m == n and combo[-1] in max_set:
                        maximals.append(node)
        return members, maximals
    members = []
    maximals = []
    for j in range(1, budget + 1):
        zeta = fundamental_sequence(xi, j)
        w_zeta = omega_pow(zeta)
        mem, mx = _window(zeta + ONE, budget)
        mx_set = set(mx)
        for node in mem:
            shifted = tuple(w_zeta + e for e in node)
            members.append(shifted)
            if node in mx_set:
                maximals.append(shifted)
    return members, maximals


def random_maximal_node(xi, rng: Random, level_cap: int = 3) -> GammaNode:
    """A uniformly improvised maximal node: random stage index at every
    successor step, random fundamental-sequence branch at every limit.

    Expected length multiplies by up to level_cap at every successor step
    of the descent, so keep the cap small for indices far above w."""
    xi = _coerce(xi)
    if xi.is_zero:
        return (ZERO,)
    if xi.is_successor:
        eta = xi.predecessor()
        n = rng.randint(1, level_cap)
        w_eta = omega_pow(eta)
        node: GammaNode = ()
        for i in range(1, n + 1):
            block = random_maximal_node(eta, rng, level_cap)
            if n - i:
                off = w_eta * (n - i)
                node += tuple(off + e for e in block)
            else:
                node += block
        return node
    zeta = fundamental_sequence(xi, rng.randint(1, level_cap))
    w_zeta = omega_pow(zeta)
    inner = random_maximal_node(zeta + ONE, rng, level_cap)
    return tuple(w_zeta + e for e in inner)


def truncation_tree(nodes: Sequence[GammaNode]) -> FiniteTree:
    """Explicit tree of the given sequence set plus a root, children ordered
    by their ordinal labels."""
    table: Dict = {}
    for node in nodes:
        level = table
        for e in node:
            level = level.setdefault(e, {})

    def build(level: Dict) -> FiniteTree:
        return FiniteTree(tuple(build(level[k]) for k in sorted(level)))

    return build(table)


# -- node text ---------------------------------------------------------------


def parse_gamma_node(text: str) -> GammaNode:
    """Parse '[expr, expr, ...]' with entries in the ordinal grammar."""
    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ParseError("expected '[' ... ']'")
    inner = stripped[1:-1].strip()
    if not inner:
        raise ParseError("node must have at least one entry")
    return tuple(parse_ordinal(chunk) for chunk in inner.split(","))


def render_gamma_node(node: GammaNode, style: str = "ascii") -> str:
    return "[" + ", ".join(render_ordinal(e, style) for e in node) + "]"
