"""Finite rooted trees, derived-tree order, monotone embeddings, and the
symbolic Cantor-Bendixson calculus for ordinal intervals and bounded
decreasing-sequence families.

A ``FiniteTree`` is an explicit ordered tree; node identity in maps is by
index path from the root (the root itself is the empty path and is excluded
from embedding domains).  Child order is representational only and exists
to make renders and searches deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from .errors import InvariantViolationError, ParseError, SizeBoundError
from .ordinals import (
    ONE,
    ZERO,
    ExtOrdinal,
    Ordinal,
    _coerce,
    omega_pow,
    parse_ordinal,
    render_ordinal,
)

BRUTE_FORCE_NODE_BOUND = 12

Path = Tuple[int, ...]


@dataclass(frozen=True)
class FiniteTree:
    children: Tuple["FiniteTree", ...] = ()

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)

    def height(self) -> int:
        """Longest chain length counting this node; equals the derived-tree order."""
        return 1 + max((c.height() for c in self.children), default=0)

    def subtree(self, path: Path) -> "FiniteTree":
        node = self
        for i in path:
            node = node.children[i]
        return node

    def paths(self) -> List[Path]:
        """All node paths in preorder, root first."""
        out: List[Path] = []

        def walk(node: "FiniteTree", path: Path):
            out.append(path)
            for i, c in enumerate(node.children):
                walk(c, path + (i,))

        walk(self, ())
        return out


def chain_tree(length: int) -> FiniteTree:
    node = FiniteTree()
    for _ in range(length - 1):
        node = FiniteTree((node,))
    return node


def parse_tree(text: str) -> FiniteTree:
    """Parse '(...)' nesting, or a line-per-path format like 'a/b/c'."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty tree text")
    if stripped.startswith("("):
        return _parse_parens(stripped)
    return _parse_paths(stripped)


def _parse_parens(text: str) -> FiniteTree:
    pos = 0

    def node() -> FiniteTree:
        nonlocal pos
        if pos >= len(text) or text[pos] != "(":
            raise ParseError("expected '('", pos)
        pos += 1
        kids = []
        while pos < len(text) and text[pos] == "(":
            kids.append(node())
        if pos >= len(text) or text[pos] != ")":
            raise ParseError("expected ')'", pos)
        pos += 1
        return FiniteTree(tuple(kids))

    root = node()
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if pos != len(text):
        raise ParseError("trailing text after tree", pos)
    return root


def _parse_paths(text: str) -> FiniteTree:
    # each line is a /-separated label path below an implicit root; children
    # are ordered by label for determinism
    table: dict = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        level = table
        for label in line.split("/"):
            if not label:
                raise ParseError(f"empty path segment in {line!r}")
            level = level.setdefault(label, {})

    def build(level: dict) -> FiniteTree:
        return FiniteTree(tuple(build(level[k]) for k in sorted(level)))

    return build(table)


def render_tree(tree: FiniteTree) -> str:
    return "(" + "".join(render_tree(c) for c in tree.children) + ")"


def derive_tree(tree: Optional[FiniteTree]) -> Optional[FiniteTree]:
    """Remove all maximal (leaf) nodes; None stands for the empty tree."""
    if tree is None or not tree.children:
        return None
    kids = []
    for c in tree.children:
        d = derive_tree(c)
        if d is not None:
            kids.append(d)
    return FiniteTree(tuple(kids))


@dataclass(frozen=True)
class BnFamily:
    """Symbolic stand-in for the full decreasing-sequence tree with ordinal
    bound ``bound``: every node carries an integer tag giving it infinitely
    many siblings, so derived tree and Cantor-Bendixson derivative agree."""

    bound: Ordinal

    def tree_order(self) -> Ordinal:
        """Order with the root counted."""
        return self.bound + ONE

    def btree_order(self) -> Ordinal:
        """Order of the node set without the root."""
        return self.bound


def tree_order(subject) -> ExtOrdinal:
    """Least stage at which iterated leaf removal empties the tree.

    Accepts an explicit FiniteTree (finite answer, root counted) or a
    BnFamily descriptor (closed form bound + 1).
    """
    if isinstance(subject, BnFamily):
        return subject.tree_order()
    if subject is None:
        return ZERO
    if isinstance(subject, FiniteTree):
        return Ordinal(subject.height())
    raise TypeError("tree_order expects a FiniteTree or BnFamily")


def monotone_embed(small: FiniteTree, big: FiniteTree) -> Optional[Dict[Path, Path]]:
    """A monotone, length-preserving map of non-root nodes, or None.

    A map exists exactly when tree_order(small) <= tree_order(big); it is
    built by matching each child against the first child of sufficient
    order, recursively.
    """
    if small.height() > big.height():
        return None
    mapping: Dict[Path, Path] = {}

    def go(s: FiniteTree, t: FiniteTree, sp: Path, tp: Path):
        for i, sc in enumerate(s.children):
            target = None
            for j, tc in enumerate(t.children):
                if sc.height() <= tc.height():
                    target = (j, tc)
                    break
            assert target is not None, "order comparison guarantees a match"
            j, tc = target
            mapping[sp + (i,)] = tp + (j,)
            go(sc, tc, sp + (i,), tp + (j,))

    go(small, big, (), ())
    return mapping


def embed_exists_bruteforce(
    small: FiniteTree, big: FiniteTree, node_bound: int = BRUTE_FORCE_NODE_BOUND
) -> bool:
    """Exhaustive check for a monotone length-preserving map, independent of
    any order computation.  Refuses trees above node_bound nodes."""
    if small.size() > node_bound or big.size() > node_bound:
        raise SizeBoundError(f"brute-force embedding limited to {node_bound} nodes")
    memo: Dict[Tuple[FiniteTree, FiniteTree], bool] = {}

    def exists(s: FiniteTree, t: FiniteTree) -> bool:
        key = (s, t)
        if key not in memo:
            memo[key] = all(
                any(exists(sc, tc) for tc in t.children) for sc in s.children
            )
        return memo[key]

    return exists(small, big)


# -- Cantor-Bendixson derivatives of ordinal intervals ----------------------


@dataclass(frozen=True)
class IntervalDerivStage:
    """Stage of the derivative of [0, xi]: the set {w^level * b : 1 <= b <= count},
    or the empty stage when count would be 0.  The isolated point 0 is not
    tracked; it only affects the (unrecorded) stage-0 set."""

    level: Optional[Ordinal]
    count: Optional[Ordinal]

    @property
    def is_empty(self) -> bool:
        return self.count is None

    @classmethod
    def empty(cls) -> "IntervalDerivStage":
        return cls(None, None)


def cb_interval_derivative(xi, zeta) -> IntervalDerivStage:
    """The zeta-th Cantor-Bendixson derivative of the interval [0, xi]."""
    xi = _coerce(xi)
    zeta = _coerce(zeta)
    q = xi // omega_pow(zeta)
    if q.is_zero:
        return IntervalDerivStage.empty()
    return IntervalDerivStage(zeta, q)


def cb_interval_index(xi) -> Ordinal:
    """Least stage at which the derivative of [0, xi] is empty.

    Equals the leading exponent of xi plus one; [0, 0] is a single point
    with index 1 as well.
    """
    xi = _coerce(xi)
    if xi.is_zero:
        return ONE
    return xi.leading_exponent + ONE


# -- bounded decreasing-sequence families -----------------------------------


@dataclass(frozen=True)
class BnNode:
    """Node of the sequence family with tag n: entries are (gamma, k) pairs
    with the gamma components strictly decreasing below the family bound."""

    n: int
    entries: Tuple[Tuple[Ordinal, int], ...]

    def last_gamma(self) -> Ordinal:
        return self.entries[-1][0]


def _validate_bn(node: BnNode, bound: Ordinal) -> None:
    if node.n < 1:
        raise InvariantViolationError("family tag must be a positive integer")
    if not node.entries:
        raise InvariantViolationError("node must carry at least one entry")
    prev = None
    for g, k in node.entries:
        if not isinstance(g, Ordinal):
            raise InvariantViolationError("gamma components must be ordinals")
        if not isinstance(k, int) or k < 1:
            raise InvariantViolationError("k components must be positive integers")
        if g >= bound:
            raise InvariantViolationError(
                f"gamma component {render_ordinal(g)} is not below the bound "
                f"{render_ordinal(bound)}"
            )
        if prev is not None and not g < prev:
            raise InvariantViolationError("gamma components must decrease strictly")
        prev = g


def bn_derived_member(node: BnNode, bound, zeta) -> bool:
    """Whether the node survives to the zeta-th derived stage of its family:
    true exactly when its last gamma component is >= zeta."""
    bound = _coerce(bound)
    zeta = _coerce(zeta)
    _validate_bn(node, bound)
    return node.last_gamma() >= zeta


def scale_block_index(node: BnNode, xi, k: int) -> Ordinal:
    """The unique g with the node in block g of the scale-k partition, i.e.
    with last gamma in [xi^k * g, xi^k * (g + 1)); computed as a quotient."""
    xi = _coerce(xi)
    if not 1 <= k <= node.n:
        raise InvariantViolationError("scale index k must satisfy 1 <= k <= n")
    _validate_bn(node, xi ** node.n)
    return node.last_gamma() // (xi ** k)


def parse_bn_node(text: str) -> BnNode:
    """Parse 'n:[g1,k1;g2,k2;...]' with each g in ordinal grammar."""
    head, sep, body = text.partition(":")
    if not sep:
        raise ParseError("expected 'n:[...]'")
    try:
        n = int(head.strip())
    except ValueError:
        raise ParseError(f"bad family tag {head.strip()!r}") from None
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError("expected '[' ... ']' entry list")
    entries = []
    inner = body[1:-1].strip()
    if not inner:
        raise ParseError("entry list must be nonempty")
    for chunk in inner.split(";"):
        g_text, sep, k_text = chunk.partition(",")
        if not sep:
            raise ParseError(f"entry {chunk!r} is not 'gamma,k'")
        try:
            k = int(k_text.strip())
        except ValueError:
            raise ParseError(f"bad k component {k_text.strip()!r}") from None
        entries.append((parse_ordinal(g_text), k))
    return BnNode(n, tuple(entries))


def render_bn_node(node: BnNode) -> str:
    inner = ";".join(f"{render_ordinal(g)},{k}" for g, k in node.entries)
    return f"{node.n}:[{inner}]"


# -- quotient-tree oracle ----------------------------------------------------

QUOTIENT_ORACLE_BOUND = 12


def _decreasing_sequences(m: int) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...], below: int):
        for g in range(below - 1, -1, -1):
            seq = prefix + (g,)
            out.append(seq)
            extend(seq, g)

    extend((), m)
    return out


def quotient_tree(m: int, node_bound: int = QUOTIENT_ORACLE_BOUND) -> FiniteTree:
    """Explicit tree of strictly decreasing sequences over {0..m-1}.

    Each quotient child stands for an infinite integer-tagged fiber of the
    full family, so leaf removal on this tree tracks the Cantor-Bendixson
    derivative of the full family exactly.
    """
    if m < 1 or m > node_bound:
        raise SizeBoundError(f"quotient tree oracle limited to 1 <= m <= {node_bound}")

    def build(below: int) -> FiniteTree:
        return FiniteTree(tuple(build(g) for g in range(below - 1, -1, -1)))

    return build(m)


def quotient_tree_stages(m: int, node_bound: int = QUOTIENT_ORACLE_BOUND) -> List[Set[Tuple[int, ...]]]:
    """Surviving sequence sets stage by stage, by iterated removal of
    maximal sequences; the root is kept implicit.  Ends with the first
    empty stage."""
    if m < 1 or m > node_bound:
        raise SizeBoundError(f"quotient tree oracle limited to 1 <= m <= {node_bound}")
    current: Set[Tuple[int, ...]] = set(_decreasing_sequences(m))
    stages = [set(current)]
    while current:
        maximal = {
            s for s in current if not any(t[:-1] == s for t in current if len(t) == len(s) + 1)
        }
        current = current - maximal
        stages.append(set(current))
    return stages


def quotient_tree_order_oracle(m: int, node_bound: int = QUOTIENT_ORACLE_BOUND) -> Ordinal:
    """Order of the quotient tree (root counted), via iterated derive_tree."""
    tree: Optional[FiniteTree] = quotient_tree(m, node_bound)
    steps = 0
    while tree is not None:
        tree = derive_tree(tree)
        steps += 1
    return Ordinal(steps)
