"""Finite trees: derived-tree order and monotone embeddings.

The derived tree removes all maximal nodes; the order is the number of
removals that empties the tree.  A monotone length-preserving embedding of
one tree's non-root nodes into another exists exactly when the orders
compare, and the library builds the witness.
Run:  python demos/02_trees_and_embeddings.py
"""

import random

from szlenkcalc import (
    BnFamily,
    OMEGA as w,
    derive_tree,
    embed_exists_bruteforce,
    monotone_embed,
    parse_tree,
    render_tree,
    tree_order,
)

t = parse_tree("((()())(()))")
print("tree:", render_tree(t), "order:", tree_order(t))
stage, step = t, 0
while stage is not None:
    print(f"  stage {step}:", render_tree(stage))
    stage = derive_tree(stage)
    step += 1

# Symbolic families carry ordinal orders: the decreasing-sequence tree with
# bound w has order w + 1 once the root is counted.
fam = BnFamily(w)
print("\nsymbolic family bound w: tree order", tree_order(fam),
      "/ node-set order", fam.btree_order())

# Embeddings: witness maps agree with the brute-force search.
s = parse_tree("(()())")
big = parse_tree("((())(()))")
print("\nembed", render_tree(s), "into", render_tree(big))
for src, dst in sorted(monotone_embed(s, big).items()):
    print("  node", "/".join(map(str, src)), "->", "/".join(map(str, dst)))

def random_tree(rng, max_nodes=10):
    from szlenkcalc import FiniteTree

    n = rng.randint(1, max_nodes)
    children = [[] for _ in range(n)]
    for i in range(1, n):
        children[rng.randrange(i)].append(i)

    def build(i):
        return FiniteTree(tuple(build(j) for j in children[i]))

    return build(0)


rng = random.Random(0)
agreements = 0
for _ in range(200):
    a, b = random_tree(rng), random_tree(rng)
    witness = monotone_embed(a, b) is not None
    assert witness == embed_exists_bruteforce(a, b) == (tree_order(a) <= tree_order(b))
    agreements += 1
print(f"\nwitness construction agreed with brute force on {agreements} random pairs")
