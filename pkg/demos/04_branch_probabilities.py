"""The recursive tree hierarchy and its exact branch probabilities.

The index-xi family is a set of ordinal sequences whose derived-tree order
is w^xi.  Each node carries an exact rational weight: the single node at
index 0 weighs 1, a node on the n-level stage weighs 1/n of its last
block's weight, and every maximal branch sums to exactly 1.
Run:  python demos/04_branch_probabilities.py
"""

import random
from fractions import Fraction

from szlenkcalc import (
    Ordinal,
    branch_distribution,
    classify,
    decompose,
    enumerate_truncated,
    probability,
    random_maximal_node,
    render_gamma_node,
    stage_of,
)

# The index-1 family is the chain family: stage n is the single descending
# chain (n-1, ..., 0), uniformly weighted 1/n.
print("index-1 window, budget 4:")
for node in enumerate_truncated(1, 4):
    print(f"  {render_gamma_node(node):18s} weight {probability(node, 1)}")

# At index 2 a node splits into blocks over the chain family; the unique
# decomposition exposes its stage n, level m and last block.
node = decompose((Ordinal(2), Ordinal(1)), 0, 3)
print("\n[2, 1] over index 0: stage", node.n, "level", node.m,
      "prefix", render_gamma_node(node.pi), "last block", render_gamma_node(node.iota))

# Random maximal branches at higher indices still sum to exactly 1.
rng = random.Random(4)
for xi in (2, 3):
    t = random_maximal_node(Ordinal(xi), rng)
    dist = branch_distribution(t, xi)
    total = sum(p for _, p in dist)
    print(f"\nindex {xi}: maximal branch of length {len(t)}, "
          f"{classify(t, xi).value}, sum of weights = {total}")
    assert total == Fraction(1)
    for prefix, p in dist[:4]:
        print(f"  {render_gamma_node(prefix)} -> {p}")
    if len(dist) > 4:
        print(f"  ... {len(dist) - 4} more prefixes")

# The level identity: stage-n weight relates to the block weight below.
t = random_maximal_node(Ordinal(2), rng)
n = stage_of(t, 1)
d = decompose(t, 1, n)
print(f"\nstage {n} node: n * weight(index 2) =",
      n * probability(t, 2), "= weight of last block at index 1 =",
      probability(d.iota, 1))
