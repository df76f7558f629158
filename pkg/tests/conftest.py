"""Shared deterministic generators for the law and equivalence suites."""

import random

from szlenkcalc import FiniteTree, Ordinal, ZERO


def random_ordinal(rng: random.Random, height: int = 2, max_terms: int = 3,
                   max_coeff: int = 9) -> Ordinal:
    """Random canonical ordinal whose exponent tower is at most `height` high."""
    if height == 0:
        return Ordinal(rng.randint(0, max_coeff))
    k = rng.randint(0, max_terms)
    if k == 0:
        return ZERO
    exps = set()
    while len(exps) < k:
        exps.add(random_ordinal(rng, height - 1, max_terms, max_coeff))
    terms = [(e, rng.randint(1, max_coeff)) for e in sorted(exps, reverse=True)]
    return Ordinal.from_terms(terms)


def random_ordinal_below_w_w3(rng: random.Random, max_terms: int = 3,
                              max_coeff: int = 9) -> Ordinal:
    """Random ordinal below w^(w^3): every exponent is a degree-<=2 polynomial in w."""
    k = rng.randint(0, max_terms)
    if k == 0:
        return ZERO
    exps = set()
    while len(exps) < k:
        digits = [(Ordinal(2 - i), d) for i, d in enumerate(rng.randint(0, 2) for _ in range(3)) if d]
        exps.add(Ordinal.from_terms(digits))
    terms = [(e, rng.randint(1, max_coeff)) for e in sorted(exps, reverse=True)]
    return Ordinal.from_terms(terms)


def random_tree(rng: random.Random, max_nodes: int = 12) -> FiniteTree:
    """Random rooted tree with between 1 and max_nodes nodes."""
    n = rng.randint(1, max_nodes)
    children = [[] for _ in range(n)]
    for i in range(1, n):
        children[rng.randrange(i)].append(i)

    def build(i: int) -> FiniteTree:
        return FiniteTree(tuple(build(j) for j in children[i]))

    return build(0)


def grid_below(limit_exponent: int, coeff_range: int):
    """All ordinals sum(w^i * c_i, i < limit_exponent) with 0 <= c_i < coeff_range."""
    out = [ZERO]
    for i in range(limit_exponent):
        base = Ordinal.from_terms(((Ordinal(i), 1),))
        out = [
            (base * c + rest if c else rest)
            for c in range(coeff_range)
            for rest in out
        ]
    return out
