"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest -s tests/test_acceptance.py` to see the lines as they
complete.  Everything asserted here is exact (integers, ordinals in normal
form, rationals); the only tolerances are the stated wall-clock budgets.
"""

import json
import random
import time
from fractions import Fraction

from szlenkcalc import (
    EXACT,
    INFINITY,
    OMEGA,
    ONE,
    UPPER,
    ZERO,
    NormingParams,
    Ordinal,
    PreconditionError,
    attainable,
    branch_distribution,
    cb_interval_index,
    classify,
    decompose,
    embed_exists_bruteforce,
    enumerate_truncated,
    gamma_of,
    is_gamma_number,
    monotone_embed,
    omega_pow,
    parse_ordinal,
    probability,
    quotient_tree_order_oracle,
    quotient_tree_stages,
    random_maximal_node,
    render_ordinal,
    stage_of,
    sz_c_interval,
    sz_geometric_family,
    sz_staircase_family,
    tree_order,
)
from szlenkcalc.cli import main as cli_main

from conftest import grid_below, random_ordinal_below_w_w3, random_tree

w = OMEGA


def _report(number: int, description: str, ok: bool, elapsed: float) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] criterion {number:2d} ({elapsed:6.2f}s): {description}")
    assert ok, f"criterion {number} failed: {description}"


def test_criterion_01_ordinal_algebra_laws():
    start = time.monotonic()
    rng = random.Random(1001)
    ok = True
    count = 0
    for _ in range(350):
        a = random_ordinal_below_w_w3(rng)
        b = random_ordinal_below_w_w3(rng)
        c = random_ordinal_below_w_w3(rng)
        count += 3
        ok &= (a + b) + c == a + (b + c)
        ok &= (a * b) * c == a * (b * c)
        ok &= a * (b + c) == a * b + a * c
        ok &= a ** (b + c) == a ** b * a ** c
        if b < c:
            ok &= a + b < a + c
            if a >= 1:
                ok &= a * b < a * c
            if a >= 2:
                ok &= a ** b < a ** c
        if not b.is_zero:
            q, r = divmod(a, b)
            ok &= b * q + r == a and r < b
        if not ok:
            break
    elapsed = time.monotonic() - start
    ok = ok and count >= 1000 and elapsed < 10.0
    _report(1, f"algebra laws on {count} random ordinals below w^(w^3)", ok, elapsed)


def test_criterion_02_gamma_operator():
    start = time.monotonic()
    rng = random.Random(1002)
    ok = True
    for _ in range(500):
        a = random_ordinal_below_w_w3(rng)
        g = gamma_of(a)
        ok &= g >= a and is_gamma_number(g)
        if g != a:
            # no gamma number in [a, g): candidates below g are at most w^e1 < a
            e1 = a.leading_exponent
            ok &= g == omega_pow(e1 + 1) and omega_pow(e1) < a
        if not ok:
            break
    elapsed = time.monotonic() - start
    _report(2, "gamma operator on 500 random ordinals", ok, elapsed)


def _interval_index_oracle(xi: Ordinal) -> Ordinal:
    # independent route: iterate the keep-limit-points step (level, count)
    # -> (level + 1, count // w) until the stage empties
    stage = 0
    count = xi
    while not count.is_zero:
        count = count // w
        stage += 1
    return Ordinal(stage)


def test_criterion_03_cb_cross_check():
    start = time.monotonic()
    grid = [xi for xi in grid_below(6, 5) if not xi.is_zero]
    ok = len(grid) >= 10_000
    for xi in grid:
        idx = cb_interval_index(xi)
        ok &= idx == _interval_index_oracle(xi)
        ok &= idx == xi.leading_exponent + 1
        if not ok:
            break
    elapsed = time.monotonic() - start
    _report(3, f"interval derivative index vs oracle on {len(grid)} grid points", ok, elapsed)


def test_criterion_04_route_agreement():
    start = time.monotonic()
    grid = [xi for xi in grid_below(6, 5) if not xi.is_zero]
    ok = True
    for xi in grid:
        ok &= sz_c_interval(xi) == gamma_of(cb_interval_index(xi))
        if not ok:
            break
    ok &= sz_c_interval(w) == w
    ok &= sz_c_interval(omega_pow(w)) == w ** 2
    elapsed = time.monotonic() - start
    _report(4, f"interval closed form vs hull route on {len(grid)} grid points", ok, elapsed)


def test_criterion_05_probability_hierarchy():
    start = time.monotonic()
    rng = random.Random(1005)
    ok = True
    for xi_val in (1, 2, 3):
        xi = Ordinal(xi_val)
        cap = 10 if xi_val == 1 else 3
        for _ in range(100):
            t = random_maximal_node(xi, rng, level_cap=cap)
            ok &= sum(p for _, p in branch_distribution(t, xi)) == 1
            if not ok:
                break
        # the level relation, on every prefix of freshly sampled nodes
        below = Ordinal(xi_val - 1)
        for _ in range(25):
            t = random_maximal_node(xi, rng, level_cap=3)
            n = stage_of(t, below)
            for i in range(1, len(t) + 1):
                d = decompose(t[:i], below, n)
                ok &= n * probability(t[:i], xi) == probability(d.iota, below)
        if not ok:
            break
    # index-1 distributions are uniform
    for n in range(1, 11):
        node = tuple(Ordinal(n - 1 - i) for i in range(n))
        ok &= all(p == Fraction(1, n) for _, p in branch_distribution(node, 1))
    elapsed = time.monotonic() - start
    _report(5, "exact branch distributions at indices 1..3", ok, elapsed)


def test_criterion_06_index_one_enumeration():
    start = time.monotonic()
    nodes = enumerate_truncated(ONE, 10)
    want = {
        tuple(Ordinal(n - 1 - i) for i in range(n - j))
        for n in range(1, 11)
        for j in range(n)
    }
    ok = set(nodes) == want and len(nodes) == len(want)
    tagged = [(stage_of(t, ZERO), t) for t in nodes]
    for n, t in tagged:
        ok &= Ordinal(n - 1) <= t[0] < Ordinal(n)  # first-coordinate range
    for n1, t1 in tagged:  # stages are totally incomparable
        for n2, t2 in tagged:
            if n1 != n2:
                shorter, longer = sorted((t1, t2), key=len)
                ok &= longer[: len(shorter)] != shorter
    # limit-index branches are totally incomparable as well
    limit_nodes = enumerate_truncated(w, 2)
    groups = {}
    for t in limit_nodes:
        groups.setdefault(t[0].leading_exponent, []).append(t)
    ok &= len(groups) == 2
    grouped = list(groups.values())
    for t1 in grouped[0]:
        for t2 in grouped[1]:
            shorter, longer = sorted((t1, t2), key=len)
            ok &= longer[: len(shorter)] != shorter
    elapsed = time.monotonic() - start
    _report(6, "index-1 window equals the chain family; incomparability", ok, elapsed)


def test_criterion_07_embedding_equivalence():
    start = time.monotonic()
    rng = random.Random(1007)
    ok = True
    pairs = 0
    while pairs < 500:
        s = random_tree(rng)
        t = random_tree(rng)
        pairs += 1
        expected = tree_order(s) <= tree_order(t)
        mapping = monotone_embed(s, t)
        ok &= (mapping is not None) == expected
        ok &= embed_exists_bruteforce(s, t) == expected
        if mapping is not None:
            for p, q in mapping.items():
                ok &= len(p) == len(q)
            keys = list(mapping)
            for p1 in keys:
                for p2 in keys:
                    if len(p1) < len(p2) and p2[: len(p1)] == p1:
                        q1, q2 = mapping[p1], mapping[p2]
                        ok &= q2[: len(q1)] == q1
        if not ok:
            break
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 60.0
    _report(7, f"embedding exists iff orders compare, {pairs} random pairs", ok, elapsed)


def test_criterion_08_sequence_family_closed_form():
    start = time.monotonic()
    ok = True
    for m in range(1, 9):
        ok &= quotient_tree_order_oracle(m) == m + 1
        stages = quotient_tree_stages(m)
        full = stages[0]
        for z, stage in enumerate(stages):
            ok &= stage == {s for s in full if s[-1] >= z}
        if not ok:
            break
    elapsed = time.monotonic() - start
    _report(8, "quotient-tree oracle matches the closed form for m <= 8", ok, elapsed)


def test_criterion_09_geometric_pipeline():
    start = time.monotonic()
    p0 = NormingParams(alpha=ZERO, theta=Fraction(1, 2))
    r0, audit0 = sz_geometric_family(p0, depth=4)
    ok = r0 == omega_pow(w)
    r1, _ = sz_geometric_family(NormingParams(alpha=ONE), depth=4)
    ok &= r1 == omega_pow(w ** 2)
    xi = omega_pow(omega_pow(ZERO))
    exacts = [b for b in audit0 if b.kind == EXACT]
    ok &= [b.value for b in exacts] == [xi ** n + 1 for n in range(1, 5)]
    ok &= all(b.epsilon < p0.theta ** (n - 1) for b, n in zip(exacts, range(1, 5)))
    uppers = [b for b in audit0 if b.kind == UPPER]
    ok &= bool(uppers) and all(b.value < r0 for b in uppers)
    elapsed = time.monotonic() - start
    _report(9, "geometric family pipeline and audit", ok, elapsed)


def test_criterion_10_staircase_pipeline():
    start = time.monotonic()
    r, _ = sz_staircase_family(NormingParams(alpha=ONE, beta=ONE))
    ok = r == w ** 2
    r, _ = sz_staircase_family(NormingParams(alpha=w, beta=ONE))
    ok &= r == omega_pow(w + 1)
    try:
        sz_staircase_family(NormingParams(alpha=ZERO, beta=w))
        ok = False
    except PreconditionError:
        pass
    elapsed = time.monotonic() - start
    _report(10, "staircase family pipeline and precondition", ok, elapsed)


def test_criterion_11_attainability():
    start = time.monotonic()
    ok = all(attainable("sz", x) for x in (ONE, w, w ** 2, omega_pow(w)))
    ok &= not any(attainable("sz", x) for x in (Ordinal(5), w + 1, omega_pow(omega_pow(w))))
    ok &= all(attainable("i1", n) for n in range(1, 11))
    elapsed = time.monotonic() - start
    _report(11, "attainability classification", ok, elapsed)


def _random_expression(rng: random.Random, depth: int = 2) -> str:
    # exponents stay tiny so that numeric powers cannot explode
    def exponent():
        r = rng.random()
        if r < 0.5:
            return str(rng.randint(0, 3))
        if r < 0.8:
            return "w"
        return f"(w*{rng.randint(1, 3)}+{rng.randint(0, 3)})"

    def atom(d):
        r = rng.random()
        if d <= 0 or r < 0.45:
            return str(rng.randint(0, 4))
        if r < 0.85:
            return "w"
        return "(" + expr(d - 1) + ")"

    def power(d):
        base = atom(d)
        if rng.random() < 0.4:
            return base + "^" + exponent()
        return base

    def prod(d):
        return "*".join(power(d) for _ in range(rng.randint(1, 2)))

    def expr(d):
        return " + ".join(prod(d) for _ in range(rng.randint(1, 3)))

    return expr(depth)


def test_criterion_12_cli_determinism_and_roundtrip(capsys):
    start = time.monotonic()
    rng = random.Random(1012)
    ok = True
    texts = [_random_expression(rng) for _ in range(500)]
    texts += [render_ordinal(random_ordinal_below_w_w3(rng, max_coeff=30)) for _ in range(500)]
    for text in texts:
        first = parse_ordinal(text)
        canonical = render_ordinal(first)
        second = parse_ordinal(canonical)
        ok &= second == first and render_ordinal(second) == canonical
        if not ok:
            break
    battery = [
        ["ord", "gamma", "w^2+1"],
        ["szlenk", "c-interval", "w^w"],
        ["szlenk", "frak-g", "--alpha", "0", "--theta", "1/2", "--format", "record"],
        ["gnode", "enum", "--xi", "2", "--budget", "2"],
        ["tree", "embed", "(()())", "((())())"],
    ]
    outputs = []
    for round_index in range(2):
        chunk = []
        for argv in battery:
            code = cli_main(list(argv))
            captured = capsys.readouterr()
            chunk.append((code, captured.out.encode(), captured.err.encode()))
        outputs.append(chunk)
    ok &= outputs[0] == outputs[1]
    record = json.loads(outputs[0][2][1].decode())
    ok &= record["value"] == "w^w" and bool(record["audit"])
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 10.0
    _report(12, "1000-expression round trip; byte-identical CLI replays", ok, elapsed)
