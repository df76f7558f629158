import random
from fractions import Fraction

import pytest

from szlenkcalc import (
    OMEGA,
    ONE,
    ZERO,
    Membership,
    NotMaximalError,
    NotMemberError,
    Ordinal,
    ParseError,
    branch_distribution,
    classify,
    decompose,
    enumerate_truncated,
    omega_pow,
    parse_gamma_node,
    probability,
    random_maximal_node,
    render_gamma_node,
    same_unit,
    stage_of,
    tree_order,
    truncation_tree,
)

w = OMEGA
M = Membership


def chain(n, j=0):
    """The single stage-n branch of the index-1 family, cut at entry j."""
    return tuple(Ordinal(n - 1 - i) for i in range(n - j))


def _check_reassembly(t, xi_val):
    w_xi = omega_pow(xi_val)
    n = stage_of(t, xi_val)
    d = decompose(t, xi_val, n)
    rebuilt = ()
    for i, part in enumerate(d.parts, start=1):
        off = w_xi * (n - i)
        rebuilt += tuple(off + e for e in part)
    assert rebuilt == t
    assert len(d.pi) == len(t) - len(d.iota)
    assert d.iota == d.parts[-1]


class TestClassify:
    def test_base(self):
        assert classify((ZERO,), ZERO) is M.MAXIMAL
        assert classify((ONE,), ZERO) is M.NOT_MEMBER
        assert classify((ZERO, ZERO), ZERO) is M.NOT_MEMBER

    def test_index_one_examples(self):
        assert classify((1, 0), 1) is M.MAXIMAL
        assert classify((0, 1), 1) is M.NOT_MEMBER
        assert classify((2, 1), 1) is M.MEMBER
        assert classify((2, 1, 0), 1) is M.MAXIMAL
        assert classify((2, 0), 1) is M.NOT_MEMBER  # block tags skip a step
        assert classify((), 1) is M.NOT_MEMBER

    def test_limit_index(self):
        # branch zeta: elements shifted by w^zeta, recursing at index zeta+1
        node = tuple(w + e for e in chain(2))
        assert classify(node, w) is M.MAXIMAL
        assert classify((w,), w) is M.MAXIMAL  # its branch bottoms out immediately
        assert classify((w * 2,), w) is M.MEMBER  # first of two blocks, extendable
        assert classify((ZERO,), w) is M.NOT_MEMBER
        mixed = (w + 1, omega_pow(2))  # leading exponents disagree
        assert classify(mixed, w) is M.NOT_MEMBER

    def test_every_enumerated_node_is_member(self):
        for xi in (ONE, Ordinal(2), w):
            for node in enumerate_truncated(xi, 2):
                assert classify(node, xi) is not M.NOT_MEMBER


class TestDecompose:
    def test_examples(self):
        d = decompose((2, 1), 0, 3)
        assert (d.n, d.m) == (3, 2)
        assert d.parts == ((ZERO,), (ZERO,))
        assert d.iota == (ZERO,)
        assert d.pi == (Ordinal(2),)
        d = decompose((1,), 0, 2)
        assert d.m == 1 and d.pi == ()

    def test_wrong_stage_rejected(self):
        with pytest.raises(NotMemberError):
            decompose((2, 1), 0, 5)
        with pytest.raises(NotMemberError):
            decompose((0, 1), 0, 1)

    def test_reassembly(self):
        rng = random.Random(41)
        for xi_val in (ZERO, ONE, Ordinal(2)):
            for _ in range(25):
                t = random_maximal_node(xi_val + 1, rng)
                _check_reassembly(t, xi_val)

    def test_reassembly_on_all_enumerated_members(self):
        for xi_val in (ZERO, ONE, Ordinal(2)):
            for t in enumerate_truncated(xi_val + 1, 2):
                _check_reassembly(t, xi_val)


class TestProbability:
    def test_base(self):
        assert probability((ZERO,), ZERO) == 1

    def test_index_one_uniform(self):
        for n in range(1, 11):
            for j in range(n):
                assert probability(chain(n, j), 1) == Fraction(1, n)

    def test_level_relation(self):
        # n * weight at the successor equals the weight of the last block below
        rng = random.Random(43)
        for xi_val in (ZERO, ONE, Ordinal(2)):
            for _ in range(20):
                t = random_maximal_node(xi_val + 1, rng)
                n = stage_of(t, xi_val)
                for i in range(1, len(t) + 1):
                    prefix = t[:i]
                    d = decompose(prefix, xi_val, n)
                    assert n * probability(prefix, xi_val + 1) == probability(d.iota, xi_val)

    def test_nonmember_rejected(self):
        with pytest.raises(NotMemberError):
            probability((0, 1), 1)


class TestBranchDistribution:
    def test_examples(self):
        assert branch_distribution((1, 0), 1) == [
            ((ONE,), Fraction(1, 2)),
            ((ONE, ZERO), Fraction(1, 2)),
        ]
        assert branch_distribution((ZERO,), ZERO) == [((ZERO,), Fraction(1))]

    def test_sums_to_one_exactly(self):
        rng = random.Random(47)
        for xi in (ONE, Ordinal(2), Ordinal(3), w, w * 2, w ** 2):
            cap = 2 if xi > w else 3  # deep limits multiply branch lengths fast
            for _ in range(12):
                t = random_maximal_node(xi, rng, level_cap=cap)
                dist = branch_distribution(t, xi)
                assert sum(p for _, p in dist) == 1
                assert [node for node, _ in dist] == [t[:i] for i in range(1, len(t) + 1)]

    def test_distribution_agrees_with_per_prefix_route(self):
        rng = random.Random(49)
        for xi in (Ordinal(2), Ordinal(3), w):
            for _ in range(6):
                t = random_maximal_node(xi, rng, level_cap=2)
                for prefix, p in branch_distribution(t, xi):
                    assert p == probability(prefix, xi)

    def test_level_averages(self):
        # prefixes falling in block i of a maximal stage-n node sum to exactly 1/n
        rng = random.Random(53)
        for xi_val in (ZERO, ONE, Ordinal(2)):
            for _ in range(10):
                t = random_maximal_node(xi_val + 1, rng)
                n = stage_of(t, xi_val)
                d = decompose(t, xi_val, n)
                boundaries = []
                total = 0
                for part in d.parts:
                    total += len(part)
                    boundaries.append(total)
                start = 0
                for end in boundaries:
                    s = sum(
                        probability(t[:i], xi_val + 1) for i in range(start + 1, end + 1)
                    )
                    assert s == Fraction(1, n)
                    start = end

    def test_requires_maximal(self):
        with pytest.raises(NotMaximalError):
            branch_distribution((2, 1), 1)
        with pytest.raises(NotMaximalError):
            branch_distribution((0, 1), 1)


class TestUnits:
    def test_examples(self):
        assert same_unit((2, 1), (2, 1), 0, 3)
        assert not same_unit((Ordinal(2),), (2, 1), 0, 3)
        # the whole first level of a stage is one unit
        assert same_unit((w,), (w + 1, w), 1, 2)
        assert not same_unit((w, 1), (w,), 1, 2)

    def test_unit_is_equivalence_on_enumerated_stage(self):
        nodes = [t for t in enumerate_truncated(Ordinal(2), 3) if stage_of(t, ONE) == 2]
        for t in nodes[:12]:
            assert same_unit(t, t, 1, 2)
        with pytest.raises(NotMemberError):
            same_unit((0, 1), (1, 0), 0, 2)


class TestEnumeration:
    def test_index_zero(self):
        assert enumerate_truncated(ZERO, 5) == [(ZERO,)]

    def test_index_one_matches_chains(self):
        for budget in (3, 10):
            got = set(enumerate_truncated(ONE, budget))
            want = {chain(n, j) for n in range(1, budget + 1) for j in range(n)}
            assert got == want

    def test_deterministic_and_duplicate_free(self):
        a = enumerate_truncated(Ordinal(2), 3)
        b = enumerate_truncated(Ordinal(2), 3)
        assert a == b
        assert len(a) == len(set(a))

    def test_first_coordinate_range(self):
        # a stage-n node starts in [w^xi*(n-1), w^xi*n)
        for xi_val in (ZERO, ONE):
            w_xi = omega_pow(xi_val)
            for t in enumerate_truncated(xi_val + 1, 3):
                n = stage_of(t, xi_val)
                assert w_xi * (n - 1) <= t[0] < w_xi * n

    def test_stages_totally_incomparable(self):
        nodes = enumerate_truncated(Ordinal(2), 3)
        tagged = [(stage_of(t, ONE), t) for t in nodes]
        for n1, t1 in tagged:
            for n2, t2 in tagged:
                if n1 != n2:
                    assert t1 != t2
                    shorter, longer = sorted((t1, t2), key=len)
                    assert longer[: len(shorter)] != shorter

    def test_limit_branches_totally_incomparable(self):
        nodes = enumerate_truncated(w, 2)
        branches = {}
        for t in nodes:
            branches.setdefault(t[0].leading_exponent, []).append(t)
        assert len(branches) == 2
        items = list(branches.items())
        for i, (_, group1) in enumerate(items):
            for _, group2 in items[i + 1:]:
                for t1 in group1:
                    for t2 in group2:
                        shorter, longer = sorted((t1, t2), key=len)
                        assert longer[: len(shorter)] != shorter

    def test_truncation_order_via_tree_calculus(self):
        for budget in (2, 4, 6):
            t = truncation_tree(enumerate_truncated(ONE, budget))
            assert tree_order(t) == budget + 1  # root counted; budget as a B-tree


class TestRawRecursionAgreement:
    """Rebuild the truncated windows by transcribing the defining set
    equations directly (offsets and concatenations, structural maximality,
    no block decomposition) and compare with the library's routes."""

    @staticmethod
    def _structural_max(nodes):
        pool = set(nodes)
        return {
            t
            for t in pool
            if not any(u != t and u[: len(t)] == t for u in pool)
        }

    @classmethod
    def _raw_next_index(cls, window, xi, budget):
        w_xi = omega_pow(xi)
        mx = sorted(cls._structural_max(window))
        stages = {1: list(window)}
        for n in range(1, budget):
            offset = w_xi * n
            stage = [tuple(offset + e for e in s) for s in window]
            stage += [
                tuple(offset + e for e in t) + u for t in mx for u in stages[n]
            ]
            stages[n + 1] = stage
        out = []
        for n in range(1, budget + 1):
            out.extend(stages[n])
        return out

    def test_windows_and_maximality_agree(self):
        budget = 3
        raw1 = self._raw_next_index([(ZERO,)], ZERO, budget)
        raw2 = self._raw_next_index(raw1, ONE, budget)
        assert set(raw1) == set(enumerate_truncated(ONE, budget))
        assert set(raw2) == set(enumerate_truncated(Ordinal(2), budget))
        for xi, window in ((ONE, raw1), (Ordinal(2), raw2)):
            structural = self._structural_max(window)
            classified = {t for t in window if classify(t, xi) is M.MAXIMAL}
            assert structural == classified
            for t in structural:
                assert sum(p for _, p in branch_distribution(t, xi)) == 1


class TestNodeText:
    def test_roundtrip(self):
        node = (w * 2 + 1, w, ZERO)
        text = render_gamma_node(node)
        assert text == "[w*2+1, w, 0]"
        assert parse_gamma_node(text) == node

    def test_errors(self):
        with pytest.raises(ParseError):
            parse_gamma_node("w, 0")
        with pytest.raises(ParseError):
            parse_gamma_node("[]")
