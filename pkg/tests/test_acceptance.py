"""Exit criteria; each test records one PASS/FAIL line shown in the terminal summary."""

import itertools
import random
import time
from contextlib import contextmanager
from math import comb

import numpy as np
import pytest

import oracles
from capfield import ffield
from capfield.cards import decode, emit_quads_table, emit_set_table, leftover_code, quads_table, set_table
from capfield.caps import (
    cap_arity,
    is_cap,
    is_cap_char2,
    is_cap_char3,
    is_complete_naive,
    is_complete_subgroup_reduced,
    line_test,
    smallest_complete_bound,
    strong_structure_char2,
    strong_structure_char3,
)
from capfield.cosetsearch import (
    find_pair_partition,
    general_family_check,
    pair_difference_spectrum,
    union_cap_search,
)
from capfield.ffield import FieldSpec, Poly, build_ctx, divisors, make_field, primitive_polynomials
from capfield.groups import coset_family, subgroup_of_order
from reference_data import F243_IDENTITIES, FIXTURES, QUADS_CODES, SET_CODES


@contextmanager
def criterion(log, label, limit):
    """Time the block; record PASS only if it completes within ``limit`` seconds."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        passed = ok and elapsed < limit
        line = f"[{'PASS' if passed else 'FAIL'}] {label} ({elapsed:.3f}s, limit {limit}s)"
        log.append(line)
        print(line)
    assert elapsed < limit, f"{label} took {elapsed:.3f}s (limit {limit}s)"


@pytest.fixture(autouse=True)
def fresh_fields():
    # every criterion pays for its own table construction
    ffield._cached_ctx.cache_clear()
    yield


def test_ac1_f81_strong_cap(acceptance_log):
    with criterion(acceptance_log, "AC1 G_{81,20} cap with a+b+c=0 iff a=b=c", 0.1):
        ctx = build_ctx(FieldSpec(3, 4, Poly((2, 2, 0, 0, 1), 3)))
        G = subgroup_of_order(ctx, 20)
        elems = [int(a) for a in G.elements]
        vecs = {a: oracles.decode_enc(a, 3, 4) for a in elems}
        brute = [
            (a, b, c)
            for a, b, c in itertools.product(elems, repeat=3)
            if not any((vecs[a][i] + vecs[b][i] + vecs[c][i]) % 3 for i in range(4))
        ]
        assert len(brute) == 20 and all(a == b == c for a, b, c in brute)
        brute_distinct = sum(1 for t in brute if len(set(t)) == 3)
        rep = is_cap_char3(G)
        assert rep.verdict and rep.distinct_zero_sum_count == brute_distinct == 0
        assert strong_structure_char3(G)


def test_ac2_f243_complete_cap(acceptance_log):
    with criterion(acceptance_log, "AC2 G_{243,22} cap, ten identities, complete, bound 22", 1.0):
        ctx = build_ctx(FieldSpec(3, 5, Poly((1, 2, 0, 0, 0, 1), 3)))
        assert ctx.element_order(ctx.generator) == 242
        G = subgroup_of_order(ctx, 22)
        assert is_cap_char3(G).verdict
        assert all(line_test(k, i, j, ctx) for k, i, j in F243_IDENTITIES)
        assert ctx.add(ctx.add(0, 1), ctx.gpow(121)) == 0
        naive = is_complete_naive(G, 3)
        reduced = is_complete_subgroup_reduced(G, 3)
        assert naive.complete and reduced.complete and reduced.targets_checked == 11
        assert comb(21, 2) + 21 == 231 < 243
        assert smallest_complete_bound(243, 3) == 22


def test_ac3_f729_pairs(acceptance_log):
    with criterion(acceptance_log, "AC3 G_{729,28} strong cap, 13-cap pair partition, no 4-coset cap", 30.0):
        ctx = make_field(3, 6)
        G = subgroup_of_order(ctx, 28)
        assert is_cap_char3(G).verdict and strong_structure_char3(G)
        assert pair_difference_spectrum(G)
        pairs = find_pair_partition(G)
        assert pairs is not None and len(pairs) == 13
        fam = coset_family(G)
        covered = np.zeros(ctx.q, dtype=np.int64)
        for pr in pairs:
            block = fam.union(pr)
            assert block.size == 56 and is_cap_char3(block, ctx).verdict
            covered[block] += 1
        assert covered[0] == 0 and (covered[1:] == 1).all()
        res = union_cap_search(G, 4)
        assert res.found is None and res.candidates_checked == res.total_candidates == 2300


def test_ac4_general_family(acceptance_log):
    with criterion(acceptance_log, "AC4 G_{2^2n,2^n+1} caps for n=2..8; G+{0} cap iff n even", 60.0):
        for n in range(2, 9):
            rep = general_family_check(n)
            assert rep.subgroup_is_cap and rep.strong, n
            if n % 2 == 0:
                assert rep.zero_augmented_is_cap and rep.zero_augmented_size == 2**n + 2
            else:
                assert not rep.zero_augmented_is_cap and rep.zero_witness is not None
                ctx = make_field(2, 2 * n)
                w = rep.zero_witness
                assert ctx.add(ctx.add(w[0], w[1]), ctx.add(w[2], w[3])) == 0


def test_ac5_coset_partitions(acceptance_log):
    with criterion(acceptance_log, "AC5 coset partitions of F_81, F_243, F_64 into caps", 5.0):
        for (p, n), d, complete in [((3, 4), 20, False), ((3, 5), 22, True), ((2, 6), 9, False)]:
            ctx = make_field(p, n)
            fam = coset_family(subgroup_of_order(ctx, d))
            assert len(fam) == (ctx.q - 1) // d
            covered = np.zeros(ctx.q, dtype=np.int64)
            for c in fam.cosets:
                assert c.size == d and is_cap(c, ctx).verdict
                if complete:
                    assert is_complete_naive(c, 3, ctx).complete
                covered[c] += 1
            assert covered[0] == 0 and (covered[1:] == 1).all()


def test_ac6_card_tables(acceptance_log):
    with criterion(acceptance_log, "AC6 SET and EvenQuads tables byte-exact", 0.1):
        blocks = set_table()
        assert [[str(c) for c in b] for b in blocks] == [
            [c for row in SET_CODES["blocks"][str(r)] for c in row] for r in range(4)
        ]
        assert leftover_code("set") == "0000"
        assert [[str(c) for c in row] for row in quads_table()] == QUADS_CODES["rows"]
        assert leftover_code("quads") == "000"
        assert emit_set_table() == (FIXTURES / "set_table.txt").read_text()
        assert emit_quads_table() == (FIXTURES / "quads_table.txt").read_text()


def test_ac7_property_suites(acceptance_log):
    with criterion(acceptance_log, "AC7 field axioms, oracle equivalence, reduction, representation independence", 60.0):
        rng = random.Random(2026)
        for p, n in [(3, 4), (3, 5), (3, 6), (2, 6), (2, 8)]:
            ctx = make_field(p, n)
            for _ in range(1000):
                a, b, c = (ctx.element(rng.randrange(ctx.q)) for _ in range(3))
                assert (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
                assert a.value == 0 or a * a.inverse() == 1
                assert (a + b) ** p == a**p + b**p

        for p, n in [(3, 4), (3, 5), (2, 6)]:
            ctx = make_field(p, n)
            arity = cap_arity(ctx)
            for S in oracles.random_subsets(rng, ctx.q, 200, 24):
                rep = is_cap(S, ctx)
                assert rep.distinct_zero_sum_count == len(oracles.zero_sum_tuples(S, arity, p, n))

        for p, n in [(3, 4), (3, 5), (2, 6), (2, 8)]:
            ctx = make_field(p, n)
            m = cap_arity(ctx)
            for d in divisors(ctx.q - 1):
                G = subgroup_of_order(ctx, d)
                if is_cap(G):
                    assert is_complete_naive(G, m).complete == is_complete_subgroup_reduced(G, m).complete

        m1, m2 = list(primitive_polynomials(3, 6))[:2]
        verdicts = []
        for mod in (m1, m2):
            G = subgroup_of_order(make_field(3, 6, mod), 28)
            verdicts.append((is_cap(G).verdict, strong_structure_char3(G)))
        assert m1 != m2 and verdicts[0] == verdicts[1] == (True, True)
